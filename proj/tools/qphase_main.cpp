#include <algorithm>
#include <cctype>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "qphase/bell.hpp"
#include "qphase/errors.hpp"
#include "qphase/figures.hpp"
#include "qphase/grid.hpp"
#include "qphase/io.hpp"
#include "qphase/oscillator.hpp"
#include "qphase/verify.hpp"
#include "qphase/wigner2.hpp"

namespace {

using qphase::AxisLabel;
using qphase::ConfigError;

double parse_double_strict(const std::string& text, const std::string& what) {
  std::size_t pos = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &pos);
  } catch (const std::exception&) {
    throw ConfigError(what + ": cannot parse number from '" + text + "'");
  }
  while (pos < text.size() &&
         std::isspace(static_cast<unsigned char>(text[pos]))) {
    ++pos;
  }
  if (pos != text.size()) {
    throw ConfigError(what + ": trailing characters in '" + text + "'");
  }
  return value;
}

int parse_int_strict(const std::string& text, const std::string& what) {
  const double v = parse_double_strict(text, what);
  const int n = static_cast<int>(v);
  if (static_cast<double>(n) != v) {
    throw ConfigError(what + ": expected an integer, got '" + text + "'");
  }
  return n;
}

std::complex<double> parse_amplitude(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) {
    return {parse_double_strict(text, "amplitude"), 0.0};
  }
  return {parse_double_strict(text.substr(0, comma), "amplitude real part"),
          parse_double_strict(text.substr(comma + 1), "amplitude imag part")};
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    if (pos == std::string::npos) {
      parts.push_back(text.substr(start));
      break;
    }
    parts.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
  return parts;
}

AxisLabel parse_axis_label(const std::string& text) {
  const auto label = qphase::axis_label_from_string(text);
  if (!label) {
    throw ConfigError("unknown axis label '" + text + "'");
  }
  return *label;
}

qphase::Axis parse_window(const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.size() != 4) {
    throw ConfigError("window must be ax:min:max:count, got '" + text + "'");
  }
  return qphase::make_axis(parse_axis_label(parts[0]),
                           parse_double_strict(parts[1], "window min"),
                           parse_double_strict(parts[2], "window max"),
                           parse_int_strict(parts[3], "window count"));
}

std::pair<AxisLabel, double> parse_fixed(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos) {
    throw ConfigError("fixed coordinate must be label=value, got '" + text +
                      "'");
  }
  return {parse_axis_label(text.substr(0, eq)),
          parse_double_strict(text.substr(eq + 1), "fixed value")};
}

bool is_position_label(AxisLabel label) {
  return label == AxisLabel::xA || label == AxisLabel::xB ||
         label == AxisLabel::x;
}

bool is_particle_a_label(AxisLabel label) {
  return label == AxisLabel::xA || label == AxisLabel::pA;
}

void ensure_parent_dir(const std::string& path) {
  const auto parent = std::filesystem::path(path).parent_path();
  if (!parent.empty()) {
    std::filesystem::create_directories(parent);
  }
}

struct OutputRequest {
  std::string format = "csv";
  std::string prefix;
};

std::vector<std::string> write_grid_outputs(const qphase::PhaseGrid& grid,
                                            const OutputRequest& out) {
  std::vector<std::string> written;
  if (out.format != "csv" && out.format != "pgm16" && out.format != "both") {
    throw ConfigError("format must be csv, pgm16, or both, got '" +
                      out.format + "'");
  }
  ensure_parent_dir(out.prefix);
  if (out.format == "csv" || out.format == "both") {
    const std::string path = out.prefix + ".csv";
    qphase::write_grid_csv(grid, path);
    written.push_back(path);
  }
  if (out.format == "pgm16" || out.format == "both") {
    const std::string path = out.prefix + ".pgm";
    qphase::write_grid_pgm16(grid, path);
    written.push_back(path);
    written.push_back(path + ".minmax");
  }
  return written;
}

void report_written(const std::vector<std::string>& paths) {
  for (const std::string& p : paths) {
    std::cout << "wrote " << p << "\n";
  }
}

void report_peak(const qphase::PhaseGrid& grid) {
  const auto peak = qphase::find_peak(grid);
  std::cout << "peak |W| at ("
            << qphase::to_string(grid.slice.free_axes[0].label) << "="
            << qphase::format17(peak.coord1) << ", "
            << qphase::to_string(grid.slice.free_axes[1].label) << "="
            << qphase::format17(peak.coord2)
            << "): W = " << qphase::format17(peak.value) << "\n";
}

struct PhysicalFlags {
  double mass = 1.0;
  double omega = 1.0;
  double hbar = 1.0;
  double q_a = 0.001;
  double q_b = -1.0;  // negative means: follow q_a

  double q_b_effective() const { return q_b > 0.0 ? q_b : q_a; }
};

void add_physical_flags(CLI::App* cmd, PhysicalFlags& phys) {
  cmd->add_option("--mass", phys.mass, "particle mass")
      ->capture_default_str();
  cmd->add_option("--omega", phys.omega, "oscillator frequency")
      ->capture_default_str();
  cmd->add_option("--hbar", phys.hbar, "reduced Planck constant")
      ->capture_default_str();
  cmd->add_option("--q-a", phys.q_a, "deformation base, first state/particle")
      ->capture_default_str();
  cmd->add_option("--q-b", phys.q_b,
                  "deformation base, second state/particle (defaults to --q-a)");
}

int run_params(const PhysicalFlags& phys, int n, int m) {
  const auto par_a =
      qphase::make_params(phys.mass, phys.omega, phys.hbar, phys.q_a);
  const auto par_b =
      qphase::make_params(phys.mass, phys.omega, phys.hbar,
                          phys.q_b_effective());
  std::cout << "lambda = " << qphase::format17(par_a.lambda) << "\n";
  std::cout << "q_a = " << qphase::format17(par_a.q)
            << "  h_a = " << qphase::format17(par_a.h) << "\n";
  std::cout << "q_b = " << qphase::format17(par_b.q)
            << "  h_b = " << qphase::format17(par_b.h) << "\n";
  std::cout << "momentum shift per level (a) = "
            << qphase::format17(qphase::level_spacing(par_a)) << "\n";
  std::cout << "momentum shift per level (b) = "
            << qphase::format17(qphase::level_spacing(par_b)) << "\n";
  std::cout << "sigma_p = "
            << qphase::format17(par_a.hbar * std::sqrt(par_a.lambda)) << "\n";
  const auto& wide = (par_a.h >= par_b.h) ? par_a : par_b;
  const auto xa = qphase::default_position_axis(AxisLabel::x, wide);
  const auto pa = qphase::default_momentum_axis(AxisLabel::p, wide,
                                                std::max(n, m));
  std::cout << "suggested x window = [" << qphase::format17(xa.min) << ", "
            << qphase::format17(xa.max) << "] x " << xa.count << "\n";
  std::cout << "suggested p window = [" << qphase::format17(pa.min) << ", "
            << qphase::format17(pa.max) << "] x " << pa.count << "\n";
  return qphase::kExitSuccess;
}

int run_psi(const PhysicalFlags& phys, int n,
            const std::vector<std::string>& windows,
            const std::string& out_prefix) {
  const auto par =
      qphase::make_params(phys.mass, phys.omega, phys.hbar, phys.q_a);
  const auto state = qphase::make_pure_state(n, par);
  qphase::Axis axis = qphase::default_position_axis(AxisLabel::x, par, 601);
  for (const std::string& w : windows) {
    const qphase::Axis parsed = parse_window(w);
    if (parsed.label != AxisLabel::x) {
      throw ConfigError("psi accepts only an x window");
    }
    axis = parsed;
  }
  qphase::PsiEvaluator eval(state);
  std::string csv = "# fixed: n=" + std::to_string(n) +
                    ",q=" + qphase::format17(par.q) + "\n";
  csv += "x,re,im,density\n";
  for (int i = 0; i < axis.count; ++i) {
    const double x = axis.point(i);
    const std::complex<double> v = eval(x);
    csv += qphase::format17(x);
    csv += ',';
    csv += qphase::format17(v.real());
    csv += ',';
    csv += qphase::format17(v.imag());
    csv += ',';
    csv += qphase::format17(std::norm(v));
    csv += '\n';
  }
  const std::string path = out_prefix + ".csv";
  ensure_parent_dir(path);
  qphase::write_bytes(path, csv.data(), csv.size());
  std::cout << "wrote " << path << "\n";
  return qphase::kExitSuccess;
}

int run_wigner(const PhysicalFlags& phys, int n, int m,
               const std::string& amp_a_str, const std::string& amp_b_str,
               const std::vector<std::string>& windows,
               const OutputRequest& out, int threads, double prefactor_sign) {
  const auto par_a =
      qphase::make_params(phys.mass, phys.omega, phys.hbar, phys.q_a);
  const auto par_b = qphase::make_params(phys.mass, phys.omega, phys.hbar,
                                         phys.q_b_effective());
  const double inv_sqrt2 = std::numbers::sqrt2 / 2.0;
  const std::complex<double> amp_a =
      amp_a_str.empty() ? std::complex<double>(inv_sqrt2, 0.0)
                        : parse_amplitude(amp_a_str);
  const std::complex<double> amp_b =
      amp_b_str.empty() ? std::complex<double>(inv_sqrt2, 0.0)
                        : parse_amplitude(amp_b_str);
  const auto spec = qphase::make_superposition(amp_a, amp_b, n, m, par_a, par_b);

  const auto& wide = (par_a.h >= par_b.h) ? par_a : par_b;
  qphase::SliceSpec slice;
  slice.free_axes[0] = qphase::default_position_axis(AxisLabel::x, par_a);
  slice.free_axes[1] =
      qphase::default_momentum_axis(AxisLabel::p, wide, std::max(n, m));
  for (const std::string& w : windows) {
    const qphase::Axis axis = parse_window(w);
    if (axis.label == AxisLabel::x) {
      slice.free_axes[0] = axis;
    } else if (axis.label == AxisLabel::p) {
      slice.free_axes[1] = axis;
    } else {
      throw ConfigError("wigner windows must use axes x and p");
    }
  }
  const auto grid =
      qphase::evaluate_slice(spec, slice, threads, prefactor_sign);
  report_written(write_grid_outputs(grid, out));
  report_peak(grid);
  return qphase::kExitSuccess;
}

int run_bell(const PhysicalFlags& phys, const std::string& variant_str, int n,
             int m, const std::string& free_str,
             const std::vector<std::string>& fixed_strs,
             const std::vector<std::string>& windows,
             const OutputRequest& out, bool decompose, int threads) {
  const auto variant = qphase::bell_variant_from_string(variant_str);
  if (!variant) {
    throw ConfigError("variant must be one of psi+, psi-, phi+, phi-, got '" +
                      variant_str + "'");
  }
  const auto par_A =
      qphase::make_params(phys.mass, phys.omega, phys.hbar, phys.q_a);
  const auto par_B = qphase::make_params(phys.mass, phys.omega, phys.hbar,
                                         phys.q_b_effective());
  const auto spec = qphase::make_bell_spec(*variant, n, m, par_A, par_B);

  const auto free_parts = split(free_str, ',');
  if (free_parts.size() != 2) {
    throw ConfigError("--free must name two axes like xA,pA");
  }
  const AxisLabel free0 = parse_axis_label(free_parts[0]);
  const AxisLabel free1 = parse_axis_label(free_parts[1]);

  auto params_for = [&](AxisLabel label) -> const qphase::DeformationParams& {
    return is_particle_a_label(label) ? par_A : par_B;
  };
  auto default_axis = [&](AxisLabel label) {
    return is_position_label(label)
               ? qphase::default_position_axis(label, params_for(label))
               : qphase::default_momentum_axis(label, params_for(label),
                                               std::max(n, m));
  };

  qphase::SliceSpec slice;
  slice.free_axes[0] = default_axis(free0);
  slice.free_axes[1] = default_axis(free1);
  for (const std::string& w : windows) {
    const qphase::Axis axis = parse_window(w);
    if (axis.label == free0) {
      slice.free_axes[0] = axis;
    } else if (axis.label == free1) {
      slice.free_axes[1] = axis;
    } else {
      throw ConfigError("window axis " +
                        std::string(qphase::to_string(axis.label)) +
                        " is not a free axis");
    }
  }

  std::vector<std::pair<AxisLabel, double>> fixed;
  for (const std::string& f : fixed_strs) {
    fixed.push_back(parse_fixed(f));
  }
  for (AxisLabel label : {AxisLabel::xA, AxisLabel::pA, AxisLabel::xB,
                          AxisLabel::pB}) {
    if (label == free0 || label == free1) continue;
    const bool provided =
        std::any_of(fixed.begin(), fixed.end(),
                    [&](const auto& kv) { return kv.first == label; });
    if (provided) continue;
    const double value =
        is_position_label(label)
            ? 0.0
            : -0.5 * static_cast<double>(n + m) *
                  qphase::level_spacing(params_for(label));
    fixed.emplace_back(label, value);
  }
  slice.fixed = fixed;

  if (decompose) {
    const auto terms = qphase::evaluate_slice_terms(spec, slice, threads);
    report_written(write_grid_outputs(terms.total, out));
    const std::string terms_path = out.prefix + "_terms.csv";
    qphase::write_bell_terms_csv(terms, terms_path);
    std::cout << "wrote " << terms_path << "\n";
    report_peak(terms.total);
  } else {
    const auto grid = qphase::evaluate_slice(spec, slice, threads);
    report_written(write_grid_outputs(grid, out));
    report_peak(grid);
  }
  return qphase::kExitSuccess;
}

int run_verify(const std::string& level_str, int threads,
               const std::string& out_path, double prefactor_sign) {
  qphase::VerifyOptions opt;
  if (level_str == "fast") {
    opt.level = qphase::VerifyLevel::Fast;
  } else if (level_str == "full") {
    opt.level = qphase::VerifyLevel::Full;
  } else {
    throw ConfigError("verify level must be fast or full, got '" + level_str +
                      "'");
  }
  opt.threads = threads;
  opt.prefactor_sign = prefactor_sign;
  const auto results = qphase::run_verification(opt);
  for (const auto& r : results) {
    std::cout << (r.pass ? "PASS " : "FAIL ") << r.name
              << "  value=" << qphase::format17(r.value)
              << "  tol=" << qphase::format17(r.tolerance);
    if (!r.detail.empty()) {
      std::cout << "  (" << r.detail << ")";
    }
    std::cout << "\n";
  }
  const auto passed = static_cast<std::size_t>(
      std::count_if(results.begin(), results.end(),
                    [](const auto& r) { return r.pass; }));
  std::cout << "summary: " << passed << "/" << results.size()
            << " checks passed\n";
  const std::string csv = qphase::render_check_csv(results);
  std::cout << csv;
  if (!out_path.empty()) {
    ensure_parent_dir(out_path);
    qphase::write_bytes(out_path, csv.data(), csv.size());
    std::cout << "wrote " << out_path << "\n";
  }
  return qphase::all_passed(results) ? qphase::kExitSuccess
                                     : qphase::kExitVerificationFailure;
}

int run_figures(const std::string& out_dir, const std::string& format,
                int threads) {
  OutputRequest out;
  out.format = format;
  std::filesystem::create_directories(out_dir);
  for (const qphase::FigureDef& fig : qphase::default_figures()) {
    qphase::PhaseGrid grid;
    if (fig.is_bell) {
      grid = qphase::evaluate_slice(fig.bell, fig.slice, threads);
    } else {
      grid = qphase::evaluate_slice(fig.sup, fig.slice, threads);
    }
    out.prefix = (std::filesystem::path(out_dir) / fig.name).string();
    report_written(write_grid_outputs(grid, out));
  }
  return qphase::kExitSuccess;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"phase-space distributions of deformed oscillator states"};
  app.require_subcommand(1);
  app.set_config("--config", "",
                 "key=value file with one [section] per subcommand; "
                 "command-line flags take precedence");

  PhysicalFlags phys_params, phys_psi, phys_wigner, phys_bell;

  auto* cmd_params = app.add_subcommand(
      "params", "report derived constants and suggested windows");
  int params_n = 3, params_m = 5;
  add_physical_flags(cmd_params, phys_params);
  cmd_params->add_option("--n", params_n, "first level")->capture_default_str();
  cmd_params->add_option("--m", params_m, "second level")->capture_default_str();

  auto* cmd_psi = app.add_subcommand(
      "psi", "tabulate a stationary-state wavefunction");
  int psi_n = 3;
  std::vector<std::string> psi_windows;
  std::string psi_out = "psi";
  add_physical_flags(cmd_psi, phys_psi);
  cmd_psi->add_option("--n", psi_n, "level")->capture_default_str();
  cmd_psi->add_option("--window", psi_windows, "x:min:max:count");
  cmd_psi->add_option("--out", psi_out, "output path prefix")
      ->capture_default_str();

  auto* cmd_wigner = app.add_subcommand(
      "wigner", "phase-space grid of a two-level superposition");
  int wig_n = 3, wig_m = 5, wig_threads = 0;
  std::string wig_amp_a, wig_amp_b;
  std::vector<std::string> wig_windows;
  OutputRequest wig_out;
  wig_out.prefix = "wigner";
  double wig_sign = 1.0;
  add_physical_flags(cmd_wigner, phys_wigner);
  cmd_wigner->add_option("--n", wig_n, "first level")->capture_default_str();
  cmd_wigner->add_option("--m", wig_m, "second level")->capture_default_str();
  cmd_wigner->add_option("--amp-a", wig_amp_a,
                         "amplitude of the first state, re or re,im "
                         "(default 1/sqrt(2))");
  cmd_wigner->add_option("--amp-b", wig_amp_b,
                         "amplitude of the second state (default 1/sqrt(2))");
  cmd_wigner->add_option("--window", wig_windows, "ax:min:max:count");
  cmd_wigner->add_option("--format", wig_out.format, "csv, pgm16, or both")
      ->capture_default_str();
  cmd_wigner->add_option("--out", wig_out.prefix, "output path prefix")
      ->capture_default_str();
  cmd_wigner->add_option("--threads", wig_threads,
                         "worker count (0: QPHASE_THREADS or 1)");
  cmd_wigner->add_option("--prefactor-sign", wig_sign, "")->group("");

  auto* cmd_bell = app.add_subcommand(
      "bell", "slice of an entangled-pair phase-space distribution");
  int bell_n = 2, bell_m = 6, bell_threads = 0;
  std::string bell_variant = "psi+";
  std::string bell_free = "xA,pA";
  std::vector<std::string> bell_fixed, bell_windows;
  OutputRequest bell_out;
  bell_out.prefix = "bell";
  bool bell_decompose = false;
  add_physical_flags(cmd_bell, phys_bell);
  cmd_bell->add_option("--variant", bell_variant, "psi+, psi-, phi+, phi-")
      ->capture_default_str();
  cmd_bell->add_option("--n", bell_n, "first level")->capture_default_str();
  cmd_bell->add_option("--m", bell_m, "second level")->capture_default_str();
  cmd_bell->add_option("--free", bell_free, "two plotted axes, like xA,pA")
      ->capture_default_str();
  cmd_bell->add_option("--fix", bell_fixed,
                       "label=value for a non-plotted coordinate");
  cmd_bell->add_option("--window", bell_windows, "ax:min:max:count");
  cmd_bell->add_option("--format", bell_out.format, "csv, pgm16, or both")
      ->capture_default_str();
  cmd_bell->add_option("--out", bell_out.prefix, "output path prefix")
      ->capture_default_str();
  cmd_bell->add_flag("--decompose", bell_decompose,
                     "also write the term columns W1, W2, W3");
  cmd_bell->add_option("--threads", bell_threads,
                       "worker count (0: QPHASE_THREADS or 1)");

  auto* cmd_verify =
      app.add_subcommand("verify", "run the self-verification suite");
  std::string verify_level = "fast";
  std::string verify_out;
  int verify_threads = 0;
  double verify_sign = 1.0;
  cmd_verify->add_option("--verify,--level", verify_level, "fast or full")
      ->capture_default_str();
  cmd_verify->add_option("--out", verify_out, "also write the summary CSV here");
  cmd_verify->add_option("--threads", verify_threads,
                         "worker count (0: QPHASE_THREADS or 1)");
  cmd_verify->add_option("--prefactor-sign", verify_sign, "")->group("");

  auto* cmd_figures =
      app.add_subcommand("figures", "emit every canonical panel");
  std::string fig_out = "figures";
  std::string fig_format = "both";
  int fig_threads = 0;
  cmd_figures->add_option("--out", fig_out, "output directory")
      ->capture_default_str();
  cmd_figures->add_option("--format", fig_format, "csv, pgm16, or both")
      ->capture_default_str();
  cmd_figures->add_option("--threads", fig_threads,
                          "worker count (0: QPHASE_THREADS or 1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? qphase::kExitSuccess : qphase::kExitConfigError;
  }

  try {
    if (cmd_params->parsed()) {
      return run_params(phys_params, params_n, params_m);
    }
    if (cmd_psi->parsed()) {
      return run_psi(phys_psi, psi_n, psi_windows, psi_out);
    }
    if (cmd_wigner->parsed()) {
      return run_wigner(phys_wigner, wig_n, wig_m, wig_amp_a, wig_amp_b,
                        wig_windows, wig_out, wig_threads, wig_sign);
    }
    if (cmd_bell->parsed()) {
      return run_bell(phys_bell, bell_variant, bell_n, bell_m, bell_free,
                      bell_fixed, bell_windows, bell_out, bell_decompose,
                      bell_threads);
    }
    if (cmd_verify->parsed()) {
      return run_verify(verify_level, verify_threads, verify_out, verify_sign);
    }
    if (cmd_figures->parsed()) {
      return run_figures(fig_out, fig_format, fig_threads);
    }
  } catch (const ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return qphase::kExitConfigError;
  } catch (const qphase::VerificationError& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return qphase::kExitVerificationFailure;
  } catch (const qphase::InternalError& e) {
    std::cerr << "internal consistency error: " << e.what() << "\n";
    return qphase::kExitInternalError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return qphase::kExitInternalError;
  }
  return qphase::kExitConfigError;
}
