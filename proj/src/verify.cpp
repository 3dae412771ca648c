#include "qphase/verify.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstring>
#include <functional>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "qphase/bell.hpp"
#include "qphase/errors.hpp"
#include "qphase/figures.hpp"
#include "qphase/grid.hpp"
#include "qphase/io.hpp"
#include "qphase/oracle.hpp"
#include "qphase/oscillator.hpp"
#include "qphase/wigner2.hpp"

namespace qphase {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::vector<double> linspace(double lo, double hi, int count) {
  std::vector<double> out(static_cast<std::size_t>(count));
  const double step = (hi - lo) / static_cast<double>(count - 1);
  for (int i = 0; i < count; ++i) {
    out[static_cast<std::size_t>(i)] = lo + step * static_cast<double>(i);
  }
  return out;
}

// composite Simpson over [lo, hi] with an odd node count
double simpson(const std::function<double(double)>& f, double lo, double hi,
               int count) {
  if (count < 3) count = 3;
  if (count % 2 == 0) ++count;
  const double step = (hi - lo) / static_cast<double>(count - 1);
  double acc = 0.0;
  for (int i = 0; i < count; ++i) {
    const double w =
        (i == 0 || i == count - 1) ? 1.0 : ((i % 2 == 1) ? 4.0 : 2.0);
    acc += w * f(lo + step * static_cast<double>(i));
  }
  return acc * step / 3.0;
}

std::string format_g(double v) {
  std::ostringstream os;
  os.precision(9);
  os << v;
  return os.str();
}

CheckResult make_result(std::string name, int criterion, double value,
                        double tolerance, bool pass, std::string detail) {
  CheckResult r;
  r.name = std::move(name);
  r.criterion = criterion;
  r.value = value;
  r.tolerance = tolerance;
  r.pass = pass;
  r.detail = std::move(detail);
  return r;
}

// ---------------------------------------------------------------------------
// supporting check: quadrature rules against an analytic phase-space density
// ---------------------------------------------------------------------------

void check_quadrature_rules(const VerifyOptions&, std::vector<CheckResult>& out) {
  const double hbar = 1.0;
  const double alpha = 0.7;
  const double x0 = 0.4;
  const double p0 = -1.3;
  Wave1 packet = [&](double u) {
    const std::complex<double> phase(0.0, p0 * u / hbar);
    return std::pow(alpha / std::numbers::pi, 0.25) *
           std::exp(-0.5 * alpha * (u - x0) * (u - x0)) * std::exp(phase);
  };
  auto exact = [&](double x, double p) {
    const double dp = (p - p0) / hbar;
    return std::exp(-alpha * (x - x0) * (x - x0) - dp * dp / alpha) /
           (std::numbers::pi * hbar);
  };
  const std::array<std::pair<double, double>, 4> pts = {
      {{0.0, 0.0}, {0.9, -0.7}, {-1.1, 0.4}, {0.3, -2.0}}};
  double dev = 0.0;
  for (QuadRule rule : {QuadRule::Simpson, QuadRule::GaussLegendreComposite}) {
    QuadratureSettings s;
    s.half_width = 14.0;
    s.points_per_unit = 48;
    s.rule = rule;
    s.oscillation_rate = 3.0;
    for (const auto& [x, p] : pts) {
      const Complex w = wigner_numeric_1p(packet, x, p, hbar, s);
      dev = std::max(dev, std::abs(w.real() - exact(x, p)));
      dev = std::max(dev, std::abs(w.imag()));
    }
  }
  out.push_back(make_result("quadrature-self-test", 0, dev, 1e-10, dev <= 1e-10,
                            "both rules vs analytic coherent-state density"));
}

// ---------------------------------------------------------------------------
// criterion 1: closed-form two-level superposition vs quadrature
// ---------------------------------------------------------------------------

void check_superposition_oracle(const VerifyOptions& opt,
                                std::vector<CheckResult>& out) {
  struct Cfg {
    int n;
    int m;
    double q;
  };
  std::vector<Cfg> cfgs;
  int side = 5;
  if (opt.level == VerifyLevel::Full) {
    cfgs = {{3, 5, 0.001}, {1, 2, 0.5}, {0, 4, 0.9}};
  } else {
    cfgs = {{1, 2, 0.5}};
    side = 3;
  }
  const auto t0 = Clock::now();
  const std::complex<double> amp(std::numbers::sqrt2 / 2.0, 0.0);
  double dev = 0.0;
  int points = 0;
  for (const Cfg& cfg : cfgs) {
    const auto par = make_params(1.0, 1.0, 1.0, cfg.q);
    const auto spec =
        make_superposition(amp, amp, cfg.n, cfg.m, par, par);
    PsiEvaluator psi_n(make_pure_state(cfg.n, par));
    PsiEvaluator psi_m(make_pure_state(cfg.m, par));
    Wave1 wave = [&](double u) { return amp * psi_n(u) + amp * psi_m(u); };
    const double spread = level_spacing(par);
    const auto xs = linspace(-1.0, 1.0, side);
    const auto ps = linspace(-(static_cast<double>(cfg.m) + 1.0) * spread - 1.0,
                             spread + 1.0, side);
    QuadratureSettings s = QuadratureSettings::for_envelope(par.lambda);
    for (double x : xs) {
      for (double p : ps) {
        s.oscillation_rate =
            std::abs(p) / par.hbar +
            par.lambda * par.h * static_cast<double>(cfg.n + cfg.m);
        const double closed = wigner_superposition(spec, x, p);
        const Complex numeric = wigner_numeric_1p(wave, x, p, par.hbar, s);
        dev = std::max(dev, std::abs(closed - numeric.real()));
        dev = std::max(dev, std::abs(numeric.imag()));
        ++points;
      }
    }
  }
  const double secs = seconds_since(t0);
  const bool pass = dev <= 1e-8 && secs < 10.0;
  out.push_back(make_result(
      "superposition-vs-quadrature", 1, dev, 1e-8, pass,
      format_g(secs) + " s for " + std::to_string(points) + " points"));
}

// ---------------------------------------------------------------------------
// criterion 2: closed-form Bell densities vs two-particle quadrature
// ---------------------------------------------------------------------------

void check_bell_oracle(const VerifyOptions& opt,
                       std::vector<CheckResult>& out) {
  struct Cfg {
    int n;
    int m;
    double q;
  };
  std::vector<Cfg> cfgs;
  std::vector<BellVariant> variants;
  if (opt.level == VerifyLevel::Full) {
    cfgs = {{0, 1, 0.5}, {0, 1, 0.9}, {1, 2, 0.5}, {1, 2, 0.9}};
    variants = {BellVariant::PsiPlus, BellVariant::PsiMinus,
                BellVariant::PhiPlus, BellVariant::PhiMinus};
  } else {
    cfgs = {{0, 1, 0.5}};
    variants = {BellVariant::PsiPlus, BellVariant::PhiMinus};
  }
  const auto t0 = Clock::now();
  double dev = 0.0;
  int points = 0;
  for (const Cfg& cfg : cfgs) {
    const auto par = make_params(1.0, 1.0, 1.0, cfg.q);
    const double spread = level_spacing(par);
    const std::array<double, 3> xs = {-0.6, 0.0, 0.7};
    const std::array<double, 3> ps = {
        0.5, -0.5 * static_cast<double>(cfg.n + cfg.m) * spread,
        -static_cast<double>(cfg.m) * spread - 0.3};
    QuadratureSettings s;
    s.half_width = std::sqrt(64.0 / par.lambda);
    s.points_per_unit = 24;
    s.rule = QuadRule::Simpson;
    const double pmax =
        *std::max_element(ps.begin(), ps.end(),
                          [](double a, double b) {
                            return std::abs(a) < std::abs(b);
                          });
    s.oscillation_rate =
        std::abs(pmax) / par.hbar +
        par.lambda * par.h * static_cast<double>(cfg.n + cfg.m);
    for (BellVariant variant : variants) {
      const auto spec = make_bell_spec(variant, cfg.n, cfg.m, par, par);
      const BellEvaluator closed(spec);
      const BellWave wave(spec);
      Wave2 wave2 = [&](double uA, double uB) { return wave(uA, uB); };
      for (double xA : xs) {
        for (double pA : ps) {
          for (double xB : xs) {
            for (double pB : ps) {
              const PhasePoint4 pt{xA, pA, xB, pB};
              const double w = closed.value(pt);
              const Complex numeric =
                  wigner_numeric_2p(wave2, pt, par.hbar, s);
              dev = std::max(dev, std::abs(w - numeric.real()));
              dev = std::max(dev, std::abs(numeric.imag()));
              ++points;
            }
          }
        }
      }
    }
  }
  const double secs = seconds_since(t0);
  const bool pass = dev <= 1e-6 && secs < 300.0;
  out.push_back(make_result(
      "bell-vs-quadrature", 2, dev, 1e-6, pass,
      format_g(secs) + " s for " + std::to_string(points) + " points"));
}

// ---------------------------------------------------------------------------
// criterion 3: sign convention fixed by normalization and position marginal
// ---------------------------------------------------------------------------

struct ConventionDeviations {
  double norm = 0.0;
  double marginal = 0.0;
};

ConventionDeviations convention_deviations(double sign, VerifyLevel level) {
  ConventionDeviations dev;
  const std::vector<double> qs =
      (level == VerifyLevel::Full) ? std::vector<double>{0.001, 0.5}
                                   : std::vector<double>{0.5};
  const std::vector<int> ns = (level == VerifyLevel::Full)
                                  ? std::vector<int>{0, 1, 2, 3, 4}
                                  : std::vector<int>{0, 2};
  const int x_samples = (level == VerifyLevel::Full) ? 23 : 9;
  for (double q : qs) {
    const auto par = make_params(1.0, 1.0, 1.0, q);
    const double sigma_p = par.hbar * std::sqrt(par.lambda);
    for (int n : ns) {
      const auto state = make_pure_state(n, par);
      PsiEvaluator psi(state);
      const double p_reach =
          static_cast<double>(n) * level_spacing(par) + 2.0 + 6.0 * sigma_p;
      QuadratureSettings s;
      s.half_width = p_reach;
      s.points_per_unit = 64;
      s.rule = QuadRule::Simpson;
      std::function<double(double, double)> w = [&](double x, double p) {
        return wigner_pure(state, x, p, sign);
      };
      for (double x : linspace(-2.2, 2.2, x_samples)) {
        const double marg = marginal_p(w, x, s);
        const double density = std::norm(psi(x));
        dev.marginal = std::max(dev.marginal, std::abs(marg - density));
      }
      const double x_half = std::sqrt(18.0 / par.lambda);
      const int x_count =
          std::max(301, 2 * static_cast<int>(std::ceil(
                            x_half * (16.0 + 2.6 * 2.0 * par.lambda * par.h *
                                                 static_cast<double>(n)))) +
                            1);
      const double total = simpson(
          [&](double x) { return marginal_p(w, x, s); }, -x_half, x_half,
          x_count);
      dev.norm = std::max(dev.norm, std::abs(total - 1.0));
    }
  }
  return dev;
}

void check_convention(const VerifyOptions& opt,
                      std::vector<CheckResult>& out) {
  const auto dev = convention_deviations(opt.prefactor_sign, opt.level);
  out.push_back(make_result("normalization", 3, dev.norm, 1e-6,
                            dev.norm <= 1e-6,
                            "phase-space integral of pure states vs 1"));
  out.push_back(make_result("position-marginal", 3, dev.marginal, 1e-8,
                            dev.marginal <= 1e-8,
                            "momentum integral vs position density"));
  const auto flipped = convention_deviations(-opt.prefactor_sign,
                                             VerifyLevel::Fast);
  const double trip = std::min(flipped.norm, flipped.marginal);
  out.push_back(make_result(
      "sign-canary", 3, trip, 1e-3, trip > 1e-3,
      "flipped kernel sign must break normalization and marginal"));
}

// ---------------------------------------------------------------------------
// criterion 4: lattice spacing value at the benchmark deformation
// ---------------------------------------------------------------------------

void check_lattice_spacing(const VerifyOptions&,
                           std::vector<CheckResult>& out) {
  const auto par = make_params(1.0, 1.0, 1.0, 0.001);
  const double dev = std::abs(par.h - 3.7169);
  out.push_back(make_result("lattice-spacing", 4, dev, 5e-4, dev <= 5e-4,
                            "h at q=0.001, unit mass and frequency"));
}

// ---------------------------------------------------------------------------
// criterion 5: level-n density peaks at momentum -n*spacing
// ---------------------------------------------------------------------------

void check_momentum_displacement(const VerifyOptions& opt,
                                 std::vector<CheckResult>& out) {
  const auto par = make_params(1.0, 1.0, 1.0, 0.001);
  const double spread = level_spacing(par);
  const std::vector<int> levels =
      (opt.level == VerifyLevel::Full) ? std::vector<int>{2, 6}
                                       : std::vector<int>{2};
  const int count = (opt.level == VerifyLevel::Full) ? 1001 : 501;
  double worst = 0.0;
  double worst_step = 0.0;
  for (int n : levels) {
    const auto state = make_pure_state(n, par);
    const double lo = -(static_cast<double>(n) + 2.0) * spread;
    const double hi = 2.0 * spread;
    const double step = (hi - lo) / static_cast<double>(count - 1);
    double best_p = lo;
    double best_w = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < count; ++i) {
      const double p = lo + step * static_cast<double>(i);
      const double w = wigner_pure(state, 0.0, p);
      if (w > best_w) {
        best_w = w;
        best_p = p;
      }
    }
    const double dev = std::abs(best_p + static_cast<double>(n) * spread);
    if (dev > worst) {
      worst = dev;
      worst_step = step;
    }
    worst_step = std::max(worst_step, step);
  }
  out.push_back(make_result(
      "momentum-displacement", 5, worst, worst_step, worst <= worst_step,
      "argmax of W(0,p) vs -n times the level spacing"));
}

// ---------------------------------------------------------------------------
// criterion 6: conditional slices localize the partner particle
// ---------------------------------------------------------------------------

void check_conditional_peaks(const VerifyOptions& opt,
                             std::vector<CheckResult>& out) {
  const auto par = make_params(1.0, 1.0, 1.0, 0.001);
  const int n = 2;
  const int m = 6;
  const double spread = level_spacing(par);
  const int count = (opt.level == VerifyLevel::Full) ? 301 : 151;
  SliceSpec slice;
  slice.free_axes[0] = make_axis(AxisLabel::xA, -1.5, 1.5, count);
  slice.free_axes[1] =
      make_axis(AxisLabel::pA, -8.0 * spread, 2.0 * spread, count);
  slice.fixed = {{AxisLabel::xB, 0.0},
                 {AxisLabel::pB, -static_cast<double>(n) * spread}};
  const double x_step = 3.0 / static_cast<double>(count - 1);
  const double p_step = 10.0 * spread / static_cast<double>(count - 1);

  struct Expect {
    BellVariant variant;
    double p_peak;
    const char* label;
  };
  const std::array<Expect, 2> cases = {
      {{BellVariant::PsiPlus, -static_cast<double>(m) * spread,
        "anticorrelated family"},
       {BellVariant::PhiPlus, -static_cast<double>(n) * spread,
        "correlated family"}}};
  double worst = 0.0;
  std::string detail;
  for (const Expect& c : cases) {
    const auto spec = make_bell_spec(c.variant, n, m, par, par);
    const auto grid = evaluate_slice(spec, slice, opt.threads);
    const GridPeak peak = find_peak(grid);
    const double dx = std::abs(peak.coord1 - 0.0) / x_step;
    const double dp = std::abs(peak.coord2 - c.p_peak) / p_step;
    worst = std::max(worst, std::max(dx, dp));
    if (!detail.empty()) detail += "; ";
    detail += std::string(c.label) + " peak at p=" + format_g(peak.coord2);
  }
  out.push_back(make_result("conditional-peaks", 6, worst, 1.0, worst <= 1.0,
                            detail));
}

// ---------------------------------------------------------------------------
// criterion 7: plus/minus difference equals twice the interference term
// ---------------------------------------------------------------------------

void check_negation_identity(const VerifyOptions& opt,
                             std::vector<CheckResult>& out) {
  struct Cfg {
    int n;
    int m;
    double q;
  };
  const std::array<Cfg, 2> cfgs = {{{0, 1, 0.5}, {2, 6, 0.001}}};
  const int count = (opt.level == VerifyLevel::Full) ? 41 : 21;
  double dev = 0.0;
  for (const Cfg& cfg : cfgs) {
    const auto par = make_params(1.0, 1.0, 1.0, cfg.q);
    const double spread = level_spacing(par);
    const auto xs = linspace(-1.2, 1.2, count);
    const auto ps = linspace(-(static_cast<double>(cfg.m) + 1.5) * spread,
                             1.5 * spread, count);
    const double p_fix =
        -0.5 * static_cast<double>(cfg.n + cfg.m) * spread;
    const std::array<std::pair<BellVariant, BellVariant>, 2> families = {
        {{BellVariant::PsiPlus, BellVariant::PsiMinus},
         {BellVariant::PhiPlus, BellVariant::PhiMinus}}};
    for (const auto& [plus, minus] : families) {
      const BellEvaluator ep(make_bell_spec(plus, cfg.n, cfg.m, par, par));
      const BellEvaluator em(make_bell_spec(minus, cfg.n, cfg.m, par, par));
      for (double x : xs) {
        for (double p : ps) {
          const PhasePoint4 pt{x, p, 0.0, p_fix};
          const auto tp = ep.terms(pt);
          const double wm = em.value(pt);
          const double lhs = tp.total - wm;
          const double rhs = 2.0 * tp.w2;
          const double scale =
              std::max({1.0, std::abs(tp.total), std::abs(wm)});
          dev = std::max(dev, std::abs(lhs - rhs) / scale);
        }
      }
    }
  }
  out.push_back(make_result("interference-negation", 7, dev, 1e-12,
                            dev <= 1e-12,
                            "plus minus minus equals twice the cross term"));
}

// ---------------------------------------------------------------------------
// criterion 8: particle exchange symmetry for equal deformations
// ---------------------------------------------------------------------------

void check_exchange_symmetry(const VerifyOptions& opt,
                             std::vector<CheckResult>& out) {
  struct Cfg {
    int n;
    int m;
    double q;
  };
  const std::array<Cfg, 2> cfgs = {{{1, 3, 0.35}, {2, 6, 0.001}}};
  double dev = 0.0;
  for (const Cfg& cfg : cfgs) {
    const auto par = make_params(1.0, 1.0, 1.0, cfg.q);
    const double spread = level_spacing(par);
    const std::array<double, 3> xs = {-0.6, 0.0, 0.7};
    const std::array<double, 3> ps = {
        0.5, -0.5 * static_cast<double>(cfg.n + cfg.m) * spread,
        -static_cast<double>(cfg.m) * spread - 0.3};
    for (BellVariant variant :
         {BellVariant::PsiPlus, BellVariant::PsiMinus, BellVariant::PhiPlus,
          BellVariant::PhiMinus}) {
      const BellEvaluator ev(make_bell_spec(variant, cfg.n, cfg.m, par, par));
      for (double xA : xs) {
        for (double pA : ps) {
          for (double xB : xs) {
            for (double pB : ps) {
              const double a = ev.value({xA, pA, xB, pB});
              const double b = ev.value({xB, pB, xA, pA});
              dev = std::max(dev, std::abs(a - b) / (1.0 + std::abs(a)));
            }
          }
        }
      }
    }
  }
  (void)opt;
  out.push_back(make_result("exchange-symmetry", 8, dev, 1e-12, dev <= 1e-12,
                            "swap of both particle slots for equal bases"));
}

// ---------------------------------------------------------------------------
// criterion 9: deformed states approach the harmonic oscillator as q -> 1
// ---------------------------------------------------------------------------

void check_classical_limit(const VerifyOptions& opt,
                           std::vector<CheckResult>& out) {
  const std::array<double, 3> qs = {0.9, 0.99, 0.999};
  const int samples = (opt.level == VerifyLevel::Full) ? 1601 : 401;
  const auto xs = linspace(-8.0, 8.0, samples);
  double ground_dev = 0.0;
  double worst_ratio = 0.0;
  bool monotone = true;
  for (int n = 0; n <= 4; ++n) {
    std::array<double, 3> dist{};
    for (std::size_t qi = 0; qi < qs.size(); ++qi) {
      const auto par = make_params(1.0, 1.0, 1.0, qs[qi]);
      PsiEvaluator psi(make_pure_state(n, par));
      double d = 0.0;
      for (double x : xs) {
        const double deformed = std::norm(psi(x));
        const double ref = ho_reference_psi(n, par.lambda, x);
        d = std::max(d, std::abs(deformed - ref * ref));
      }
      dist[qi] = d;
    }
    if (n == 0) {
      ground_dev = *std::max_element(dist.begin(), dist.end());
    } else {
      for (std::size_t qi = 1; qi < qs.size(); ++qi) {
        if (!(dist[qi] < dist[qi - 1])) monotone = false;
        if (dist[qi - 1] > 0.0) {
          worst_ratio = std::max(worst_ratio, dist[qi] / dist[qi - 1]);
        }
      }
    }
  }
  const bool pass = monotone && ground_dev <= 1e-12 && worst_ratio < 1.0;
  out.push_back(make_result(
      "deformation-limit", 9, worst_ratio, 1.0, pass,
      "distance shrinks with q; ground level matches exactly (dev " +
          format_g(ground_dev) + ")"));
}

// ---------------------------------------------------------------------------
// criterion 10: magnitude bounds on every canonical panel, plus the
// four-dimensional normalization of a Bell density
// ---------------------------------------------------------------------------

void check_bounds_and_total_mass(const VerifyOptions& opt,
                                 std::vector<CheckResult>& out) {
  double excess = -std::numeric_limits<double>::infinity();
  std::string worst_name;
  for (FigureDef fig : default_figures()) {
    if (opt.level == VerifyLevel::Fast) {
      for (Axis& ax : fig.slice.free_axes) {
        ax.count = 101;
      }
    }
    double bound = 0.0;
    PhaseGrid grid;
    if (fig.is_bell) {
      const double hbar = fig.bell.params_A.hbar;
      bound = 1.0 / ((std::numbers::pi * hbar) * (std::numbers::pi * hbar));
      grid = evaluate_slice(fig.bell, fig.slice, opt.threads);
    } else {
      const double hbar = fig.sup.params_a.hbar;
      bound = 1.0 / (std::numbers::pi * hbar);
      grid = evaluate_slice(fig.sup, fig.slice, opt.threads);
    }
    const double peak = grid.values.cwiseAbs().maxCoeff();
    if (peak - bound > excess) {
      excess = peak - bound;
      worst_name = fig.name;
    }
  }
  out.push_back(make_result("magnitude-bounds", 10, excess, 1e-9,
                            excess <= 1e-9,
                            "largest bound excess on panel " + worst_name));

  const auto par = make_params(1.0, 1.0, 1.0, 0.5);
  const int n = 0;
  const int m = 1;
  const double spread = level_spacing(par);
  const double sigma_p = par.hbar * std::sqrt(par.lambda);
  const double x_half = 5.7 / std::sqrt(2.0 * par.lambda);
  const double p_lo = -(static_cast<double>(m) * spread + 6.5 * sigma_p);
  const double p_hi = 6.5 * sigma_p;
  const int axis_count = (opt.level == VerifyLevel::Full) ? 81 : 41;
  const double tol = (opt.level == VerifyLevel::Full) ? 1e-4 : 1e-3;

  auto axis_nodes = [&](double lo, double hi) {
    int count = axis_count;
    if (count % 2 == 0) ++count;
    std::vector<std::pair<double, double>> nodes(
        static_cast<std::size_t>(count));
    const double step = (hi - lo) / static_cast<double>(count - 1);
    for (int i = 0; i < count; ++i) {
      const double w =
          (i == 0 || i == count - 1) ? 1.0 : ((i % 2 == 1) ? 4.0 : 2.0);
      nodes[static_cast<std::size_t>(i)] = {
          lo + step * static_cast<double>(i), w * step / 3.0};
    }
    return nodes;
  };
  const auto xn = axis_nodes(-x_half, x_half);
  const auto pn = axis_nodes(p_lo, p_hi);

  double worst_mass_dev = 0.0;
  std::string mass_detail;
  for (BellVariant variant : {BellVariant::PsiPlus, BellVariant::PhiMinus}) {
    const BellEvaluator ev(make_bell_spec(variant, n, m, par, par));
    double total = 0.0;
    for (const auto& [xA, wxA] : xn) {
      for (const auto& [pA, wpA] : pn) {
        double inner = 0.0;
        for (const auto& [xB, wxB] : xn) {
          for (const auto& [pB, wpB] : pn) {
            inner += wxB * wpB * ev.value({xA, pA, xB, pB});
          }
        }
        total += wxA * wpA * inner;
      }
    }
    worst_mass_dev = std::max(worst_mass_dev, std::abs(total - 1.0));
    if (!mass_detail.empty()) mass_detail += "; ";
    mass_detail += std::string(to_string(variant)) + " mass " + format_g(total);
  }
  out.push_back(make_result("bell-total-mass", 10, worst_mass_dev, tol,
                            worst_mass_dev <= tol, mass_detail));
}

// ---------------------------------------------------------------------------
// criterion 11: bitwise reproducibility across worker counts and reruns
// ---------------------------------------------------------------------------

void check_thread_determinism(const VerifyOptions&,
                              std::vector<CheckResult>& out) {
  const auto par = make_params(1.0, 1.0, 1.0, 0.001);
  const auto spec = make_bell_spec(BellVariant::PsiMinus, 2, 6, par, par);
  const double spread = level_spacing(par);
  SliceSpec slice;
  slice.free_axes[0] = make_axis(AxisLabel::xA, -1.4, 1.4, 37);
  slice.free_axes[1] = make_axis(AxisLabel::pA, -8.0 * spread, spread, 64);
  slice.fixed = {{AxisLabel::xB, 0.0}, {AxisLabel::pB, -4.0 * spread}};
  const auto g1 = evaluate_slice(spec, slice, 1);
  const auto g4 = evaluate_slice(spec, slice, 4);
  const auto g1b = evaluate_slice(spec, slice, 1);

  const std::complex<double> amp(std::numbers::sqrt2 / 2.0, 0.0);
  const auto sup = make_superposition(amp, amp, 3, 5, par, par);
  SliceSpec sslice;
  sslice.free_axes[0] = make_axis(AxisLabel::x, -1.3, 1.3, 31);
  sslice.free_axes[1] = make_axis(AxisLabel::p, -7.0 * spread, spread, 29);
  const auto s1 = evaluate_slice(sup, sslice, 1);
  const auto s3 = evaluate_slice(sup, sslice, 3);

  long mismatches = 0;
  auto count_mismatches = [&](const PhaseGrid& a, const PhaseGrid& b) {
    for (int r = 0; r < a.values.rows(); ++r) {
      for (int c = 0; c < a.values.cols(); ++c) {
        const double va = a.values(r, c);
        const double vb = b.values(r, c);
        if (std::memcmp(&va, &vb, sizeof(double)) != 0) ++mismatches;
      }
    }
  };
  count_mismatches(g1, g4);
  count_mismatches(g1, g1b);
  count_mismatches(s1, s3);
  const bool csv_equal = grid_to_csv(g1) == grid_to_csv(g4);
  const bool pass = mismatches == 0 && csv_equal;
  out.push_back(make_result(
      "thread-determinism", 11, static_cast<double>(mismatches), 0.0, pass,
      "bitwise grid comparison across worker counts and reruns"));
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& opt) {
  using CheckFn = void (*)(const VerifyOptions&, std::vector<CheckResult>&);
  struct Entry {
    const char* name;
    int criterion;
    CheckFn fn;
  };
  const std::array<Entry, 11> entries = {
      {{"quadrature-self-test", 0, &check_quadrature_rules},
       {"superposition-vs-quadrature", 1, &check_superposition_oracle},
       {"bell-vs-quadrature", 2, &check_bell_oracle},
       {"normalization", 3, &check_convention},
       {"lattice-spacing", 4, &check_lattice_spacing},
       {"momentum-displacement", 5, &check_momentum_displacement},
       {"conditional-peaks", 6, &check_conditional_peaks},
       {"interference-negation", 7, &check_negation_identity},
       {"exchange-symmetry", 8, &check_exchange_symmetry},
       {"deformation-limit", 9, &check_classical_limit},
       {"bounds-and-mass", 10, &check_bounds_and_total_mass}}};
  std::vector<CheckResult> out;
  for (const Entry& e : entries) {
    try {
      e.fn(opt, out);
    } catch (const std::exception& ex) {
      out.push_back(make_result(e.name, e.criterion, 0.0, 0.0, false,
                                std::string("exception: ") + ex.what()));
    }
  }
  try {
    check_thread_determinism(opt, out);
  } catch (const std::exception& ex) {
    out.push_back(make_result("thread-determinism", 11, 0.0, 0.0, false,
                              std::string("exception: ") + ex.what()));
  }
  return out;
}

std::string render_check_csv(const std::vector<CheckResult>& results) {
  std::string out = "check,value,tolerance,pass\n";
  for (const CheckResult& r : results) {
    out += r.name;
    out += ',';
    out += format17(r.value);
    out += ',';
    out += format17(r.tolerance);
    out += ',';
    out += r.pass ? "true" : "false";
    out += '\n';
  }
  return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CheckResult& r) { return r.pass; });
}

}  // namespace qphase
