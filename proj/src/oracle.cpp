#include "qphase/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace qphase {

QuadratureSettings QuadratureSettings::for_envelope(double lambda) {
  if (!std::isfinite(lambda) || lambda <= 0.0)
    throw ConfigError("lambda must be finite and positive");
  QuadratureSettings s;
  s.half_width = 2.0 * std::sqrt(30.0 / lambda);
  s.points_per_unit = 64;
  s.rule = QuadRule::Simpson;
  return s;
}

void gauss_legendre(int order, std::vector<double>& nodes, std::vector<double>& weights) {
  if (order < 2) throw ConfigError("Gauss-Legendre order must be at least 2");
  nodes.assign(order, 0.0);
  weights.assign(order, 0.0);
  const int half = (order + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (order + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 64; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int k = 0; k < order; ++k) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * k + 1.0) * x * p1 - k * p2) / (k + 1.0);
      }
      dp = order * (x * p0 - p1) / (x * x - 1.0);
      const double dx = p0 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    nodes[i] = -x;
    nodes[order - 1 - i] = x;
    weights[i] = w;
    weights[order - 1 - i] = w;
  }
  if (order % 2 == 1) nodes[order / 2] = 0.0;
}

namespace {

constexpr int kGaussOrder = 12;
constexpr double kTruncationThreshold = 1e-13;

struct NodeSet {
  std::vector<double> y;  // antisymmetric: y[m - 1 - i] == -y[i] exactly
  std::vector<double> w;
};

int effective_ppu(const QuadratureSettings& s) {
  if (s.points_per_unit < 16) throw ConfigError("points_per_unit must be at least 16");
  if (!std::isfinite(s.half_width) || s.half_width <= 0.0)
    throw ConfigError("half_width must be finite and positive");
  int ppu = s.points_per_unit;
  if (s.oscillation_rate > 0.0)
    ppu = std::max(ppu, static_cast<int>(std::ceil(2.6 * s.oscillation_rate)));
  return ppu;
}

NodeSet build_nodes(const QuadratureSettings& s) {
  const double H = s.half_width;
  const int ppu = effective_ppu(s);
  NodeSet nd;
  if (s.rule == QuadRule::Simpson) {
    int count = static_cast<int>(std::llround(2.0 * H * ppu));
    if (count % 2 == 0) ++count;
    count = std::max(count, 5);
    nd.y.resize(count);
    nd.w.resize(count);
    const double step = 2.0 * H / (count - 1);
    for (int i = 0; i < count / 2; ++i) {
      const double t = step * i;
      nd.y[i] = t - H;
      nd.y[count - 1 - i] = H - t;
    }
    nd.y[count / 2] = 0.0;
    for (int i = 0; i < count; ++i)
      nd.w[i] = (i == 0 || i == count - 1) ? step / 3.0 : (i % 2 == 1 ? 4.0 * step / 3.0 : 2.0 * step / 3.0);
  } else {
    int segments = std::max(2, static_cast<int>(std::ceil(2.0 * H * ppu / kGaussOrder)));
    if (segments % 2 == 1) ++segments;
    std::vector<double> xi, wt;
    gauss_legendre(kGaussOrder, xi, wt);
    const double seg_len = 2.0 * H / segments;
    const double half_len = 0.5 * seg_len;
    nd.y.resize(segments * kGaussOrder);
    nd.w.resize(segments * kGaussOrder);
    for (int j = 0; j < segments; ++j) {
      const double center = (j + 0.5) * seg_len - H;
      for (int k = 0; k < kGaussOrder; ++k) {
        nd.y[j * kGaussOrder + k] = center + half_len * xi[k];
        nd.w[j * kGaussOrder + k] = half_len * wt[k];
      }
    }
  }
  return nd;
}

void fill_report(QuadratureReport* report, double boundary_mag, double max_mag, int nodes) {
  if (report == nullptr) return;
  report->nodes = nodes;
  report->boundary_ratio = max_mag > 0.0 ? boundary_mag / max_mag : 0.0;
  report->truncation_suspect = max_mag > 0.0 && report->boundary_ratio > kTruncationThreshold;
}

Complex cross_transform(const std::vector<Complex>& F, const std::vector<Complex>& G,
                        const NodeSet& nd, double p, double hbar, QuadratureReport* report) {
  const int m = static_cast<int>(nd.y.size());
  Complex acc(0.0, 0.0);
  double max_mag = 0.0, boundary_mag = 0.0;
  for (int i = 0; i < m; ++i) {
    const Complex val = F[i] * std::conj(G[m - 1 - i]);
    const double mag = std::abs(val);
    max_mag = std::max(max_mag, mag);
    if (i == 0 || i == m - 1) boundary_mag = std::max(boundary_mag, mag);
    acc += nd.w[i] * std::polar(1.0, p * nd.y[i] / hbar) * val;
  }
  fill_report(report, boundary_mag, max_mag, m);
  return acc / (2.0 * M_PI * hbar);
}

}  // namespace

Complex wigner_cross_1p(const Wave1& f, const Wave1& g, double x, double p, double hbar,
                        const QuadratureSettings& settings, QuadratureReport* report) {
  if (!std::isfinite(hbar) || hbar <= 0.0) throw ConfigError("hbar must be finite and positive");
  const NodeSet nd = build_nodes(settings);
  const int m = static_cast<int>(nd.y.size());
  std::vector<Complex> F(m), G(m);
  for (int i = 0; i < m; ++i) {
    const double u = x - 0.5 * nd.y[i];
    F[i] = f(u);
    G[i] = g(u);
  }
  return cross_transform(F, G, nd, p, hbar, report);
}

Complex wigner_numeric_1p(const Wave1& f, double x, double p, double hbar,
                          const QuadratureSettings& settings, QuadratureReport* report) {
  if (!std::isfinite(hbar) || hbar <= 0.0) throw ConfigError("hbar must be finite and positive");
  const NodeSet nd = build_nodes(settings);
  const int m = static_cast<int>(nd.y.size());
  std::vector<Complex> F(m);
  for (int i = 0; i < m; ++i) F[i] = f(x - 0.5 * nd.y[i]);
  return cross_transform(F, F, nd, p, hbar, report);
}

Complex wigner_numeric_2p(const Wave2& f, const PhasePoint4& pt, double hbar,
                          const QuadratureSettings& settings, QuadratureReport* report) {
  if (!std::isfinite(hbar) || hbar <= 0.0) throw ConfigError("hbar must be finite and positive");
  const NodeSet nd = build_nodes(settings);
  const int m = static_cast<int>(nd.y.size());
  std::vector<Complex> F(static_cast<size_t>(m) * m);
  for (int a = 0; a < m; ++a) {
    const double uA = pt.x_A - 0.5 * nd.y[a];
    for (int b = 0; b < m; ++b)
      F[static_cast<size_t>(a) * m + b] = f(uA, pt.x_B - 0.5 * nd.y[b]);
  }
  std::vector<Complex> wkA(m), wkB(m);
  for (int i = 0; i < m; ++i) {
    wkA[i] = nd.w[i] * std::polar(1.0, pt.p_A * nd.y[i] / hbar);
    wkB[i] = nd.w[i] * std::polar(1.0, pt.p_B * nd.y[i] / hbar);
  }
  Complex acc(0.0, 0.0);
  double max_mag = 0.0, boundary_mag = 0.0;
  for (int a = 0; a < m; ++a) {
    const int ma = m - 1 - a;
    Complex row(0.0, 0.0);
    for (int b = 0; b < m; ++b) {
      const Complex val = F[static_cast<size_t>(a) * m + b]
                        * std::conj(F[static_cast<size_t>(ma) * m + (m - 1 - b)]);
      const double mag = std::abs(val);
      max_mag = std::max(max_mag, mag);
      if (a == 0 || a == m - 1 || b == 0 || b == m - 1) boundary_mag = std::max(boundary_mag, mag);
      row += wkB[b] * val;
    }
    acc += wkA[a] * row;
  }
  fill_report(report, boundary_mag, max_mag, m * m);
  return acc / (4.0 * M_PI * M_PI * hbar * hbar);
}

Complex inner_product(const Wave1& f, const Wave1& g, const QuadratureSettings& settings,
                      QuadratureReport* report) {
  const NodeSet nd = build_nodes(settings);
  const int m = static_cast<int>(nd.y.size());
  Complex acc(0.0, 0.0);
  double max_mag = 0.0, boundary_mag = 0.0;
  for (int i = 0; i < m; ++i) {
    const Complex val = std::conj(f(nd.y[i])) * g(nd.y[i]);
    const double mag = std::abs(val);
    max_mag = std::max(max_mag, mag);
    if (i == 0 || i == m - 1) boundary_mag = std::max(boundary_mag, mag);
    acc += nd.w[i] * val;
  }
  fill_report(report, boundary_mag, max_mag, m);
  return acc;
}

double marginal_p(const std::function<double(double, double)>& w, double x,
                  const QuadratureSettings& settings) {
  const NodeSet nd = build_nodes(settings);
  const int m = static_cast<int>(nd.y.size());
  double acc = 0.0;
  for (int i = 0; i < m; ++i) acc += nd.w[i] * w(x, nd.y[i]);
  return acc;
}

}  // namespace qphase
