#pragma once

#include <complex>
#include <functional>

#include "qphase/oscillator.hpp"
#include "qphase/phase_point.hpp"

namespace qphase {

enum class QuadRule { Simpson, GaussLegendreComposite };

struct QuadratureSettings {
  double half_width = 0.0;
  int points_per_unit = 64;
  QuadRule rule = QuadRule::Simpson;
  // dominant angular rate (rad per unit of the integration variable); when
  // set, the node density is raised so oscillations stay resolved
  double oscillation_rate = 0.0;

  static QuadratureSettings for_envelope(double lambda);
};

struct QuadratureReport {
  double boundary_ratio = 0.0;
  int nodes = 0;
  bool truncation_suspect = false;
};

using Complex = std::complex<double>;
using Wave1 = std::function<Complex(double)>;
using Wave2 = std::function<Complex(double, double)>;

// 1/(2 pi hbar) * integral over y of exp(i p y / hbar) f(x - y/2) conj(g(x + y/2))
Complex wigner_cross_1p(const Wave1& f, const Wave1& g, double x, double p, double hbar,
                        const QuadratureSettings& settings, QuadratureReport* report = nullptr);

Complex wigner_numeric_1p(const Wave1& f, double x, double p, double hbar,
                          const QuadratureSettings& settings, QuadratureReport* report = nullptr);

// 1/(4 pi^2 hbar^2) * double integral of exp(i (p_A y_A + p_B y_B) / hbar)
//   f(x_A - y_A/2, x_B - y_B/2) conj(f(x_A + y_A/2, x_B + y_B/2))
Complex wigner_numeric_2p(const Wave2& f, const PhasePoint4& pt, double hbar,
                          const QuadratureSettings& settings, QuadratureReport* report = nullptr);

// integral over [-half_width, half_width] of conj(f) g
Complex inner_product(const Wave1& f, const Wave1& g, const QuadratureSettings& settings,
                      QuadratureReport* report = nullptr);

// integral over p in [-half_width, half_width] of w(x, p)
double marginal_p(const std::function<double(double, double)>& w, double x,
                  const QuadratureSettings& settings);

// nodes and weights of the order-point Gauss-Legendre rule on [-1, 1]
void gauss_legendre(int order, std::vector<double>& nodes, std::vector<double>& weights);

}  // namespace qphase
