#pragma once

#include <complex>
#include <vector>

#include "qphase/qseries.hpp"

namespace qphase {

inline constexpr int kMaxLevel = 64;
inline constexpr double kMinDeformation = 1e-9;

struct DeformationParams {
  double mass = 1.0;
  double omega = 1.0;
  double hbar = 1.0;
  double lambda = 0.5;  // mass * omega / (2 hbar)
  double q = 0.5;       // exp(-lambda h^2)
  double h = 0.0;       // sqrt(-ln q / lambda)
};

DeformationParams make_params(double mass, double omega, double hbar, double q);

struct PureStateSpec {
  int n = 0;
  DeformationParams params;
};

PureStateSpec make_pure_state(int n, const DeformationParams& params);

// i^n for integer n of either sign
std::complex<double> i_power(int n);

// (2 lambda / pi)^{1/4} i^n q^{n/2} (q; q)_n^{-1/2}
std::complex<double> normalization_c(int n, const DeformationParams& params);

// log of |normalization_c(n)|
double log_normalization_mag(int n, const DeformationParams& params);

// Stationary-state evaluator with the per-level coefficients cached once.
class PsiEvaluator {
 public:
  explicit PsiEvaluator(const PureStateSpec& state);
  std::complex<double> operator()(double x) const;
  int level() const { return n_; }

 private:
  int n_;
  double lambda_;
  double phase_rate_;  // 2 lambda h, angle advance per unit x per index
  std::complex<double> front_;
  std::vector<double> term_log_;
  std::vector<int> term_sign_;
};

std::complex<double> psi(const PureStateSpec& state, double x);

// Hermite-function stationary state of the undeformed oscillator
double ho_reference_psi(int n, double lambda, double x);

}  // namespace qphase
