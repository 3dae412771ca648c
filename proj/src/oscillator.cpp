#include "qphase/oscillator.hpp"

#include <cmath>
#include <string>

namespace qphase {

namespace {

void require_finite_positive(double v, const char* name) {
  if (!std::isfinite(v) || v <= 0.0)
    throw ConfigError(std::string(name) + " must be finite and positive");
}

void require_level(int n) {
  if (n < 0 || n > kMaxLevel)
    throw ConfigError("level must lie in [0, " + std::to_string(kMaxLevel) + "]");
}

}  // namespace

DeformationParams make_params(double mass, double omega, double hbar, double q) {
  require_finite_positive(mass, "mass");
  require_finite_positive(omega, "omega");
  require_finite_positive(hbar, "hbar");
  if (!std::isfinite(q) || q < kMinDeformation || q > 1.0 - kMinDeformation)
    throw ConfigError("q must lie in [1e-9, 1 - 1e-9]");
  DeformationParams par;
  par.mass = mass;
  par.omega = omega;
  par.hbar = hbar;
  par.lambda = mass * omega / (2.0 * hbar);
  par.q = q;
  par.h = std::sqrt(-std::log(q) / par.lambda);
  return par;
}

PureStateSpec make_pure_state(int n, const DeformationParams& params) {
  require_level(n);
  return PureStateSpec{n, params};
}

std::complex<double> i_power(int n) {
  switch (((n % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

double log_normalization_mag(int n, const DeformationParams& par) {
  require_level(n);
  return 0.25 * std::log(2.0 * par.lambda / M_PI)
       + 0.5 * n * std::log(par.q)
       - 0.5 * log_qq(par.q, n);
}

std::complex<double> normalization_c(int n, const DeformationParams& par) {
  return i_power(n) * std::exp(log_normalization_mag(n, par));
}

PsiEvaluator::PsiEvaluator(const PureStateSpec& state)
    : n_(state.n),
      lambda_(state.params.lambda),
      phase_rate_(2.0 * state.params.lambda * state.params.h),
      front_(i_power(state.n)) {
  require_level(n_);
  const double log_c = log_normalization_mag(n_, state.params);
  term_log_.resize(n_ + 1);
  term_sign_.resize(n_ + 1);
  for (int k = 0; k <= n_; ++k) {
    const SignedLog<double> b = b_factor_branch(n_, k, state.params.q);
    term_log_[k] = log_c + b.log_mag;
    term_sign_[k] = b.sign;
  }
}

std::complex<double> PsiEvaluator::operator()(double x) const {
  const double envelope_log = -lambda_ * x * x;
  const double angle_step = -phase_rate_ * x;
  std::complex<double> acc(0.0, 0.0);
  for (int k = 0; k <= n_; ++k) {
    const double mag = term_sign_[k] * std::exp(term_log_[k] + envelope_log);
    acc += mag * std::polar(1.0, angle_step * k);
  }
  return front_ * acc;
}

std::complex<double> psi(const PureStateSpec& state, double x) {
  return PsiEvaluator(state)(x);
}

double ho_reference_psi(int n, double lambda, double x) {
  require_level(n);
  require_finite_positive(lambda, "lambda");
  const double u = std::sqrt(2.0 * lambda) * x;
  const double phi0 = std::pow(2.0 * lambda / M_PI, 0.25) * std::exp(-0.5 * u * u);
  if (n == 0) return phi0;
  double prev = phi0;
  double cur = std::sqrt(2.0) * u * phi0;
  for (int k = 2; k <= n; ++k) {
    const double next = std::sqrt(2.0 / k) * u * cur - std::sqrt((k - 1.0) / k) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace qphase
