#include "qphase/wigner2.hpp"

#include <cmath>
#include <sstream>
#include <vector>

namespace qphase {

namespace {

void require_shared_frame(const DeformationParams& a, const DeformationParams& b) {
  if (a.mass != b.mass || a.omega != b.omega || a.hbar != b.hbar)
    throw ConfigError("both states must share mass, omega, and hbar");
}

void require_real(std::complex<double> w, double x, double p) {
  if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) {
    std::ostringstream os;
    os << "non-finite phase-space value at x=" << x << ", p=" << p;
    throw InternalError(os.str());
  }
  if (std::abs(w.imag()) > 1e-10 * (1.0 + std::abs(w.real()))) {
    std::ostringstream os;
    os << "imaginary residue " << w.imag() << " exceeds bound at x=" << x << ", p=" << p;
    throw InternalError(os.str());
  }
}

double common_prefactor(const DeformationParams& par, double x, double sign) {
  return sign / (2.0 * M_PI * par.hbar)
       * std::sqrt(2.0 * M_PI / par.lambda)
       * std::exp(-2.0 * par.lambda * x * x);
}

}  // namespace

SuperpositionSpec make_superposition(std::complex<double> amp_a, std::complex<double> amp_b,
                                     int n, int m,
                                     const DeformationParams& params_a,
                                     const DeformationParams& params_b) {
  require_shared_frame(params_a, params_b);
  if (n == m) throw ConfigError("superposition levels must be distinct");
  make_pure_state(n, params_a);
  make_pure_state(m, params_b);
  const double norm = std::norm(amp_a) + std::norm(amp_b);
  if (!std::isfinite(norm) || std::abs(norm - 1.0) > 1e-12)
    throw ConfigError("|amp_a|^2 + |amp_b|^2 must equal 1 within 1e-12");
  return SuperpositionSpec{amp_a, amp_b, n, m, params_a, params_b};
}

std::complex<double> w_generic(int j, int l,
                               const DeformationParams& par_j,
                               const DeformationParams& par_l,
                               double x, double p) {
  require_shared_frame(par_j, par_l);
  make_pure_state(j, par_j);
  make_pure_state(l, par_l);
  const double lambda = par_j.lambda;
  const double hbar = par_j.hbar;
  const double log_cj = log_normalization_mag(j, par_j);
  const double log_cl = log_normalization_mag(l, par_l);
  std::vector<SignedLog<double>> bj(j + 1), bl(l + 1);
  for (int k = 0; k <= j; ++k) bj[k] = b_factor_branch(j, k, par_j.q);
  for (int s = 0; s <= l; ++s) bl[s] = b_factor_branch(l, s, par_l.q);
  const double gj = lambda * par_j.h;
  const double gl = lambda * par_l.h;
  const double inv2lam = 1.0 / (2.0 * lambda);
  std::complex<double> acc(0.0, 0.0);
  for (int k = 0; k <= j; ++k) {
    for (int s = 0; s <= l; ++s) {
      const double shifted = gj * k + gl * s + p / hbar;
      const double mag_log = log_cj + log_cl + bj[k].log_mag + bl[s].log_mag
                           - shifted * shifted * inv2lam;
      const double angle = 2.0 * x * (gj * k - gl * s);
      acc += (bj[k].sign * bl[s].sign) * std::exp(mag_log) * std::polar(1.0, angle);
    }
  }
  return i_power(l - j) * acc;
}

double wigner_superposition(const SuperpositionSpec& spec, double x, double p,
                            double prefactor_sign) {
  const bool has_a = spec.amp_a != std::complex<double>(0.0, 0.0);
  const bool has_b = spec.amp_b != std::complex<double>(0.0, 0.0);
  std::complex<double> z(0.0, 0.0);
  if (has_a)
    z += std::norm(spec.amp_a) * w_generic(spec.n, spec.n, spec.params_a, spec.params_a, x, p);
  if (has_a && has_b) {
    z += std::conj(spec.amp_a) * spec.amp_b
       * w_generic(spec.n, spec.m, spec.params_a, spec.params_b, x, p);
    z += std::conj(spec.amp_b) * spec.amp_a
       * w_generic(spec.m, spec.n, spec.params_b, spec.params_a, x, p);
  }
  if (has_b)
    z += std::norm(spec.amp_b) * w_generic(spec.m, spec.m, spec.params_b, spec.params_b, x, p);
  const std::complex<double> w = common_prefactor(spec.params_a, x, prefactor_sign) * z;
  require_real(w, x, p);
  return w.real();
}

double wigner_pure(const PureStateSpec& state, double x, double p, double prefactor_sign) {
  const std::complex<double> z =
      w_generic(state.n, state.n, state.params, state.params, x, p);
  const std::complex<double> w = common_prefactor(state.params, x, prefactor_sign) * z;
  require_real(w, x, p);
  return w.real();
}

}  // namespace qphase
