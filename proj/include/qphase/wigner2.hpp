#pragma once

#include <complex>

#include "qphase/oscillator.hpp"

namespace qphase {

struct SuperpositionSpec {
  std::complex<double> amp_a{1.0, 0.0};
  std::complex<double> amp_b{0.0, 0.0};
  int n = 0;
  int m = 1;
  DeformationParams params_a;  // state n
  DeformationParams params_b;  // state m
};

// Both states must share mass, omega, and hbar (hence lambda); the deformation
// bases may differ. |amp_a|^2 + |amp_b|^2 must equal 1 within 1e-12.
SuperpositionSpec make_superposition(std::complex<double> amp_a, std::complex<double> amp_b,
                                     int n, int m,
                                     const DeformationParams& params_a,
                                     const DeformationParams& params_b);

// Cross term of the phase-space distribution for bra level j and ket level l,
// without the common prefactor sqrt(2 pi / lambda) exp(-2 lambda x^2) / (2 pi hbar):
//   conj(c_j) c_l * sum over k in [0, j], s in [0, l] of
//     b_factor(j, l, k, s, q_j, q_l)
//     * exp(+2 i x lambda (h_j k - h_l s))
//     * exp(-(lambda h_j k + lambda h_l s + p / hbar)^2 / (2 lambda))
std::complex<double> w_generic(int j, int l,
                               const DeformationParams& par_j,
                               const DeformationParams& par_l,
                               double x, double p);

// Phase-space distribution of amp_a psi_n + amp_b psi_m. The assembled value
// must be real up to 1e-10 relative residue or an InternalError is thrown.
double wigner_superposition(const SuperpositionSpec& spec, double x, double p,
                            double prefactor_sign = 1.0);

double wigner_pure(const PureStateSpec& state, double x, double p,
                   double prefactor_sign = 1.0);

}  // namespace qphase
