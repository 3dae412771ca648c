#pragma once

#include <array>
#include <complex>
#include <optional>
#include <string>

#include <Eigen/Core>

#include "qphase/oscillator.hpp"
#include "qphase/phase_point.hpp"

namespace qphase {

enum class BellVariant { PsiPlus, PsiMinus, PhiPlus, PhiMinus };

const char* to_string(BellVariant v);
std::optional<BellVariant> bell_variant_from_string(const std::string& s);

// Two-particle maximally entangled state over the levels {n, m}: the logical
// |0> maps to level n and |1> to level m.
//   psi family: (psi_n^A psi_m^B +/- psi_m^A psi_n^B) / sqrt(2)
//   phi family: (psi_n^A psi_n^B +/- psi_m^A psi_m^B) / sqrt(2)
struct BellSpec {
  BellVariant variant = BellVariant::PsiPlus;
  int n = 0;
  int m = 1;
  DeformationParams params_A;
  DeformationParams params_B;
};

// Levels must be distinct; the particles must share hbar.
BellSpec make_bell_spec(BellVariant variant, int n, int m,
                        const DeformationParams& params_A,
                        const DeformationParams& params_B);

bool is_psi_family(BellVariant v);
double variant_sign(BellVariant v);  // +1 for the plus variants, -1 for minus

// Position-space wavefunction with the per-level evaluators cached once.
class BellWave {
 public:
  explicit BellWave(const BellSpec& spec);
  std::complex<double> operator()(double x_A, double x_B) const;

 private:
  PsiEvaluator a_n_, a_m_, b_n_, b_m_;
  double sign_;
  bool psi_family_;
};

std::complex<double> bell_wavefunction(const BellSpec& spec, double x_A, double x_B);

// cos(2 lambda_A x_A h_A (a1 - a2) + 2 lambda_B x_B h_B (b1 - b2));
// the first index pair belongs to particle A, the second to particle B
double kappa(int a1, int a2, int b1, int b2, const BellSpec& spec, double x_A, double x_B);

// exp(-((a1 + a2) h_A lambda_A + p_A / hbar)^2 / (2 lambda_A))
//   * exp(-((b1 + b2) h_B lambda_B + p_B / hbar)^2 / (2 lambda_B))
double epsilon(int a1, int a2, int b1, int b2, const BellSpec& spec, double p_A, double p_B);

struct BellTermValues {
  double w1 = 0.0;
  double w2 = 0.0;  // contribution before the variant sign
  double w3 = 0.0;
  double total = 0.0;  // w1 + variant_sign * w2 + w3
};

// Closed-form evaluator; the coefficient tables are built once per spec.
class BellEvaluator {
 public:
  explicit BellEvaluator(const BellSpec& spec);
  const BellSpec& spec() const { return spec_; }
  BellTermValues terms(const PhasePoint4& pt) const;
  double value(const PhasePoint4& pt) const;

 private:
  struct TermTables {
    Eigen::MatrixXd table_A;  // (i1, i2) coefficient pair for particle A
    Eigen::MatrixXd table_B;
    double coeff = 1.0;
  };

  BellSpec spec_;
  std::array<TermTables, 3> terms_;
  int dmax_A_, dmax_B_;
  double rate_A_, rate_B_;        // 2 lambda h, angle per index unit per unit x
  double gauss_A_, gauss_B_;      // lambda h, momentum-center spacing per index
  double inv2lam_A_, inv2lam_B_;
  double sign_;
  double prefconst_;  // 1 / (4 pi hbar^2 sqrt(lambda_A lambda_B))
};

double bell_wigner(const BellSpec& spec, const PhasePoint4& pt);
BellTermValues bell_wigner_terms(const BellSpec& spec, const PhasePoint4& pt);
double bell_interference_term(const BellSpec& spec, const PhasePoint4& pt);

}  // namespace qphase
