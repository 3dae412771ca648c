#include "qphase/bell.hpp"

#include <cmath>
#include <sstream>
#include <vector>

namespace qphase {

const char* to_string(BellVariant v) {
  switch (v) {
    case BellVariant::PsiPlus: return "psi+";
    case BellVariant::PsiMinus: return "psi-";
    case BellVariant::PhiPlus: return "phi+";
    default: return "phi-";
  }
}

std::optional<BellVariant> bell_variant_from_string(const std::string& s) {
  if (s == "psi+") return BellVariant::PsiPlus;
  if (s == "psi-") return BellVariant::PsiMinus;
  if (s == "phi+") return BellVariant::PhiPlus;
  if (s == "phi-") return BellVariant::PhiMinus;
  return std::nullopt;
}

bool is_psi_family(BellVariant v) {
  return v == BellVariant::PsiPlus || v == BellVariant::PsiMinus;
}

double variant_sign(BellVariant v) {
  return (v == BellVariant::PsiPlus || v == BellVariant::PhiPlus) ? 1.0 : -1.0;
}

BellSpec make_bell_spec(BellVariant variant, int n, int m,
                        const DeformationParams& params_A,
                        const DeformationParams& params_B) {
  make_pure_state(n, params_A);
  make_pure_state(m, params_B);
  make_pure_state(n, params_B);
  make_pure_state(m, params_A);
  if (n == m) throw ConfigError("entangled levels must be distinct");
  if (params_A.hbar != params_B.hbar)
    throw ConfigError("both particles must share hbar");
  return BellSpec{variant, n, m, params_A, params_B};
}

BellWave::BellWave(const BellSpec& spec)
    : a_n_(make_pure_state(spec.n, spec.params_A)),
      a_m_(make_pure_state(spec.m, spec.params_A)),
      b_n_(make_pure_state(spec.n, spec.params_B)),
      b_m_(make_pure_state(spec.m, spec.params_B)),
      sign_(variant_sign(spec.variant)),
      psi_family_(is_psi_family(spec.variant)) {}

std::complex<double> BellWave::operator()(double x_A, double x_B) const {
  static const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  if (psi_family_)
    return inv_sqrt2 * (a_n_(x_A) * b_m_(x_B) + sign_ * a_m_(x_A) * b_n_(x_B));
  return inv_sqrt2 * (a_n_(x_A) * b_n_(x_B) + sign_ * a_m_(x_A) * b_m_(x_B));
}

std::complex<double> bell_wavefunction(const BellSpec& spec, double x_A, double x_B) {
  return BellWave(spec)(x_A, x_B);
}

double kappa(int a1, int a2, int b1, int b2, const BellSpec& spec, double x_A, double x_B) {
  const auto& A = spec.params_A;
  const auto& B = spec.params_B;
  return std::cos(2.0 * A.lambda * x_A * A.h * (a1 - a2)
                + 2.0 * B.lambda * x_B * B.h * (b1 - b2));
}

double epsilon(int a1, int a2, int b1, int b2, const BellSpec& spec, double p_A, double p_B) {
  const auto& A = spec.params_A;
  const auto& B = spec.params_B;
  const double uA = (a1 + a2) * A.h * A.lambda + p_A / A.hbar;
  const double uB = (b1 + b2) * B.h * B.lambda + p_B / B.hbar;
  return std::exp(-uA * uA / (2.0 * A.lambda)) * std::exp(-uB * uB / (2.0 * B.lambda));
}

namespace {

Eigen::MatrixXd coefficient_table(const DeformationParams& par, int row_level, int col_level) {
  const double log_c_row = log_normalization_mag(row_level, par);
  const double log_c_col = log_normalization_mag(col_level, par);
  std::vector<SignedLog<double>> br(row_level + 1), bc(col_level + 1);
  for (int i = 0; i <= row_level; ++i) br[i] = b_factor_branch(row_level, i, par.q);
  for (int i = 0; i <= col_level; ++i) bc[i] = b_factor_branch(col_level, i, par.q);
  Eigen::MatrixXd t(row_level + 1, col_level + 1);
  for (int i1 = 0; i1 <= row_level; ++i1)
    for (int i2 = 0; i2 <= col_level; ++i2)
      t(i1, i2) = br[i1].sign * bc[i2].sign
                * std::exp(log_c_row + log_c_col + br[i1].log_mag + bc[i2].log_mag);
  return t;
}

}  // namespace

BellEvaluator::BellEvaluator(const BellSpec& spec) : spec_(spec) {
  make_bell_spec(spec.variant, spec.n, spec.m, spec.params_A, spec.params_B);
  const auto& A = spec.params_A;
  const auto& B = spec.params_B;
  const int n = spec.n;
  const int m = spec.m;
  if (is_psi_family(spec.variant)) {
    terms_[0] = {coefficient_table(A, n, n), coefficient_table(B, m, m), 1.0};
    terms_[1] = {coefficient_table(A, n, m), coefficient_table(B, m, n), 2.0};
    terms_[2] = {coefficient_table(A, m, m), coefficient_table(B, n, n), 1.0};
  } else {
    const double parity = (m - n) % 2 == 0 ? 1.0 : -1.0;
    terms_[0] = {coefficient_table(A, n, n), coefficient_table(B, n, n), 1.0};
    terms_[1] = {coefficient_table(A, n, m), coefficient_table(B, n, m), 2.0 * parity};
    terms_[2] = {coefficient_table(A, m, m), coefficient_table(B, m, m), 1.0};
  }
  dmax_A_ = dmax_B_ = std::max(n, m);
  rate_A_ = 2.0 * A.lambda * A.h;
  rate_B_ = 2.0 * B.lambda * B.h;
  gauss_A_ = A.lambda * A.h;
  gauss_B_ = B.lambda * B.h;
  inv2lam_A_ = 1.0 / (2.0 * A.lambda);
  inv2lam_B_ = 1.0 / (2.0 * B.lambda);
  sign_ = variant_sign(spec.variant);
  prefconst_ = 1.0 / (4.0 * M_PI * A.hbar * A.hbar * std::sqrt(A.lambda * B.lambda));
}

namespace {

constexpr int kArrayCap = 2 * kMaxLevel + 1;

// cos(k u) and sin(k u) for k in [0, dmax] by the Chebyshev recurrence
void fill_trig(double u, int dmax, double* c, double* s) {
  c[0] = 1.0;
  s[0] = 0.0;
  if (dmax == 0) return;
  c[1] = std::cos(u);
  s[1] = std::sin(u);
  const double twoc = 2.0 * c[1];
  for (int k = 2; k <= dmax; ++k) {
    c[k] = twoc * c[k - 1] - c[k - 2];
    s[k] = twoc * s[k - 1] - s[k - 2];
  }
}

struct PointIngredients {
  double cd[kArrayCap];  // cos for index difference d, stored at [dmax + d]
  double sd[kArrayCap];
  double eps[kArrayCap];  // Gaussian for index sum
};

void fill_ingredients(PointIngredients& ing, int dmax, double rate, double gauss,
                      double inv2lam, double hbar, double x, double p) {
  double c[kMaxLevel + 1], s[kMaxLevel + 1];
  fill_trig(rate * x, dmax, c, s);
  for (int d = 0; d <= dmax; ++d) {
    ing.cd[dmax + d] = c[d];
    ing.sd[dmax + d] = s[d];
    ing.cd[dmax - d] = c[d];
    ing.sd[dmax - d] = -s[d];
  }
  const double shift = p / hbar;
  for (int sum = 0; sum <= 2 * dmax; ++sum) {
    const double u = sum * gauss + shift;
    ing.eps[sum] = std::exp(-u * u * inv2lam);
  }
}

// sum over the table of entry * exp(i * angle(i1 - i2)) * eps(i1 + i2)
void table_sum(const Eigen::MatrixXd& t, const PointIngredients& ing, int dmax,
               double& out_re, double& out_im) {
  double re = 0.0, im = 0.0;
  const int rows = static_cast<int>(t.rows());
  const int cols = static_cast<int>(t.cols());
  for (int i1 = 0; i1 < rows; ++i1) {
    for (int i2 = 0; i2 < cols; ++i2) {
      const double f = t(i1, i2) * ing.eps[i1 + i2];
      re += f * ing.cd[dmax + i1 - i2];
      im += f * ing.sd[dmax + i1 - i2];
    }
  }
  out_re = re;
  out_im = im;
}

}  // namespace

BellTermValues BellEvaluator::terms(const PhasePoint4& pt) const {
  PointIngredients ingA, ingB;
  fill_ingredients(ingA, dmax_A_, rate_A_, gauss_A_, inv2lam_A_, spec_.params_A.hbar,
                   pt.x_A, pt.p_A);
  fill_ingredients(ingB, dmax_B_, rate_B_, gauss_B_, inv2lam_B_, spec_.params_B.hbar,
                   pt.x_B, pt.p_B);
  const double envelope = prefconst_
      * std::exp(-2.0 * spec_.params_A.lambda * pt.x_A * pt.x_A
                 - 2.0 * spec_.params_B.lambda * pt.x_B * pt.x_B);
  double vals[3];
  for (int t = 0; t < 3; ++t) {
    double reA, imA, reB, imB;
    table_sum(terms_[t].table_A, ingA, dmax_A_, reA, imA);
    table_sum(terms_[t].table_B, ingB, dmax_B_, reB, imB);
    vals[t] = envelope * terms_[t].coeff * (reA * reB - imA * imB);
  }
  BellTermValues out;
  out.w1 = vals[0];
  out.w2 = vals[1];
  out.w3 = vals[2];
  out.total = vals[0] + sign_ * vals[1] + vals[2];
  if (!std::isfinite(out.total)) {
    std::ostringstream os;
    os << "non-finite phase-space value at (" << pt.x_A << ", " << pt.p_A << ", "
       << pt.x_B << ", " << pt.p_B << ")";
    throw InternalError(os.str());
  }
  return out;
}

double BellEvaluator::value(const PhasePoint4& pt) const { return terms(pt).total; }

double bell_wigner(const BellSpec& spec, const PhasePoint4& pt) {
  return BellEvaluator(spec).value(pt);
}

BellTermValues bell_wigner_terms(const BellSpec& spec, const PhasePoint4& pt) {
  return BellEvaluator(spec).terms(pt);
}

double bell_interference_term(const BellSpec& spec, const PhasePoint4& pt) {
  return BellEvaluator(spec).terms(pt).w2;
}

}  // namespace qphase
