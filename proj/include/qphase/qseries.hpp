#pragma once

#include <cmath>

#include "qphase/errors.hpp"
#include "qphase/signed_log.hpp"

namespace qphase {

template <typename Scalar>
void require_base_in_unit_interval(Scalar q) {
  if (!(q > Scalar(0)) || !(q < Scalar(1)))
    throw ConfigError("series base q must lie strictly between 0 and 1");
}

// log of (q; q)_n, the product over j in [1, n] of (1 - q^j)
template <typename Scalar>
Scalar log_qq(Scalar q, int n) {
  require_base_in_unit_interval(q);
  if (n < 0) throw ConfigError("q-factorial order must be nonnegative");
  Scalar acc = 0;
  Scalar qj = q;
  for (int j = 1; j <= n; ++j) {
    acc += std::log1p(-qj);
    qj *= q;
  }
  return acc;
}

// (a; q)_k by direct product
template <typename Scalar>
SignedLog<Scalar> q_pochhammer(Scalar a, Scalar q, int k) {
  require_base_in_unit_interval(q);
  if (k < 0) throw ConfigError("q-Pochhammer order must be nonnegative");
  SignedLog<Scalar> r = SignedLog<Scalar>::one();
  Scalar qj = Scalar(1);
  for (int j = 0; j < k; ++j) {
    r *= SignedLog<Scalar>::from_value(Scalar(1) - a * qj);
    qj *= q;
  }
  return r;
}

// (q^{-n}; q)_k without forming q^{-n}, via
//   (q^{-n}; q)_k = (-1)^k q^{k(k-1)/2 - n k} (q; q)_n / (q; q)_{n-k},
// exact zero for k > n. The q exponent is an integer here; it is tracked in
// half-integer units so the same accumulator serves the b-factor below.
template <typename Scalar>
SignedLog<Scalar> q_pochhammer_neg_power(int n, Scalar q, int k) {
  require_base_in_unit_interval(q);
  if (n < 0 || k < 0) throw ConfigError("q-Pochhammer indices must be nonnegative");
  if (k == 0) return SignedLog<Scalar>::one();
  if (k > n) return SignedLog<Scalar>::zero();
  const long long half_units = static_cast<long long>(k) * (k - 1) - 2LL * n * k;
  const Scalar log_mag = Scalar(0.5) * Scalar(half_units) * std::log(q)
                       + log_qq(q, n) - log_qq(q, n - k);
  return {log_mag, k % 2 == 0 ? +1 : -1};
}

// Single-state coefficient (q^{-n}; q)_k / (q; q)_k * q^{n k - k^2/2}.
// The combined q exponent collapses to -k/2, leaving
//   (-1)^k q^{-k/2} (q; q)_n / ((q; q)_k (q; q)_{n-k});
// the exponent is accumulated in exact half-integer units and applied once.
template <typename Scalar>
SignedLog<Scalar> b_factor_branch(int n, int k, Scalar q) {
  require_base_in_unit_interval(q);
  if (n < 0 || k < 0) throw ConfigError("b-factor indices must be nonnegative");
  if (k > n) return SignedLog<Scalar>::zero();
  const long long from_neg_power = static_cast<long long>(k) * (k - 1) - 2LL * n * k;
  const long long from_prefactor = 2LL * n * k - static_cast<long long>(k) * k;
  const long long half_units = from_neg_power + from_prefactor;
  const Scalar log_mag = Scalar(0.5) * Scalar(half_units) * std::log(q)
                       + log_qq(q, n) - log_qq(q, n - k) - log_qq(q, k);
  return {log_mag, k % 2 == 0 ? +1 : -1};
}

// Two-state coefficient: branch (n, k) at base q_a times branch (m, s) at base q_b.
template <typename Scalar>
SignedLog<Scalar> b_factor(int n, int m, int k, int s, Scalar q_a, Scalar q_b) {
  return b_factor_branch(n, k, q_a) * b_factor_branch(m, s, q_b);
}

}  // namespace qphase
