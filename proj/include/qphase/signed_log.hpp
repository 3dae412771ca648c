#pragma once

#include <cmath>
#include <limits>

#include "qphase/errors.hpp"

namespace qphase {

// Real value stored as log-magnitude plus sign, for quantities whose dynamic
// range exceeds double. Zero is encoded as log_mag = -infinity with sign +1.
template <typename Scalar = double>
struct SignedLog {
  Scalar log_mag = -std::numeric_limits<Scalar>::infinity();
  int sign = +1;

  static SignedLog zero() { return {}; }
  static SignedLog one() { return {Scalar(0), +1}; }

  static SignedLog from_value(Scalar v) {
    if (v == Scalar(0)) return zero();
    return {std::log(std::abs(v)), v < Scalar(0) ? -1 : +1};
  }

  bool is_zero() const { return std::isinf(log_mag) && log_mag < Scalar(0); }

  Scalar value() const { return is_zero() ? Scalar(0) : Scalar(sign) * std::exp(log_mag); }

  friend SignedLog operator*(SignedLog a, SignedLog b) {
    if (a.is_zero() || b.is_zero()) return zero();
    return {a.log_mag + b.log_mag, a.sign * b.sign};
  }

  friend SignedLog operator/(SignedLog a, SignedLog b) {
    if (b.is_zero()) throw ConfigError("signed-log division by zero");
    if (a.is_zero()) return zero();
    return {a.log_mag - b.log_mag, a.sign * b.sign};
  }

  SignedLog& operator*=(SignedLog o) { return *this = *this * o; }
  SignedLog& operator/=(SignedLog o) { return *this = *this / o; }
};

}  // namespace qphase
