#pragma once

#include <stdexcept>

namespace qphase {

// invalid physical or configuration input; CLI exit code 2
struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// a requested verification did not hold; CLI exit code 1
struct VerificationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// an internal invariant was violated during evaluation; CLI exit code 3
struct InternalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitVerificationFailure = 1;
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitInternalError = 3;

}  // namespace qphase
