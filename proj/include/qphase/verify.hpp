#pragma once

#include <string>
#include <vector>

namespace qphase {

enum class VerifyLevel { Fast, Full };

struct CheckResult {
  std::string name;
  int criterion = 0;  // acceptance criterion the check supports; 0 = supporting
  double value = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string detail;
};

struct VerifyOptions {
  VerifyLevel level = VerifyLevel::Fast;
  int threads = 1;
  // evaluation-side sign hook; anything but +1 must make the convention
  // checks fail, which the canary check relies on
  double prefactor_sign = 1.0;
};

std::vector<CheckResult> run_verification(const VerifyOptions& opt);

// "check,value,tolerance,pass" rows
std::string render_check_csv(const std::vector<CheckResult>& results);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace qphase
