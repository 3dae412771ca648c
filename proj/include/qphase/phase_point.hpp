#pragma once

namespace qphase {

struct PhasePoint4 {
  double x_A = 0.0;
  double p_A = 0.0;
  double x_B = 0.0;
  double p_B = 0.0;
};

}  // namespace qphase
