#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "qphase/bell.hpp"
#include "qphase/wigner2.hpp"

namespace qphase {

enum class AxisLabel { xA, pA, xB, pB, x, p };

const char* to_string(AxisLabel label);
std::optional<AxisLabel> axis_label_from_string(const std::string& s);

struct Axis {
  AxisLabel label = AxisLabel::x;
  double min = 0.0;
  double max = 1.0;
  int count = 2;

  double point(int i) const;  // uniform, both endpoints included
};

Axis make_axis(AxisLabel label, double min, double max, int count);

struct SliceSpec {
  std::array<Axis, 2> free_axes;
  std::vector<std::pair<AxisLabel, double>> fixed;
};

// values(r, c) = W at (free_axes[0].point(c), free_axes[1].point(r));
// serialization and peak tie-breaking traverse the matrix row-major
struct PhaseGrid {
  SliceSpec slice;
  Eigen::MatrixXd values;
};

// Free axes must be {x, p} and the fixed list empty.
PhaseGrid evaluate_slice(const SuperpositionSpec& spec, const SliceSpec& slice,
                         int threads = 0, double prefactor_sign = 1.0);

// Free plus fixed labels must partition {xA, pA, xB, pB}.
PhaseGrid evaluate_slice(const BellSpec& spec, const SliceSpec& slice, int threads = 0);

struct BellSliceTerms {
  PhaseGrid total;
  PhaseGrid w1;
  PhaseGrid w2;  // signed contribution: total = w1 + w2 + w3 pointwise
  PhaseGrid w3;
};

BellSliceTerms evaluate_slice_terms(const BellSpec& spec, const SliceSpec& slice,
                                    int threads = 0);

struct GridPeak {
  int row = 0;
  int col = 0;
  double coord1 = 0.0;  // along free_axes[0]
  double coord2 = 0.0;  // along free_axes[1]
  double value = 0.0;   // signed value at the peak of |W|
};

// Largest |value|; exact ties keep the first point in row-major order.
GridPeak find_peak(const PhaseGrid& grid);

// worker count: explicit argument if > 0, else QPHASE_THREADS, else 1
int resolve_threads(int threads);

}  // namespace qphase
