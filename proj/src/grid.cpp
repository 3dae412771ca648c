#include "qphase/grid.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <thread>

namespace qphase {

const char* to_string(AxisLabel label) {
  switch (label) {
    case AxisLabel::xA: return "xA";
    case AxisLabel::pA: return "pA";
    case AxisLabel::xB: return "xB";
    case AxisLabel::pB: return "pB";
    case AxisLabel::x: return "x";
    default: return "p";
  }
}

std::optional<AxisLabel> axis_label_from_string(const std::string& s) {
  if (s == "xA") return AxisLabel::xA;
  if (s == "pA") return AxisLabel::pA;
  if (s == "xB") return AxisLabel::xB;
  if (s == "pB") return AxisLabel::pB;
  if (s == "x") return AxisLabel::x;
  if (s == "p") return AxisLabel::p;
  return std::nullopt;
}

double Axis::point(int i) const {
  return min + i * ((max - min) / (count - 1));
}

Axis make_axis(AxisLabel label, double min, double max, int count) {
  if (!std::isfinite(min) || !std::isfinite(max) || !(min < max))
    throw ConfigError("axis bounds must be finite with min < max");
  if (count < 2) throw ConfigError("axis must have at least 2 points");
  return Axis{label, min, max, count};
}

int resolve_threads(int threads) {
  if (threads > 0) return std::min(threads, 64);
  if (const char* env = std::getenv("QPHASE_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return std::min(v, 64);
  }
  return 1;
}

namespace {

void check_axis(const Axis& ax) { make_axis(ax.label, ax.min, ax.max, ax.count); }

template <typename PointFn>
Eigen::MatrixXd evaluate_matrix(const SliceSpec& slice, int threads, const PointFn& fn) {
  check_axis(slice.free_axes[0]);
  check_axis(slice.free_axes[1]);
  const int cols = slice.free_axes[0].count;
  const int rows = slice.free_axes[1].count;
  Eigen::MatrixXd values(rows, cols);
  const int workers = std::min(resolve_threads(threads), rows);
  auto run_rows = [&](int row_begin, int row_end) {
    for (int r = row_begin; r < row_end; ++r) {
      const double v2 = slice.free_axes[1].point(r);
      for (int c = 0; c < cols; ++c)
        values(r, c) = fn(slice.free_axes[0].point(c), v2);
    }
  };
  if (workers <= 1) {
    run_rows(0, rows);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    for (int t = 0; t < workers; ++t) {
      const int begin = static_cast<int>(static_cast<long long>(rows) * t / workers);
      const int end = static_cast<int>(static_cast<long long>(rows) * (t + 1) / workers);
      pool.emplace_back([&, t, begin, end] {
        try {
          run_rows(begin, end);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }
  return values;
}

struct BellPointMapper {
  int slot_free0 = -1;
  int slot_free1 = -1;
  PhasePoint4 base;

  static int slot_of(AxisLabel label) {
    switch (label) {
      case AxisLabel::xA: return 0;
      case AxisLabel::pA: return 1;
      case AxisLabel::xB: return 2;
      case AxisLabel::pB: return 3;
      default: return -1;
    }
  }

  static void assign(PhasePoint4& pt, int slot, double v) {
    switch (slot) {
      case 0: pt.x_A = v; break;
      case 1: pt.p_A = v; break;
      case 2: pt.x_B = v; break;
      default: pt.p_B = v; break;
    }
  }

  explicit BellPointMapper(const SliceSpec& slice) {
    bool seen[4] = {false, false, false, false};
    slot_free0 = slot_of(slice.free_axes[0].label);
    slot_free1 = slot_of(slice.free_axes[1].label);
    if (slot_free0 < 0 || slot_free1 < 0)
      throw ConfigError("entangled-pair slices use the labels xA, pA, xB, pB");
    seen[slot_free0] = true;
    if (seen[slot_free1])
      throw ConfigError("free axes must name distinct coordinates");
    seen[slot_free1] = true;
    for (const auto& [label, value] : slice.fixed) {
      const int slot = slot_of(label);
      if (slot < 0)
        throw ConfigError("entangled-pair slices use the labels xA, pA, xB, pB");
      if (seen[slot]) throw ConfigError("coordinate fixed more than once or also free");
      if (!std::isfinite(value)) throw ConfigError("fixed coordinate values must be finite");
      seen[slot] = true;
      assign(base, slot, value);
    }
    for (bool s : seen)
      if (!s) throw ConfigError("free plus fixed axes must cover xA, pA, xB, pB");
  }

  PhasePoint4 point(double v0, double v1) const {
    PhasePoint4 pt = base;
    assign(pt, slot_free0, v0);
    assign(pt, slot_free1, v1);
    return pt;
  }
};

void check_single_particle_slice(const SliceSpec& slice) {
  const AxisLabel a = slice.free_axes[0].label;
  const AxisLabel b = slice.free_axes[1].label;
  const bool ok = (a == AxisLabel::x && b == AxisLabel::p) ||
                  (a == AxisLabel::p && b == AxisLabel::x);
  if (!ok || !slice.fixed.empty())
    throw ConfigError("single-particle slices have free axes {x, p} and nothing fixed");
}

}  // namespace

PhaseGrid evaluate_slice(const SuperpositionSpec& spec, const SliceSpec& slice,
                         int threads, double prefactor_sign) {
  check_single_particle_slice(slice);
  const bool x_first = slice.free_axes[0].label == AxisLabel::x;
  PhaseGrid grid;
  grid.slice = slice;
  grid.values = evaluate_matrix(slice, threads, [&](double v0, double v1) {
    const double x = x_first ? v0 : v1;
    const double p = x_first ? v1 : v0;
    return wigner_superposition(spec, x, p, prefactor_sign);
  });
  return grid;
}

PhaseGrid evaluate_slice(const BellSpec& spec, const SliceSpec& slice, int threads) {
  const BellPointMapper mapper(slice);
  const BellEvaluator eval(spec);
  PhaseGrid grid;
  grid.slice = slice;
  grid.values = evaluate_matrix(slice, threads, [&](double v0, double v1) {
    return eval.value(mapper.point(v0, v1));
  });
  return grid;
}

BellSliceTerms evaluate_slice_terms(const BellSpec& spec, const SliceSpec& slice,
                                    int threads) {
  const BellPointMapper mapper(slice);
  const BellEvaluator eval(spec);
  const double sign = variant_sign(spec.variant);
  check_axis(slice.free_axes[0]);
  check_axis(slice.free_axes[1]);
  const int cols = slice.free_axes[0].count;
  const int rows = slice.free_axes[1].count;
  BellSliceTerms out;
  for (PhaseGrid* g : {&out.total, &out.w1, &out.w2, &out.w3}) {
    g->slice = slice;
    g->values.resize(rows, cols);
  }
  const int workers = std::min(resolve_threads(threads), rows);
  auto run_rows = [&](int row_begin, int row_end) {
    for (int r = row_begin; r < row_end; ++r) {
      const double v1 = slice.free_axes[1].point(r);
      for (int c = 0; c < cols; ++c) {
        const BellTermValues t = eval.terms(mapper.point(slice.free_axes[0].point(c), v1));
        out.total.values(r, c) = t.total;
        out.w1.values(r, c) = t.w1;
        out.w2.values(r, c) = sign * t.w2;
        out.w3.values(r, c) = t.w3;
      }
    }
  };
  if (workers <= 1) {
    run_rows(0, rows);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    for (int t = 0; t < workers; ++t) {
      const int begin = static_cast<int>(static_cast<long long>(rows) * t / workers);
      const int end = static_cast<int>(static_cast<long long>(rows) * (t + 1) / workers);
      pool.emplace_back([&, t, begin, end] {
        try {
          run_rows(begin, end);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }
  return out;
}

GridPeak find_peak(const PhaseGrid& grid) {
  const int rows = static_cast<int>(grid.values.rows());
  const int cols = static_cast<int>(grid.values.cols());
  if (rows == 0 || cols == 0) throw ConfigError("cannot locate a peak in an empty grid");
  GridPeak best;
  double best_mag = -1.0;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      const double v = grid.values(r, c);
      const double mag = std::abs(v);
      if (mag > best_mag) {
        best_mag = mag;
        best = GridPeak{r, c, grid.slice.free_axes[0].point(c),
                        grid.slice.free_axes[1].point(r), v};
      }
    }
  }
  return best;
}

}  // namespace qphase
