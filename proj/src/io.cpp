#include "qphase/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace qphase {

std::string format17(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

namespace {

std::string fixed_header(const SliceSpec& slice) {
  std::string line = "# fixed:";
  bool first = true;
  for (const auto& [label, value] : slice.fixed) {
    line += first ? " " : ",";
    first = false;
    line += to_string(label);
    line += '=';
    line += format17(value);
  }
  line += '\n';
  return line;
}

void append_point_prefix(std::string& out, const PhaseGrid& grid, int r, int c) {
  out += format17(grid.slice.free_axes[0].point(c));
  out += ',';
  out += format17(grid.slice.free_axes[1].point(r));
}

}  // namespace

std::string grid_to_csv(const PhaseGrid& grid) {
  std::string out = fixed_header(grid.slice);
  out += to_string(grid.slice.free_axes[0].label);
  out += ',';
  out += to_string(grid.slice.free_axes[1].label);
  out += ",W\n";
  const int rows = static_cast<int>(grid.values.rows());
  const int cols = static_cast<int>(grid.values.cols());
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      append_point_prefix(out, grid, r, c);
      out += ',';
      out += format17(grid.values(r, c));
      out += '\n';
    }
  }
  return out;
}

std::string bell_terms_to_csv(const BellSliceTerms& terms) {
  const PhaseGrid& g = terms.total;
  std::string out = fixed_header(g.slice);
  out += to_string(g.slice.free_axes[0].label);
  out += ',';
  out += to_string(g.slice.free_axes[1].label);
  out += ",W,W1,W2,W3\n";
  const int rows = static_cast<int>(g.values.rows());
  const int cols = static_cast<int>(g.values.cols());
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      append_point_prefix(out, g, r, c);
      out += ',';
      out += format17(terms.total.values(r, c));
      out += ',';
      out += format17(terms.w1.values(r, c));
      out += ',';
      out += format17(terms.w2.values(r, c));
      out += ',';
      out += format17(terms.w3.values(r, c));
      out += '\n';
    }
  }
  return out;
}

std::vector<std::uint8_t> grid_to_pgm16(const PhaseGrid& grid, double* out_min,
                                        double* out_max) {
  const int rows = static_cast<int>(grid.values.rows());
  const int cols = static_cast<int>(grid.values.cols());
  double lo = grid.values(0, 0), hi = grid.values(0, 0);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      const double v = grid.values(r, c);
      if (!std::isfinite(v)) throw InternalError("non-finite grid value during image export");
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  }
  if (out_min != nullptr) *out_min = lo;
  if (out_max != nullptr) *out_max = hi;
  std::string header = "P5\n" + std::to_string(cols) + " " + std::to_string(rows) + "\n65535\n";
  std::vector<std::uint8_t> bytes(header.begin(), header.end());
  bytes.reserve(bytes.size() + static_cast<size_t>(rows) * cols * 2);
  const double scale = hi > lo ? 65535.0 / (hi - lo) : 0.0;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      long u = std::lround((grid.values(r, c) - lo) * scale);
      u = std::min(65535L, std::max(0L, u));
      bytes.push_back(static_cast<std::uint8_t>(u >> 8));
      bytes.push_back(static_cast<std::uint8_t>(u & 0xff));
    }
  }
  return bytes;
}

std::string pgm16_sidecar(const PhaseGrid& grid) {
  double lo = 0.0, hi = 0.0;
  grid_to_pgm16(grid, &lo, &hi);
  std::string out = "min ";
  out += format17(lo);
  out += "\nmax ";
  out += format17(hi);
  out += "\nrows " + std::to_string(grid.values.rows());
  out += "\ncols " + std::to_string(grid.values.cols());
  out += '\n';
  return out;
}

void write_bytes(const std::string& path, const void* data, std::size_t size) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw ConfigError("cannot open output file: " + path);
  os.write(static_cast<const char*>(data), static_cast<std::streamsize>(size));
  if (!os) throw ConfigError("failed writing output file: " + path);
}

std::string read_file(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw ConfigError("cannot open file: " + path);
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

void write_grid_csv(const PhaseGrid& grid, const std::string& path) {
  const std::string s = grid_to_csv(grid);
  write_bytes(path, s.data(), s.size());
}

void write_bell_terms_csv(const BellSliceTerms& terms, const std::string& path) {
  const std::string s = bell_terms_to_csv(terms);
  write_bytes(path, s.data(), s.size());
}

void write_grid_pgm16(const PhaseGrid& grid, const std::string& path) {
  double lo = 0.0, hi = 0.0;
  const std::vector<std::uint8_t> bytes = grid_to_pgm16(grid, &lo, &hi);
  write_bytes(path, bytes.data(), bytes.size());
  std::string side = "min ";
  side += format17(lo);
  side += "\nmax ";
  side += format17(hi);
  side += "\nrows " + std::to_string(grid.values.rows());
  side += "\ncols " + std::to_string(grid.values.cols());
  side += '\n';
  write_bytes(path + ".minmax", side.data(), side.size());
}

std::uint64_t fnv1a64(const void* data, std::size_t size) {
  const auto* p = static_cast<const unsigned char*>(data);
  std::uint64_t h = 14695981039346656037ULL;
  for (std::size_t i = 0; i < size; ++i) {
    h ^= p[i];
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace qphase
