#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qphase/grid.hpp"

namespace qphase {

// shortest-faithful decimal with up to 17 significant digits, '.' separator,
// locale-independent
std::string format17(double v);

// header line "# fixed: label=value,...", then "axis1,axis2,W", then one line
// per point in row-major matrix order; LF line endings
std::string grid_to_csv(const PhaseGrid& grid);

// same layout with columns W,W1,W2,W3
std::string bell_terms_to_csv(const BellSliceTerms& terms);

// binary 16-bit PGM (P5, big-endian samples); values map linearly from
// [min, max] to [0, 65535]; a constant grid maps to 0
std::vector<std::uint8_t> grid_to_pgm16(const PhaseGrid& grid, double* out_min = nullptr,
                                        double* out_max = nullptr);

// sidecar text naming the value range and grid shape
std::string pgm16_sidecar(const PhaseGrid& grid);

void write_grid_csv(const PhaseGrid& grid, const std::string& path);
void write_bell_terms_csv(const BellSliceTerms& terms, const std::string& path);

// writes path and a "path.minmax" sidecar
void write_grid_pgm16(const PhaseGrid& grid, const std::string& path);

void write_bytes(const std::string& path, const void* data, std::size_t size);
std::string read_file(const std::string& path);

std::uint64_t fnv1a64(const void* data, std::size_t size);

}  // namespace qphase
