#pragma once

#include <string>
#include <vector>

#include "qphase/grid.hpp"

namespace qphase {

// Canonical phase-space panels evaluated by the `figures` command and by the
// bound checks: one superposition panel plus the entangled-pair panel family,
// all at mass = omega = hbar = 1 and q = 0.001.
struct FigureDef {
  std::string name;
  bool is_bell = false;
  SuperpositionSpec sup;
  BellSpec bell;
  SliceSpec slice;
};

std::vector<FigureDef> default_figures();

// default window helpers shared by the CLI
Axis default_position_axis(AxisLabel label, const DeformationParams& par, int count = 301);
Axis default_momentum_axis(AxisLabel label, const DeformationParams& par, int max_level,
                           int count = 301);

// momentum-center spacing per level index: 2 lambda hbar h
double level_spacing(const DeformationParams& par);

}  // namespace qphase
