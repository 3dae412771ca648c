#include "qphase/figures.hpp"

#include <cmath>

namespace qphase {

double level_spacing(const DeformationParams& par) {
  return 2.0 * par.lambda * par.hbar * par.h;
}

Axis default_position_axis(AxisLabel label, const DeformationParams& par, int count) {
  const double half = 1.5 * std::sqrt(0.5 / par.lambda);
  return make_axis(label, -half, half, count);
}

Axis default_momentum_axis(AxisLabel label, const DeformationParams& par, int max_level,
                           int count) {
  const double delta = level_spacing(par);
  const double sigma_p = par.hbar * std::sqrt(par.lambda);
  const double lo = std::min(-(max_level + 2.0) * delta, -6.0 * sigma_p);
  const double hi = std::max(2.0 * delta, 6.0 * sigma_p);
  return make_axis(label, lo, hi, count);
}

std::vector<FigureDef> default_figures() {
  const DeformationParams par = make_params(1.0, 1.0, 1.0, 0.001);
  const double delta = level_spacing(par);
  std::vector<FigureDef> figs;

  {
    FigureDef f;
    f.name = "fig1";
    f.is_bell = false;
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    f.sup = make_superposition({inv_sqrt2, 0.0}, {inv_sqrt2, 0.0}, 3, 5, par, par);
    f.slice.free_axes = {default_position_axis(AxisLabel::x, par),
                         default_momentum_axis(AxisLabel::p, par, 5)};
    figs.push_back(f);
  }

  const int n = 2, m = 6;
  auto bell_slice_xp = [&](double p_B_fixed) {
    SliceSpec s;
    s.free_axes = {default_position_axis(AxisLabel::xA, par),
                   default_momentum_axis(AxisLabel::pA, par, m)};
    s.fixed = {{AxisLabel::xB, 0.0}, {AxisLabel::pB, p_B_fixed}};
    return s;
  };
  const double slice_values[3] = {-n * delta, -(n + m) * 0.5 * delta, -m * delta};
  const char* suffix[3] = {"a", "b", "c"};
  for (int i = 0; i < 3; ++i) {
    FigureDef f;
    f.name = std::string("fig2") + suffix[i];
    f.is_bell = true;
    f.bell = make_bell_spec(BellVariant::PsiPlus, n, m, par, par);
    f.slice = bell_slice_xp(slice_values[i]);
    figs.push_back(f);
  }
  for (int i = 0; i < 3; ++i) {
    FigureDef f;
    f.name = std::string("fig3") + suffix[i];
    f.is_bell = true;
    f.bell = make_bell_spec(BellVariant::PhiPlus, n, m, par, par);
    f.slice = bell_slice_xp(slice_values[i]);
    figs.push_back(f);
  }

  const double p_fringe = -(n + m) * 0.5 * delta;
  const BellVariant all_variants[4] = {BellVariant::PsiPlus, BellVariant::PsiMinus,
                                       BellVariant::PhiPlus, BellVariant::PhiMinus};
  const char* variant_file[4] = {"psi_plus", "psi_minus", "phi_plus", "phi_minus"};
  for (int i = 0; i < 4; ++i) {
    FigureDef f;
    f.name = std::string("fig4_") + variant_file[i];
    f.is_bell = true;
    f.bell = make_bell_spec(all_variants[i], n, m, par, par);
    f.slice.free_axes = {default_position_axis(AxisLabel::xA, par),
                         default_position_axis(AxisLabel::xB, par)};
    f.slice.fixed = {{AxisLabel::pA, p_fringe}, {AxisLabel::pB, p_fringe}};
    figs.push_back(f);
  }

  const BellVariant minus_variants[2] = {BellVariant::PsiMinus, BellVariant::PhiMinus};
  const char* minus_file[2] = {"psi_minus", "phi_minus"};
  for (int i = 0; i < 2; ++i) {
    FigureDef f;
    f.name = std::string("fig5_") + minus_file[i];
    f.is_bell = true;
    f.bell = make_bell_spec(minus_variants[i], n, m, par, par);
    f.slice.free_axes = {default_position_axis(AxisLabel::xA, par),
                         default_momentum_axis(AxisLabel::pA, par, m)};
    f.slice.fixed = {{AxisLabel::xB, 0.0}, {AxisLabel::pB, p_fringe}};
    figs.push_back(f);
  }
  return figs;
}

}  // namespace qphase
