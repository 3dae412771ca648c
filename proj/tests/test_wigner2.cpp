#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <numbers>

#include "qphase/errors.hpp"
#include "qphase/oracle.hpp"
#include "qphase/oscillator.hpp"
#include "qphase/wigner2.hpp"

using qphase::Complex;
using qphase::ConfigError;
using qphase::make_params;
using qphase::make_pure_state;
using qphase::make_superposition;
using qphase::PsiEvaluator;
using qphase::QuadratureSettings;
using qphase::w_generic;
using qphase::Wave1;
using qphase::wigner_pure;
using qphase::wigner_superposition;

namespace {
const double kInvSqrt2 = std::numbers::sqrt2 / 2.0;
}

TEST_CASE("pure-state value against the frozen reference") {
  const auto par = make_params(1.0, 1.0, 1.0, 0.5);
  const auto state = make_pure_state(1, par);
  CHECK(wigner_pure(state, 0.4, -0.9) ==
        doctest::Approx(0.002442711107105260045).epsilon(1e-12));
}

TEST_CASE("superposition value against the frozen reference") {
  const auto par = make_params(1.0, 1.0, 1.0, 0.5);
  const auto spec = make_superposition({kInvSqrt2, 0.0}, {0.0, kInvSqrt2}, 1,
                                       2, par, par);
  CHECK(wigner_superposition(spec, 0.3, -1.1) ==
        doctest::Approx(-0.048164582860532598556).epsilon(1e-12));
}

TEST_CASE("ground-state distribution peaks at the inverse-pi bound") {
  const auto par = make_params(1.0, 1.0, 1.0, 0.7);
  const auto state = make_pure_state(0, par);
  CHECK(wigner_pure(state, 0.0, 0.0) ==
        doctest::Approx(1.0 / std::numbers::pi).epsilon(1e-13));
}

TEST_CASE("construction validation") {
  const auto par = make_params(1.0, 1.0, 1.0, 0.5);
  const auto other_mass = make_params(2.0, 1.0, 1.0, 0.5);
  CHECK_THROWS_AS(
      make_superposition({1.0, 0.0}, {0.0, 0.0}, 2, 2, par, par),
      ConfigError);
  CHECK_THROWS_AS(
      make_superposition({0.9, 0.0}, {0.1, 0.0}, 1, 2, par, par),
      ConfigError);
  CHECK_THROWS_AS(
      make_superposition({kInvSqrt2, 0.0}, {kInvSqrt2, 0.0}, 1, 2, par,
                         other_mass),
      ConfigError);
  CHECK_NOTHROW(
      make_superposition({kInvSqrt2, 0.0}, {0.0, -kInvSqrt2}, 1, 2, par, par));
}

TEST_CASE("cross terms are conjugate under index exchange") {
  const auto par_a = make_params(1.0, 1.0, 1.0, 0.3);
  const auto par_b = make_params(1.0, 1.0, 1.0, 0.8);
  for (double x : {-0.5, 0.3}) {
    for (double p : {-1.7, 0.4}) {
      const Complex ab = w_generic(1, 3, par_a, par_b, x, p);
      const Complex ba = w_generic(3, 1, par_b, par_a, x, p);
      CHECK(std::abs(ab - std::conj(ba)) <= 1e-15 * (1.0 + std::abs(ab)));
    }
  }
}

TEST_CASE("mixed-base superposition matches the quadrature oracle") {
  const auto par_a = make_params(1.0, 1.0, 1.0, 0.3);
  const auto par_b = make_params(1.0, 1.0, 1.0, 0.8);
  const Complex amp_a(0.6, 0.0);
  const Complex amp_b(0.0, 0.8);
  const auto spec = make_superposition(amp_a, amp_b, 1, 3, par_a, par_b);
  PsiEvaluator e1(make_pure_state(1, par_a));
  PsiEvaluator e3(make_pure_state(3, par_b));
  Wave1 wave = [&](double u) { return amp_a * e1(u) + amp_b * e3(u); };
  QuadratureSettings s = QuadratureSettings::for_envelope(0.5);
  for (double x : {-0.8, 0.0, 0.55}) {
    for (double p : {-3.5, -1.0, 0.8}) {
      s.oscillation_rate = std::abs(p) +
                           0.5 * (par_a.h * 1.0 + par_b.h * 3.0);
      const double closed = wigner_superposition(spec, x, p);
      const Complex numeric = qphase::wigner_numeric_1p(wave, x, p, 1.0, s);
      CHECK(std::abs(closed - numeric.real()) <= 1e-8);
      CHECK(std::abs(numeric.imag()) <= 1e-10);
    }
  }
}

TEST_CASE("pure state matches the quadrature oracle") {
  const auto par = make_params(1.0, 1.0, 1.0, 0.9);
  const auto state = make_pure_state(2, par);
  PsiEvaluator eval(state);
  Wave1 wave = [&](double u) { return eval(u); };
  QuadratureSettings s = QuadratureSettings::for_envelope(par.lambda);
  for (double x : {-0.9, 0.2}) {
    for (double p : {-1.8, -0.4, 0.9}) {
      s.oscillation_rate = std::abs(p) + par.lambda * par.h * 2.0;
      const Complex numeric = qphase::wigner_numeric_1p(wave, x, p, 1.0, s);
      CHECK(std::abs(wigner_pure(state, x, p) - numeric.real()) <= 1e-8);
    }
  }
}

TEST_CASE("flipping the overall sign negates the value exactly") {
  const auto par = make_params(1.0, 1.0, 1.0, 0.4);
  const auto spec = make_superposition({kInvSqrt2, 0.0}, {kInvSqrt2, 0.0}, 0,
                                       3, par, par);
  for (double x : {-0.3, 0.6}) {
    for (double p : {-2.5, 0.2}) {
      const double plus = wigner_superposition(spec, x, p, +1.0);
      const double minus = wigner_superposition(spec, x, p, -1.0);
      CHECK(plus == -minus);
    }
  }
}

TEST_CASE("values respect the single-particle magnitude bound") {
  const auto par = make_params(1.0, 1.0, 1.0, 0.2);
  const auto spec = make_superposition({kInvSqrt2, 0.0}, {0.0, kInvSqrt2}, 1,
                                       4, par, par);
  const double bound = 1.0 / std::numbers::pi + 1e-12;
  for (double x = -1.5; x <= 1.5; x += 0.25) {
    for (double p = -12.0; p <= 3.0; p += 0.5) {
      CHECK(std::abs(wigner_superposition(spec, x, p)) <= bound);
    }
  }
}

TEST_CASE("momentum marginal recovers the superposed density") {
  const auto par = make_params(1.0, 1.0, 1.0, 0.5);
  const auto spec = make_superposition({kInvSqrt2, 0.0}, {kInvSqrt2, 0.0}, 0,
                                       2, par, par);
  PsiEvaluator e0(make_pure_state(0, par));
  PsiEvaluator e2(make_pure_state(2, par));
  QuadratureSettings s;
  s.half_width = 2.0 * par.lambda * 1.0 * par.h * 2.0 + 8.0;
  s.points_per_unit = 64;
  std::function<double(double, double)> w = [&](double x, double p) {
    return wigner_superposition(spec, x, p);
  };
  for (double x : {-0.6, 0.0, 0.8}) {
    const double density =
        std::norm(kInvSqrt2 * e0(x) + kInvSqrt2 * e2(x));
    CHECK(std::abs(qphase::marginal_p(w, x, s) - density) <= 1e-8);
  }
}
