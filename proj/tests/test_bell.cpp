#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <numbers>

#include "qphase/bell.hpp"
#include "qphase/errors.hpp"
#include "qphase/oracle.hpp"
#include "qphase/oscillator.hpp"
#include "qphase/phase_point.hpp"

using qphase::bell_variant_from_string;
using qphase::bell_wavefunction;
using qphase::bell_wigner;
using qphase::bell_wigner_terms;
using qphase::BellEvaluator;
using qphase::BellSpec;
using qphase::BellVariant;
using qphase::BellWave;
using qphase::Complex;
using qphase::ConfigError;
using qphase::make_bell_spec;
using qphase::make_params;
using qphase::make_pure_state;
using qphase::PhasePoint4;
using qphase::PsiEvaluator;
using qphase::QuadratureSettings;
using qphase::Wave2;

namespace {

BellSpec mixed_base_spec(BellVariant variant) {
  const auto par_A = make_params(1.0, 1.0, 1.0, 0.4);
  const auto par_B = make_params(1.0, 1.0, 1.0, 0.7);
  return make_bell_spec(variant, 0, 1, par_A, par_B);
}

const PhasePoint4 kAnchorPoint{0.25, -0.6, -0.4, 0.35};

}  // namespace

TEST_CASE("variant names round-trip") {
  for (BellVariant v : {BellVariant::PsiPlus, BellVariant::PsiMinus,
                        BellVariant::PhiPlus, BellVariant::PhiMinus}) {
    const auto parsed = bell_variant_from_string(qphase::to_string(v));
    REQUIRE(parsed.has_value());
    CHECK(*parsed == v);
  }
  CHECK(!bell_variant_from_string("psi").has_value());
  CHECK(qphase::variant_sign(BellVariant::PsiPlus) == 1.0);
  CHECK(qphase::variant_sign(BellVariant::PhiMinus) == -1.0);
  CHECK(qphase::is_psi_family(BellVariant::PsiMinus));
  CHECK(!qphase::is_psi_family(BellVariant::PhiPlus));
}

TEST_CASE("construction validation") {
  const auto par = make_params(1.0, 1.0, 1.0, 0.5);
  CHECK_THROWS_AS(make_bell_spec(BellVariant::PsiPlus, 2, 2, par, par),
                  ConfigError);
  CHECK_THROWS_AS(make_bell_spec(BellVariant::PsiPlus, -1, 2, par, par),
                  ConfigError);
  const auto other_hbar = make_params(1.0, 1.0, 2.0, 0.5);
  CHECK_THROWS_AS(make_bell_spec(BellVariant::PsiPlus, 0, 1, par, other_hbar),
                  ConfigError);
  CHECK_NOTHROW(make_bell_spec(BellVariant::PhiMinus, 0, 1, par, par));
}

TEST_CASE("mixed-base values against the frozen references") {
  CHECK(bell_wigner(mixed_base_spec(BellVariant::PhiPlus), kAnchorPoint) ==
        doctest::Approx(0.035230657273430424114).epsilon(1e-12));
  CHECK(bell_wigner(mixed_base_spec(BellVariant::PhiMinus), kAnchorPoint) ==
        doctest::Approx(0.016398543738913913189).epsilon(1e-12));
  CHECK(bell_wigner(mixed_base_spec(BellVariant::PsiPlus), kAnchorPoint) ==
        doctest::Approx(-0.053774899939210191595).epsilon(1e-12));
  CHECK(bell_wigner(mixed_base_spec(BellVariant::PsiMinus), kAnchorPoint) ==
        doctest::Approx(0.011131777731127531599).epsilon(1e-12));
}

TEST_CASE("evaluator and free function agree") {
  const auto spec = mixed_base_spec(BellVariant::PsiPlus);
  const BellEvaluator eval(spec);
  CHECK(eval.value(kAnchorPoint) == bell_wigner(spec, kAnchorPoint));
  const auto terms = eval.terms(kAnchorPoint);
  CHECK(terms.total == eval.value(kAnchorPoint));
  CHECK(terms.total ==
        doctest::Approx(terms.w1 + terms.w2 + terms.w3).epsilon(1e-15));
}

TEST_CASE("trig factor on index differences") {
  // base chosen so the deformation length is 2 and a quarter-period offset
  // lands exactly on a zero of the cosine
  const auto par = make_params(1.0, 1.0, 1.0, std::exp(-2.0));
  const auto spec = make_bell_spec(BellVariant::PsiPlus, 0, 1, par, par);
  CHECK(qphase::kappa(1, 1, 2, 2, spec, 0.123, -4.56) == 1.0);
  CHECK(qphase::kappa(1, 0, 0, 0, spec, std::numbers::pi / 4.0, 0.77) ==
        doctest::Approx(0.0).scale(1).epsilon(1e-12));
  CHECK(qphase::kappa(0, 0, 1, 0, spec, 0.0, std::numbers::pi / 4.0) ==
        doctest::Approx(0.0).scale(1).epsilon(1e-12));
}

TEST_CASE("envelope factor on index sums") {
  const auto par_A = make_params(1.0, 1.0, 1.0, 0.4);
  const auto par_B = make_params(1.0, 1.0, 1.0, 0.7);
  const auto spec = make_bell_spec(BellVariant::PhiPlus, 0, 1, par_A, par_B);
  CHECK(qphase::epsilon(0, 0, 0, 0, spec, 0.0, 0.0) == 1.0);
  const double pA = -0.9;
  const double pB = 0.4;
  const double expected =
      std::exp(-std::pow(1.0 * par_A.h * par_A.lambda + pA, 2) /
               (2.0 * par_A.lambda)) *
      std::exp(-std::pow(2.0 * par_B.h * par_B.lambda + pB, 2) /
               (2.0 * par_B.lambda));
  CHECK(qphase::epsilon(1, 0, 1, 1, spec, pA, pB) ==
        doctest::Approx(expected).epsilon(1e-14));
}

TEST_CASE("wavefunction equals the direct per-level assembly") {
  const auto par = make_params(1.0, 1.0, 1.0, 0.5);
  const auto spec = make_bell_spec(BellVariant::PhiPlus, 0, 1, par, par);
  PsiEvaluator e0(make_pure_state(0, par));
  PsiEvaluator e1(make_pure_state(1, par));
  const double xA = 0.3;
  const double xB = -0.2;
  const Complex expected =
      (e0(xA) * e0(xB) + e1(xA) * e1(xB)) / std::numbers::sqrt2;
  const Complex got = bell_wavefunction(spec, xA, xB);
  CHECK(std::abs(got - expected) <= 1e-15);

  const auto psi_minus = make_bell_spec(BellVariant::PsiMinus, 0, 1, par, par);
  const Complex expected_minus =
      (e0(xA) * e1(xB) - e1(xA) * e0(xB)) / std::numbers::sqrt2;
  CHECK(std::abs(bell_wavefunction(psi_minus, xA, xB) - expected_minus) <=
        1e-15);
}

TEST_CASE("antisymmetric combination vanishes on the diagonal") {
  const auto par = make_params(1.0, 1.0, 1.0, 0.3);
  const auto spec = make_bell_spec(BellVariant::PsiMinus, 1, 4, par, par);
  const BellWave wave(spec);
  for (double t : {-1.1, 0.0, 0.6}) {
    CHECK(std::abs(wave(t, t)) <= 1e-16);
  }
}

TEST_CASE("closed form matches the two-particle quadrature oracle") {
  const auto par = make_params(1.0, 1.0, 1.0, 0.5);
  QuadratureSettings s;
  s.half_width = std::sqrt(64.0 / par.lambda);
  s.points_per_unit = 24;
  s.oscillation_rate = 2.0 + par.lambda * par.h * 1.0;
  for (BellVariant variant : {BellVariant::PsiPlus, BellVariant::PhiMinus}) {
    const auto spec = make_bell_spec(variant, 0, 1, par, par);
    const BellEvaluator closed(spec);
    const BellWave wave(spec);
    Wave2 wave2 = [&](double uA, double uB) { return wave(uA, uB); };
    for (const PhasePoint4& pt :
         {PhasePoint4{0.0, -0.6, 0.0, -0.6}, PhasePoint4{0.5, 0.2, -0.4, -1.0}}) {
      const Complex numeric = qphase::wigner_numeric_2p(wave2, pt, 1.0, s);
      CHECK(std::abs(closed.value(pt) - numeric.real()) <= 1e-6);
      CHECK(std::abs(numeric.imag()) <= 1e-8);
    }
  }
}

TEST_CASE("mixed-base closed form matches the quadrature oracle") {
  const auto spec = mixed_base_spec(BellVariant::PhiPlus);
  const BellEvaluator closed(spec);
  const BellWave wave(spec);
  Wave2 wave2 = [&](double uA, double uB) { return wave(uA, uB); };
  QuadratureSettings s;
  s.half_width = std::sqrt(64.0 / 0.5);
  s.points_per_unit = 24;
  s.oscillation_rate =
      1.5 + 0.5 * std::max(spec.params_A.h, spec.params_B.h);
  for (const PhasePoint4& pt :
       {kAnchorPoint, PhasePoint4{-0.3, -1.2, 0.6, -0.5}}) {
    const Complex numeric = qphase::wigner_numeric_2p(wave2, pt, 1.0, s);
    CHECK(std::abs(closed.value(pt) - numeric.real()) <= 1e-6);
  }
}

TEST_CASE("plus and minus variants differ by twice the cross term") {
  const auto par = make_params(1.0, 1.0, 1.0, 0.35);
  for (bool psi_family : {true, false}) {
    const auto plus = make_bell_spec(
        psi_family ? BellVariant::PsiPlus : BellVariant::PhiPlus, 1, 3, par,
        par);
    const auto minus = make_bell_spec(
        psi_family ? BellVariant::PsiMinus : BellVariant::PhiMinus, 1, 3, par,
        par);
    for (const PhasePoint4& pt :
         {PhasePoint4{0.4, -2.0, -0.1, -1.0}, PhasePoint4{0.0, -3.7, 0.0, -3.7}}) {
      const auto tp = bell_wigner_terms(plus, pt);
      const auto tm = bell_wigner_terms(minus, pt);
      CHECK(tp.w1 == tm.w1);
      CHECK(tp.w2 == tm.w2);
      CHECK(tp.w3 == tm.w3);
      CHECK(tp.total - tm.total ==
            doctest::Approx(2.0 * tp.w2).epsilon(1e-14));
      CHECK(qphase::bell_interference_term(plus, pt) == tp.w2);
    }
  }
}

TEST_CASE("equal-base distributions are exchange symmetric") {
  const auto par = make_params(1.0, 1.0, 1.0, 0.2);
  for (BellVariant variant : {BellVariant::PsiPlus, BellVariant::PsiMinus,
                              BellVariant::PhiPlus, BellVariant::PhiMinus}) {
    const BellEvaluator eval(make_bell_spec(variant, 0, 2, par, par));
    for (const PhasePoint4& pt :
         {PhasePoint4{0.3, -1.1, -0.5, -2.3}, PhasePoint4{-0.8, 0.4, 0.2, -4.0}}) {
      const double direct = eval.value(pt);
      const double swapped = eval.value({pt.x_B, pt.p_B, pt.x_A, pt.p_A});
      CHECK(std::abs(direct - swapped) <= 1e-14 * (1.0 + std::abs(direct)));
    }
  }
}

TEST_CASE("deep-deformation lattice stays finite and bounded") {
  const auto par = make_params(1.0, 1.0, 1.0, 0.001);
  const BellEvaluator eval(make_bell_spec(BellVariant::PsiPlus, 2, 6, par, par));
  const double bound =
      1.0 / (std::numbers::pi * std::numbers::pi) + 1e-12;
  const double spread = 2.0 * par.lambda * par.h;
  for (double xA : {-1.0, 0.0, 1.0}) {
    for (double pA : {-6.0 * spread, -4.0 * spread, 0.0}) {
      for (double pB : {-6.0 * spread, -2.0 * spread}) {
        const double v = eval.value({xA, pA, 0.0, pB});
        CHECK(std::isfinite(v));
        CHECK(std::abs(v) <= bound);
      }
    }
  }
}
