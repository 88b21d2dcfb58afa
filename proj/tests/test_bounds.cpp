#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>

#include "orlicz/bounds.hpp"

using namespace orlicz;
using doctest::Approx;

namespace {

const Order k1Half{1, 0.5};
const Order k1ThreeQuarter{1, 0.75};
const Order k2Half{2, 0.5};

}  // namespace

TEST_CASE("growth conditions") {
  const auto a = check_conditions(YoungFunction::power(4.0), k1Half);
  CHECK(a.cond1 == Verdict::holds);
  CHECK(a.slopes_inf.size() == 3);
  CHECK(a.partial_sums_inf.back() == Approx(0.5).epsilon(1e-6));  // ∫_1^∞ t^{-3} dt

  const auto b = check_conditions(YoungFunction::power(2.0), k2Half);
  CHECK(b.cond1 == Verdict::fails);
  CHECK(b.cond2 == Verdict::holds);

  // t^2 with n=1, s=1/2: k^{p-n/s} = k^0 does not vanish at infinity.
  CHECK(check_conditions(YoungFunction::power(2.0), k1Half).cond3 == Verdict::fails);
  // 1/s < p < n/s makes both cond3 limits vanish.
  CHECK(check_conditions(YoungFunction::power(2.0), Order{2, 0.6}).cond3 == Verdict::holds);
  CHECK(check_conditions(YoungFunction::exp_taylor(2), k1Half).cond3 == Verdict::fails);
}

TEST_CASE("E function against a quadrature oracle") {
  // t^4, n=1, s=1/2: m = 2, Ã(τ) = 3(τ/4)^{4/3}; E(t) = t^2 ∫_t^∞ Ã τ^{-3} dτ.
  const auto f = YoungFunction::power(4.0);
  boost::math::quadrature::tanh_sinh<double> ts;
  auto oracle = [&](double t) {
    const double I = ts.integrate([](double tau) { return 3.0 * std::pow(tau / 4.0, 4.0 / 3.0) * std::pow(tau, -3.0); },
                                  t, std::numeric_limits<double>::infinity());
    return t * t * I;
  };
  for (double t : {0.5, 1.0, 3.0}) {
    CHECK(E_function(f, k1Half, t) == Approx(oracle(t)).epsilon(1e-9));
    CHECK(E_function(f, k1Half, t, Method::numeric) == Approx(oracle(t)).epsilon(1e-7));
  }
  CHECK(E_function(f, k1Half, 1e-12) < 1e-10);
  double prev = 0.0;
  for (double t = 0.01; t < 100.0; t *= 1.7) {
    const double e = E_function(f, k1Half, t);
    CHECK(e >= prev);
    prev = e;
  }
  CHECK_THROWS_AS(e_function(YoungFunction::power(2.0), k2Half), Error);
}

TEST_CASE("E function for a non-power kind") {
  const auto f = YoungFunction::p_q(3.0, 4.0);
  const auto e = e_function(f, k1Half);
  CHECK(check_young_invariants(e, 1e-3, 1e3, 1e-6).ok());
  // Numeric a = E' against a centred difference.
  for (double t : {0.2, 2.0}) {
    const double d = (e.A(t * 1.0001) - e.A(t / 1.0001)) / (t * (1.0001 - 1.0 / 1.0001));
    CHECK(e.a(t) == Approx(d).epsilon(1e-5));
  }
}

TEST_CASE("psi_s") {
  const auto f = YoungFunction::power(4.0);
  double prev = 0.0;
  for (double r = 1e-2; r <= 1e2; r *= 1.5) {
    const double v = psi_s(f, k1Half, r);
    CHECK(v >= prev);
    prev = v;
    const double ratio = v / psi_s_dual(f, k1Half, r);
    CHECK(ratio > 0.1);
    CHECK(ratio < 10.0);
    if (r <= 1.0) {
      const double w = v / (std::pow(r, 0.5) * std::pow(std::pow(r, -1.0), 0.25));
      CHECK(w > 0.1);
      CHECK(w < 10.0);
    }
  }
}

TEST_CASE("theorem values") {
  const auto t4 = YoungFunction::power(4.0);
  const auto b1 = bound_thm1(t4, k1ThreeQuarter, 0.5, 1.0, AlphaRegime::below_alpha0);
  CHECK(b1.value == Approx(4.0));
  CHECK(b1.applicable);

  // r^s = 1 gives r^n/ω since M(1) = 1.
  const auto pq = YoungFunction::p_q(2.0, 4.0);
  CHECK(bound_thm1(pq, k1ThreeQuarter, 1.0, 2.0, AlphaRegime::below_alpha0).value == Approx(0.5));
  // r = 2: M(2^{3/4}) = max{2^{1.5}, 2^3} = 8.
  CHECK(bound_thm1(pq, k1ThreeQuarter, 2.0, 1.0, AlphaRegime::below_alpha0).value == Approx(0.25));

  const auto t2i = bound_thm2_inverse(t4, k1ThreeQuarter, 0.5, 1.0, 3.0, AlphaRegime::below_alpha0, 2.0);
  CHECK(t2i.value == Approx(std::pow(0.5, 1.0 - 3.0) * std::pow(2.0, -4.0)));
  CHECK(bound_thm2_inverse(t4, k1ThreeQuarter, 0.5, 1.0, 3.0, AlphaRegime::below_alpha0).value == Approx(b1.value));
  // α = ω₁ and C·r^s = 1 give r^n/α.
  CHECK(bound_thm2_inverse(pq, k1ThreeQuarter, 1.0, 2.0, 2.0, AlphaRegime::below_alpha0).value == Approx(0.5));

  const auto t2 = YoungFunction::power(2.0);
  CHECK(bound_diameter(t2, k2Half, 1.0, 1.0).value == Approx(1.0));
  CHECK(bound_diameter(t2, k2Half, 2.0, 1.0).value == Approx(0.5));
  CHECK(bound_diameter(t2, k2Half, 2.0, 1.0).applicable);
  CHECK_FALSE(bound_diameter(YoungFunction::double_exp(), k2Half, 2.0, 1.0).applicable);

  const auto p23 = YoungFunction::p_q(2.0, 3.0);
  CHECK(bound_inradius_delta2(p23, k2Half, 1.0, 3.0).value == Approx(1.0 / 3.0));
  CHECK(bound_inradius_delta2(p23, k2Half, 4.0, 1.0).value == Approx(0.125));

  const auto below = bound_thm1(YoungFunction::power(2.0), Order{1, 0.4}, 1.0, 1.0, AlphaRegime::below_alpha0);
  CHECK_FALSE(below.applicable);
  CHECK_FALSE(below.reasons.empty());
}

TEST_CASE("calibration and eigenvalue rescaling") {
  const auto t2 = YoungFunction::power(2.0);
  const auto unit = bound_diameter(t2, k2Half, 2.0, 1.0);
  const double C = calibrate_linear(unit, 3.0);
  CHECK(bound_diameter(t2, k2Half, 2.0, 1.0, C).value == Approx(3.0));

  const Interval iv = eigenvalue_interval(2.0, ExtendedReal(3.0));
  CHECK(iv.lo == Approx(2.0 / 3.0));
  CHECK(iv.hi == Approx(6.0));
  const Interval one = eigenvalue_interval(5.0, ExtendedReal(1.0));
  CHECK(one.lo == Approx(5.0));
  CHECK(one.hi == Approx(5.0));
  CHECK(rescale_for_eigenvalue(unit, ExtendedReal(2.0)).value == Approx(unit.value / 2.0));
  CHECK_THROWS_AS(rescale_for_eigenvalue(unit, ExtendedReal::infinity()), Error);
}

TEST_CASE("order validation") {
  CHECK_THROWS_AS(check_conditions(YoungFunction::power(2.0), Order{1, 1.0}), Error);
  CHECK_THROWS_AS(check_conditions(YoungFunction::power(2.0), Order{0, 0.5}), Error);
  CHECK_THROWS_AS(bound_thm1(YoungFunction::power(2.0), k1Half, -1.0, 1.0, AlphaRegime::below_alpha0), Error);
}
