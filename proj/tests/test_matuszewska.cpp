#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "orlicz/matuszewska.hpp"

using namespace orlicz;
using doctest::Approx;

TEST_CASE("sup fixtures") {
  CHECK(matuszewska_sup(YoungFunction::power(3.0), 2.0).value() == Approx(8.0));
  CHECK(matuszewska_sup(YoungFunction::p_q(2.0, 3.0), 4.0).value() == Approx(64.0));
  CHECK(matuszewska_sup(YoungFunction::p_q(2.0, 3.0), 4.0, Method::numeric).value() == Approx(64.0).epsilon(0.01));
  for (const auto& f : {YoungFunction::power(1.5), YoungFunction::p_log(2.0, 1.0, 1.0), YoungFunction::double_exp()}) {
    CHECK(matuszewska_sup(f, 1.0).value() == Approx(1.0));
    CHECK(matuszewska_sup(f, 1.0, Method::numeric).value() == Approx(1.0));
  }
  CHECK(matuszewska_sup(YoungFunction::exp_taylor(2), 2.0, Method::numeric).is_infinite());
  CHECK(matuszewska_sup(YoungFunction::exp_neg_power(1.0), 2.0, Method::numeric).is_infinite());
  CHECK_THROWS_AS(matuszewska_sup(YoungFunction::power(2.0), 0.0), Error);
}

TEST_CASE("limit fixtures") {
  const auto pq = YoungFunction::p_q(2.0, 3.0);
  const auto z = matuszewska_limit(pq, 2.0, LimitEnd::zero, Method::numeric);
  CHECK(z.value.value() == Approx(4.0).epsilon(1e-6));
  CHECK(z.converged);
  CHECK(matuszewska_limit(pq, 2.0, LimitEnd::infinity, Method::numeric).value.value() == Approx(8.0).epsilon(1e-6));

  const auto e1 = matuszewska_limit(YoungFunction::exp_taylor(1), 0.5, LimitEnd::infinity, Method::numeric);
  CHECK(e1.value.value() < 1e-12);

  const auto pl = matuszewska_limit(YoungFunction::p_log(2.0, 1.0, 1.0), 2.0, LimitEnd::infinity, Method::numeric);
  CHECK(pl.value.value() == Approx(4.0).epsilon(0.05));
}

TEST_CASE("index fixtures") {
  const auto p24 = YoungFunction::p_q(2.0, 4.0);
  CHECK(matuszewska_index(p24, IndexKind::zero, Method::numeric).value() == Approx(2.0).epsilon(0.01));
  CHECK(matuszewska_index(p24, IndexKind::global, Method::numeric).value() == Approx(4.0).epsilon(0.01));
  CHECK(matuszewska_index(YoungFunction::exp_taylor(3), IndexKind::zero, Method::numeric).value() ==
        Approx(3.0).epsilon(0.01));
  CHECK(matuszewska_index(YoungFunction::double_exp(), IndexKind::global, Method::numeric).is_infinite());
  CHECK(matuszewska_index(YoungFunction::double_exp(), IndexKind::global).is_infinite());
  CHECK(matuszewska_index(YoungFunction::exp_neg_power(1.0), IndexKind::zero, Method::numeric).is_infinite());
}

TEST_CASE("profile invariants and csv") {
  for (const auto& f : {YoungFunction::p_q(2.0, 3.0), YoungFunction::exp_taylor(2), YoungFunction::double_exp(),
                        YoungFunction::tabulated_derivative({0.0, 1.0, 2.0, 4.0}, {0.0, 1.0, 3.0, 5.0})}) {
    for (Method m : {Method::automatic, Method::numeric}) {
      const auto p = matuszewska_profile(f, default_profile_grid(), m);
      const auto inv = check_profile_invariants(p);
      CHECK_MESSAGE(inv.ok(), f.name(), (inv.ok() ? "" : inv.violations.front()));
    }
  }
  const auto p = matuszewska_profile(YoungFunction::exp_taylor(2), {0.5, 1.0, 2.0});
  const std::string csv = profile_csv(p);
  CHECK(csv.rfind("t,M,M0,Minf\n", 0) == 0);
  CHECK(csv.find("inf") != std::string::npos);
  CHECK(p.i.is_infinite());
  CHECK(p.i0.value() == Approx(2.0));
}

TEST_CASE("numeric sup is the maximum of sampled ratios") {
  // Independent scan on a finer grid can only find values at most a grid step above.
  const auto f = YoungFunction::p_log(2.0, 1.0, 1.0);
  for (double t : {0.3, 3.0}) {
    double best = 0.0;
    for (int k = -600; k <= 600; ++k) {
      const double a = std::pow(2.0, k / 10.0);
      best = std::max(best, std::exp(f.log_A(a * t) - f.log_A(a)));
    }
    CHECK(matuszewska_sup(f, t, Method::numeric).value() == Approx(best).epsilon(1e-3));
  }
}
