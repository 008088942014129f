#include <cmath>
#include <numbers>

#include "couponpm/errors.hpp"
#include "couponpm/thresholds.hpp"
#include "doctest.h"

using namespace couponpm;

namespace {

struct Pinned {
  double n, big_n, eps, eps1, eps2, r;
  double d0, d1, d2, d1s, d3;
};

// reference values evaluated at 40 significant digits
const Pinned kPinned[] = {
    {100, 100, 0.4, 0.3, 0.2, 0.1, 141150498.37548437335, 166730.41459024969254,
     23025.85092994045684, 165909.08249867210785, 10387.21719728425053},
    {7000, 7000, 0.2, 0.15, 0.1, 0.5, 193911754572.06426193, 1793126.0717149125918,
     7082.9323424299602857, 1771522.1431400341268, 3266.0188023427039095},
    {10, std::numbers::e, 0.1, 1.0, 1.0, 1.0, 108178.73535694502041, 23.794415416798359283, 2.0,
     21.150591481598541584, 3.0},
};

void check_rel(double got, double want) {
  CHECK(std::abs(got - want) <= 1e-12 * std::abs(want));
}

}  // namespace

TEST_CASE("bounds match reference values") {
  for (const auto& t : kPinned) {
    CAPTURE(t.n);
    check_rel(delta0(t.n, t.big_n, t.eps, t.r), t.d0);
    check_rel(delta1(t.n, t.big_n, t.eps1, t.r), t.d1);
    check_rel(delta2(t.big_n, t.eps2, t.r), t.d2);
    check_rel(delta1_star(t.n, t.big_n, t.eps1, t.r), t.d1s);
    check_rel(delta2_star(t.big_n, t.eps2, t.r), t.d2);
    check_rel(delta3(t.big_n, t.eps1, t.r), t.d3);
  }
}

TEST_CASE("bound shape") {
  CHECK(delta1(100, 100, 0.1, 0.1) > delta1(100, 100, 0.2, 0.1));
  CHECK(delta2(100, 0.1, 0.1) > delta2(100, 0.2, 0.1));
  CHECK(delta0(100, 100, 0.4, 0.1) > delta0(50, 100, 0.4, 0.1));
}

TEST_CASE("bound argument checks") {
  CHECK_THROWS_AS(delta2(1.0, 0.2, 0.1), ParameterError);  // ln N = 0
  CHECK_THROWS_AS(delta2(100, 0.0, 0.1), ParameterError);
  CHECK_THROWS_AS(delta2(100, 0.2, 0.0), ParameterError);
  CHECK_THROWS_AS(delta2(100, 0.2, 1.5), ParameterError);
  CHECK_THROWS_AS(delta0(0, 100, 0.2, 0.1), ParameterError);
  CHECK_THROWS_AS(delta0(10, 100, 0.5, 0.1), ParameterError);
  CHECK_THROWS_AS(delta1(10, 100, -0.1, 0.1), ParameterError);
}

TEST_CASE("RA-T grid search") {
  const double n = 100, big_n = 100, eps = 0.4, r = 0.1, step = 0.01;
  auto got = search_rat_params(n, big_n, eps, r, step);
  CHECK(got.eps1 + 0.5 * got.eps2 == doctest::Approx(eps).epsilon(1e-15));
  // independent re-scan of the same grid
  double best = INFINITY, best_eps1 = 0;
  for (int i = 1;; ++i) {
    const double e1 = i * step;
    const double e2 = 2 * (eps - e1);
    if (!(e1 < eps) || !(e2 > 1e-12)) break;
    const double d1 = (std::log(big_n) + n * std::log(2.0)) * (2 + e1 * r) / (e1 * e1 * r * r);
    const double d2 = 2 * std::log(big_n) / (e2 * e2 * r * r);
    const double v = std::max(d1, d2);
    if (v < best) {
      best = v;
      best_eps1 = e1;
    }
  }
  CHECK(got.eps1 == best_eps1);
  CHECK(got.sample_bound() == doctest::Approx(best).epsilon(1e-14));
  CHECK(got.delta1 == delta1(n, big_n, got.eps1, r));
  CHECK(got.delta2 == delta2(big_n, got.eps2, r));

  CHECK_THROWS_AS(search_rat_params(n, big_n, 0.005, r, 0.01), ParameterError);
  CHECK_THROWS_AS(search_rat_params(n, big_n, 0.6, r, 0.01), ParameterError);
}

TEST_CASE("RA-S solver") {
  for (double n : {10.0, 100.0, 7000.0}) {
    for (int k : {1, 3, 5, 8}) {
      CAPTURE(n);
      CAPTURE(k);
      const double eps = 0.4, eps3 = 0.1, r = 0.1;
      auto p = solve_ras_params(n, n, eps, r, k, eps3);
      CHECK(p.eps1 > 0);
      CHECK(p.eps2 > 0);
      const double ratio_residual = (1 - p.eps2) / (2 * (1 + eps3)) - p.eps1 - (0.5 - eps);
      CHECK(std::abs(ratio_residual) <= 1e-9);
      CHECK(std::abs(p.delta1_star / p.delta2_star - std::ldexp(1.0, k)) <=
            1e-9 * std::ldexp(1.0, k));
      CHECK(p.delta1_star == doctest::Approx(delta1_star(n, n, p.eps1, r)).epsilon(1e-15));
      CHECK(p.delta3 == doctest::Approx(delta3(n, p.eps1, r)).epsilon(1e-15));
    }
  }
}

TEST_CASE("larger k lowers the starting collection size") {
  double prev = INFINITY;
  for (int k = 3; k <= 8; ++k) {
    auto p = solve_ras_params(100, 100, 0.4, 0.1, k, 0.1);
    CHECK(p.delta2_star < prev);
    prev = p.delta2_star;
  }
}

TEST_CASE("RA-S solver infeasibility") {
  // eps3 so large that no positive eps2 meets the ratio target
  CHECK_THROWS_AS(solve_ras_params(100, 100, 0.1, 0.1, 5, 1.0), SolverError);
  CHECK_THROWS_AS(solve_ras_params(100, 100, 0.4, 0.1, 0, 0.1), ParameterError);
  CHECK_THROWS_AS(solve_ras_params(100, 100, 0.4, 0.1, 5, 0.0), ParameterError);
}

TEST_CASE("threshold table") {
  auto t = make_threshold_table(100, 100, 0.4, 0.1, 5, 0.1);
  CHECK(t.delta0 == delta0(100, 100, 0.4, 0.1));
  CHECK(t.rat.eps1 + t.rat.eps2 / 2 == doctest::Approx(0.4));
  CHECK(t.ras.delta1_star / t.ras.delta2_star == doctest::Approx(32.0).epsilon(1e-9));
}
