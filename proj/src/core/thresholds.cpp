#include "couponpm/thresholds.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "couponpm/errors.hpp"

namespace couponpm {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw ParameterError(what);
}

void check_common(double big_n, double r) {
  require(std::isfinite(big_n) && big_n > 1.0, "N must be greater than 1");
  require(r > 0.0 && r <= 1.0, "discount ratio r must lie in (0, 1]");
}

void check_positive(double x, const char* what) { require(std::isfinite(x) && x > 0.0, what); }

void check_epsilon(double eps) {
  require(eps > 0.0 && eps < 0.5, "eps must lie in (0, 1/2)");
}

}  // namespace

double delta0(double n, double big_n, double eps, double r) {
  check_common(big_n, r);
  require(n >= 1.0, "n must be at least 1");
  check_epsilon(eps);
  return (std::log(8.0) + std::log(n) + std::log(big_n)) * (2.0 * n * n + eps * r * n) /
         (eps * eps * r * r);
}

double delta1(double n, double big_n, double eps1, double r) {
  check_common(big_n, r);
  require(n >= 1.0, "n must be at least 1");
  check_positive(eps1, "eps1 must be positive");
  return (std::log(big_n) + n * std::log(2.0)) * (2.0 + eps1 * r) / (eps1 * eps1 * r * r);
}

double delta2(double big_n, double eps2, double r) {
  check_common(big_n, r);
  check_positive(eps2, "eps2 must be positive");
  return 2.0 * std::log(big_n) / (eps2 * eps2 * r * r);
}

double delta1_star(double n, double big_n, double eps1, double r) {
  check_common(big_n, r);
  require(n >= 1.0, "n must be at least 1");
  check_positive(eps1, "eps1 must be positive");
  return (std::log(big_n) + n * std::log(2.0)) * (6.0 + 2.0 * eps1 * r) /
         (3.0 * eps1 * eps1 * r * r);
}

double delta2_star(double big_n, double eps2, double r) { return delta2(big_n, eps2, r); }

double delta3(double big_n, double eps1, double r) {
  check_common(big_n, r);
  check_positive(eps1, "eps1 must be positive");
  return (2.0 + eps1 * r) * std::log(big_n) / (eps1 * eps1 * r * r);
}

RatParams search_rat_params(double n, double big_n, double eps, double r, double step) {
  check_epsilon(eps);
  check_positive(step, "search step must be positive");
  RatParams best;
  double best_bound = std::numeric_limits<double>::infinity();
  for (std::size_t i = 1;; ++i) {
    const double eps1 = static_cast<double>(i) * step;
    const double eps2 = 2.0 * (eps - eps1);
    if (!(eps2 > 1e-12)) break;
    const RatParams p{eps1, eps2, delta1(n, big_n, eps1, r), delta2(big_n, eps2, r)};
    if (p.sample_bound() < best_bound) {
      best = p;
      best_bound = p.sample_bound();
    }
  }
  if (!std::isfinite(best_bound))
    throw ParameterError("no feasible eps1 on the search grid; use a smaller step");
  return best;
}

RasParams solve_ras_params(double n, double big_n, double eps, double r, int k, double eps3) {
  check_epsilon(eps);
  check_positive(eps3, "eps3 must be positive");
  require(k >= 1 && k <= 60, "k must lie in [1, 60]");
  check_common(big_n, r);

  // eps2 from the ratio target: 1 - eps2 = (1 + eps3)(1 - 2 eps + 2 eps1)
  auto eps2_of = [&](double eps1) { return 1.0 - (1.0 + eps3) * (1.0 - 2.0 * eps + 2.0 * eps1); };
  const double upper = 0.5 * (1.0 / (1.0 + eps3) - 1.0 + 2.0 * eps);
  if (!(upper > 1e-9))
    throw SolverError("no positive (eps1, eps2) satisfies the ratio target; eps3 must be below " +
                      std::to_string(2.0 * eps / (1.0 - 2.0 * eps)) + " for this eps");
  const double scale = std::ldexp(1.0, k);
  // g decreases in eps1: delta1_star falls, delta2_star(eps2(eps1)) rises
  auto g = [&](double eps1) {
    return std::log(delta1_star(n, big_n, eps1, r)) -
           std::log(scale * delta2_star(big_n, eps2_of(eps1), r));
  };
  double lo = 1e-9;
  double hi = upper * (1.0 - 1e-12);
  if (!(g(lo) > 0.0) || !(g(hi) < 0.0))
    throw SolverError("delta1* = 2^k delta2* has no root for k = " + std::to_string(k) +
                      "; try a different k or eps3");
  for (int it = 0; it < 200 && hi - lo > 0.0; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (g(mid) > 0.0 ? lo : hi) = mid;
  }
  const double eps1 = std::abs(g(lo)) < std::abs(g(hi)) ? lo : hi;
  RasParams p;
  p.eps1 = eps1;
  p.eps2 = eps2_of(eps1);
  p.eps3 = eps3;
  p.k = k;
  p.delta1_star = delta1_star(n, big_n, p.eps1, r);
  p.delta2_star = delta2_star(big_n, p.eps2, r);
  p.delta3 = delta3(big_n, p.eps1, r);
  const double residual = std::abs(p.delta1_star / (scale * p.delta2_star) - 1.0);
  if (!(residual <= 1e-9))
    throw SolverError("RA-S parameter solve did not converge (residual " + std::to_string(residual) +
                      ")");
  return p;
}

ThresholdTable make_threshold_table(double n, double big_n, double eps, double r, int k,
                                    double eps3, double step) {
  ThresholdTable t;
  t.n = n;
  t.big_n = big_n;
  t.eps = eps;
  t.r = r;
  t.delta0 = delta0(n, big_n, eps, r);
  t.rat = search_rat_params(n, big_n, eps, r, step);
  t.ras = solve_ras_params(n, big_n, eps, r, k, eps3);
  return t;
}

}  // namespace couponpm
