#pragma once

#include <cstddef>

namespace couponpm {

// Sample-count bounds. All values are real; callers use the ceiling as a
// sample count. Arguments must be positive, N > 1 and r in (0, 1];
// violations throw ParameterError.
//
//   delta0      = (ln 8 + ln n + ln N)(2n^2 + eps r n) / (eps^2 r^2)
//   delta1      = (ln N + n ln 2)(2 + eps1 r) / (eps1^2 r^2)
//   delta2      = 2 ln N / (eps2^2 r^2)
//   delta1_star = (ln N + n ln 2)(6 + 2 eps1 r) / (3 eps1^2 r^2)
//   delta2_star = 2 ln N / (eps2^2 r^2)
//   delta3      = (2 + eps1 r) ln N / (eps1^2 r^2)
double delta0(double n, double big_n, double eps, double r);
double delta1(double n, double big_n, double eps1, double r);
double delta2(double big_n, double eps2, double r);
double delta1_star(double n, double big_n, double eps1, double r);
double delta2_star(double big_n, double eps2, double r);
double delta3(double big_n, double eps1, double r);

// Error split for RA-T: eps1 + eps2 / 2 = eps.
struct RatParams {
  double eps1 = 0;
  double eps2 = 0;
  double delta1 = 0;
  double delta2 = 0;
  double sample_bound() const noexcept { return delta1 > delta2 ? delta1 : delta2; }
};

// Scans eps1 over {step, 2 step, ...} with eps1 < eps and picks the point
// minimising max(delta1, delta2); ties go to the smaller eps1.
RatParams search_rat_params(double n, double big_n, double eps, double r, double step = 0.01);

struct RasParams {
  double eps1 = 0;
  double eps2 = 0;
  double eps3 = 0;
  int k = 0;
  double delta1_star = 0;
  double delta2_star = 0;
  double delta3 = 0;
};

// Solves
//   (1 - eps2) / (2 (1 + eps3)) - eps1 = 1/2 - eps
//   delta1_star(eps1) = 2^k delta2_star(eps2)
// for eps1, eps2 > 0 by eliminating eps2 and bisecting on eps1. Throws
// SolverError when the system has no positive solution.
RasParams solve_ras_params(double n, double big_n, double eps, double r, int k, double eps3);

struct ThresholdTable {
  double n = 0, big_n = 0, eps = 0, r = 0;
  double delta0 = 0;
  RatParams rat;
  RasParams ras;
};

ThresholdTable make_threshold_table(double n, double big_n, double eps, double r, int k,
                                    double eps3, double step = 0.01);

}  // namespace couponpm
