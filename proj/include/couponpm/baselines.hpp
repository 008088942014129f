#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "couponpm/optimize.hpp"

namespace couponpm {

struct BaselineConfig {
  std::size_t sweep_points = 50;
  std::size_t trials = 100;  // HighDegree draws
  std::size_t eval_simulations = 10000;
  std::optional<std::size_t> fixed_size;  // MaxInf: evaluate only this size
  // MaxInf RA collection size is ceil(delta2) at eps2 = eps
  double eps = 0.4;
  std::optional<double> big_n;
  std::size_t threads = 1;
};

// Greedy maximum coverage order: element i is the node with the largest
// marginal coverage given elements 0..i-1 (ties by ascending id). Covers
// every node, so any prefix is the greedy solution of that size.
std::vector<NodeId> greedy_coverage_order(const RACollection& coll);

// Influence-maximisation baseline: coverage-greedy seed sets of sizes
// ceil(n i / sweep_points), each scored by simulation; best profit wins.
SeedSet max_inf(const TCNetwork& net, const BaselineConfig& cfg, std::uint64_t rng_seed);

// Random size s in {1..n}, top-s nodes by out-degree, repeated `trials`
// times; best simulated profit wins.
SeedSet high_degree(const TCNetwork& net, const BaselineConfig& cfg, std::uint64_t rng_seed);

// Out-degree descending, ties by ascending id.
std::vector<NodeId> degree_order(const TCNetwork& net);

}  // namespace couponpm
