#include "couponpm/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <queue>

#include "couponpm/errors.hpp"
#include "couponpm/thresholds.hpp"

namespace couponpm {

namespace {

enum Stream : std::uint64_t { kRaStream = 11, kEvalStream = 12, kSizeStream = 13 };

void check_config(const BaselineConfig& cfg) {
  if (cfg.sweep_points == 0 || cfg.trials == 0 || cfg.eval_simulations == 0)
    throw ParameterError("baseline sweep points, trials and simulations must be positive");
  if (cfg.fixed_size && *cfg.fixed_size == 0) throw ParameterError("fixed size must be positive");
}

std::vector<NodeId> sorted_prefix(std::span<const NodeId> order, std::size_t size) {
  std::vector<NodeId> s(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(size));
  std::sort(s.begin(), s.end());
  return s;
}

}  // namespace

std::vector<NodeId> greedy_coverage_order(const RACollection& coll) {
  const auto n = coll.node_count();
  std::vector<bool> covered(coll.size(), false);
  struct Entry {
    std::size_t gain;
    NodeId node;
    bool operator<(const Entry& o) const {
      return gain != o.gain ? gain < o.gain : node > o.node;
    }
  };
  std::priority_queue<Entry> heap;
  for (NodeId v = 0; v < n; ++v) heap.push({coll.sets_containing(v).size(), v});
  std::vector<NodeId> order;
  order.reserve(n);
  while (!heap.empty()) {
    auto top = heap.top();
    heap.pop();
    std::size_t gain = 0;
    for (auto i : coll.sets_containing(top.node)) gain += !covered[i];
    if (gain != top.gain) {
      heap.push({gain, top.node});
      continue;
    }
    order.push_back(top.node);
    for (auto i : coll.sets_containing(top.node)) covered[i] = true;
  }
  return order;
}

SeedSet max_inf(const TCNetwork& net, const BaselineConfig& cfg, std::uint64_t rng_seed) {
  check_config(cfg);
  const auto n = net.node_count();
  const double big_n = default_big_n(net, cfg.big_n);
  const auto l = default_probe_count(net, cfg.eps, big_n);
  const auto coll = generate_ra_collection(net, l, derive_seed(rng_seed, kRaStream), cfg.threads);
  const auto order = greedy_coverage_order(coll);

  std::vector<std::size_t> sizes;
  if (cfg.fixed_size) {
    sizes.push_back(std::min(*cfg.fixed_size, n));
  } else {
    for (std::size_t i = 1; i <= cfg.sweep_points; ++i) {
      const auto s = (n * i + cfg.sweep_points - 1) / cfg.sweep_points;
      if (sizes.empty() || sizes.back() != s) sizes.push_back(s);
    }
  }

  SeedSet best;
  best.produced_by = "maxinf";
  best.samples.ra_sets = l;
  double best_size = 0;
  for (auto s : sizes) {
    const auto seeds = sorted_prefix(order, s);
    auto est = estimate_profit_simulation(net, seeds, cfg.eval_simulations,
                                          derive_seed(rng_seed, kEvalStream + 16 * s), cfg.threads);
    best.samples.simulations += cfg.eval_simulations;
    if (!best.profit_estimate || est.mean_profit > best.profit_estimate->mean_profit) {
      best.members = seeds;
      best.profit_estimate = est;
      best_size = static_cast<double>(s);
    }
  }
  best.details = {{"ra_sets", static_cast<double>(l)},
                  {"sizes_evaluated", static_cast<double>(sizes.size())},
                  {"best_size", best_size}};
  return best;
}

std::vector<NodeId> degree_order(const TCNetwork& net) {
  std::vector<NodeId> order(net.node_count());
  std::iota(order.begin(), order.end(), NodeId{0});
  const auto& g = net.graph();
  std::stable_sort(order.begin(), order.end(),
                   [&](NodeId a, NodeId b) { return g.out_degree(a) > g.out_degree(b); });
  return order;
}

SeedSet high_degree(const TCNetwork& net, const BaselineConfig& cfg, std::uint64_t rng_seed) {
  check_config(cfg);
  const auto n = net.node_count();
  const auto order = degree_order(net);
  Rng rng(derive_seed(rng_seed, kSizeStream));
  // identical sizes give identical sets; score each size once
  std::map<std::size_t, ProfitEstimate> scored;
  SeedSet best;
  best.produced_by = "highdegree";
  std::size_t best_size = 0;
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    const auto s = static_cast<std::size_t>(rng.below(n)) + 1;
    auto it = scored.find(s);
    if (it == scored.end()) {
      const auto seeds = sorted_prefix(order, s);
      auto est = estimate_profit_simulation(net, seeds, cfg.eval_simulations,
                                            derive_seed(rng_seed, kEvalStream + 16 * s), cfg.threads);
      best.samples.simulations += cfg.eval_simulations;
      it = scored.emplace(s, est).first;
    }
    if (!best.profit_estimate || it->second.mean_profit > best.profit_estimate->mean_profit) {
      best.members = sorted_prefix(order, s);
      best.profit_estimate = it->second;
      best_size = s;
    }
  }
  best.details = {{"distinct_sizes", static_cast<double>(scored.size())},
                  {"best_size", static_cast<double>(best_size)}};
  return best;
}

}  // namespace couponpm
