#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "couponpm/network.hpp"
#include "couponpm/random.hpp"

namespace testing {

using couponpm::DiffusionModel;
using couponpm::DiffusionParams;
using couponpm::Graph;
using couponpm::NodeId;
using couponpm::TCNetwork;

inline TCNetwork make_network(std::size_t n, std::vector<std::pair<NodeId, NodeId>> edges,
                              DiffusionModel model, double p, double price, double coupon,
                              std::vector<double> intrinsics) {
  Graph g(n, std::move(edges));
  return couponpm::build_tc_network(g, DiffusionParams{model, p}, price, coupon, intrinsics);
}

// v1 -> v2 with edge probability p, I_{v1} = 0.9.
inline TCNetwork chain2(double p, double i2, double price = 0.5, double coupon = 0.25) {
  return make_network(2, {{0, 1}}, DiffusionModel::IcConstant, p, price, coupon, {0.9, i2});
}

struct RandomNetworkSpec {
  std::size_t min_nodes = 3;
  std::size_t max_nodes = 7;
  double edge_density = 0.3;
  std::size_t max_edges = 14;
  DiffusionModel model = DiffusionModel::IcConstant;
  double min_p = 0.2;
  double max_p = 0.8;
  double price = 0.5;
  double coupon_fraction = 0.5;
};

// Random digraph with intrinsics uniform on [P - C, 1] (no node is pruned).
inline TCNetwork random_network(couponpm::Rng& rng, const RandomNetworkSpec& spec) {
  const std::size_t n = spec.min_nodes + rng.below(spec.max_nodes - spec.min_nodes + 1);
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = 0; v < n; ++v) {
      if (u != v && edges.size() < spec.max_edges && rng.bernoulli(spec.edge_density)) {
        edges.emplace_back(u, v);
      }
    }
  }
  const double price = spec.price;
  const double coupon = spec.coupon_fraction * price;
  std::vector<double> intrinsics(n);
  for (auto& x : intrinsics) x = (price - coupon) + rng.uniform() * (1.0 - (price - coupon));
  const double p = spec.min_p + rng.uniform() * (spec.max_p - spec.min_p);
  return make_network(n, std::move(edges), spec.model, p, price, coupon, std::move(intrinsics));
}

// Enumerates every realization (one triggering set per node) with its
// probability and calls visit(probability, triggering_sets).
inline void for_each_realization(
    const TCNetwork& net,
    const std::function<void(double, const std::vector<std::vector<NodeId>>&)>& visit) {
  const std::size_t n = net.node_count();
  // per node: list of (probability, triggering set)
  std::vector<std::vector<std::pair<double, std::vector<NodeId>>>> choices(n);
  for (NodeId v = 0; v < n; ++v) {
    auto in = net.graph().in_neighbors(v);
    const double w = net.in_edge_weight(v);
    if (!net.adopter_eligible(v) || in.empty()) {
      choices[v].push_back({1.0, {}});
      continue;
    }
    if (net.model() == DiffusionModel::LinearThreshold) {
      const double none = 1.0 - w * static_cast<double>(in.size());
      if (none > 1e-15) choices[v].push_back({none, {}});
      for (NodeId u : in) choices[v].push_back({w, {u}});
    } else {
      const std::size_t d = in.size();
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << d); ++mask) {
        double pr = 1.0;
        std::vector<NodeId> t;
        for (std::size_t i = 0; i < d; ++i) {
          if (mask >> i & 1) {
            pr *= w;
            t.push_back(in[i]);
          } else {
            pr *= 1.0 - w;
          }
        }
        if (pr > 0) choices[v].push_back({pr, t});
      }
    }
  }
  std::vector<std::vector<NodeId>> current(n);
  std::function<void(NodeId, double)> rec = [&](NodeId v, double pr) {
    if (v == n) {
      visit(pr, current);
      return;
    }
    for (const auto& [q, t] : choices[v]) {
      current[v] = t;
      rec(v + 1, pr * q);
    }
  };
  rec(0, 1.0);
}

// Adopters on a fixed realization: fixed point of "v adopts if seeded or some
// member of T_v adopts".
inline std::size_t adopters_on(const std::vector<std::vector<NodeId>>& trig,
                               std::span<const NodeId> seeds) {
  std::vector<bool> on(trig.size(), false);
  for (NodeId s : seeds) on[s] = true;
  for (bool changed = true; changed;) {
    changed = false;
    for (NodeId v = 0; v < trig.size(); ++v) {
      if (on[v]) continue;
      for (NodeId u : trig[v]) {
        if (on[u]) {
          on[v] = true;
          changed = true;
          break;
        }
      }
    }
  }
  std::size_t c = 0;
  for (bool b : on) c += b;
  return c;
}

// pi(S) by brute-force enumeration of all realizations.
inline double brute_force_pi(const TCNetwork& net, std::span<const NodeId> seeds) {
  double pi = 0;
  for_each_realization(net, [&](double pr, const std::vector<std::vector<NodeId>>& t) {
    pi += pr * static_cast<double>(adopters_on(t, seeds));
  });
  return pi;
}

inline double brute_force_profit(const TCNetwork& net, std::span<const NodeId> seeds) {
  return net.price() * brute_force_pi(net, seeds) -
         net.coupon() * static_cast<double>(seeds.size());
}

inline std::vector<NodeId> members_of(std::uint64_t mask) {
  std::vector<NodeId> out;
  for (NodeId i = 0; mask; ++i, mask >>= 1) {
    if (mask & 1) out.push_back(i);
  }
  return out;
}

struct MeanAndError {
  double mean = 0;
  double std_error = 0;
};

inline MeanAndError mean_and_error(std::span<const double> xs) {
  double sum = 0, sq = 0;
  for (double x : xs) sum += x;
  const double n = static_cast<double>(xs.size());
  const double mean = sum / n;
  for (double x : xs) sq += (x - mean) * (x - mean);
  return {mean, xs.size() > 1 ? std::sqrt(sq / (n - 1) / n) : 0.0};
}

}  // namespace testing
