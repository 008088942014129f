#include "couponpm/exact.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <string>

#include "couponpm/diffusion.hpp"
#include "couponpm/errors.hpp"

namespace couponpm {

namespace {

// Transitive closure over live edges (Warshall on bit rows).
std::vector<std::uint64_t> closure(std::vector<std::uint64_t> reach) {
  const auto n = reach.size();
  for (std::size_t k = 0; k < n; ++k) {
    const std::uint64_t bit = std::uint64_t{1} << k;
    for (std::size_t i = 0; i < n; ++i)
      if (reach[i] & bit) reach[i] |= reach[k];
  }
  return reach;
}

}  // namespace

ExactOracle::ExactOracle(const TCNetwork& net)
    : n_(net.node_count()), price_(net.price()), coupon_(net.coupon()) {
  if (n_ > kMaxNodes)
    throw TooLargeError("exact oracle supports at most " + std::to_string(kMaxNodes) +
                        " nodes, network has " + std::to_string(n_));
  const auto& g = net.graph();
  std::map<std::vector<std::uint64_t>, double> merged;

  std::vector<std::uint64_t> base(n_);
  for (std::size_t u = 0; u < n_; ++u) base[u] = std::uint64_t{1} << u;

  if (net.model() == DiffusionModel::LinearThreshold) {
    // per eligible node: list of (chosen in-neighbor or none, probability)
    struct Choice {
      NodeId target;
      std::vector<std::pair<std::int64_t, double>> options;
    };
    std::vector<Choice> choices;
    double configurations = 1;
    for (NodeId v = 0; v < n_; ++v) {
      const auto in = g.in_neighbors(v);
      if (!net.adopter_eligible(v) || in.empty()) continue;
      const double w = net.in_edge_weight(v);
      Choice c{v, {}};
      for (NodeId u : in) c.options.emplace_back(u, w);
      const double none = 1.0 - w * static_cast<double>(in.size());
      if (none > 1e-12) c.options.emplace_back(-1, none);
      configurations *= static_cast<double>(c.options.size());
      choices.push_back(std::move(c));
    }
    if (configurations > kMaxLtConfigurations)
      throw TooLargeError("LT realization space has " + std::to_string(configurations) +
                          " configurations, limit is 1e7");
    std::vector<std::size_t> digit(choices.size(), 0);
    while (true) {
      double prob = 1;
      auto reach = base;
      for (std::size_t i = 0; i < choices.size(); ++i) {
        const auto& [u, p] = choices[i].options[digit[i]];
        prob *= p;
        if (u >= 0) reach[static_cast<std::size_t>(u)] |= std::uint64_t{1} << choices[i].target;
      }
      merged[closure(std::move(reach))] += prob;
      std::size_t i = 0;
      while (i < choices.size() && ++digit[i] == choices[i].options.size()) digit[i++] = 0;
      if (i == choices.size()) break;
    }
  } else {
    std::vector<std::pair<NodeId, NodeId>> uncertain;
    std::vector<double> uncertain_p;
    for (NodeId v = 0; v < n_; ++v) {
      if (!net.adopter_eligible(v)) continue;
      const double p = net.in_edge_weight(v);
      for (NodeId u : g.in_neighbors(v)) {
        if (p >= 1.0) {
          base[u] |= std::uint64_t{1} << v;
        } else {
          uncertain.emplace_back(u, v);
          uncertain_p.push_back(p);
        }
      }
    }
    if (uncertain.size() > kMaxUncertainIcEdges)
      throw TooLargeError("IC realization space has 2^" + std::to_string(uncertain.size()) +
                          " live-edge configurations, limit is 2^25");
    const std::uint64_t configs = std::uint64_t{1} << uncertain.size();
    for (std::uint64_t live = 0; live < configs; ++live) {
      double prob = 1;
      auto reach = base;
      for (std::size_t e = 0; e < uncertain.size(); ++e) {
        if (live >> e & 1) {
          prob *= uncertain_p[e];
          reach[uncertain[e].first] |= std::uint64_t{1} << uncertain[e].second;
        } else {
          prob *= 1.0 - uncertain_p[e];
        }
      }
      merged[closure(std::move(reach))] += prob;
    }
  }
  outcomes_.reserve(merged.size());
  for (auto& [reach, prob] : merged) outcomes_.push_back({prob, reach});
}

std::uint64_t ExactOracle::mask_of(std::span<const NodeId> seeds) {
  std::uint64_t mask = 0;
  for (NodeId s : seeds) mask |= std::uint64_t{1} << s;
  return mask;
}

std::vector<NodeId> ExactOracle::members_of(std::uint64_t mask) {
  std::vector<NodeId> out;
  for (; mask != 0; mask &= mask - 1) out.push_back(static_cast<NodeId>(std::countr_zero(mask)));
  return out;
}

double ExactOracle::expected_adopters(std::span<const NodeId> seeds) const {
  validate_seeds(n_, seeds);
  double total = 0;
  for (const auto& o : outcomes_) {
    std::uint64_t adopted = 0;
    for (NodeId s : seeds) adopted |= o.reach[s];
    total += o.probability * std::popcount(adopted);
  }
  return total;
}

double ExactOracle::profit(std::span<const NodeId> seeds) const {
  return price_ * expected_adopters(seeds) - coupon_ * static_cast<double>(seeds.size());
}

std::vector<double> ExactOracle::adopters_by_subset() const {
  if (n_ > kMaxSubsetTableNodes)
    throw TooLargeError("subset table limited to " + std::to_string(kMaxSubsetTableNodes) +
                        " nodes");
  const std::size_t subsets = std::size_t{1} << n_;
  std::vector<double> pi(subsets, 0.0);
  std::vector<std::uint64_t> covered(subsets, 0);
  for (const auto& o : outcomes_) {
    for (std::size_t mask = 1; mask < subsets; ++mask) {
      covered[mask] = covered[mask & (mask - 1)] | o.reach[std::countr_zero(mask)];
      pi[mask] += o.probability * std::popcount(covered[mask]);
    }
  }
  return pi;
}

std::vector<double> ExactOracle::profit_by_subset() const {
  auto f = adopters_by_subset();
  for (std::size_t mask = 0; mask < f.size(); ++mask)
    f[mask] = price_ * f[mask] - coupon_ * std::popcount(mask);
  return f;
}

ExactOracle::Optimum ExactOracle::optimum() const {
  const auto f = profit_by_subset();
  std::size_t best = 0;
  for (std::size_t mask = 1; mask < f.size(); ++mask)
    if (f[mask] > f[best]) best = mask;
  return {members_of(best), f[best]};
}

double exact_profit(const TCNetwork& net, std::span<const NodeId> seeds) {
  return ExactOracle(net).profit(seeds);
}

}  // namespace couponpm
