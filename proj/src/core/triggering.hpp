#pragma once

#include <cmath>
#include <cstddef>

#include "couponpm/network.hpp"
#include "couponpm/random.hpp"

namespace couponpm::detail {

// Visits the positions [0, count) that succeed in independent Bernoulli(p)
// trials, using geometric gaps so the cost is O(1 + successes).
template <class Fn>
void for_each_success(std::size_t count, double p, Rng& rng, Fn&& fn) {
  if (count == 0 || p <= 0.0) return;
  if (p >= 1.0) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  const double inv_log_q = 1.0 / std::log1p(-p);
  double pos = std::floor(std::log(rng.uniform_open_closed()) * inv_log_q);
  const auto limit = static_cast<double>(count);
  while (pos < limit) {
    fn(static_cast<std::size_t>(pos));
    pos += 1.0 + std::floor(std::log(rng.uniform_open_closed()) * inv_log_q);
  }
}

// Samples T_v from the coupon-modified distribution and calls fn(u) for
// every u in T_v. Ineligible nodes have an empty triggering set.
template <class Fn>
void sample_triggering_set(const TCNetwork& net, NodeId v, Rng& rng, Fn&& fn) {
  if (!net.adopter_eligible(v)) return;
  const auto in = net.graph().in_neighbors(v);
  if (in.empty()) return;
  const double w = net.in_edge_weight(v);
  if (net.model() == DiffusionModel::LinearThreshold) {
    // at most one in-neighbor, each with probability w, none with 1 - d*w
    const double slot = std::floor(rng.uniform() / w);
    if (slot < static_cast<double>(in.size())) fn(in[static_cast<std::size_t>(slot)]);
    return;
  }
  for_each_success(in.size(), w, rng, [&](std::size_t i) { fn(in[i]); });
}

}  // namespace couponpm::detail
