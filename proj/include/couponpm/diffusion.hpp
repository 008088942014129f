#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

#include "couponpm/network.hpp"
#include "couponpm/random.hpp"

namespace couponpm {

// Per-run scratch space for the forward and reverse traversals. Visited
// marks are epoch-stamped so a workspace is reset in O(1).
class TraversalWorkspace {
 public:
  explicit TraversalWorkspace(std::size_t node_count)
      : stamp_(node_count, 0), touched_(node_count, 0), hits_(node_count, 0),
        threshold_(node_count, 0.0) {}

  void next_round() {
    if (++epoch_ == 0) {
      std::fill(stamp_.begin(), stamp_.end(), 0);
      std::fill(touched_.begin(), touched_.end(), 0);
      epoch_ = 1;
    }
    queue.clear();
  }
  bool seen(NodeId v) const noexcept { return stamp_[v] == epoch_; }
  void mark(NodeId v) noexcept { stamp_[v] = epoch_; }

  std::vector<NodeId> queue;

 private:
  friend std::size_t simulate_once(const TCNetwork&, std::span<const NodeId>, Rng&,
                                   TraversalWorkspace&);
  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 0;
  // LT bookkeeping: adopting in-neighbor count and scaled threshold,
  // valid where touched_ equals the current epoch
  std::vector<std::uint32_t> touched_;
  std::vector<std::uint32_t> hits_;
  std::vector<double> threshold_;
};

// Runs one stochastic T-C diffusion from `seeds` and returns the number of
// adopters. Seeds always adopt; a non-seed adopts when activated through the
// model and I_v >= P. LT thresholds are drawn fresh for every run.
std::size_t simulate_once(const TCNetwork& net, std::span<const NodeId> seeds, Rng& rng,
                          TraversalWorkspace& ws);
std::size_t simulate_once(const TCNetwork& net, std::span<const NodeId> seeds, Rng& rng);

enum class EstimatorKind { Simulation, Realization, RaSet, Exact };
std::string_view estimator_name(EstimatorKind kind) noexcept;

struct ProfitEstimate {
  double mean_profit = 0;
  double mean_adopters = 0;
  // standard error of mean_adopters (0 for exact)
  double adopters_std_error = 0;
  std::size_t sample_count = 0;
  EstimatorKind kind = EstimatorKind::Simulation;
};

// Mean over l independent runs. Runs are split into fixed blocks with
// streams derived from rng_seed, so the value is the same for any thread
// count.
ProfitEstimate estimate_profit_simulation(const TCNetwork& net, std::span<const NodeId> seeds,
                                          std::size_t l, std::uint64_t rng_seed,
                                          std::size_t threads = 1);

// One sampled triggering set per node, plus the induced live edges
// u -> v (u in T_v) for forward replay.
class Realization {
 public:
  Realization() = default;
  // triggering[v] lists T_v
  explicit Realization(const std::vector<std::vector<NodeId>>& triggering);

  std::size_t node_count() const noexcept { return trig_offsets_.size() - 1; }
  std::span<const NodeId> triggering_set(NodeId v) const noexcept {
    return {trig_.data() + trig_offsets_[v], trig_.data() + trig_offsets_[v + 1]};
  }
  std::span<const NodeId> live_successors(NodeId u) const noexcept {
    return {live_.data() + live_offsets_[u], live_.data() + live_offsets_[u + 1]};
  }
  std::size_t live_edge_count() const noexcept { return trig_.size(); }
  std::size_t memory_bytes() const noexcept;

 private:
  friend Realization sample_realization(const TCNetwork&, Rng&);
  void build_live_index();
  std::vector<std::uint32_t> trig_offsets_{0};
  std::vector<NodeId> trig_;
  std::vector<std::uint32_t> live_offsets_{0};
  std::vector<NodeId> live_;
};

Realization sample_realization(const TCNetwork& net, Rng& rng);

// |nodes reachable from seeds along live edges|, seeds included.
std::size_t replay_on_realization(const Realization& real, std::span<const NodeId> seeds,
                                  TraversalWorkspace& ws);
std::size_t replay_on_realization(const Realization& real, std::span<const NodeId> seeds);

// l realizations, block-seeded like estimate_profit_simulation.
std::vector<Realization> sample_realizations(const TCNetwork& net, std::size_t l,
                                             std::uint64_t rng_seed, std::size_t threads = 1);

// P * mean adopters over the fixed collection - C * |S|.
ProfitEstimate estimate_profit_realizations(const TCNetwork& net,
                                            std::span<const Realization> realizations,
                                            std::span<const NodeId> seeds,
                                            std::size_t threads = 1);

// Line-based cache format:
//   couponpm-realizations <version> <node_count> <count>
//   then per realization one line per node "v: t1,t2,..." and a line "--".
inline constexpr int kRealizationFormatVersion = 1;
void write_realizations(std::ostream& out, std::span<const Realization> realizations);
std::vector<Realization> read_realizations(std::istream& in);

// Throws ParameterError on out-of-range or repeated ids.
void validate_seeds(std::size_t node_count, std::span<const NodeId> seeds);

}  // namespace couponpm
