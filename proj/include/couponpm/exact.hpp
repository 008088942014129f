#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "couponpm/network.hpp"

namespace couponpm {

// Ground-truth expected adopter counts by full enumeration of the
// realization space: live-edge configurations for IC, per-node choice
// vectors for LT. Outcomes with identical reachability are merged.
// Intended for tiny networks only; oversize instances are refused with
// TooLargeError, never approximated.
class ExactOracle {
 public:
  static constexpr std::size_t kMaxNodes = 64;
  static constexpr std::size_t kMaxUncertainIcEdges = 25;
  static constexpr double kMaxLtConfigurations = 1e7;
  static constexpr std::size_t kMaxSubsetTableNodes = 20;

  explicit ExactOracle(const TCNetwork& net);

  std::size_t node_count() const noexcept { return n_; }
  std::size_t outcome_count() const noexcept { return outcomes_.size(); }

  // pi(S)
  double expected_adopters(std::span<const NodeId> seeds) const;
  // f(S) = P * pi(S) - C * |S|
  double profit(std::span<const NodeId> seeds) const;

  // pi over every subset; index bit i set <=> node i in S.
  std::vector<double> adopters_by_subset() const;
  std::vector<double> profit_by_subset() const;

  struct Optimum {
    std::vector<NodeId> seeds;
    double profit = 0;
  };
  // Exhaustive maximizer of f; ties go to the lowest subset mask.
  Optimum optimum() const;

  static std::uint64_t mask_of(std::span<const NodeId> seeds);
  static std::vector<NodeId> members_of(std::uint64_t mask);

 private:
  struct Outcome {
    double probability;
    std::vector<std::uint64_t> reach;  // reach[u]: nodes adopting if u seeds
  };
  std::size_t n_ = 0;
  double price_ = 0;
  double coupon_ = 0;
  std::vector<Outcome> outcomes_;
};

double exact_profit(const TCNetwork& net, std::span<const NodeId> seeds);

}  // namespace couponpm
