#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "couponpm/diffusion.hpp"
#include "couponpm/network.hpp"
#include "couponpm/random.hpp"
#include "couponpm/sampling.hpp"

namespace couponpm {

struct SampleCounts {
  std::uint64_t simulations = 0;
  std::uint64_t realizations = 0;
  std::uint64_t ra_sets = 0;
};

struct SeedSet {
  std::vector<NodeId> members;  // ascending
  std::string produced_by;
  std::optional<ProfitEstimate> profit_estimate;
  SampleCounts samples;
  // algorithm-specific values (chosen eps split, sample bounds, ...)
  std::vector<std::pair<std::string, double>> details;
  // RA-S: collection size at each iteration
  std::vector<std::size_t> collection_sizes;
  std::string termination;

  double detail(const std::string& key) const;
};

enum class OracleKind { Exact, Simulation, Realization, RaCoverage };

// The set-function interface double greedy works against. It tracks the
// growing set X and the shrinking set Y; gains are reported for the
// current X and Y.
class GreedyOracle {
 public:
  virtual ~GreedyOracle() = default;
  virtual std::size_t ground_size() const = 0;
  virtual OracleKind kind() const = 0;
  // Offset added to both gains: 2 eps L* / n for sampled oracles, 0 when
  // the oracle is exact for the function being maximised.
  virtual double shift() const { return 0.0; }
  // Called once before the first gain; X = {}, Y = ground set.
  virtual void reset() = 0;
  // h(X + v) - h(X)
  virtual double add_gain(NodeId v) = 0;
  // h(Y - v) - h(Y)
  virtual double remove_gain(NodeId v) = 0;
  virtual void include(NodeId v) = 0;  // X <- X + v
  virtual void exclude(NodeId v) = 0;  // Y <- Y - v
};

// Wraps a value function h(S). Every gain costs two evaluations, so a full
// pass inspects 4n sets.
class SetFunctionOracle final : public GreedyOracle {
 public:
  using Evaluate = std::function<double(std::span<const NodeId>)>;

  SetFunctionOracle(std::size_t ground_size, Evaluate evaluate,
                    OracleKind kind = OracleKind::Exact, double shift = 0.0);

  std::size_t ground_size() const override { return in_y_.size(); }
  OracleKind kind() const override { return kind_; }
  double shift() const override { return shift_; }
  void reset() override;
  double add_gain(NodeId v) override;
  double remove_gain(NodeId v) override;
  void include(NodeId v) override;
  void exclude(NodeId v) override;

  std::size_t evaluations() const noexcept { return evaluations_; }

 private:
  double eval(std::span<const NodeId> s);
  std::vector<NodeId> y_members(std::optional<NodeId> without) const;

  Evaluate evaluate_;
  OracleKind kind_;
  double shift_;
  std::vector<NodeId> x_;
  std::vector<bool> in_y_;
  std::size_t evaluations_ = 0;
};

// F(R_l, .) with per-set counters: |R & X| and |R & Y|. A full double
// greedy pass costs O(sum of |R|).
class CoverageOracle final : public GreedyOracle {
 public:
  CoverageOracle(const RACollection& coll, const TCNetwork& net);

  std::size_t ground_size() const override { return coll_.node_count(); }
  OracleKind kind() const override { return OracleKind::RaCoverage; }
  void reset() override;
  double add_gain(NodeId v) override;
  double remove_gain(NodeId v) override;
  void include(NodeId v) override;
  void exclude(NodeId v) override;

  const RACollection& collection() const noexcept { return coll_; }

 private:
  const RACollection& coll_;
  double unit_;  // P * n / l
  double coupon_;
  std::vector<std::uint32_t> x_hits_;
  std::vector<std::uint32_t> y_count_;
};

// Randomised double greedy over `order` (a permutation of the ground set).
// Each element is kept with probability a'/(a'+b'), or kept outright when
// a' + b' = 0, where a' and b' are the shifted gains clamped at 0.
std::vector<NodeId> double_greedy(GreedyOracle& oracle, std::span<const NodeId> order, Rng& rng);

// Nodes by RA-set coverage count, descending; ties by ascending id.
std::vector<NodeId> node_order(const TCNetwork& net, std::size_t probe_count,
                               std::uint64_t rng_seed, std::size_t threads = 1);

struct ForwardOptions {
  double eps = 0.4;
  std::optional<double> big_n;  // defaults to n
  std::optional<std::size_t> l_override;
  std::optional<double> lower_bound;  // L*, defaults to f(V) = (P - C) n
  std::uint64_t seed = 0;
  std::size_t threads = 1;
  // RPM refuses to start when its realizations would exceed this
  std::size_t memory_budget_bytes = std::size_t{4} << 30;
};

// Forward framework with l fresh simulations per inspected set.
SeedSet spm(const TCNetwork& net, const ForwardOptions& opt);

// Forward framework over one fixed collection of l realizations.
SeedSet rpm(const TCNetwork& net, const ForwardOptions& opt);
// Predicted bytes for l realizations of `net`.
std::size_t rpm_memory_estimate(const TCNetwork& net, std::size_t l);

struct RatOptions {
  double eps = 0.4;
  std::optional<double> big_n;
  std::optional<std::size_t> max_ra;
  std::optional<std::size_t> probe_count;  // node ordering, default ceil(delta2) at eps2 = eps
  std::optional<std::vector<NodeId>> order;
  double search_step = 0.01;
  std::uint64_t seed = 0;
  std::size_t threads = 1;
};

SeedSet ra_t(const TCNetwork& net, const RatOptions& opt);

struct RasOptions {
  double eps = 0.4;
  std::optional<double> big_n;
  int k = 5;
  double eps3 = 0.1;
  // early return once F(R, V*) falls by less than this fraction between
  // consecutive iterations; 0 disables the rule
  double plateau_pct = 0.02;
  std::optional<std::size_t> max_ra;
  std::optional<std::size_t> probe_count;
  std::optional<std::vector<NodeId>> order;
  std::uint64_t seed = 0;
  std::size_t threads = 1;
};

SeedSet ra_s(const TCNetwork& net, const RasOptions& opt);

// N defaults to n, floored at 2 so that ln N > 0.
double default_big_n(const TCNetwork& net, std::optional<double> big_n);
std::size_t default_probe_count(const TCNetwork& net, double eps, double big_n);

}  // namespace couponpm
