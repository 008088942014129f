#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace couponpm {

using NodeId = std::uint32_t;

// Directed graph in compressed adjacency form with dense ids 0..n-1.
// Self-loops are dropped and parallel edges collapsed on construction.
class Graph {
 public:
  Graph() = default;
  // labels[i] is the external label of node i; defaults to i.
  Graph(std::size_t node_count, std::vector<std::pair<NodeId, NodeId>> edges,
        std::vector<std::int64_t> labels = {});

  std::size_t node_count() const noexcept { return labels_.size(); }
  std::size_t edge_count() const noexcept { return out_targets_.size(); }

  std::span<const NodeId> out_neighbors(NodeId v) const noexcept {
    return {out_targets_.data() + out_offsets_[v], out_targets_.data() + out_offsets_[v + 1]};
  }
  std::span<const NodeId> in_neighbors(NodeId v) const noexcept {
    return {in_sources_.data() + in_offsets_[v], in_sources_.data() + in_offsets_[v + 1]};
  }
  std::size_t out_degree(NodeId v) const noexcept { return out_offsets_[v + 1] - out_offsets_[v]; }
  std::size_t in_degree(NodeId v) const noexcept { return in_offsets_[v + 1] - in_offsets_[v]; }

  std::int64_t label(NodeId v) const noexcept { return labels_[v]; }
  const std::vector<std::int64_t>& labels() const noexcept { return labels_; }

  std::vector<std::pair<NodeId, NodeId>> edges() const;

 private:
  std::vector<std::int64_t> labels_;
  std::vector<std::size_t> out_offsets_{0};
  std::vector<NodeId> out_targets_;
  std::vector<std::size_t> in_offsets_{0};
  std::vector<NodeId> in_sources_;
};

// SNAP-style edge list: one "u v" pair per line, '#' comments, blank lines
// skipped. Labels are renumbered densely in ascending label order.
Graph ingest_edge_list(std::istream& in, bool undirected);
Graph load_edge_list(const std::filesystem::path& path, bool undirected);

enum class DiffusionModel { IcConstant, IcWeightedCascade, LinearThreshold };

std::string_view model_name(DiffusionModel model) noexcept;
DiffusionModel parse_model(std::string_view name);

struct DiffusionParams {
  DiffusionModel model = DiffusionModel::IcConstant;
  double ic_probability = 0.01;  // IcConstant only
};

// A graph together with price, coupon, intrinsic values and the diffusion
// model. Nodes that cannot adopt even with a coupon are removed up front.
class TCNetwork {
 public:
  const Graph& graph() const noexcept { return graph_; }
  const DiffusionParams& params() const noexcept { return params_; }
  DiffusionModel model() const noexcept { return params_.model; }
  std::size_t node_count() const noexcept { return graph_.node_count(); }

  double price() const noexcept { return price_; }
  double coupon() const noexcept { return coupon_; }
  // (P - C) / P
  double discount_ratio() const noexcept { return discount_ratio_; }

  double intrinsic(NodeId v) const noexcept { return intrinsics_[v]; }
  const std::vector<double>& intrinsics() const noexcept { return intrinsics_; }

  // A non-seed adopts once activated only if I_v >= P.
  bool adopter_eligible(NodeId v) const noexcept { return intrinsics_[v] >= price_; }

  // Probability (IC) or weight (LT) of every edge entering v. For the
  // weighted-cascade and LT settings this is 1/|in-neighbors of v|.
  double in_edge_weight(NodeId v) const noexcept { return in_weight_[v]; }

  // Index of v in the graph the network was built from.
  NodeId source_index(NodeId v) const noexcept { return source_index_[v]; }
  const std::vector<NodeId>& source_indices() const noexcept { return source_index_; }
  std::int64_t label(NodeId v) const noexcept { return graph_.label(v); }

  // f(V) = (P - C) * n
  double full_seeding_profit() const noexcept {
    return (price_ - coupon_) * static_cast<double>(node_count());
  }

 private:
  friend TCNetwork build_tc_network(const Graph&, DiffusionParams, double, double,
                                    std::span<const double>);
  Graph graph_;
  DiffusionParams params_;
  double price_ = 0;
  double coupon_ = 0;
  double discount_ratio_ = 0;
  std::vector<double> intrinsics_;
  std::vector<double> in_weight_;
  std::vector<NodeId> source_index_;
};

// Removes every node with price > intrinsic + coupon (with its edges) and
// re-densifies ids. Throws EmptyNetworkError when nothing remains.
TCNetwork build_tc_network(const Graph& g, DiffusionParams params, double price, double coupon,
                           std::span<const double> intrinsics);

// I.i.d. uniform draws on [P - C, 1].
std::vector<double> generate_intrinsics(std::size_t node_count, double price, double coupon,
                                        std::uint64_t rng_seed);

// One decimal per line; line i is node i. Blank and '#' lines are skipped.
std::vector<double> read_intrinsics(std::istream& in);
std::vector<double> load_intrinsics(const std::filesystem::path& path);

// key = value file with keys: model, price, coupon-fraction, ic-probability,
// rng-seed. Unknown keys are rejected.
struct NetworkConfig {
  std::optional<DiffusionModel> model;
  std::optional<double> ic_probability;
  std::optional<double> price;
  std::optional<double> coupon_fraction;
  std::optional<std::uint64_t> rng_seed;
};

NetworkConfig read_network_config(std::istream& in);
NetworkConfig load_network_config(const std::filesystem::path& path);

}  // namespace couponpm
