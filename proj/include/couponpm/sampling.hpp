#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "couponpm/diffusion.hpp"
#include "couponpm/network.hpp"
#include "couponpm/random.hpp"

namespace couponpm {

// Reverse adopted-reachable set: a uniformly chosen root plus every node
// that reaches it through sampled triggering sets. The root is always a
// member and is stored first.
struct RASet {
  NodeId root = 0;
  std::vector<NodeId> members;
};

// Triggering sets are sampled lazily during the reverse traversal, each
// node at most once per set.
RASet generate_ra_set(const TCNetwork& net, Rng& rng);
// Appends members (root first) to `out` and returns the root.
NodeId generate_ra_set(const TCNetwork& net, Rng& rng, TraversalWorkspace& ws,
                       std::vector<NodeId>& out);

// Flat, append-only store of RA sets with a node -> set inverted index.
class RACollection {
 public:
  explicit RACollection(std::size_t node_count = 0) : index_(node_count) {}

  std::size_t size() const noexcept { return roots_.size(); }
  bool empty() const noexcept { return roots_.empty(); }
  std::size_t node_count() const noexcept { return index_.size(); }
  std::size_t total_members() const noexcept { return members_.size(); }

  NodeId root(std::size_t i) const noexcept { return roots_[i]; }
  std::span<const NodeId> members(std::size_t i) const noexcept {
    return {members_.data() + offsets_[i], members_.data() + offsets_[i + 1]};
  }
  // Indices of the sets containing v, ascending.
  std::span<const std::uint32_t> sets_containing(NodeId v) const noexcept { return index_[v]; }

  void append(NodeId root, std::span<const NodeId> members);
  void append(const RASet& set) { append(set.root, set.members); }

  std::size_t memory_bytes() const noexcept;

 private:
  std::vector<NodeId> roots_;
  std::vector<std::size_t> offsets_{0};
  std::vector<NodeId> members_;
  std::vector<std::vector<std::uint32_t>> index_;
};

// Grows `coll` to `target_size` sets. New sets are generated in fixed
// blocks seeded from (stream_seed, block) and appended in block order.
void extend_ra_collection(RACollection& coll, const TCNetwork& net, std::size_t target_size,
                          std::uint64_t stream_seed, std::size_t threads = 1);
RACollection generate_ra_collection(const TCNetwork& net, std::size_t count,
                                    std::uint64_t stream_seed, std::size_t threads = 1);

// x(S, R): 1 iff S and R intersect.
int coverage_indicator(std::span<const NodeId> seeds, std::span<const NodeId> members);

// Number of sets in the collection hit by `seeds`.
std::size_t covered_count(const RACollection& coll, std::span<const NodeId> seeds);

// F(R_l, S) = P * n * covered / l - C * |S|
double estimate_F(const RACollection& coll, std::span<const NodeId> seeds, const TCNetwork& net);

// Stable fingerprint of (n, m, model, P, C, intrinsics) used to tag caches.
std::uint64_t network_fingerprint(const TCNetwork& net);

// Binary cache: "CPMRA" magic, version byte, then little-endian u64 fields
// n, l, fingerprint, followed by l records of (u32 length, u32 members...),
// root first.
inline constexpr std::uint8_t kRaCacheVersion = 1;
void write_ra_collection(std::ostream& out, const RACollection& coll, std::uint64_t fingerprint);
// Throws ParseError on malformed input or a fingerprint mismatch.
RACollection read_ra_collection(std::istream& in, std::uint64_t expected_fingerprint);

}  // namespace couponpm
