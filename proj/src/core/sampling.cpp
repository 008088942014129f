#include "couponpm/sampling.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <istream>
#include <limits>
#include <ostream>

#include "couponpm/errors.hpp"
#include "couponpm/parallel.hpp"
#include "triggering.hpp"

namespace couponpm {

NodeId generate_ra_set(const TCNetwork& net, Rng& rng, TraversalWorkspace& ws,
                       std::vector<NodeId>& out) {
  ws.next_round();
  const auto root = static_cast<NodeId>(rng.below(net.node_count()));
  ws.mark(root);
  ws.queue.push_back(root);
  for (std::size_t head = 0; head < ws.queue.size(); ++head) {
    detail::sample_triggering_set(net, ws.queue[head], rng, [&](NodeId u) {
      if (!ws.seen(u)) {
        ws.mark(u);
        ws.queue.push_back(u);
      }
    });
  }
  out.insert(out.end(), ws.queue.begin(), ws.queue.end());
  return root;
}

RASet generate_ra_set(const TCNetwork& net, Rng& rng) {
  TraversalWorkspace ws(net.node_count());
  RASet set;
  set.root = generate_ra_set(net, rng, ws, set.members);
  return set;
}

void RACollection::append(NodeId root, std::span<const NodeId> members) {
  if (roots_.size() >= std::numeric_limits<std::uint32_t>::max())
    throw ResourceError("RA collection exceeds 2^32 sets");
  const auto id = static_cast<std::uint32_t>(roots_.size());
  roots_.push_back(root);
  for (NodeId v : members) {
    if (v >= index_.size()) throw ParameterError("RA set member out of range");
    index_[v].push_back(id);
  }
  members_.insert(members_.end(), members.begin(), members.end());
  offsets_.push_back(members_.size());
}

std::size_t RACollection::memory_bytes() const noexcept {
  std::size_t bytes = roots_.capacity() * sizeof(NodeId) + offsets_.capacity() * sizeof(std::size_t) +
                      members_.capacity() * sizeof(NodeId);
  for (const auto& l : index_) bytes += l.capacity() * sizeof(std::uint32_t) + sizeof(l);
  return bytes;
}

void extend_ra_collection(RACollection& coll, const TCNetwork& net, std::size_t target_size,
                          std::uint64_t stream_seed, std::size_t threads) {
  if (coll.node_count() != net.node_count())
    throw ParameterError("RA collection and network disagree on node count");
  if (target_size <= coll.size()) return;
  const auto count = target_size - coll.size();
  const auto blocks = block_count(count);
  struct Block {
    std::vector<NodeId> roots;
    std::vector<std::uint32_t> sizes;
    std::vector<NodeId> members;
  };
  threads = std::min(resolve_threads(threads), blocks);
  std::vector<TraversalWorkspace> workspaces(threads, TraversalWorkspace(net.node_count()));
  // bounded batches keep peak memory near one batch of blocks
  const std::size_t batch = std::max<std::size_t>(threads * 4, 16);
  for (std::size_t first = 0; first < blocks; first += batch) {
    const auto last = std::min(blocks, first + batch);
    std::vector<Block> out(last - first);
    parallel_tasks(last - first, threads, [&](std::size_t t, std::size_t worker) {
      const auto b = first + t;
      Rng rng(derive_seed(stream_seed, b));
      const auto n_sets = std::min(kSampleBlock, count - b * kSampleBlock);
      auto& blk = out[t];
      blk.roots.reserve(n_sets);
      blk.sizes.reserve(n_sets);
      for (std::size_t i = 0; i < n_sets; ++i) {
        const auto before = blk.members.size();
        blk.roots.push_back(generate_ra_set(net, rng, workspaces[worker], blk.members));
        blk.sizes.push_back(static_cast<std::uint32_t>(blk.members.size() - before));
      }
    });
    for (const auto& blk : out) {
      std::size_t pos = 0;
      for (std::size_t i = 0; i < blk.roots.size(); ++i) {
        coll.append(blk.roots[i], std::span(blk.members).subspan(pos, blk.sizes[i]));
        pos += blk.sizes[i];
      }
    }
  }
}

RACollection generate_ra_collection(const TCNetwork& net, std::size_t count,
                                    std::uint64_t stream_seed, std::size_t threads) {
  RACollection coll(net.node_count());
  extend_ra_collection(coll, net, count, stream_seed, threads);
  return coll;
}

int coverage_indicator(std::span<const NodeId> seeds, std::span<const NodeId> members) {
  for (NodeId s : seeds)
    if (std::find(members.begin(), members.end(), s) != members.end()) return 1;
  return 0;
}

std::size_t covered_count(const RACollection& coll, std::span<const NodeId> seeds) {
  std::vector<bool> hit(coll.size(), false);
  std::size_t covered = 0;
  for (NodeId s : seeds) {
    if (s >= coll.node_count()) throw ParameterError("seed out of range");
    for (auto i : coll.sets_containing(s)) {
      if (!hit[i]) {
        hit[i] = true;
        ++covered;
      }
    }
  }
  return covered;
}

double estimate_F(const RACollection& coll, std::span<const NodeId> seeds, const TCNetwork& net) {
  if (coll.empty()) throw ParameterError("RA collection is empty");
  validate_seeds(net.node_count(), seeds);
  const double n = static_cast<double>(net.node_count());
  const double fraction =
      static_cast<double>(covered_count(coll, seeds)) / static_cast<double>(coll.size());
  return net.price() * n * fraction - net.coupon() * static_cast<double>(seeds.size());
}

namespace {

std::uint64_t fold(std::uint64_t h, std::uint64_t x) { return mix64(h ^ x) + 0x9e3779b97f4a7c15ULL; }

void put_u64(std::ostream& out, std::uint64_t x) {
  unsigned char buf[8];
  for (int i = 0; i < 8; ++i) buf[i] = static_cast<unsigned char>(x >> (8 * i));
  out.write(reinterpret_cast<const char*>(buf), 8);
}

void put_u32(std::ostream& out, std::uint32_t x) {
  unsigned char buf[4];
  for (int i = 0; i < 4; ++i) buf[i] = static_cast<unsigned char>(x >> (8 * i));
  out.write(reinterpret_cast<const char*>(buf), 4);
}

std::uint64_t get_uint(std::istream& in, int bytes) {
  unsigned char buf[8] = {};
  if (!in.read(reinterpret_cast<char*>(buf), bytes)) throw ParseError("truncated RA cache", 0);
  std::uint64_t x = 0;
  for (int i = 0; i < bytes; ++i) x |= std::uint64_t{buf[i]} << (8 * i);
  return x;
}

constexpr char kRaMagic[5] = {'C', 'P', 'M', 'R', 'A'};

}  // namespace

std::uint64_t network_fingerprint(const TCNetwork& net) {
  std::uint64_t h = 0x2545f4914f6cdd1dULL;
  h = fold(h, net.node_count());
  h = fold(h, net.graph().edge_count());
  h = fold(h, static_cast<std::uint64_t>(net.model()));
  h = fold(h, std::bit_cast<std::uint64_t>(net.params().ic_probability));
  h = fold(h, std::bit_cast<std::uint64_t>(net.price()));
  h = fold(h, std::bit_cast<std::uint64_t>(net.coupon()));
  for (double x : net.intrinsics()) h = fold(h, std::bit_cast<std::uint64_t>(x));
  for (const auto& [u, v] : net.graph().edges()) h = fold(h, (std::uint64_t{u} << 32) | v);
  return h;
}

void write_ra_collection(std::ostream& out, const RACollection& coll, std::uint64_t fingerprint) {
  out.write(kRaMagic, sizeof kRaMagic);
  out.put(static_cast<char>(kRaCacheVersion));
  put_u64(out, coll.node_count());
  put_u64(out, coll.size());
  put_u64(out, fingerprint);
  for (std::size_t i = 0; i < coll.size(); ++i) {
    const auto m = coll.members(i);
    put_u32(out, static_cast<std::uint32_t>(m.size()));
    for (NodeId v : m) put_u32(out, v);
  }
}

RACollection read_ra_collection(std::istream& in, std::uint64_t expected_fingerprint) {
  char magic[sizeof kRaMagic];
  if (!in.read(magic, sizeof magic) || std::memcmp(magic, kRaMagic, sizeof magic) != 0)
    throw ParseError("not an RA collection cache", 0);
  const auto version = get_uint(in, 1);
  if (version != kRaCacheVersion)
    throw ParseError("unsupported RA cache version " + std::to_string(version), 0);
  const auto n = get_uint(in, 8);
  const auto l = get_uint(in, 8);
  const auto fp = get_uint(in, 8);
  if (fp != expected_fingerprint) throw ParseError("RA cache was built for a different network", 0);
  RACollection coll(n);
  std::vector<NodeId> members;
  for (std::uint64_t i = 0; i < l; ++i) {
    const auto len = get_uint(in, 4);
    if (len == 0 || len > n) throw ParseError("bad RA set length", 0);
    members.resize(len);
    for (auto& v : members) {
      v = static_cast<NodeId>(get_uint(in, 4));
      if (v >= n) throw ParseError("RA set member out of range", 0);
    }
    coll.append(members.front(), members);
  }
  return coll;
}

}  // namespace couponpm
