#include "couponpm/diffusion.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <string>

#include "couponpm/errors.hpp"
#include "couponpm/parallel.hpp"
#include "triggering.hpp"

namespace couponpm {

void validate_seeds(std::size_t node_count, std::span<const NodeId> seeds) {
  std::vector<bool> seen(node_count, false);
  for (NodeId s : seeds) {
    if (s >= node_count)
      throw ParameterError("seed " + std::to_string(s) + " is not a node of the network");
    if (seen[s]) throw ParameterError("seed " + std::to_string(s) + " listed twice");
    seen[s] = true;
  }
}

std::size_t simulate_once(const TCNetwork& net, std::span<const NodeId> seeds, Rng& rng,
                          TraversalWorkspace& ws) {
  ws.next_round();
  for (NodeId s : seeds) {
    if (!ws.seen(s)) {
      ws.mark(s);
      ws.queue.push_back(s);
    }
  }
  const auto& g = net.graph();
  const auto model = net.model();
  auto adopt = [&](NodeId v) {
    ws.mark(v);
    ws.queue.push_back(v);
  };

  for (std::size_t head = 0; head < ws.queue.size(); ++head) {
    const NodeId u = ws.queue[head];
    const auto out = g.out_neighbors(u);
    switch (model) {
      case DiffusionModel::IcConstant:
        detail::for_each_success(out.size(), net.params().ic_probability, rng, [&](std::size_t i) {
          const NodeId v = out[i];
          if (!ws.seen(v) && net.adopter_eligible(v)) adopt(v);
        });
        break;
      case DiffusionModel::IcWeightedCascade:
        for (NodeId v : out) {
          if (ws.seen(v) || !net.adopter_eligible(v)) continue;
          if (rng.bernoulli(net.in_edge_weight(v))) adopt(v);
        }
        break;
      case DiffusionModel::LinearThreshold:
        // uniform in-weights 1/d: adopt once hits/d >= theta, i.e.
        // hits >= theta*d, with theta ~ U[0,1] drawn on first contact
        for (NodeId v : out) {
          if (ws.seen(v) || !net.adopter_eligible(v)) continue;
          if (ws.touched_[v] != ws.epoch_) {
            ws.touched_[v] = ws.epoch_;
            ws.hits_[v] = 0;
            ws.threshold_[v] = rng.uniform() * static_cast<double>(g.in_degree(v));
          }
          if (static_cast<double>(++ws.hits_[v]) >= ws.threshold_[v]) adopt(v);
        }
        break;
    }
  }
  return ws.queue.size();
}

std::size_t simulate_once(const TCNetwork& net, std::span<const NodeId> seeds, Rng& rng) {
  TraversalWorkspace ws(net.node_count());
  return simulate_once(net, seeds, rng, ws);
}

std::string_view estimator_name(EstimatorKind kind) noexcept {
  switch (kind) {
    case EstimatorKind::Simulation: return "simulation";
    case EstimatorKind::Realization: return "realization";
    case EstimatorKind::RaSet: return "ra_set";
    case EstimatorKind::Exact: return "exact";
  }
  return "unknown";
}

namespace {

struct BlockSums {
  std::uint64_t sum = 0;
  double sum_sq = 0;
};

ProfitEstimate finish_estimate(const TCNetwork& net, std::span<const BlockSums> blocks,
                               std::size_t samples, std::size_t seed_count, EstimatorKind kind) {
  std::uint64_t sum = 0;
  double sum_sq = 0;
  for (const auto& b : blocks) {
    sum += b.sum;
    sum_sq += b.sum_sq;
  }
  ProfitEstimate est;
  est.kind = kind;
  est.sample_count = samples;
  const auto l = static_cast<double>(samples);
  est.mean_adopters = static_cast<double>(sum) / l;
  if (samples > 1) {
    const double var = std::max(0.0, (sum_sq - static_cast<double>(sum) * est.mean_adopters) / (l - 1));
    est.adopters_std_error = std::sqrt(var / l);
  }
  est.mean_profit = net.price() * est.mean_adopters - net.coupon() * static_cast<double>(seed_count);
  return est;
}

}  // namespace

ProfitEstimate estimate_profit_simulation(const TCNetwork& net, std::span<const NodeId> seeds,
                                          std::size_t l, std::uint64_t rng_seed,
                                          std::size_t threads) {
  if (l == 0) throw ParameterError("simulation count must be at least 1");
  validate_seeds(net.node_count(), seeds);
  const auto blocks = block_count(l);
  std::vector<BlockSums> sums(blocks);
  threads = std::min(resolve_threads(threads), blocks);
  std::vector<TraversalWorkspace> workspaces(threads, TraversalWorkspace(net.node_count()));
  parallel_tasks(blocks, threads, [&](std::size_t b, std::size_t worker) {
    Rng rng(derive_seed(rng_seed, b));
    const auto begin = b * kSampleBlock;
    const auto end = std::min(l, begin + kSampleBlock);
    BlockSums acc;
    for (auto i = begin; i < end; ++i) {
      const auto a = simulate_once(net, seeds, rng, workspaces[worker]);
      acc.sum += a;
      acc.sum_sq += static_cast<double>(a) * static_cast<double>(a);
    }
    sums[b] = acc;
  });
  return finish_estimate(net, sums, l, seeds.size(), EstimatorKind::Simulation);
}

Realization::Realization(const std::vector<std::vector<NodeId>>& triggering) {
  trig_offsets_.reserve(triggering.size() + 1);
  for (const auto& t : triggering) {
    for (NodeId u : t) {
      if (u >= triggering.size()) throw ParameterError("triggering set member out of range");
    }
    trig_.insert(trig_.end(), t.begin(), t.end());
    trig_offsets_.push_back(static_cast<std::uint32_t>(trig_.size()));
  }
  build_live_index();
}

void Realization::build_live_index() {
  const auto n = node_count();
  live_offsets_.assign(n + 1, 0);
  for (NodeId u : trig_) ++live_offsets_[u + 1];
  for (std::size_t i = 0; i < n; ++i) live_offsets_[i + 1] += live_offsets_[i];
  live_.resize(trig_.size());
  std::vector<std::uint32_t> fill(live_offsets_.begin(), live_offsets_.end() - 1);
  for (NodeId v = 0; v < n; ++v)
    for (NodeId u : triggering_set(v)) live_[fill[u]++] = v;
}

std::size_t Realization::memory_bytes() const noexcept {
  return sizeof(Realization) + (trig_offsets_.capacity() + live_offsets_.capacity()) * 4 +
         (trig_.capacity() + live_.capacity()) * sizeof(NodeId);
}

Realization sample_realization(const TCNetwork& net, Rng& rng) {
  Realization real;
  const auto n = net.node_count();
  real.trig_offsets_.reserve(n + 1);
  for (NodeId v = 0; v < n; ++v) {
    detail::sample_triggering_set(net, v, rng, [&](NodeId u) { real.trig_.push_back(u); });
    real.trig_offsets_.push_back(static_cast<std::uint32_t>(real.trig_.size()));
  }
  real.build_live_index();
  return real;
}

std::size_t replay_on_realization(const Realization& real, std::span<const NodeId> seeds,
                                  TraversalWorkspace& ws) {
  ws.next_round();
  for (NodeId s : seeds) {
    if (!ws.seen(s)) {
      ws.mark(s);
      ws.queue.push_back(s);
    }
  }
  for (std::size_t head = 0; head < ws.queue.size(); ++head) {
    for (NodeId v : real.live_successors(ws.queue[head])) {
      if (!ws.seen(v)) {
        ws.mark(v);
        ws.queue.push_back(v);
      }
    }
  }
  return ws.queue.size();
}

std::size_t replay_on_realization(const Realization& real, std::span<const NodeId> seeds) {
  TraversalWorkspace ws(real.node_count());
  return replay_on_realization(real, seeds, ws);
}

std::vector<Realization> sample_realizations(const TCNetwork& net, std::size_t l,
                                             std::uint64_t rng_seed, std::size_t threads) {
  std::vector<Realization> out(l);
  parallel_tasks(block_count(l), threads, [&](std::size_t b, std::size_t) {
    Rng rng(derive_seed(rng_seed, b));
    const auto end = std::min(l, (b + 1) * kSampleBlock);
    for (auto i = b * kSampleBlock; i < end; ++i) out[i] = sample_realization(net, rng);
  });
  return out;
}

ProfitEstimate estimate_profit_realizations(const TCNetwork& net,
                                            std::span<const Realization> realizations,
                                            std::span<const NodeId> seeds, std::size_t threads) {
  if (realizations.empty()) throw ParameterError("realization collection is empty");
  const auto l = realizations.size();
  const auto blocks = block_count(l);
  std::vector<BlockSums> sums(blocks);
  threads = std::min(resolve_threads(threads), blocks);
  std::vector<TraversalWorkspace> workspaces(threads, TraversalWorkspace(net.node_count()));
  parallel_tasks(blocks, threads, [&](std::size_t b, std::size_t worker) {
    const auto end = std::min(l, (b + 1) * kSampleBlock);
    BlockSums acc;
    for (auto i = b * kSampleBlock; i < end; ++i) {
      const auto a = replay_on_realization(realizations[i], seeds, workspaces[worker]);
      acc.sum += a;
      acc.sum_sq += static_cast<double>(a) * static_cast<double>(a);
    }
    sums[b] = acc;
  });
  return finish_estimate(net, sums, l, seeds.size(), EstimatorKind::Realization);
}

void write_realizations(std::ostream& out, std::span<const Realization> realizations) {
  const std::size_t n = realizations.empty() ? 0 : realizations.front().node_count();
  out << "couponpm-realizations " << kRealizationFormatVersion << ' ' << n << ' '
      << realizations.size() << '\n';
  for (const auto& real : realizations) {
    if (real.node_count() != n) throw ParameterError("realizations disagree on node count");
    for (NodeId v = 0; v < n; ++v) {
      out << v << ':';
      const auto t = real.triggering_set(v);
      for (std::size_t i = 0; i < t.size(); ++i) out << (i == 0 ? " " : ",") << t[i];
      out << '\n';
    }
    out << "--\n";
  }
}

std::vector<Realization> read_realizations(std::istream& in) {
  std::string magic;
  int version = 0;
  std::size_t n = 0, count = 0;
  if (!(in >> magic >> version >> n >> count) || magic != "couponpm-realizations")
    throw ParseError("missing realization header", 1);
  if (version != kRealizationFormatVersion)
    throw ParseError("unsupported realization format version " + std::to_string(version), 1);
  std::string line;
  std::getline(in, line);
  std::size_t line_no = 1;
  std::vector<Realization> out;
  out.reserve(count);
  for (std::size_t r = 0; r < count; ++r) {
    std::vector<std::vector<NodeId>> trig(n);
    for (NodeId v = 0; v < n; ++v) {
      ++line_no;
      if (!std::getline(in, line)) throw ParseError("truncated realization", line_no);
      const auto colon = line.find(':');
      NodeId id = 0;
      auto [p, ec] = std::from_chars(line.data(), line.data() + colon, id);
      if (colon == std::string::npos || ec != std::errc() || id != v)
        throw ParseError("expected entry for node " + std::to_string(v), line_no);
      std::size_t pos = colon + 1;
      while (pos < line.size()) {
        while (pos < line.size() && (line[pos] == ' ' || line[pos] == ',')) ++pos;
        if (pos >= line.size()) break;
        NodeId u = 0;
        auto [q, ec2] = std::from_chars(line.data() + pos, line.data() + line.size(), u);
        if (ec2 != std::errc() || u >= n) throw ParseError("bad triggering set member", line_no);
        trig[v].push_back(u);
        pos = static_cast<std::size_t>(q - line.data());
      }
    }
    ++line_no;
    if (!std::getline(in, line) || line != "--") throw ParseError("expected '--'", line_no);
    out.emplace_back(trig);
  }
  return out;
}

}  // namespace couponpm
