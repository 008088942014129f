#include "couponpm/network.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <istream>
#include <numeric>
#include <unordered_map>

#include "couponpm/errors.hpp"
#include "couponpm/random.hpp"

namespace couponpm {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    if (i >= s.size()) break;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

template <class T>
bool parse_number(std::string_view token, T& out) {
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, out);
  return ec == std::errc() && ptr == end;
}

// from_chars for double is available in libstdc++ 11, but accept the
// leading '+' that strtod-style writers sometimes emit.
bool parse_real(std::string_view token, double& out) {
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  return parse_number(token, out) && std::isfinite(out);
}

std::ifstream open_or_throw(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  return in;
}

}  // namespace

Graph::Graph(std::size_t node_count, std::vector<std::pair<NodeId, NodeId>> edges,
             std::vector<std::int64_t> labels)
    : labels_(std::move(labels)) {
  if (labels_.empty()) {
    labels_.resize(node_count);
    std::iota(labels_.begin(), labels_.end(), std::int64_t{0});
  } else if (labels_.size() != node_count) {
    throw ParameterError("label count does not match node count");
  }
  std::erase_if(edges, [](const auto& e) { return e.first == e.second; });
  for (const auto& [u, v] : edges) {
    if (u >= node_count || v >= node_count) throw ParameterError("edge endpoint out of range");
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  out_offsets_.assign(node_count + 1, 0);
  in_offsets_.assign(node_count + 1, 0);
  for (const auto& [u, v] : edges) {
    ++out_offsets_[u + 1];
    ++in_offsets_[v + 1];
  }
  std::partial_sum(out_offsets_.begin(), out_offsets_.end(), out_offsets_.begin());
  std::partial_sum(in_offsets_.begin(), in_offsets_.end(), in_offsets_.begin());
  out_targets_.resize(edges.size());
  in_sources_.resize(edges.size());
  std::vector<std::size_t> out_fill(out_offsets_.begin(), out_offsets_.end() - 1);
  std::vector<std::size_t> in_fill(in_offsets_.begin(), in_offsets_.end() - 1);
  // edges are sorted by (u, v), so both adjacency lists come out sorted
  for (const auto& [u, v] : edges) {
    out_targets_[out_fill[u]++] = v;
    in_sources_[in_fill[v]++] = u;
  }
}

std::vector<std::pair<NodeId, NodeId>> Graph::edges() const {
  std::vector<std::pair<NodeId, NodeId>> out;
  out.reserve(edge_count());
  for (NodeId u = 0; u < node_count(); ++u)
    for (NodeId v : out_neighbors(u)) out.emplace_back(u, v);
  return out;
}

Graph ingest_edge_list(std::istream& in, bool undirected) {
  std::vector<std::pair<std::int64_t, std::int64_t>> raw;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    const auto tokens = split_ws(body);
    std::int64_t u = 0, v = 0;
    if (tokens.size() != 2 || !parse_number(tokens[0], u) || !parse_number(tokens[1], v))
      throw ParseError("expected two integer node ids, got '" + std::string(body) + "'", line_no);
    raw.emplace_back(u, v);
  }
  if (raw.empty()) throw ParseError("edge list contains no edges", 0);

  std::vector<std::int64_t> labels;
  labels.reserve(raw.size() * 2);
  for (const auto& [u, v] : raw) {
    labels.push_back(u);
    labels.push_back(v);
  }
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  if (labels.size() > std::numeric_limits<NodeId>::max())
    throw ParseError("too many distinct node ids", 0);

  std::unordered_map<std::int64_t, NodeId> dense;
  dense.reserve(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) dense.emplace(labels[i], static_cast<NodeId>(i));

  std::vector<std::pair<NodeId, NodeId>> edges;
  edges.reserve(undirected ? raw.size() * 2 : raw.size());
  for (const auto& [u, v] : raw) {
    edges.emplace_back(dense[u], dense[v]);
    if (undirected) edges.emplace_back(dense[v], dense[u]);
  }
  const auto n = labels.size();
  return Graph(n, std::move(edges), std::move(labels));
}

Graph load_edge_list(const std::filesystem::path& path, bool undirected) {
  auto in = open_or_throw(path);
  return ingest_edge_list(in, undirected);
}

std::string_view model_name(DiffusionModel model) noexcept {
  switch (model) {
    case DiffusionModel::IcConstant: return "ic-cp";
    case DiffusionModel::IcWeightedCascade: return "ic-wc";
    case DiffusionModel::LinearThreshold: return "lt";
  }
  return "unknown";
}

DiffusionModel parse_model(std::string_view name) {
  if (name == "ic-cp") return DiffusionModel::IcConstant;
  if (name == "ic-wc") return DiffusionModel::IcWeightedCascade;
  if (name == "lt") return DiffusionModel::LinearThreshold;
  throw ParameterError("unknown diffusion model '" + std::string(name) +
                       "' (expected ic-cp, ic-wc or lt)");
}

// Pruning tolerance: intrinsics drawn exactly at P - C must survive the
// round trip through floating point.
constexpr double kPruneSlack = 1e-12;

TCNetwork build_tc_network(const Graph& g, DiffusionParams params, double price, double coupon,
                           std::span<const double> intrinsics) {
  if (!(price > 0.0) || !(price <= 1.0)) throw ParameterError("price must lie in (0, 1]");
  if (!(coupon >= 0.0) || !(coupon < price)) throw ParameterError("coupon must lie in [0, price)");
  if (params.model == DiffusionModel::IcConstant &&
      !(params.ic_probability > 0.0 && params.ic_probability <= 1.0))
    throw ParameterError("ic probability must lie in (0, 1]");
  if (intrinsics.size() != g.node_count())
    throw ParameterError("expected " + std::to_string(g.node_count()) + " intrinsic values, got " +
                         std::to_string(intrinsics.size()));

  constexpr NodeId kDropped = std::numeric_limits<NodeId>::max();
  std::vector<NodeId> remap(g.node_count(), kDropped);
  TCNetwork net;
  std::vector<std::int64_t> labels;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (price > intrinsics[v] + coupon + kPruneSlack) continue;
    remap[v] = static_cast<NodeId>(net.source_index_.size());
    net.source_index_.push_back(v);
    net.intrinsics_.push_back(intrinsics[v]);
    labels.push_back(g.label(v));
  }
  if (net.source_index_.empty())
    throw EmptyNetworkError("empty feasible network: every node has price > intrinsic + coupon");

  std::vector<std::pair<NodeId, NodeId>> edges;
  for (NodeId u = 0; u < g.node_count(); ++u) {
    if (remap[u] == kDropped) continue;
    for (NodeId v : g.out_neighbors(u))
      if (remap[v] != kDropped) edges.emplace_back(remap[u], remap[v]);
  }
  const auto n = net.source_index_.size();
  net.graph_ = Graph(n, std::move(edges), std::move(labels));
  net.params_ = params;
  net.price_ = price;
  net.coupon_ = coupon;
  net.discount_ratio_ = (price - coupon) / price;
  net.in_weight_.resize(n);
  for (NodeId v = 0; v < n; ++v) {
    const auto deg = net.graph_.in_degree(v);
    if (params.model == DiffusionModel::IcConstant)
      net.in_weight_[v] = params.ic_probability;
    else
      net.in_weight_[v] = deg == 0 ? 0.0 : 1.0 / static_cast<double>(deg);
  }
  return net;
}

std::vector<double> generate_intrinsics(std::size_t node_count, double price, double coupon,
                                        std::uint64_t rng_seed) {
  if (!(coupon >= 0.0 && coupon < price && price <= 1.0))
    throw ParameterError("intrinsic generation requires 0 <= coupon < price <= 1");
  const double lo = price - coupon;
  Rng rng(rng_seed);
  std::vector<double> out(node_count);
  for (auto& x : out) x = lo + (1.0 - lo) * rng.uniform();
  return out;
}

std::vector<double> read_intrinsics(std::istream& in) {
  std::vector<double> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    double x = 0;
    if (!parse_real(body, x)) throw ParseError("expected a real number", line_no);
    out.push_back(x);
  }
  return out;
}

std::vector<double> load_intrinsics(const std::filesystem::path& path) {
  auto in = open_or_throw(path);
  return read_intrinsics(in);
}

NetworkConfig read_network_config(std::istream& in) {
  NetworkConfig cfg;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    const auto eq = body.find('=');
    if (eq == std::string_view::npos) throw ParseError("expected key = value", line_no);
    const auto key = trim(body.substr(0, eq));
    const auto value = trim(body.substr(eq + 1));
    double x = 0;
    if (key == "model") {
      try {
        cfg.model = parse_model(value);
      } catch (const ParameterError& e) {
        throw ParseError(e.what(), line_no);
      }
    } else if (key == "price" || key == "coupon-fraction" || key == "ic-probability") {
      if (!parse_real(value, x)) throw ParseError("bad number for " + std::string(key), line_no);
      if (key == "price") cfg.price = x;
      else if (key == "coupon-fraction") cfg.coupon_fraction = x;
      else cfg.ic_probability = x;
    } else if (key == "rng-seed") {
      std::uint64_t s = 0;
      if (!parse_number(value, s)) throw ParseError("bad rng-seed", line_no);
      cfg.rng_seed = s;
    } else {
      throw ParseError("unknown key '" + std::string(key) + "'", line_no);
    }
  }
  return cfg;
}

NetworkConfig load_network_config(const std::filesystem::path& path) {
  auto in = open_or_throw(path);
  return read_network_config(in);
}

}  // namespace couponpm
