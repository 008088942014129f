#include "couponpm/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "couponpm/errors.hpp"
#include "couponpm/parallel.hpp"
#include "couponpm/thresholds.hpp"

namespace couponpm {

namespace {

// sub-stream ids under the run seed
enum Stream : std::uint64_t {
  kGreedyStream = 1,
  kEstimateStream = 2,
  kRealizationStream = 3,
  kRaStream = 4,
  kOrderStream = 5,
  kCheckStream = 6,
};

std::size_t ceil_count(double x) {
  if (!(x < 1e18)) throw ParameterError("sample bound is too large to run");
  return static_cast<std::size_t>(std::ceil(x));
}

void check_eps(double eps) {
  if (!(eps > 0.0 && eps < 0.5)) throw ParameterError("eps must lie in (0, 1/2)");
}

std::vector<NodeId> identity_order(std::size_t n) {
  std::vector<NodeId> order(n);
  std::iota(order.begin(), order.end(), NodeId{0});
  return order;
}

void validate_order(std::size_t n, std::span<const NodeId> order) {
  if (order.size() != n) throw ParameterError("node order must list every node once");
  validate_seeds(n, order);
}

}  // namespace

double SeedSet::detail(const std::string& key) const {
  for (const auto& [k, v] : details)
    if (k == key) return v;
  throw ParameterError("no detail named " + key);
}

SetFunctionOracle::SetFunctionOracle(std::size_t ground_size, Evaluate evaluate, OracleKind kind,
                                     double shift)
    : evaluate_(std::move(evaluate)), kind_(kind), shift_(shift), in_y_(ground_size, true) {}

void SetFunctionOracle::reset() {
  x_.clear();
  std::fill(in_y_.begin(), in_y_.end(), true);
}

double SetFunctionOracle::eval(std::span<const NodeId> s) {
  ++evaluations_;
  return evaluate_(s);
}

std::vector<NodeId> SetFunctionOracle::y_members(std::optional<NodeId> without) const {
  std::vector<NodeId> y;
  for (NodeId v = 0; v < in_y_.size(); ++v)
    if (in_y_[v] && v != without) y.push_back(v);
  return y;
}

double SetFunctionOracle::add_gain(NodeId v) {
  std::vector<NodeId> with = x_;
  with.push_back(v);
  std::sort(with.begin(), with.end());
  const double gained = eval(with);
  return gained - eval(x_);
}

double SetFunctionOracle::remove_gain(NodeId v) {
  const double removed = eval(y_members(v));
  return removed - eval(y_members(std::nullopt));
}

void SetFunctionOracle::include(NodeId v) {
  x_.insert(std::upper_bound(x_.begin(), x_.end(), v), v);
}

void SetFunctionOracle::exclude(NodeId v) { in_y_[v] = false; }

CoverageOracle::CoverageOracle(const RACollection& coll, const TCNetwork& net)
    : coll_(coll), coupon_(net.coupon()) {
  if (coll.empty()) throw ParameterError("RA collection is empty");
  if (coll.node_count() != net.node_count())
    throw ParameterError("RA collection and network disagree on node count");
  unit_ = net.price() * static_cast<double>(net.node_count()) / static_cast<double>(coll.size());
  reset();
}

void CoverageOracle::reset() {
  x_hits_.assign(coll_.size(), 0);
  y_count_.resize(coll_.size());
  for (std::size_t i = 0; i < coll_.size(); ++i)
    y_count_[i] = static_cast<std::uint32_t>(coll_.members(i).size());
}

double CoverageOracle::add_gain(NodeId v) {
  std::size_t fresh = 0;
  for (auto i : coll_.sets_containing(v)) fresh += x_hits_[i] == 0;
  return unit_ * static_cast<double>(fresh) - coupon_;
}

double CoverageOracle::remove_gain(NodeId v) {
  std::size_t lost = 0;
  for (auto i : coll_.sets_containing(v)) lost += y_count_[i] == 1;
  return coupon_ - unit_ * static_cast<double>(lost);
}

void CoverageOracle::include(NodeId v) {
  for (auto i : coll_.sets_containing(v)) ++x_hits_[i];
}

void CoverageOracle::exclude(NodeId v) {
  for (auto i : coll_.sets_containing(v)) --y_count_[i];
}

std::vector<NodeId> double_greedy(GreedyOracle& oracle, std::span<const NodeId> order, Rng& rng) {
  validate_order(oracle.ground_size(), order);
  oracle.reset();
  const double shift = oracle.shift();
  std::vector<NodeId> chosen;
  for (NodeId v : order) {
    const double a = std::max(oracle.add_gain(v) + shift, 0.0);
    const double b = std::max(oracle.remove_gain(v) + shift, 0.0);
    // draw on (0, 1] so a' = 0 never keeps and a'/(a'+b') = 1 always does
    const double u = rng.uniform_open_closed();
    if (a + b == 0.0 || u <= a / (a + b)) {
      oracle.include(v);
      chosen.push_back(v);
    } else {
      oracle.exclude(v);
    }
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

std::vector<NodeId> node_order(const TCNetwork& net, std::size_t probe_count,
                               std::uint64_t rng_seed, std::size_t threads) {
  if (probe_count == 0) throw ParameterError("probe count must be at least 1");
  const auto probes = generate_ra_collection(net, probe_count, rng_seed, threads);
  auto order = identity_order(net.node_count());
  std::stable_sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
    return probes.sets_containing(a).size() > probes.sets_containing(b).size();
  });
  return order;
}

double default_big_n(const TCNetwork& net, std::optional<double> big_n) {
  if (big_n) {
    if (!(*big_n > 1.0)) throw ParameterError("N must be greater than 1");
    return *big_n;
  }
  return std::max(2.0, static_cast<double>(net.node_count()));
}

std::size_t default_probe_count(const TCNetwork& net, double eps, double big_n) {
  return ceil_count(delta2(big_n, eps, net.discount_ratio()));
}

namespace {

SeedSet forward_framework(const TCNetwork& net, const ForwardOptions& opt, GreedyOracle& oracle,
                          std::string name) {
  Rng rng(derive_seed(opt.seed, kGreedyStream));
  const auto order = identity_order(net.node_count());
  SeedSet out;
  out.members = double_greedy(oracle, order, rng);
  out.produced_by = std::move(name);
  return out;
}

double forward_shift(const TCNetwork& net, const ForwardOptions& opt) {
  const double lower = opt.lower_bound.value_or(net.full_seeding_profit());
  return 2.0 * opt.eps / static_cast<double>(net.node_count()) * lower;
}

std::size_t forward_sample_count(const TCNetwork& net, const ForwardOptions& opt, double big_n) {
  if (opt.l_override) {
    if (*opt.l_override == 0) throw ParameterError("l must be at least 1");
    return *opt.l_override;
  }
  return ceil_count(delta0(static_cast<double>(net.node_count()), big_n, opt.eps,
                           net.discount_ratio()));
}

}  // namespace

SeedSet spm(const TCNetwork& net, const ForwardOptions& opt) {
  check_eps(opt.eps);
  const double big_n = default_big_n(net, opt.big_n);
  const auto l = forward_sample_count(net, opt, big_n);
  std::uint64_t calls = 0;
  const auto stream = derive_seed(opt.seed, kEstimateStream);
  SetFunctionOracle oracle(
      net.node_count(),
      [&](std::span<const NodeId> s) {
        return estimate_profit_simulation(net, s, l, derive_seed(stream, calls++), opt.threads)
            .mean_profit;
      },
      OracleKind::Simulation, forward_shift(net, opt));
  auto out = forward_framework(net, opt, oracle, "spm");
  out.samples.simulations = static_cast<std::uint64_t>(l) * oracle.evaluations();
  out.details = {{"l", static_cast<double>(l)},
                 {"N", big_n},
                 {"shift", oracle.shift()},
                 {"inspected_sets", static_cast<double>(oracle.evaluations())}};
  return out;
}

std::size_t rpm_memory_estimate(const TCNetwork& net, std::size_t l) {
  const auto& g = net.graph();
  double live = 0;
  for (NodeId v = 0; v < net.node_count(); ++v) {
    if (!net.adopter_eligible(v) || g.in_degree(v) == 0) continue;
    live += net.model() == DiffusionModel::LinearThreshold
                ? 1.0
                : static_cast<double>(g.in_degree(v)) * net.in_edge_weight(v);
  }
  const double per = static_cast<double>(sizeof(Realization)) +
                     2.0 * 4.0 * static_cast<double>(net.node_count() + 1) + 2.0 * 4.0 * live;
  const double total = per * static_cast<double>(l);
  return total > 1.8e19 ? std::numeric_limits<std::size_t>::max() : static_cast<std::size_t>(total);
}

SeedSet rpm(const TCNetwork& net, const ForwardOptions& opt) {
  check_eps(opt.eps);
  const double big_n = default_big_n(net, opt.big_n);
  const auto l = forward_sample_count(net, opt, big_n);
  const auto need = rpm_memory_estimate(net, l);
  if (need > opt.memory_budget_bytes)
    throw ResourceError("RPM needs about " + std::to_string(need >> 20) + " MiB for " +
                        std::to_string(l) + " realizations, budget is " +
                        std::to_string(opt.memory_budget_bytes >> 20) + " MiB");
  const auto realizations =
      sample_realizations(net, l, derive_seed(opt.seed, kRealizationStream), opt.threads);
  SetFunctionOracle oracle(
      net.node_count(),
      [&](std::span<const NodeId> s) {
        return estimate_profit_realizations(net, realizations, s, opt.threads).mean_profit;
      },
      OracleKind::Realization, forward_shift(net, opt));
  auto out = forward_framework(net, opt, oracle, "rpm");
  out.samples.realizations = l;
  out.details = {{"l", static_cast<double>(l)},
                 {"N", big_n},
                 {"shift", oracle.shift()},
                 {"inspected_sets", static_cast<double>(oracle.evaluations())}};
  return out;
}

SeedSet ra_t(const TCNetwork& net, const RatOptions& opt) {
  check_eps(opt.eps);
  const double n = static_cast<double>(net.node_count());
  const double big_n = default_big_n(net, opt.big_n);
  const double r = net.discount_ratio();
  const auto params = search_rat_params(n, big_n, opt.eps, r, opt.search_step);
  auto l = ceil_count(params.sample_bound());
  if (opt.max_ra) {
    if (*opt.max_ra == 0) throw ParameterError("max RA count must be at least 1");
    l = std::min(l, *opt.max_ra);
  }

  SeedSet out;
  out.produced_by = "ra-t";
  std::vector<NodeId> order;
  if (opt.order) {
    validate_order(net.node_count(), *opt.order);
    order = *opt.order;
  } else {
    const auto probes = opt.probe_count.value_or(default_probe_count(net, opt.eps, big_n));
    order = node_order(net, probes, derive_seed(opt.seed, kOrderStream), opt.threads);
    out.samples.ra_sets += probes;
  }

  const auto coll = generate_ra_collection(net, l, derive_seed(opt.seed, kRaStream), opt.threads);
  out.samples.ra_sets += l;
  CoverageOracle oracle(coll, net);
  Rng rng(derive_seed(opt.seed, kGreedyStream));
  out.members = double_greedy(oracle, order, rng);
  out.details = {{"eps1", params.eps1},
                 {"eps2", params.eps2},
                 {"delta1", params.delta1},
                 {"delta2", params.delta2},
                 {"l", static_cast<double>(l)},
                 {"N", big_n},
                 {"F", estimate_F(coll, out.members, net)}};
  out.collection_sizes = {l};
  return out;
}

SeedSet ra_s(const TCNetwork& net, const RasOptions& opt) {
  check_eps(opt.eps);
  if (opt.plateau_pct < 0.0) throw ParameterError("plateau percentage must be non-negative");
  const double n = static_cast<double>(net.node_count());
  const double big_n = default_big_n(net, opt.big_n);
  const auto params = solve_ras_params(n, big_n, opt.eps, net.discount_ratio(), opt.k, opt.eps3);
  const auto check_sims = ceil_count(params.delta3);

  SeedSet out;
  out.produced_by = "ra-s";
  std::vector<NodeId> order;
  if (opt.order) {
    validate_order(net.node_count(), *opt.order);
    order = *opt.order;
  } else {
    const auto probes = opt.probe_count.value_or(default_probe_count(net, opt.eps, big_n));
    order = node_order(net, probes, derive_seed(opt.seed, kOrderStream), opt.threads);
    out.samples.ra_sets += probes;
  }

  RACollection coll(net.node_count());
  const auto ra_stream = derive_seed(opt.seed, kRaStream);
  const auto check_stream = derive_seed(opt.seed, kCheckStream);
  const auto greedy_stream = derive_seed(opt.seed, kGreedyStream);
  std::optional<double> previous_f;
  double last_f = 0;
  auto l = ceil_count(params.delta2_star);
  for (std::uint64_t iter = 0; static_cast<double>(l) <= 2.0 * params.delta1_star; ++iter) {
    auto target = l;
    bool capped = false;
    if (opt.max_ra && target >= *opt.max_ra) {
      target = *opt.max_ra;
      capped = true;
    }
    const auto before = coll.size();
    extend_ra_collection(coll, net, target, derive_seed(ra_stream, iter), opt.threads);
    out.samples.ra_sets += coll.size() - before;
    out.collection_sizes.push_back(coll.size());

    CoverageOracle oracle(coll, net);
    Rng rng(derive_seed(greedy_stream, iter));
    out.members = double_greedy(oracle, order, rng);
    last_f = estimate_F(coll, out.members, net);

    if (static_cast<double>(l) >= params.delta1_star || capped) {
      out.termination = capped ? "ra-cap" : "sample-bound";
      break;
    }
    const auto check = estimate_profit_simulation(net, out.members, check_sims,
                                                  derive_seed(check_stream, iter), opt.threads);
    out.samples.simulations += check_sims;
    if (last_f <= (1.0 + opt.eps3) * check.mean_profit) {
      out.termination = "accuracy-check";
      break;
    }
    if (opt.plateau_pct > 0.0 && previous_f &&
        *previous_f - last_f < opt.plateau_pct * std::abs(*previous_f)) {
      out.termination = "plateau";
      break;
    }
    previous_f = last_f;
    l *= 2;
  }
  if (out.termination.empty()) out.termination = "schedule-exhausted";
  out.details = {{"eps1", params.eps1},
                 {"eps2", params.eps2},
                 {"eps3", params.eps3},
                 {"k", static_cast<double>(params.k)},
                 {"delta1_star", params.delta1_star},
                 {"delta2_star", params.delta2_star},
                 {"delta3", params.delta3},
                 {"N", big_n},
                 {"l", static_cast<double>(coll.size())},
                 {"F", last_f}};
  return out;
}

}  // namespace couponpm
