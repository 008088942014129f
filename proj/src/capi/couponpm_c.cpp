#include "couponpm/couponpm.h"

#include <algorithm>
#include <cstring>
#include <exception>
#include <limits>
#include <new>
#include <span>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "couponpm/baselines.hpp"
#include "couponpm/diffusion.hpp"
#include "couponpm/errors.hpp"
#include "couponpm/exact.hpp"
#include "couponpm/network.hpp"
#include "couponpm/optimize.hpp"
#include "couponpm/thresholds.hpp"

using namespace couponpm;

struct cpm_graph {
  Graph graph;
};

struct cpm_network {
  TCNetwork net;
  std::size_t pruned = 0;
  std::unordered_map<std::int64_t, NodeId> by_label;
};

struct cpm_selection {
  SeedSet seeds;
  std::vector<std::uint64_t> sizes;
};

namespace {

thread_local std::string g_last_error;
thread_local std::size_t g_last_line = 0;

cpm_status fail(cpm_status status, const char* message, std::size_t line = 0) {
  g_last_error = message;
  g_last_line = line;
  return status;
}

template <class Fn>
cpm_status guarded(Fn&& fn) {
  try {
    fn();
    return CPM_OK;
  } catch (const ParseError& e) {
    return fail(CPM_ERR_PARSE, e.what(), e.line());
  } catch (const IoError& e) {
    return fail(CPM_ERR_IO, e.what());
  } catch (const ParameterError& e) {
    return fail(CPM_ERR_INVALID_ARGUMENT, e.what());
  } catch (const EmptyNetworkError& e) {
    return fail(CPM_ERR_EMPTY_NETWORK, e.what());
  } catch (const TooLargeError& e) {
    return fail(CPM_ERR_TOO_LARGE, e.what());
  } catch (const SolverError& e) {
    return fail(CPM_ERR_SOLVER, e.what());
  } catch (const ResourceError& e) {
    return fail(CPM_ERR_RESOURCE, e.what());
  } catch (const std::bad_alloc&) {
    return fail(CPM_ERR_RESOURCE, "out of memory");
  } catch (const std::exception& e) {
    return fail(CPM_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(CPM_ERR_INTERNAL, "unknown error");
  }
}

#define CPM_REQUIRE(cond, msg) \
  if (!(cond)) return fail(CPM_ERR_INVALID_ARGUMENT, msg)

DiffusionModel to_model(cpm_model m) {
  switch (m) {
    case CPM_MODEL_IC_CP: return DiffusionModel::IcConstant;
    case CPM_MODEL_IC_WC: return DiffusionModel::IcWeightedCascade;
    case CPM_MODEL_LT: return DiffusionModel::LinearThreshold;
  }
  throw ParameterError("unknown diffusion model");
}

cpm_model from_model(DiffusionModel m) {
  switch (m) {
    case DiffusionModel::IcConstant: return CPM_MODEL_IC_CP;
    case DiffusionModel::IcWeightedCascade: return CPM_MODEL_IC_WC;
    case DiffusionModel::LinearThreshold: return CPM_MODEL_LT;
  }
  return CPM_MODEL_IC_CP;
}

cpm_estimator from_estimator(EstimatorKind k) {
  switch (k) {
    case EstimatorKind::Simulation: return CPM_EST_SIMULATION;
    case EstimatorKind::Realization: return CPM_EST_REALIZATION;
    case EstimatorKind::RaSet: return CPM_EST_RA_SET;
    case EstimatorKind::Exact: return CPM_EST_EXACT;
  }
  return CPM_EST_SIMULATION;
}

void fill_estimate(const ProfitEstimate& e, cpm_profit_estimate* out) {
  out->mean_profit = e.mean_profit;
  out->mean_adopters = e.mean_adopters;
  out->adopters_std_error = e.adopters_std_error;
  out->sample_count = e.sample_count;
  out->kind = from_estimator(e.kind);
}

std::size_t thread_count(std::uint32_t t) { return t; }

template <class T>
std::optional<T> nonzero(T v) {
  if (v == T{}) return std::nullopt;
  return v;
}

SeedSet dispatch(const TCNetwork& net, const cpm_run_options& o) {
  const auto threads = thread_count(o.threads);
  const auto big_n = nonzero(o.big_n);
  switch (o.algorithm) {
    case CPM_ALG_SPM:
    case CPM_ALG_RPM: {
      ForwardOptions f;
      f.eps = o.eps;
      f.big_n = big_n;
      if (o.l_override) f.l_override = static_cast<std::size_t>(o.l_override);
      f.seed = o.seed;
      f.threads = threads;
      if (o.memory_budget_bytes) f.memory_budget_bytes = o.memory_budget_bytes;
      return o.algorithm == CPM_ALG_SPM ? spm(net, f) : rpm(net, f);
    }
    case CPM_ALG_RA_T: {
      RatOptions r;
      r.eps = o.eps;
      r.big_n = big_n;
      if (o.max_ra) r.max_ra = static_cast<std::size_t>(o.max_ra);
      r.seed = o.seed;
      r.threads = threads;
      return ra_t(net, r);
    }
    case CPM_ALG_RA_S: {
      RasOptions r;
      r.eps = o.eps;
      r.big_n = big_n;
      r.k = o.k;
      r.eps3 = o.eps3;
      r.plateau_pct = o.plateau_pct;
      if (o.max_ra) r.max_ra = static_cast<std::size_t>(o.max_ra);
      r.seed = o.seed;
      r.threads = threads;
      return ra_s(net, r);
    }
    case CPM_ALG_MAXINF:
    case CPM_ALG_HIGHDEGREE: {
      BaselineConfig b;
      b.sweep_points = o.sweep_points;
      b.trials = o.trials;
      b.eval_simulations = o.eval_simulations;
      if (o.fixed_size) b.fixed_size = static_cast<std::size_t>(o.fixed_size);
      b.eps = o.eps;
      b.big_n = big_n;
      b.threads = threads;
      return o.algorithm == CPM_ALG_MAXINF ? max_inf(net, b, o.seed) : high_degree(net, b, o.seed);
    }
  }
  throw ParameterError("unknown algorithm");
}

cpm_selection* wrap(SeedSet s) {
  auto* sel = new cpm_selection{std::move(s), {}};
  sel->sizes.assign(sel->seeds.collection_sizes.begin(), sel->seeds.collection_sizes.end());
  return sel;
}

}  // namespace

extern "C" {

const char* cpm_version(void) { return "1.0.0"; }
const char* cpm_last_error(void) { return g_last_error.c_str(); }
size_t cpm_last_error_line(void) { return g_last_line; }

const char* cpm_status_string(cpm_status status) {
  switch (status) {
    case CPM_OK: return "ok";
    case CPM_ERR_INVALID_ARGUMENT: return "invalid argument";
    case CPM_ERR_PARSE: return "parse error";
    case CPM_ERR_IO: return "i/o error";
    case CPM_ERR_EMPTY_NETWORK: return "empty feasible network";
    case CPM_ERR_TOO_LARGE: return "instance too large";
    case CPM_ERR_SOLVER: return "no solution";
    case CPM_ERR_RESOURCE: return "resource limit";
    case CPM_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

uint64_t cpm_derive_seed(uint64_t base, uint64_t stream) { return derive_seed(base, stream); }

cpm_status cpm_graph_load(const char* path, int undirected, cpm_graph** out) {
  CPM_REQUIRE(path && out, "null argument");
  return guarded([&] { *out = new cpm_graph{load_edge_list(path, undirected != 0)}; });
}

cpm_status cpm_graph_parse(const char* text, size_t length, int undirected, cpm_graph** out) {
  CPM_REQUIRE((text || length == 0) && out, "null argument");
  return guarded([&] {
    std::istringstream in(std::string(text ? text : "", length));
    *out = new cpm_graph{ingest_edge_list(in, undirected != 0)};
  });
}

void cpm_graph_free(cpm_graph* graph) { delete graph; }
size_t cpm_graph_node_count(const cpm_graph* graph) { return graph ? graph->graph.node_count() : 0; }
size_t cpm_graph_edge_count(const cpm_graph* graph) { return graph ? graph->graph.edge_count() : 0; }

cpm_status cpm_graph_label(const cpm_graph* graph, uint32_t node, int64_t* label) {
  CPM_REQUIRE(graph && label, "null argument");
  CPM_REQUIRE(node < graph->graph.node_count(), "node id out of range");
  *label = graph->graph.label(node);
  return CPM_OK;
}

cpm_status cpm_generate_intrinsics(size_t node_count, double price, double coupon, uint64_t seed,
                                   double* out) {
  CPM_REQUIRE(out || node_count == 0, "null argument");
  return guarded([&] {
    auto v = generate_intrinsics(node_count, price, coupon, seed);
    std::copy(v.begin(), v.end(), out);
  });
}

cpm_status cpm_intrinsics_load(const char* path, double* out, size_t capacity, size_t* count) {
  CPM_REQUIRE(path && count, "null argument");
  return guarded([&] {
    auto v = load_intrinsics(path);
    *count = v.size();
    if (!out) return;
    if (capacity < v.size()) throw ParameterError("output buffer too small");
    std::copy(v.begin(), v.end(), out);
  });
}

cpm_status cpm_network_config_load(const char* path, cpm_network_config* out) {
  CPM_REQUIRE(path && out, "null argument");
  return guarded([&] {
    const NetworkConfig cfg = load_network_config(path);
    cpm_network_config c{};
    c.model = CPM_MODEL_IC_CP;
    c.ic_probability = 0.01;
    c.present = 0;
    if (cfg.model) {
      c.model = from_model(*cfg.model);
      c.present |= CPM_CONFIG_HAS_MODEL;
    }
    if (cfg.ic_probability) {
      c.ic_probability = *cfg.ic_probability;
      c.present |= CPM_CONFIG_HAS_IC_PROBABILITY;
    }
    if (cfg.price) {
      c.price = *cfg.price;
      c.present |= CPM_CONFIG_HAS_PRICE;
    }
    if (cfg.coupon_fraction) {
      c.coupon_fraction = *cfg.coupon_fraction;
      c.present |= CPM_CONFIG_HAS_COUPON_FRACTION;
    }
    if (cfg.rng_seed) {
      c.rng_seed = *cfg.rng_seed;
      c.present |= CPM_CONFIG_HAS_RNG_SEED;
    }
    *out = c;
  });
}

cpm_status cpm_network_build(const cpm_graph* graph, const cpm_network_params* params,
                             const double* intrinsics, size_t count, cpm_network** out) {
  CPM_REQUIRE(graph && params && out && (intrinsics || count == 0), "null argument");
  return guarded([&] {
    DiffusionParams dp{to_model(params->model), params->ic_probability};
    auto net = build_tc_network(graph->graph, dp, params->price, params->coupon,
                                std::span<const double>(intrinsics, count));
    auto* h = new cpm_network{std::move(net), 0, {}};
    h->pruned = graph->graph.node_count() - h->net.node_count();
    for (NodeId v = 0; v < h->net.node_count(); ++v) h->by_label.emplace(h->net.label(v), v);
    *out = h;
  });
}

void cpm_network_free(cpm_network* network) { delete network; }
size_t cpm_network_node_count(const cpm_network* n) { return n ? n->net.node_count() : 0; }
size_t cpm_network_edge_count(const cpm_network* n) { return n ? n->net.graph().edge_count() : 0; }
size_t cpm_network_pruned_count(const cpm_network* n) { return n ? n->pruned : 0; }
double cpm_network_price(const cpm_network* n) { return n ? n->net.price() : 0.0; }
double cpm_network_coupon(const cpm_network* n) { return n ? n->net.coupon() : 0.0; }
double cpm_network_discount_ratio(const cpm_network* n) { return n ? n->net.discount_ratio() : 0.0; }
cpm_model cpm_network_model(const cpm_network* n) {
  return n ? from_model(n->net.model()) : CPM_MODEL_IC_CP;
}

cpm_status cpm_network_label(const cpm_network* network, uint32_t node, int64_t* label) {
  CPM_REQUIRE(network && label, "null argument");
  CPM_REQUIRE(node < network->net.node_count(), "node id out of range");
  *label = network->net.label(node);
  return CPM_OK;
}

cpm_status cpm_network_find_label(const cpm_network* network, int64_t label, uint32_t* node) {
  CPM_REQUIRE(network && node, "null argument");
  auto it = network->by_label.find(label);
  if (it == network->by_label.end()) {
    return fail(CPM_ERR_INVALID_ARGUMENT,
                ("label " + std::to_string(label) + " is not in the network").c_str());
  }
  *node = it->second;
  return CPM_OK;
}

void cpm_run_options_init(cpm_run_options* o) {
  if (!o) return;
  *o = cpm_run_options{};
  o->algorithm = CPM_ALG_RA_T;
  o->eps = 0.4;
  o->k = 5;
  o->eps3 = 0.1;
  o->plateau_pct = 0.02;
  o->sweep_points = 50;
  o->trials = 100;
  o->eval_simulations = 10000;
}

cpm_status cpm_run(const cpm_network* network, const cpm_run_options* options, cpm_selection** out) {
  CPM_REQUIRE(network && options && out, "null argument");
  return guarded([&] { *out = wrap(dispatch(network->net, *options)); });
}

void cpm_selection_free(cpm_selection* s) { delete s; }
size_t cpm_selection_size(const cpm_selection* s) { return s ? s->seeds.members.size() : 0; }
const uint32_t* cpm_selection_nodes(const cpm_selection* s) {
  return s ? s->seeds.members.data() : nullptr;
}
const char* cpm_selection_algorithm(const cpm_selection* s) {
  return s ? s->seeds.produced_by.c_str() : "";
}
const char* cpm_selection_termination(const cpm_selection* s) {
  return s ? s->seeds.termination.c_str() : "";
}

void cpm_selection_sample_counts(const cpm_selection* s, cpm_sample_counts* out) {
  if (!s || !out) return;
  out->simulations = s->seeds.samples.simulations;
  out->realizations = s->seeds.samples.realizations;
  out->ra_sets = s->seeds.samples.ra_sets;
}

int cpm_selection_estimate(const cpm_selection* s, cpm_profit_estimate* out) {
  if (!s || !s->seeds.profit_estimate) return 0;
  if (out) fill_estimate(*s->seeds.profit_estimate, out);
  return 1;
}

size_t cpm_selection_detail_count(const cpm_selection* s) { return s ? s->seeds.details.size() : 0; }

cpm_status cpm_selection_detail(const cpm_selection* s, size_t index, const char** key,
                                double* value) {
  CPM_REQUIRE(s && key && value, "null argument");
  CPM_REQUIRE(index < s->seeds.details.size(), "detail index out of range");
  *key = s->seeds.details[index].first.c_str();
  *value = s->seeds.details[index].second;
  return CPM_OK;
}

size_t cpm_selection_collection_sizes(const cpm_selection* s, const uint64_t** sizes) {
  if (!s) return 0;
  if (sizes) *sizes = s->sizes.data();
  return s->sizes.size();
}

cpm_status cpm_estimate_profit(const cpm_network* network, const uint32_t* seeds, size_t seed_count,
                               uint64_t simulations, uint64_t seed, uint32_t threads,
                               cpm_profit_estimate* out) {
  CPM_REQUIRE(network && out && (seeds || seed_count == 0), "null argument");
  CPM_REQUIRE(simulations > 0, "simulation count must be positive");
  return guarded([&] {
    fill_estimate(estimate_profit_simulation(network->net, std::span<const NodeId>(seeds, seed_count),
                                             simulations, seed, threads),
                  out);
  });
}

cpm_status cpm_exact_profit(const cpm_network* network, const uint32_t* seeds, size_t seed_count,
                            double* profit, double* adopters) {
  CPM_REQUIRE(network && (seeds || seed_count == 0), "null argument");
  return guarded([&] {
    std::span<const NodeId> s(seeds, seed_count);
    validate_seeds(network->net.node_count(), s);
    ExactOracle oracle(network->net);
    const double pi = oracle.expected_adopters(s);
    if (adopters) *adopters = pi;
    if (profit) *profit = oracle.profit(s);
  });
}

cpm_status cpm_exact_optimum(const cpm_network* network, cpm_selection** out, double* profit) {
  CPM_REQUIRE(network && out, "null argument");
  return guarded([&] {
    ExactOracle oracle(network->net);
    auto opt = oracle.optimum();
    SeedSet s;
    s.members = opt.seeds;
    s.produced_by = "exact";
    ProfitEstimate e;
    e.mean_profit = opt.profit;
    e.mean_adopters = oracle.expected_adopters(opt.seeds);
    e.kind = EstimatorKind::Exact;
    s.profit_estimate = e;
    s.termination = "exhaustive";
    if (profit) *profit = opt.profit;
    *out = wrap(std::move(s));
  });
}

cpm_status cpm_thresholds(const cpm_threshold_inputs* in, cpm_threshold_table* out) {
  CPM_REQUIRE(in && out, "null argument");
  const double nan = std::numeric_limits<double>::quiet_NaN();
  *out = cpm_threshold_table{nan, nan, nan, nan, nan, nan, nan, nan, nan, nan};
  const cpm_status first = guarded([&] {
    const double step = in->step > 0 ? in->step : 0.01;
    out->delta0 = delta0(in->n, in->big_n, in->eps, in->r);
    RatParams rat;
    if (in->rat_eps1 > 0) {
      if (!(in->rat_eps1 < in->eps)) throw ParameterError("RA-T eps1 must be below eps");
      rat.eps1 = in->rat_eps1;
      rat.eps2 = 2.0 * (in->eps - in->rat_eps1);
      rat.delta1 = delta1(in->n, in->big_n, rat.eps1, in->r);
      rat.delta2 = delta2(in->big_n, rat.eps2, in->r);
    } else {
      rat = search_rat_params(in->n, in->big_n, in->eps, in->r, step);
    }
    out->rat_eps1 = rat.eps1;
    out->rat_eps2 = rat.eps2;
    out->delta1 = rat.delta1;
    out->delta2 = rat.delta2;
  });
  if (first != CPM_OK) return first;
  return guarded([&] {
    const auto ras = solve_ras_params(in->n, in->big_n, in->eps, in->r, in->k, in->eps3);
    out->ras_eps1 = ras.eps1;
    out->ras_eps2 = ras.eps2;
    out->delta1_star = ras.delta1_star;
    out->delta2_star = ras.delta2_star;
    out->delta3 = ras.delta3;
  });
}

}  // extern "C"
