#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "couponpm/couponpm.h"
#include "report.hpp"

namespace {

using cpmcli::Json;

class CliError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void check(cpm_status status, const std::string& context) {
  if (status == CPM_OK) return;
  throw CliError(context + ": " + cpm_last_error());
}

struct GraphDeleter {
  void operator()(cpm_graph* g) const { cpm_graph_free(g); }
};
struct NetworkDeleter {
  void operator()(cpm_network* n) const { cpm_network_free(n); }
};
struct SelectionDeleter {
  void operator()(cpm_selection* s) const { cpm_selection_free(s); }
};
using GraphPtr = std::unique_ptr<cpm_graph, GraphDeleter>;
using NetworkPtr = std::unique_ptr<cpm_network, NetworkDeleter>;
using SelectionPtr = std::unique_ptr<cpm_selection, SelectionDeleter>;

// stream ids for seeds the CLI draws on its own
constexpr std::uint64_t kEvalStream = 0x6576616c;
constexpr std::uint64_t kIntrinsicStream = 0x696e7472;

const char* model_name(cpm_model m) {
  switch (m) {
    case CPM_MODEL_IC_CP: return "ic-cp";
    case CPM_MODEL_IC_WC: return "ic-wc";
    case CPM_MODEL_LT: return "lt";
  }
  return "?";
}

cpm_model parse_model(const std::string& name) {
  if (name == "ic-cp") return CPM_MODEL_IC_CP;
  if (name == "ic-wc") return CPM_MODEL_IC_WC;
  if (name == "lt") return CPM_MODEL_LT;
  throw CliError("unknown model '" + name + "' (expected ic-cp, ic-wc or lt)");
}

const char* estimator_name(cpm_estimator k) {
  switch (k) {
    case CPM_EST_SIMULATION: return "simulation";
    case CPM_EST_REALIZATION: return "realization";
    case CPM_EST_RA_SET: return "ra_set";
    case CPM_EST_EXACT: return "exact";
  }
  return "?";
}

struct AlgorithmName {
  const char* name;
  cpm_algorithm alg;
};
constexpr AlgorithmName kAlgorithms[] = {
    {"spm", CPM_ALG_SPM},       {"rpm", CPM_ALG_RPM},         {"ra-t", CPM_ALG_RA_T},
    {"ra-s", CPM_ALG_RA_S},     {"maxinf", CPM_ALG_MAXINF},   {"highdegree", CPM_ALG_HIGHDEGREE},
};

// ---- network flags -----------------------------------------------------

struct NetworkFlags {
  std::string graph;
  bool undirected = false;
  std::string config;
  std::string model = "ic-cp";
  double ic_p = 0.01;
  double price = 0;
  double coupon_frac = 0.9;
  std::string intrinsics_file;
  std::uint64_t seed = 0;
  std::uint32_t threads = 0;

  CLI::Option* model_opt = nullptr;
  CLI::Option* ic_p_opt = nullptr;
  CLI::Option* price_opt = nullptr;
  CLI::Option* coupon_opt = nullptr;

  void add_to(CLI::App& app, bool graph_required = true) {
    auto* g = app.add_option("--graph", graph, "SNAP-style edge list");
    if (graph_required) g->required();
    app.add_flag("--undirected", undirected, "treat every edge as bidirectional");
    app.add_option("--config", config, "network config file (key = value)");
    model_opt = app.add_option("--model", model, "ic-cp, ic-wc or lt")
                    ->check(CLI::IsMember({"ic-cp", "ic-wc", "lt"}));
    ic_p_opt = app.add_option("--ic-p", ic_p, "edge probability for ic-cp");
    price_opt = app.add_option("--price", price, "price P in (0, 1]");
    coupon_opt = app.add_option("--coupon-frac", coupon_frac, "coupon as a fraction of the price");
    app.add_option("--intrinsics-file", intrinsics_file, "one intrinsic value per line");
    app.add_option("--seed", seed, "random seed");
    app.add_option("--threads", threads, "worker threads (default: all cores)");
  }

  bool has_price() const { return price_opt->count() > 0; }
};

struct ResolvedNetwork {
  GraphPtr graph;
  NetworkPtr net;
  std::string model;
  double ic_p = 0;
  double price = 0;
  double coupon_frac = 0;
  std::optional<std::uint64_t> intrinsics_seed;
};

std::uint32_t resolve_threads(std::uint32_t t) {
  if (t) return t;
  return std::max(1u, std::thread::hardware_concurrency());
}

GraphPtr load_graph(const NetworkFlags& f) {
  cpm_graph* g = nullptr;
  check(cpm_graph_load(f.graph.c_str(), f.undirected, &g), "cannot read graph " + f.graph);
  return GraphPtr(g);
}

// Command-line flags override the config file.
void apply_config(const NetworkFlags& f, std::string& model, double& ic_p,
                  std::optional<double>& price, double& coupon_frac,
                  std::optional<std::uint64_t>& intrinsic_seed) {
  if (f.config.empty()) return;
  cpm_network_config cfg{};
  check(cpm_network_config_load(f.config.c_str(), &cfg), "cannot read config " + f.config);
  if ((cfg.present & CPM_CONFIG_HAS_MODEL) && !f.model_opt->count()) model = model_name(cfg.model);
  if ((cfg.present & CPM_CONFIG_HAS_IC_PROBABILITY) && !f.ic_p_opt->count()) ic_p = cfg.ic_probability;
  if ((cfg.present & CPM_CONFIG_HAS_PRICE) && !f.price_opt->count()) price = cfg.price;
  if ((cfg.present & CPM_CONFIG_HAS_COUPON_FRACTION) && !f.coupon_opt->count()) {
    coupon_frac = cfg.coupon_fraction;
  }
  if (cfg.present & CPM_CONFIG_HAS_RNG_SEED) intrinsic_seed = cfg.rng_seed;
}

ResolvedNetwork build_network(const NetworkFlags& f, GraphPtr graph,
                              std::optional<double> price_override = std::nullopt) {
  ResolvedNetwork out;
  out.model = f.model;
  out.ic_p = f.ic_p;
  out.coupon_frac = f.coupon_frac;
  std::optional<double> price;
  if (f.has_price()) price = f.price;
  std::optional<std::uint64_t> config_seed;
  apply_config(f, out.model, out.ic_p, price, out.coupon_frac, config_seed);
  if (price_override) price = price_override;
  if (!price) throw CliError("a price is required (--price or 'price' in --config)");
  out.price = *price;
  const double coupon = out.coupon_frac * out.price;

  const auto n = cpm_graph_node_count(graph.get());
  std::vector<double> intrinsics;
  if (!f.intrinsics_file.empty()) {
    std::size_t count = 0;
    check(cpm_intrinsics_load(f.intrinsics_file.c_str(), nullptr, 0, &count),
          "cannot read intrinsics " + f.intrinsics_file);
    intrinsics.resize(count);
    check(cpm_intrinsics_load(f.intrinsics_file.c_str(), intrinsics.data(), count, &count),
          "cannot read intrinsics " + f.intrinsics_file);
  } else {
    out.intrinsics_seed = config_seed.value_or(cpm_derive_seed(f.seed, kIntrinsicStream));
    intrinsics.resize(n);
    check(cpm_generate_intrinsics(n, out.price, coupon, *out.intrinsics_seed, intrinsics.data()),
          "cannot generate intrinsic values");
  }
  cpm_network_params params{parse_model(out.model), out.ic_p, out.price, coupon};
  cpm_network* net = nullptr;
  check(cpm_network_build(graph.get(), &params, intrinsics.data(), intrinsics.size(), &net),
        "cannot build network");
  out.graph = std::move(graph);
  out.net = NetworkPtr(net);
  return out;
}

cpmcli::NetworkSummary summarize(const cpm_network* net) {
  cpmcli::NetworkSummary s;
  s.n = cpm_network_node_count(net);
  s.m = cpm_network_edge_count(net);
  s.pruned = cpm_network_pruned_count(net);
  s.price = cpm_network_price(net);
  s.coupon = cpm_network_coupon(net);
  s.r = cpm_network_discount_ratio(net);
  s.model = model_name(cpm_network_model(net));
  return s;
}

Json summary_json(const cpmcli::NetworkSummary& s) {
  return Json{{"n", s.n},         {"m", s.m},         {"pruned", s.pruned}, {"price", s.price},
              {"coupon", s.coupon}, {"r", s.r}, {"model", s.model}};
}

std::vector<std::int64_t> labels_of(const cpm_network* net, const std::uint32_t* nodes,
                                    std::size_t count) {
  std::vector<std::int64_t> out(count);
  for (std::size_t i = 0; i < count; ++i) {
    check(cpm_network_label(net, nodes[i], &out[i]), "bad node id");
  }
  return out;
}

// "3,17,42" -> dense ids; labels of pruned or unknown nodes are rejected.
std::vector<std::uint32_t> parse_seed_labels(const cpm_network* net, const std::string& text) {
  std::vector<std::uint32_t> ids;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (item.empty()) continue;
    std::size_t used = 0;
    std::int64_t label = 0;
    try {
      label = std::stoll(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size()) throw CliError("bad seed label '" + item + "'");
    std::uint32_t id = 0;
    check(cpm_network_find_label(net, label, &id), "seed set");
    if (std::find(ids.begin(), ids.end(), id) != ids.end()) {
      throw CliError("seed label " + item + " listed twice");
    }
    ids.push_back(id);
  }
  return ids;
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw CliError("cannot write " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }
  void finish() {
    stream().flush();
    if (!stream()) throw CliError("write failed");
  }

 private:
  std::ofstream file_;
};

// ---- run / sweep / evaluate -------------------------------------------

struct AlgorithmFlags {
  std::string alg;
  double eps = 0.4;
  double big_n = 0;
  int k = 5;
  double eps3 = 0.1;
  double plateau_pct = 2.0;
  std::uint64_t max_ra = 0;
  std::uint64_t l_override = 0;
  std::uint64_t eval_sims = 10000;
  std::uint64_t sweep_points = 50;
  std::uint64_t trials = 100;
  std::uint64_t fixed_size = 0;
  double memory_budget_mb = 0;

  CLI::Option* big_n_opt = nullptr;
  CLI::Option* max_ra_opt = nullptr;
  CLI::Option* l_opt = nullptr;

  void add_to(CLI::App& app) {
    std::vector<std::string> names;
    for (const auto& a : kAlgorithms) names.emplace_back(a.name);
    app.add_option("--alg", alg, "spm, rpm, ra-t, ra-s, maxinf or highdegree")
        ->required()
        ->check(CLI::IsMember(names));
    app.add_option("--eps", eps, "approximation slack in (0, 1/2)");
    big_n_opt = app.add_option("--bigN", big_n, "confidence parameter N (default: n)");
    app.add_option("--k", k, "RA-S doubling budget");
    app.add_option("--eps3", eps3, "RA-S accuracy-check slack");
    app.add_option("--plateau-pct", plateau_pct,
                   "RA-S early stop when F changes by less than this percentage (0 disables)");
    max_ra_opt = app.add_option("--max-ra", max_ra, "cap on RA sets (RA-T, RA-S)");
    l_opt = app.add_option("--l-override", l_override, "samples per estimate (SPM, RPM)");
    app.add_option("--eval-sims", eval_sims, "simulations used to score the result");
    app.add_option("--sweep-points", sweep_points, "MaxInf size grid");
    app.add_option("--trials", trials, "HighDegree draws");
    app.add_option("--fixed-size", fixed_size, "MaxInf: evaluate only this size");
    app.add_option("--memory-budget-mb", memory_budget_mb, "RPM memory limit");
  }

  cpm_algorithm algorithm() const {
    for (const auto& a : kAlgorithms) {
      if (alg == a.name) return a.alg;
    }
    throw CliError("unknown algorithm '" + alg + "'");
  }
};

cpmcli::Parameters echo_parameters(const NetworkFlags& nf, const ResolvedNetwork& rn,
                                   const AlgorithmFlags* af, std::uint64_t eval_sims) {
  cpmcli::Parameters p;
  p.graph = nf.graph;
  p.undirected = nf.undirected;
  if (!nf.config.empty()) p.config = nf.config;
  p.model = rn.model;
  p.ic_p = rn.ic_p;
  p.price = rn.price;
  p.coupon_frac = rn.coupon_frac;
  if (!nf.intrinsics_file.empty()) p.intrinsics_file = nf.intrinsics_file;
  p.intrinsics_seed = rn.intrinsics_seed;
  p.eval_sims = eval_sims;
  p.seed = nf.seed;
  p.threads = resolve_threads(nf.threads);
  if (af) {
    p.eps = af->eps;
    if (af->big_n_opt->count()) p.big_n = af->big_n;
    p.k = af->k;
    p.eps3 = af->eps3;
    p.plateau_pct = af->plateau_pct;
    if (af->max_ra_opt->count()) p.max_ra = af->max_ra;
    if (af->l_opt->count()) p.l_override = af->l_override;
  }
  return p;
}

cpmcli::Estimate evaluate_seeds(const cpm_network* net, const std::vector<std::uint32_t>& seeds,
                                std::uint64_t sims, std::uint64_t seed, std::uint32_t threads) {
  cpm_profit_estimate est{};
  check(cpm_estimate_profit(net, seeds.data(), seeds.size(), sims, cpm_derive_seed(seed, kEvalStream),
                            threads, &est),
        "evaluation");
  return {est.mean_profit, est.mean_adopters, est.adopters_std_error, estimator_name(est.kind),
          est.sample_count};
}

cpmcli::RunReport run_once(const NetworkFlags& nf, const ResolvedNetwork& rn,
                           const AlgorithmFlags& af) {
  if (af.eval_sims == 0) throw CliError("--eval-sims must be positive");
  cpm_run_options opt;
  cpm_run_options_init(&opt);
  opt.algorithm = af.algorithm();
  opt.eps = af.eps;
  opt.big_n = af.big_n_opt->count() ? af.big_n : 0.0;
  opt.k = af.k;
  opt.eps3 = af.eps3;
  opt.plateau_pct = af.plateau_pct / 100.0;
  if (af.max_ra_opt->count()) {
    if (af.max_ra == 0) throw CliError("--max-ra must be positive");
    opt.max_ra = af.max_ra;
  }
  if (af.l_opt->count()) {
    if (af.l_override == 0) throw CliError("--l-override must be positive");
    opt.l_override = af.l_override;
  }
  opt.seed = nf.seed;
  opt.threads = resolve_threads(nf.threads);
  opt.memory_budget_bytes = static_cast<std::uint64_t>(af.memory_budget_mb * 1024.0 * 1024.0);
  opt.sweep_points = af.sweep_points;
  opt.trials = af.trials;
  opt.eval_simulations = af.eval_sims;
  opt.fixed_size = af.fixed_size;

  const auto start = std::chrono::steady_clock::now();
  cpm_selection* raw = nullptr;
  check(cpm_run(rn.net.get(), &opt, &raw), af.alg);
  SelectionPtr sel(raw);
  const auto elapsed = std::chrono::steady_clock::now() - start;

  cpmcli::RunReport rep;
  rep.algorithm = af.alg;
  rep.parameters = echo_parameters(nf, rn, &af, af.eval_sims);
  rep.network = summarize(rn.net.get());
  const auto* nodes = cpm_selection_nodes(sel.get());
  const auto count = cpm_selection_size(sel.get());
  const std::vector<std::uint32_t> seeds(nodes, nodes + count);
  rep.seed_set = labels_of(rn.net.get(), nodes, count);
  rep.seed_count = count;
  rep.estimated_profit =
      evaluate_seeds(rn.net.get(), seeds, af.eval_sims, nf.seed, resolve_threads(nf.threads));
  cpm_sample_counts sc{};
  cpm_selection_sample_counts(sel.get(), &sc);
  rep.sample_counts = {sc.simulations, sc.realizations, sc.ra_sets};
  for (std::size_t i = 0; i < cpm_selection_detail_count(sel.get()); ++i) {
    const char* key = nullptr;
    double value = 0;
    check(cpm_selection_detail(sel.get(), i, &key, &value), "details");
    rep.details.emplace_back(key, value);
  }
  const std::uint64_t* sizes = nullptr;
  const auto n_sizes = cpm_selection_collection_sizes(sel.get(), &sizes);
  rep.collection_sizes.assign(sizes, sizes + n_sizes);
  const char* termination = cpm_selection_termination(sel.get());
  rep.termination = termination && *termination ? termination : "completed";
  rep.wall_time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
  return rep;
}

int cmd_run(const NetworkFlags& nf, const AlgorithmFlags& af, const std::string& out_path) {
  auto rn = build_network(nf, load_graph(nf));
  const auto rep = run_once(nf, rn, af);
  Output out(out_path);
  out.stream() << cpmcli::to_json(rep).dump(2) << '\n';
  out.finish();
  return 0;
}

int cmd_sweep(const NetworkFlags& nf, const AlgorithmFlags& af, const std::vector<double>& prices,
              const std::string& out_path, const std::string& csv_path) {
  if (nf.has_price()) throw CliError("sweep sets the price itself; drop --price");
  Output out(out_path);
  std::ofstream csv;
  if (!csv_path.empty()) {
    csv.open(csv_path);
    if (!csv) throw CliError("cannot write " + csv_path);
    csv << cpmcli::csv_header() << '\n';
  }
  for (double price : prices) {
    auto rn = build_network(nf, load_graph(nf), price);
    const auto rep = run_once(nf, rn, af);
    out.stream() << cpmcli::to_json(rep).dump() << '\n';
    if (csv.is_open()) csv << cpmcli::csv_row(rep) << '\n';
  }
  out.finish();
  if (csv.is_open() && !csv.flush()) throw CliError("write failed: " + csv_path);
  return 0;
}

int cmd_evaluate(const NetworkFlags& nf, const std::string& seeds_text, std::uint64_t eval_sims,
                 const std::string& out_path) {
  if (eval_sims == 0) throw CliError("--eval-sims must be positive");
  auto rn = build_network(nf, load_graph(nf));
  const auto seeds = parse_seed_labels(rn.net.get(), seeds_text);
  cpmcli::RunReport rep;
  rep.algorithm = "evaluate";
  rep.parameters = echo_parameters(nf, rn, nullptr, eval_sims);
  rep.network = summarize(rn.net.get());
  rep.seed_set = labels_of(rn.net.get(), seeds.data(), seeds.size());
  rep.seed_count = seeds.size();
  rep.termination = "completed";
  const auto start = std::chrono::steady_clock::now();
  rep.estimated_profit =
      evaluate_seeds(rn.net.get(), seeds, eval_sims, nf.seed, resolve_threads(nf.threads));
  rep.wall_time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - start)
                         .count();
  Output out(out_path);
  out.stream() << cpmcli::to_json(rep).dump(2) << '\n';
  out.finish();
  return 0;
}

// ---- oracle / thresholds / ingest-check --------------------------------

int cmd_oracle(const NetworkFlags& nf, const std::optional<std::string>& seeds_text, bool optimum,
               const std::string& out_path) {
  if (!seeds_text && !optimum) throw CliError("oracle needs --seeds and/or --optimum");
  auto rn = build_network(nf, load_graph(nf));
  Json report{{"schema", "couponpm-oracle/1"}, {"network", summary_json(summarize(rn.net.get()))}};
  if (seeds_text) {
    const auto seeds = parse_seed_labels(rn.net.get(), *seeds_text);
    double profit = 0, adopters = 0;
    check(cpm_exact_profit(rn.net.get(), seeds.data(), seeds.size(), &profit, &adopters),
          "exact oracle");
    report["seed_set"] = labels_of(rn.net.get(), seeds.data(), seeds.size());
    report["profit"] = profit;
    report["expected_adopters"] = adopters;
  }
  if (optimum) {
    cpm_selection* raw = nullptr;
    double profit = 0;
    check(cpm_exact_optimum(rn.net.get(), &raw, &profit), "exact oracle");
    SelectionPtr sel(raw);
    report["optimum"] = {
        {"seed_set", labels_of(rn.net.get(), cpm_selection_nodes(sel.get()),
                               cpm_selection_size(sel.get()))},
        {"profit", profit}};
  }
  Output out(out_path);
  out.stream() << report.dump(2) << '\n';
  out.finish();
  return 0;
}

struct ThresholdFlags {
  double n = 0;
  double big_n = 0;
  double eps = 0.4;
  double r = 0;
  int k = 5;
  double eps3 = 0.1;
  double step = 0.01;
  double eps1 = 0;
};

int cmd_thresholds(const NetworkFlags& nf, ThresholdFlags tf, const std::string& out_path) {
  if (!nf.graph.empty()) {
    auto rn = build_network(nf, load_graph(nf));
    if (tf.n <= 0) tf.n = static_cast<double>(cpm_network_node_count(rn.net.get()));
    if (tf.r <= 0) tf.r = cpm_network_discount_ratio(rn.net.get());
  }
  if (tf.n <= 0 || tf.r <= 0) throw CliError("give --n and --r, or a network via --graph/--price");
  if (tf.big_n <= 0) tf.big_n = std::max(tf.n, 2.0);
  cpm_threshold_inputs in{tf.n, tf.big_n, tf.eps, tf.r, tf.k, tf.eps3, tf.step, tf.eps1};
  cpm_threshold_table t{};
  const auto status = cpm_thresholds(&in, &t);
  if (status != CPM_OK && status != CPM_ERR_SOLVER) check(status, "thresholds");

  Json report{{"schema", "couponpm-thresholds/1"},
              {"inputs",
               {{"n", tf.n},
                {"bigN", tf.big_n},
                {"eps", tf.eps},
                {"r", tf.r},
                {"k", tf.k},
                {"eps3", tf.eps3},
                {"step", tf.step}}},
              {"delta0", t.delta0},
              {"ra_t",
               {{"eps1", t.rat_eps1},
                {"eps2", t.rat_eps2},
                {"delta1", t.delta1},
                {"delta2", t.delta2},
                {"l", std::ceil(std::max(t.delta1, t.delta2))}}}};
  if (status == CPM_OK) {
    report["ra_s"] = {{"eps1", t.ras_eps1},       {"eps2", t.ras_eps2},
                      {"eps3", tf.eps3},          {"k", tf.k},
                      {"delta1_star", t.delta1_star}, {"delta2_star", t.delta2_star},
                      {"delta3", t.delta3}};
  } else {
    std::cerr << "warning: RA-S parameters: " << cpm_last_error() << '\n';
    report["ra_s"] = {{"error", cpm_last_error()}};
  }
  Output out(out_path);
  out.stream() << report.dump(2) << '\n';
  out.finish();
  return 0;
}

int cmd_ingest_check(const NetworkFlags& nf, const std::string& out_path) {
  auto graph = load_graph(nf);
  Json report{{"schema", "couponpm-ingest/1"},
              {"graph", nf.graph},
              {"undirected", nf.undirected},
              {"n", cpm_graph_node_count(graph.get())},
              {"m", cpm_graph_edge_count(graph.get())}};
  bool with_network = nf.has_price();
  if (!with_network && !nf.config.empty()) {
    cpm_network_config cfg{};
    check(cpm_network_config_load(nf.config.c_str(), &cfg), "cannot read config " + nf.config);
    with_network = cfg.present & CPM_CONFIG_HAS_PRICE;
  }
  if (with_network) {
    auto rn = build_network(nf, std::move(graph));
    report["network"] = summary_json(summarize(rn.net.get()));
  }
  Output out(out_path);
  out.stream() << report.dump(2) << '\n';
  out.finish();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Profit maximisation with coupons on social networks"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(cpm_version()));

  std::string out_path;
  auto add_out = [&](CLI::App* sub) {
    sub->add_option("--out", out_path, "write the report here instead of stdout");
  };

  NetworkFlags ingest_flags;
  auto* ingest = app.add_subcommand("ingest-check", "parse a graph and summarise it");
  ingest_flags.add_to(*ingest);
  add_out(ingest);

  NetworkFlags run_net;
  AlgorithmFlags run_alg;
  auto* run = app.add_subcommand("run", "select seeds with one algorithm and score them");
  run_net.add_to(*run);
  run_alg.add_to(*run);
  add_out(run);

  NetworkFlags eval_net;
  std::string eval_seeds;
  std::uint64_t eval_sims = 10000;
  auto* evaluate = app.add_subcommand("evaluate", "score a given seed set by simulation");
  eval_net.add_to(*evaluate);
  evaluate->add_option("--seeds", eval_seeds, "comma-separated node labels")->required();
  evaluate->add_option("--eval-sims", eval_sims, "number of simulations");
  add_out(evaluate);

  NetworkFlags oracle_net;
  std::string oracle_seeds;
  bool oracle_optimum = false;
  auto* oracle = app.add_subcommand("oracle", "exact profit by enumeration (tiny networks)");
  oracle_net.add_to(*oracle);
  auto* oracle_seeds_opt =
      oracle->add_option("--seeds", oracle_seeds, "comma-separated node labels (may be empty)");
  oracle->add_flag("--optimum", oracle_optimum, "also find the best seed set");
  add_out(oracle);

  NetworkFlags thr_net;
  ThresholdFlags thr;
  auto* thresholds = app.add_subcommand("thresholds", "print the sample-count bounds");
  thr_net.add_to(*thresholds, false);
  thresholds->add_option("--n", thr.n, "node count (default: from --graph)");
  thresholds->add_option("--bigN", thr.big_n, "confidence parameter N (default: n)");
  thresholds->add_option("--eps", thr.eps, "approximation slack");
  thresholds->add_option("--r", thr.r, "discount ratio (P - C) / P (default: from the network)");
  thresholds->add_option("--k", thr.k, "RA-S doubling budget");
  thresholds->add_option("--eps3", thr.eps3, "RA-S accuracy-check slack");
  thresholds->add_option("--step", thr.step, "RA-T grid step");
  thresholds->add_option("--eps1", thr.eps1, "fix the RA-T split at this eps1 instead of searching");
  add_out(thresholds);

  NetworkFlags sweep_net;
  AlgorithmFlags sweep_alg;
  std::vector<double> sweep_prices{0.2, 0.3, 0.4, 0.5, 0.6};
  std::string sweep_csv;
  auto* sweep = app.add_subcommand("sweep", "run one algorithm at several prices");
  sweep_net.add_to(*sweep);
  sweep_alg.add_to(*sweep);
  sweep->add_option("--prices", sweep_prices, "price points")->delimiter(',');
  sweep->add_option("--csv", sweep_csv, "also write a CSV summary here");
  add_out(sweep);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*ingest) return cmd_ingest_check(ingest_flags, out_path);
    if (*run) return cmd_run(run_net, run_alg, out_path);
    if (*evaluate) return cmd_evaluate(eval_net, eval_seeds, eval_sims, out_path);
    if (*oracle) {
      std::optional<std::string> seeds;
      if (oracle_seeds_opt->count()) seeds = oracle_seeds;
      return cmd_oracle(oracle_net, seeds, oracle_optimum, out_path);
    }
    if (*thresholds) return cmd_thresholds(thr_net, thr, out_path);
    if (*sweep) return cmd_sweep(sweep_net, sweep_alg, sweep_prices, out_path, sweep_csv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
