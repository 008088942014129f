// Acceptance suite: one PASS/FAIL line per criterion on stdout.
// Usage: acceptance [C1 C2 ...]   (no arguments runs everything)

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "cli_runner.hpp"
#include "couponpm/baselines.hpp"
#include "couponpm/exact.hpp"
#include "couponpm/optimize.hpp"
#include "couponpm/sampling.hpp"
#include "couponpm/thresholds.hpp"
#include "fixtures.hpp"
#include "report.hpp"

using namespace couponpm;
using testing::MeanAndError;
using testing::mean_and_error;

namespace {

struct Verdict {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

std::size_t hardware_threads() { return std::max(1u, std::thread::hardware_concurrency()); }

// ---- C1 ---------------------------------------------------------------------

Verdict non_monotonicity() {
  // P = 0.5, C = 0.25, p = 1, I_v2 = P
  const auto net = testing::chain2(1.0, 0.5);
  const ExactOracle oracle(net);
  const std::vector<NodeId> v1{0}, both{0, 1};
  const double f1 = oracle.profit(v1), f12 = oracle.profit(both);
  const double b1 = testing::brute_force_profit(net, v1), b12 = testing::brute_force_profit(net, both);
  const bool ok = std::abs(f1 - 0.75) <= 1e-12 && std::abs(f12 - 0.5) <= 1e-12 &&
                  std::abs(b1 - 0.75) <= 1e-12 && std::abs(b12 - 0.5) <= 1e-12;
  return {ok, fmt("f({v1})=%.15g f({v1,v2})=%.15g (enumeration %.15g, %.15g)", f1, f12, b1, b12)};
}

// ---- C2 ---------------------------------------------------------------------

Verdict ra_unbiased() {
  const auto net = testing::chain2(0.5, 0.9);
  const std::vector<NodeId> v1{0};
  const double exact = testing::brute_force_pi(net, v1);
  const std::size_t l = 200000;
  const auto coll = generate_ra_collection(net, l, 20240501, hardware_threads());
  std::vector<double> xs(l);
  for (std::size_t i = 0; i < l; ++i)
    xs[i] = static_cast<double>(net.node_count()) * coverage_indicator(v1, coll.members(i));
  const auto m = mean_and_error(xs);
  const double z = (m.mean - exact) / m.std_error;
  return {std::abs(z) <= 3.0 && std::abs(exact - 1.5) <= 1e-12,
          fmt("mean=%.5f exact=%.5f se=%.5f z=%.2f", m.mean, exact, m.std_error, z)};
}

// ---- C3 ---------------------------------------------------------------------

// pi over every subset, from the test-side realization enumeration.
std::vector<double> brute_force_table(const TCNetwork& net) {
  const std::size_t n = net.node_count();
  std::vector<double> table(std::size_t{1} << n, 0.0);
  testing::for_each_realization(net, [&](double pr, const std::vector<std::vector<NodeId>>& t) {
    for (std::uint64_t mask = 0; mask < table.size(); ++mask) {
      const auto seeds = testing::members_of(mask);
      table[mask] += pr * static_cast<double>(testing::adopters_on(t, seeds));
    }
  });
  return table;
}

Verdict submodularity() {
  Rng rng(31337);
  std::size_t violations = 0, checks = 0, networks = 0;
  double worst = 0, oracle_gap = 0;
  for (auto model : {DiffusionModel::IcConstant, DiffusionModel::LinearThreshold}) {
    testing::RandomNetworkSpec spec;
    spec.model = model;
    spec.max_nodes = 7;
    spec.edge_density = 0.35;
    for (int i = 0; i < 20; ++i, ++networks) {
      const auto net = testing::random_network(rng, spec);
      const std::size_t n = net.node_count();
      const auto pi = ExactOracle(net).adopters_by_subset();
      const auto ref = brute_force_table(net);
      for (std::size_t s = 0; s < pi.size(); ++s) oracle_gap = std::max(oracle_gap, std::abs(pi[s] - ref[s]));
      const std::uint64_t full = (std::uint64_t{1} << n) - 1;
      for (std::uint64_t s2 = 0; s2 <= full; ++s2) {
        // every S1 subset of S2
        for (std::uint64_t s1 = s2;; s1 = (s1 - 1) & s2) {
          for (std::size_t v = 0; v < n; ++v) {
            const std::uint64_t bit = std::uint64_t{1} << v;
            if (s2 & bit) continue;
            const double lhs = pi[s1 | bit] - pi[s1];
            const double rhs = pi[s2 | bit] - pi[s2];
            ++checks;
            if (rhs - lhs > 1e-9) ++violations;
            worst = std::max(worst, rhs - lhs);
          }
          if (s1 == 0) break;
        }
      }
    }
  }
  return {violations == 0 && oracle_gap <= 1e-9,
          fmt("%zu networks, %zu (S1,S2,v) checks, %zu violations, max excess %.2e, "
              "oracle vs enumeration %.2e",
              networks, checks, violations, std::max(worst, 0.0), oracle_gap)};
}

// ---- C4 ---------------------------------------------------------------------

std::vector<NodeId> identity_order(std::size_t n) {
  std::vector<NodeId> order(n);
  std::iota(order.begin(), order.end(), NodeId{0});
  return order;
}

double table_lookup(const std::vector<double>& table, std::span<const NodeId> s) {
  return table[ExactOracle::mask_of(s)];
}

Verdict double_greedy_ratio() {
  Rng rng(4242);
  const std::size_t trials = 200;
  std::size_t failures = 0;
  double worst_margin = std::numeric_limits<double>::infinity();
  double ratio_sum = 0;
  for (int i = 0; i < 50; ++i) {
    testing::RandomNetworkSpec spec;
    spec.model = i % 2 ? DiffusionModel::LinearThreshold : DiffusionModel::IcConstant;
    spec.max_nodes = 10;
    spec.edge_density = 0.2;
    spec.max_edges = 18;
    spec.coupon_fraction = 0.2 + 0.6 * rng.uniform();
    const auto net = testing::random_network(rng, spec);
    const auto table = ExactOracle(net).profit_by_subset();
    const double opt = *std::max_element(table.begin(), table.end());
    const auto order = identity_order(net.node_count());
    std::vector<double> values(trials);
    for (std::size_t t = 0; t < trials; ++t) {
      SetFunctionOracle oracle(net.node_count(),
                               [&](std::span<const NodeId> s) { return table_lookup(table, s); });
      Rng trial_rng(derive_seed(4242 + i, t));
      values[t] = table_lookup(table, double_greedy(oracle, order, trial_rng));
    }
    const auto m = mean_and_error(values);
    const double margin = m.mean - (0.5 * opt - 3 * m.std_error);
    worst_margin = std::min(worst_margin, margin);
    ratio_sum += m.mean / opt;
    if (margin < -1e-12) ++failures;
  }
  return {failures == 0, fmt("50 networks x %zu trials, %zu below bound, mean f/OPT %.3f, "
                             "worst margin %.4f",
                             trials, failures, ratio_sum / 50, worst_margin)};
}

// ---- C5 ---------------------------------------------------------------------

struct CoverageInstance {
  std::vector<std::uint32_t> covers;  // bitmask over the universe per element
  double price = 1.0;
  double cost = 0;
  double value(std::uint64_t mask) const {
    std::uint32_t u = 0;
    for (std::size_t i = 0; i < covers.size(); ++i)
      if (mask >> i & 1) u |= covers[i];
    return price * std::popcount(u) - cost * std::popcount(mask);
  }
};

Verdict noise_tolerance() {
  Rng rng(555);
  const double eps = 0.1;
  const std::size_t trials = 1000;
  std::size_t cases = 0, failures = 0;
  double worst_margin = std::numeric_limits<double>::infinity();
  const char* names[] = {"hash", "parity", "anti-opt"};
  for (int inst = 0; inst < 10; ++inst) {
    CoverageInstance h;
    const std::size_t m = 5 + rng.below(6);
    h.cost = 1.0 + rng.uniform();
    double opt = 0;
    std::uint64_t opt_mask = 0;
    do {
      h.covers.assign(m, 0);
      for (auto& c : h.covers) {
        for (int b = 0; b < 14; ++b)
          if (rng.bernoulli(0.25)) c |= 1u << b;
        if (!c) c = 1u << rng.below(14);
      }
      opt = 0;
      for (std::uint64_t s = 0; s < (std::uint64_t{1} << m); ++s) {
        if (h.value(s) > opt) {
          opt = h.value(s);
          opt_mask = s;
        }
      }
    } while (opt <= 0);
    const double lstar = opt;
    const double bound = eps / static_cast<double>(m) * lstar;
    for (int adv = 0; adv < 3; ++adv, ++cases) {
      auto noise = [&](std::uint64_t s) {
        switch (adv) {
          case 0: return (mix64(s ^ 0xabcdef) & 1) ? bound : -bound;
          case 1: return std::popcount(s) % 2 == 0 ? bound : -bound;
          default: {
            const int in = std::popcount(s & opt_mask), out = std::popcount(s & ~opt_mask);
            return in > out ? -bound : in < out ? bound : 0.0;
          }
        }
      };
      const auto order = identity_order(m);
      std::vector<double> values(trials);
      for (std::size_t t = 0; t < trials; ++t) {
        SetFunctionOracle oracle(
            m,
            [&](std::span<const NodeId> s) {
              const auto mask = ExactOracle::mask_of(s);
              return h.value(mask) + noise(mask);
            },
            OracleKind::Simulation, 2 * eps * lstar / static_cast<double>(m));
        Rng trial_rng(derive_seed(inst * 16 + adv, t));
        values[t] = h.value(ExactOracle::mask_of(double_greedy(oracle, order, trial_rng)));
      }
      const auto s = mean_and_error(values);
      const double margin = s.mean - ((0.5 - eps) * opt - 3 * s.std_error);
      if (margin < -1e-12) {
        ++failures;
        std::fprintf(stderr, "  C5 instance %d adversary %s: mean %.4f opt %.4f\n", inst, names[adv],
                     s.mean, opt);
      }
      worst_margin = std::min(worst_margin, margin);
    }
  }
  return {failures == 0, fmt("%zu instance/adversary pairs x %zu trials, %zu below bound, "
                             "worst margin %.4f",
                             cases, trials, failures, worst_margin)};
}

// ---- C6 ---------------------------------------------------------------------

Verdict end_to_end() {
  Rng rng(606);
  const double eps = 0.4;
  const std::size_t trials = 200;
  const char* names[] = {"SPM", "RPM", "RA-T", "RA-S"};
  double worst_ratio[4], worst_fail[4];
  std::fill(std::begin(worst_ratio), std::end(worst_ratio), std::numeric_limits<double>::infinity());
  std::fill(std::begin(worst_fail), std::end(worst_fail), 0.0);
  bool ok = true;
  for (int i = 0; i < 20; ++i) {
    testing::RandomNetworkSpec spec;
    spec.model = i % 2 ? DiffusionModel::LinearThreshold : DiffusionModel::IcConstant;
    spec.min_nodes = 4;
    spec.max_nodes = 10;
    spec.edge_density = 0.2;
    spec.max_edges = 18;
    const auto net = testing::random_network(rng, spec);
    const auto table = ExactOracle(net).profit_by_subset();
    const double opt = *std::max_element(table.begin(), table.end());
    const double big_n = default_big_n(net, std::nullopt);
    for (int a = 0; a < 4; ++a) {
      std::vector<double> values(trials);
      std::size_t below = 0;
      for (std::size_t t = 0; t < trials; ++t) {
        const auto seed = derive_seed(606 + i, a * 100000 + t);
        SeedSet s;
        if (a < 2) {
          ForwardOptions o;
          o.eps = eps;
          o.l_override = 10000;
          o.seed = seed;
          s = a == 0 ? spm(net, o) : rpm(net, o);
        } else if (a == 2) {
          RatOptions o;
          o.eps = eps;
          o.seed = seed;
          s = ra_t(net, o);
        } else {
          RasOptions o;
          o.eps = eps;
          o.seed = seed;
          s = ra_s(net, o);
        }
        values[t] = table_lookup(table, s.members);
        if (values[t] < (0.5 - eps) * opt - 1e-12) ++below;
      }
      const auto m = mean_and_error(values);
      const double fail_rate = static_cast<double>(below) / trials;
      const double ratio = m.mean / opt;
      worst_ratio[a] = std::min(worst_ratio[a], ratio);
      worst_fail[a] = std::max(worst_fail[a], fail_rate * big_n / 2.0);
      if (m.mean < (0.5 - eps) * opt - 1e-12 || fail_rate > 2.0 / big_n) {
        ok = false;
        std::fprintf(stderr, "  C6 network %d (n=%zu) %s: mean/OPT %.3f, below-bound rate %.3f\n", i,
                     net.node_count(), names[a], ratio, fail_rate);
      }
    }
  }
  std::string detail = "20 networks x 200 trials;";
  for (int a = 0; a < 4; ++a)
    detail += fmt(" %s min mean/OPT %.3f, max failure rate/(2/N) %.2f;", names[a], worst_ratio[a],
                  worst_fail[a]);
  detail.pop_back();
  return {ok, detail};
}

// ---- C7 ---------------------------------------------------------------------

bool rel_close(double a, double b, double tol) { return std::abs(a - b) <= tol * std::abs(b); }

Verdict threshold_formulas() {
  struct Pinned {
    double n, big_n, eps, eps1, eps2, r;
    double d0, d1, d2, d1s, d3;
  };
  // reference values evaluated independently at 40 significant digits
  const Pinned pinned[] = {
      {100, 100, 0.4, 0.3, 0.2, 0.1, 141150498.37548437335, 166730.41459024969254,
       23025.85092994045684, 165909.08249867210785, 10387.21719728425053},
      {7000, 7000, 0.2, 0.15, 0.1, 0.5, 193911754572.06426193, 1793126.0717149125918,
       7082.9323424299602857, 1771522.1431400341268, 3266.0188023427039095},
      {10, std::exp(1.0), 0.1, 1, 1, 1, 108178.73535694502041, 23.794415416798359283, 2.0,
       21.150591481598541584, 3.0},
  };
  std::size_t mismatches = 0;
  for (const auto& p : pinned) {
    mismatches += !rel_close(delta0(p.n, p.big_n, p.eps, p.r), p.d0, 1e-12);
    mismatches += !rel_close(delta1(p.n, p.big_n, p.eps1, p.r), p.d1, 1e-12);
    mismatches += !rel_close(delta2(p.big_n, p.eps2, p.r), p.d2, 1e-12);
    mismatches += !rel_close(delta1_star(p.n, p.big_n, p.eps1, p.r), p.d1s, 1e-12);
    mismatches += !rel_close(delta2_star(p.big_n, p.eps2, p.r), p.d2, 1e-12);
    mismatches += !rel_close(delta3(p.big_n, p.eps1, p.r), p.d3, 1e-12);
  }

  struct SolverCase {
    double n, big_n, eps, r;
    int k;
    double eps3;
  };
  const SolverCase cases[] = {{100, 100, 0.4, 0.1, 5, 0.1},   {7115, 7115, 0.4, 0.1, 5, 0.1},
                              {10, 10, 0.3, 0.5, 1, 0.05},    {1e6, 1e6, 0.2, 0.9, 10, 0.2},
                              {50, 1000, 0.45, 0.25, 3, 0.5}};
  double worst_residual = 0;
  for (const auto& c : cases) {
    const auto s = solve_ras_params(c.n, c.big_n, c.eps, c.r, c.k, c.eps3);
    const double ratio_res =
        std::abs((1 - s.eps2) / (2 * (1 + c.eps3)) - s.eps1 - (0.5 - c.eps));
    const double d1s = (std::log(c.big_n) + c.n * std::log(2.0)) * (6 + 2 * s.eps1 * c.r) /
                       (3 * s.eps1 * s.eps1 * c.r * c.r);
    const double d2s = 2 * std::log(c.big_n) / (s.eps2 * s.eps2 * c.r * c.r);
    const double size_res = std::abs(d1s - std::ldexp(d2s, c.k)) / d1s;
    worst_residual = std::max({worst_residual, ratio_res, size_res});
  }

  // RA-T: re-scan the eps1 grid with independently written bounds
  std::size_t grid_mismatches = 0;
  const SolverCase grids[] = {{100, 100, 0.4, 0.1, 0, 0}, {7115, 7115, 0.4, 0.1, 0, 0},
                              {10, 10, 0.25, 0.5, 0, 0},  {5000, 20000, 0.1, 0.3, 0, 0}};
  for (const auto& g : grids) {
    for (double step : {0.01, 0.005, 0.03}) {
      double best = std::numeric_limits<double>::infinity(), best_eps1 = 0;
      for (int i = 1; i * step < g.eps + 1e-15; ++i) {
        const double e1 = i * step, e2 = 2 * (g.eps - e1);
        if (e2 <= 1e-12) break;
        const double d1 = (std::log(g.big_n) + g.n * std::log(2.0)) * (2 + e1 * g.r) /
                          (e1 * e1 * g.r * g.r);
        const double d2 = 2 * std::log(g.big_n) / (e2 * e2 * g.r * g.r);
        if (std::max(d1, d2) < best) {
          best = std::max(d1, d2);
          best_eps1 = e1;
        }
      }
      const auto found = search_rat_params(g.n, g.big_n, g.eps, g.r, step);
      if (found.eps1 != best_eps1 || !rel_close(found.sample_bound(), best, 1e-12)) ++grid_mismatches;
    }
  }
  return {mismatches == 0 && worst_residual <= 1e-9 && grid_mismatches == 0,
          fmt("%zu/18 pinned values off, max solver residual %.2e, %zu/12 grid scans differ",
              mismatches, worst_residual, grid_mismatches)};
}

// ---- C8 ---------------------------------------------------------------------

Verdict estimator_equivalence() {
  // node 6 has I < P: it never adopts unless seeded
  const auto net = testing::make_network(
      8, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {3, 4}, {4, 5}, {5, 3}, {2, 6}, {6, 7}, {1, 7}, {7, 4}},
      DiffusionModel::IcConstant, 0.45, 0.5, 0.3, {0.9, 0.8, 0.6, 0.95, 0.7, 0.55, 0.3, 0.85});
  const ExactOracle oracle(net);
  const std::vector<std::vector<NodeId>> sets{{0}, {3}, {0, 5}, {2, 5, 7}, {1, 2, 3, 4, 6}};
  const std::size_t l = 100000;
  const auto threads = hardware_threads();
  const auto realizations = sample_realizations(net, l, 81, threads);
  const auto coll = generate_ra_collection(net, l, 82, threads);
  double worst_z = 0;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    const auto& s = sets[i];
    const double exact = oracle.profit(s);
    const auto sim = estimate_profit_simulation(net, s, l, derive_seed(83, i), threads);
    const auto real = estimate_profit_realizations(net, realizations, s, threads);
    const double frac = static_cast<double>(covered_count(coll, s)) / static_cast<double>(l);
    const double ra = estimate_F(coll, s, net);
    const double ra_se = net.price() * net.node_count() * std::sqrt(frac * (1 - frac) / (l - 1));
    for (auto [value, se] : {std::pair{sim.mean_profit, net.price() * sim.adopters_std_error},
                             std::pair{real.mean_profit, net.price() * real.adopters_std_error},
                             std::pair{ra, ra_se}}) {
      const double z = se > 0 ? std::abs(value - exact) / se : (std::abs(value - exact) > 1e-12) * 1e9;
      worst_z = std::max(worst_z, z);
    }
  }
  return {worst_z <= 3.0, fmt("5 seed sets x 3 estimators at %zu samples, max |z| %.2f", l, worst_z)};
}

// ---- C9 ---------------------------------------------------------------------

// Directed Chung-Lu graph with power-law expected in/out degrees.
Graph heavy_tailed_graph(std::size_t n, std::size_t m, std::uint64_t seed) {
  Rng rng(seed);
  auto weights = [&](double exponent) {
    std::vector<double> w(n);
    for (std::size_t i = 0; i < n; ++i) w[i] = std::pow(static_cast<double>(i + 1), -exponent);
    for (std::size_t i = n; i > 1; --i) std::swap(w[i - 1], w[rng.below(i)]);
    return w;
  };
  const auto wout = weights(0.75), win = weights(0.6);
  std::mt19937_64 engine(seed);
  std::discrete_distribution<std::size_t> pick_out(wout.begin(), wout.end());
  std::discrete_distribution<std::size_t> pick_in(win.begin(), win.end());
  std::set<std::pair<NodeId, NodeId>> edges;
  while (edges.size() < m) {
    const auto u = static_cast<NodeId>(pick_out(engine)), v = static_cast<NodeId>(pick_in(engine));
    if (u != v) edges.emplace(u, v);
  }
  return Graph(n, {edges.begin(), edges.end()});
}

Verdict scalability() {
  const auto g = heavy_tailed_graph(7115, 103689, 9);
  const double price = 0.4, coupon = 0.9 * price;
  const auto intrinsics = generate_intrinsics(g.node_count(), price, coupon, 10);
  const auto net = build_tc_network(g, {DiffusionModel::IcConstant, 0.01}, price, coupon, intrinsics);
  const auto threads = hardware_threads();

  RatOptions ro;
  ro.eps = 0.4;
  ro.max_ra = 5000000;
  ro.seed = 11;
  ro.threads = threads;
  const auto t0 = std::chrono::steady_clock::now();
  const auto rat = ra_t(net, ro);
  const double rat_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  BaselineConfig bc;
  bc.threads = threads;
  const auto hd = high_degree(net, bc, 12);

  const std::size_t sims = 10000;
  const auto rat_eval = estimate_profit_simulation(net, rat.members, sims, 13, threads);
  const auto hd_eval = estimate_profit_simulation(net, hd.members, sims, 14, threads);
  const double se = net.price() * std::hypot(rat_eval.adopters_std_error, hd_eval.adopters_std_error);
  return {rat_eval.mean_profit >= 0 && rat_eval.mean_profit > hd_eval.mean_profit,
          fmt("n=%zu m=%zu; RA-T %zu seeds, %zu RA sets, profit %.2f (%.0f s); "
              "HighDegree %zu seeds, profit %.2f; difference se %.2f",
              net.node_count(), net.graph().edge_count(), rat.members.size(),
              static_cast<std::size_t>(rat.samples.ra_sets), rat_eval.mean_profit, rat_seconds,
              hd.members.size(), hd_eval.mean_profit, se)};
}

// ---- C10 --------------------------------------------------------------------

Verdict cli_determinism() {
  testing::ScratchDir dir;
  std::ostringstream edges;
  Rng rng(1010);
  for (int e = 0; e < 1500; ++e) edges << rng.below(300) << ' ' << rng.below(300) << '\n';
  const auto graph = dir.file("graph.txt", edges.str()).string();
  std::size_t identical = 0, total = 0;
  std::string problems;
  for (const std::string alg : {"spm", "rpm", "ra-t", "ra-s", "maxinf", "highdegree"}) {
    const std::vector<std::string> args{"run",       "--alg",          alg,         "--graph",
                                        graph,       "--price",        "0.4",       "--model",
                                        "ic-cp",     "--ic-p",         "0.05",      "--seed",
                                        "2024",      "--threads",      "3",         "--l-override",
                                        "2000",      "--eval-sims",    "1000"};
    ++total;
    const auto a = testing::run_cli(COUPONPM_CLI, args, dir);
    const auto b = testing::run_cli(COUPONPM_CLI, args, dir);
    if (a.exit_code != 0 || b.exit_code != 0) {
      problems += " " + alg + ": exit " + std::to_string(a.exit_code) + "/" +
                  std::to_string(b.exit_code) + " " + a.err;
      continue;
    }
    const auto ra = cpmcli::parse_report(a.out), rb = cpmcli::parse_report(b.out);
    if (ra.algorithm == alg && ra.seed_set == rb.seed_set && ra.sample_counts == rb.sample_counts)
      ++identical;
    else
      problems += " " + alg + ": runs differ";
  }
  return {identical == total, fmt("%zu/%zu algorithms reproduced seed_set and sample_counts", identical,
                                  total) + problems};
}

struct Criterion {
  const char* id;
  const char* name;
  double limit_seconds;
  bool soft;
  std::function<Verdict()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria{
      {"C1", "non-monotone profit on the two-node chain", 1, false, non_monotonicity},
      {"C2", "RA-set estimator is unbiased", 10, false, ra_unbiased},
      {"C3", "expected adoption is submodular", 120, false, submodularity},
      {"C4", "double greedy reaches half the optimum", 600, false, double_greedy_ratio},
      {"C5", "double greedy tolerates bounded noise", 120, false, noise_tolerance},
      {"C6", "end-to-end approximation of SPM, RPM, RA-T, RA-S", 1800, false, end_to_end},
      {"C7", "sample-size thresholds", 1, false, threshold_formulas},
      {"C8", "simulation, realization and RA estimators agree", 300, false, estimator_equivalence},
      {"C9", "RA-T beats HighDegree at 7K nodes", 1800, true, scalability},
      {"C10", "CLI runs are reproducible", 600, false, cli_determinism},
  };
  std::set<std::string> only(argv + 1, argv + argc);
  bool all_pass = true;
  for (const auto& c : criteria) {
    if (!only.empty() && !only.count(c.id)) continue;
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < c.limit_seconds;
    const bool pass = v.pass && in_time;
    if (!pass && !c.soft) all_pass = false;
    std::printf("%s %s %s: %s [%.2f s, limit %.0f s%s]%s\n", pass ? "PASS" : "FAIL", c.id, c.name,
                v.detail.c_str(), secs, c.limit_seconds, in_time ? "" : ", exceeded",
                !pass && c.soft ? " (soft criterion, not counted)" : "");
    std::fflush(stdout);
  }
  return all_pass ? 0 : 1;
}
