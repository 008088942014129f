#include "report.hpp"

#include <cmath>
#include <set>
#include <sstream>

namespace cpmcli {

namespace {

template <class T>
Json optional_value(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

class Reader {
 public:
  Reader(const Json& j, std::string where, bool strict) : j_(j), where_(std::move(where)) {
    if (!j_.is_object()) throw ReportError(where_ + ": expected an object");
    strict_ = strict;
  }

  // In strict mode every field must have been read.
  void finish() const {
    if (!strict_) return;
    for (const auto& [key, value] : j_.items()) {
      if (!seen_.count(key)) throw ReportError(where_ + ": unknown field '" + key + "'");
    }
  }

  const Json& field(const std::string& key) {
    seen_.insert(key);
    auto it = j_.find(key);
    if (it == j_.end()) throw ReportError(where_ + ": missing field '" + key + "'");
    return *it;
  }

  std::string str(const std::string& key) {
    const auto& v = field(key);
    if (!v.is_string()) throw type_error(key, "a string");
    return v.get<std::string>();
  }
  bool boolean(const std::string& key) {
    const auto& v = field(key);
    if (!v.is_boolean()) throw type_error(key, "a boolean");
    return v.get<bool>();
  }
  double number(const std::string& key) { return as_number(field(key), key); }
  std::uint64_t count(const std::string& key) { return as_count(field(key), key); }
  std::int64_t integer(const std::string& key) {
    const auto& v = field(key);
    if (!v.is_number_integer()) throw type_error(key, "an integer");
    return v.get<std::int64_t>();
  }

  std::optional<std::string> opt_str(const std::string& key) {
    const auto& v = field(key);
    if (v.is_null()) return std::nullopt;
    if (!v.is_string()) throw type_error(key, "a string or null");
    return v.get<std::string>();
  }
  std::optional<double> opt_number(const std::string& key) {
    const auto& v = field(key);
    if (v.is_null()) return std::nullopt;
    return as_number(v, key);
  }
  std::optional<std::uint64_t> opt_count(const std::string& key) {
    const auto& v = field(key);
    if (v.is_null()) return std::nullopt;
    return as_count(v, key);
  }

  std::string path(const std::string& key) const { return where_ + "." + key; }

 private:
  ReportError type_error(const std::string& key, const char* what) const {
    return ReportError(where_ + "." + key + ": expected " + what);
  }
  double as_number(const Json& v, const std::string& key) const {
    if (!v.is_number()) throw type_error(key, "a number");
    return v.get<double>();
  }
  std::uint64_t as_count(const Json& v, const std::string& key) const {
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
      throw type_error(key, "a non-negative integer");
    }
    return v.get<std::uint64_t>();
  }

  const Json& j_;
  std::string where_;
  bool strict_ = true;
  std::set<std::string> seen_;
};

Parameters read_parameters(const Json& j, bool strict) {
  Reader r(j, "parameters", strict);
  Parameters p;
  p.graph = r.str("graph");
  p.undirected = r.boolean("undirected");
  p.config = r.opt_str("config");
  p.model = r.str("model");
  p.ic_p = r.number("ic_p");
  p.price = r.number("price");
  p.coupon_frac = r.number("coupon_frac");
  p.intrinsics_file = r.opt_str("intrinsics_file");
  p.intrinsics_seed = r.opt_count("intrinsics_seed");
  p.eps = r.number("eps");
  p.big_n = r.opt_number("bigN");
  p.k = static_cast<int>(r.integer("k"));
  p.eps3 = r.number("eps3");
  p.plateau_pct = r.number("plateau_pct");
  p.max_ra = r.opt_count("max_ra");
  p.l_override = r.opt_count("l_override");
  p.eval_sims = r.count("eval_sims");
  p.seed = r.count("seed");
  p.threads = static_cast<std::uint32_t>(r.count("threads"));
  r.finish();
  return p;
}

}  // namespace

Json to_json(const RunReport& rep) {
  const auto& p = rep.parameters;
  Json params = {{"graph", p.graph},
                 {"undirected", p.undirected},
                 {"config", optional_value(p.config)},
                 {"model", p.model},
                 {"ic_p", p.ic_p},
                 {"price", p.price},
                 {"coupon_frac", p.coupon_frac},
                 {"intrinsics_file", optional_value(p.intrinsics_file)},
                 {"intrinsics_seed", optional_value(p.intrinsics_seed)},
                 {"eps", p.eps},
                 {"bigN", optional_value(p.big_n)},
                 {"k", p.k},
                 {"eps3", p.eps3},
                 {"plateau_pct", p.plateau_pct},
                 {"max_ra", optional_value(p.max_ra)},
                 {"l_override", optional_value(p.l_override)},
                 {"eval_sims", p.eval_sims},
                 {"seed", p.seed},
                 {"threads", p.threads}};
  Json details = Json::object();
  for (const auto& [k, v] : rep.details) details[k] = v;
  return Json{{"schema", kRunReportSchema},
              {"algorithm", rep.algorithm},
              {"parameters", std::move(params)},
              {"network",
               {{"n", rep.network.n},
                {"m", rep.network.m},
                {"pruned", rep.network.pruned},
                {"price", rep.network.price},
                {"coupon", rep.network.coupon},
                {"r", rep.network.r},
                {"model", rep.network.model}}},
              {"seed_set", rep.seed_set},
              {"seed_count", rep.seed_count},
              {"estimated_profit",
               {{"value", rep.estimated_profit.value},
                {"mean_adopters", rep.estimated_profit.mean_adopters},
                {"std_error", rep.estimated_profit.std_error},
                {"estimator", rep.estimated_profit.estimator},
                {"samples", rep.estimated_profit.samples}}},
              {"sample_counts",
               {{"simulations", rep.sample_counts.simulations},
                {"realizations", rep.sample_counts.realizations},
                {"ra_sets", rep.sample_counts.ra_sets}}},
              {"details", std::move(details)},
              {"collection_sizes", rep.collection_sizes},
              {"termination", rep.termination},
              {"wall_time_ms", rep.wall_time_ms}};
}

RunReport report_from_json(const Json& j, bool strict) {
  RunReport rep;
  {
    Reader r(j, "report", strict);
    if (r.str("schema") != kRunReportSchema) throw ReportError("report: unsupported schema");
    rep.algorithm = r.str("algorithm");
    rep.parameters = read_parameters(r.field("parameters"), strict);
    {
      Reader n(r.field("network"), "network", strict);
      rep.network.n = n.count("n");
      rep.network.m = n.count("m");
      rep.network.pruned = n.count("pruned");
      rep.network.price = n.number("price");
      rep.network.coupon = n.number("coupon");
      rep.network.r = n.number("r");
      rep.network.model = n.str("model");
      n.finish();
    }
    const auto& seeds = r.field("seed_set");
    if (!seeds.is_array()) throw ReportError("report.seed_set: expected an array");
    for (const auto& s : seeds) {
      if (!s.is_number_integer()) throw ReportError("report.seed_set: expected integer labels");
      rep.seed_set.push_back(s.get<std::int64_t>());
    }
    rep.seed_count = r.count("seed_count");
    {
      Reader e(r.field("estimated_profit"), "estimated_profit", strict);
      rep.estimated_profit.value = e.number("value");
      rep.estimated_profit.mean_adopters = e.number("mean_adopters");
      rep.estimated_profit.std_error = e.number("std_error");
      rep.estimated_profit.estimator = e.str("estimator");
      rep.estimated_profit.samples = e.count("samples");
      e.finish();
    }
    {
      Reader c(r.field("sample_counts"), "sample_counts", strict);
      rep.sample_counts.simulations = c.count("simulations");
      rep.sample_counts.realizations = c.count("realizations");
      rep.sample_counts.ra_sets = c.count("ra_sets");
      c.finish();
    }
    const auto& details = r.field("details");
    if (!details.is_object()) throw ReportError("report.details: expected an object");
    for (const auto& [k, v] : details.items()) {
      if (!v.is_number()) throw ReportError("report.details." + k + ": expected a number");
      rep.details.emplace_back(k, v.get<double>());
    }
    const auto& sizes = r.field("collection_sizes");
    if (!sizes.is_array()) throw ReportError("report.collection_sizes: expected an array");
    for (const auto& s : sizes) {
      if (!s.is_number_unsigned()) throw ReportError("report.collection_sizes: expected counts");
      rep.collection_sizes.push_back(s.get<std::uint64_t>());
    }
    rep.termination = r.str("termination");
    rep.wall_time_ms = r.integer("wall_time_ms");
    r.finish();
  }

  if (rep.seed_count != rep.seed_set.size()) {
    throw ReportError("report: seed_count does not match seed_set");
  }
  const auto& e = rep.estimated_profit;
  const double implied = rep.network.price * e.mean_adopters -
                         rep.network.coupon * static_cast<double>(rep.seed_count);
  if (std::abs(implied - e.value) > 1e-9 * std::max(1.0, std::abs(e.value))) {
    throw ReportError("report: estimated profit disagrees with price * adopters - coupon * seeds");
  }
  return rep;
}

RunReport parse_report(const std::string& text, bool strict) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ReportError(std::string("report is not valid JSON: ") + e.what());
  }
  return report_from_json(j, strict);
}

std::string csv_header() {
  return "algorithm,model,price,coupon,n,seed_count,profit,std_error,eval_samples,"
         "simulations,realizations,ra_sets,wall_time_ms";
}

std::string csv_row(const RunReport& rep) {
  std::ostringstream out;
  out.precision(17);
  out << rep.algorithm << ',' << rep.network.model << ',' << rep.network.price << ','
      << rep.network.coupon << ',' << rep.network.n << ',' << rep.seed_count << ','
      << rep.estimated_profit.value << ',' << rep.estimated_profit.std_error << ','
      << rep.estimated_profit.samples << ',' << rep.sample_counts.simulations << ','
      << rep.sample_counts.realizations << ',' << rep.sample_counts.ra_sets << ','
      << rep.wall_time_ms;
  return out.str();
}

}  // namespace cpmcli
