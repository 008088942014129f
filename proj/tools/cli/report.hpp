#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace cpmcli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kRunReportSchema = "couponpm-run-report/1";

class ReportError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Every input that shaped the run, as resolved by the CLI.
struct Parameters {
  std::string graph;
  bool undirected = false;
  std::optional<std::string> config;
  std::string model;
  double ic_p = 0;
  double price = 0;
  double coupon_frac = 0;
  std::optional<std::string> intrinsics_file;
  std::optional<std::uint64_t> intrinsics_seed;  // set when intrinsics were generated
  double eps = 0;
  std::optional<double> big_n;
  int k = 0;
  double eps3 = 0;
  double plateau_pct = 0;
  std::optional<std::uint64_t> max_ra;
  std::optional<std::uint64_t> l_override;
  std::uint64_t eval_sims = 0;
  std::uint64_t seed = 0;
  std::uint32_t threads = 0;

  bool operator==(const Parameters&) const = default;
};

struct NetworkSummary {
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::uint64_t pruned = 0;
  double price = 0;
  double coupon = 0;
  double r = 0;
  std::string model;

  bool operator==(const NetworkSummary&) const = default;
};

struct Estimate {
  double value = 0;
  double mean_adopters = 0;
  double std_error = 0;
  std::string estimator;
  std::uint64_t samples = 0;

  bool operator==(const Estimate&) const = default;
};

struct SampleCounts {
  std::uint64_t simulations = 0;
  std::uint64_t realizations = 0;
  std::uint64_t ra_sets = 0;

  bool operator==(const SampleCounts&) const = default;
};

struct RunReport {
  std::string algorithm;
  Parameters parameters;
  NetworkSummary network;
  std::vector<std::int64_t> seed_set;  // original node labels
  std::uint64_t seed_count = 0;
  Estimate estimated_profit;
  SampleCounts sample_counts;  // consumed by seed selection
  std::vector<std::pair<std::string, double>> details;
  std::vector<std::uint64_t> collection_sizes;
  std::string termination;
  std::int64_t wall_time_ms = 0;

  bool operator==(const RunReport&) const = default;
};

Json to_json(const RunReport& report);

// Throws ReportError on missing fields, wrong types, an inconsistent profit
// value, or (strict) any field outside the schema.
RunReport report_from_json(const Json& j, bool strict = true);
RunReport parse_report(const std::string& text, bool strict = true);

// Sweep summary.
std::string csv_header();
std::string csv_row(const RunReport& report);

}  // namespace cpmcli
