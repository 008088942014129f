#include <string>

#include "doctest.h"
#include "report.hpp"

using namespace cpmcli;

namespace {

RunReport sample_report() {
  RunReport r;
  r.algorithm = "ra-s";
  r.parameters.graph = "graph.txt";
  r.parameters.config = "net.cfg";
  r.parameters.model = "lt";
  r.parameters.ic_p = 0.01;
  r.parameters.price = 0.4;
  r.parameters.coupon_frac = 0.9;
  r.parameters.intrinsics_seed = 18446744073709551557ULL;
  r.parameters.eps = 0.4;
  r.parameters.big_n = 123.5;
  r.parameters.k = 5;
  r.parameters.eps3 = 0.1;
  r.parameters.plateau_pct = 2;
  r.parameters.max_ra = 5000000;
  r.parameters.eval_sims = 10000;
  r.parameters.seed = 7;
  r.parameters.threads = 4;
  r.network = {7115, 103689, 12, 0.4, 0.36, 0.1 / 1.0 + 1e-17, "lt"};
  r.seed_set = {-3, 17, 4000000000LL};
  r.seed_count = 3;
  r.estimated_profit = {0.4 * 12.345678901234567 - 0.36 * 3, 12.345678901234567, 0.0123, "simulation",
                        10000};
  r.sample_counts = {11, 0, 987654321};
  r.details = {{"eps1", 0.21625329582589342}, {"iterations", 3}};
  r.collection_sizes = {9951, 19902, 39804};
  r.termination = "plateau";
  r.wall_time_ms = 1234;
  return r;
}

}  // namespace

TEST_CASE("run report survives a serialization round trip") {
  const auto original = sample_report();
  const auto text = to_json(original).dump(2);
  const auto back = parse_report(text);
  CHECK(back == original);
  CHECK(to_json(back).dump(2) == text);
}

TEST_CASE("optional parameters serialize as null and come back empty") {
  auto r = sample_report();
  r.parameters.config.reset();
  r.parameters.big_n.reset();
  r.parameters.max_ra.reset();
  r.parameters.intrinsics_seed.reset();
  r.parameters.intrinsics_file = "values.txt";
  const auto j = to_json(r);
  CHECK(j["parameters"]["bigN"].is_null());
  CHECK(parse_report(j.dump()) == r);
}

TEST_CASE("strict parsing rejects unknown fields at every level") {
  const auto base = to_json(sample_report());
  auto top = base;
  top["extra"] = 1;
  CHECK_THROWS_AS(report_from_json(top), ReportError);
  CHECK_NOTHROW(report_from_json(top, false));

  auto nested = base;
  nested["parameters"]["colour"] = "blue";
  CHECK_THROWS_AS(report_from_json(nested), ReportError);
  CHECK_NOTHROW(report_from_json(nested, false));

  auto deep = base;
  deep["estimated_profit"]["note"] = "x";
  CHECK_THROWS_AS(report_from_json(deep), ReportError);
}

TEST_CASE("missing or mistyped fields are rejected") {
  auto missing = to_json(sample_report());
  missing.erase("seed_set");
  CHECK_THROWS_AS(report_from_json(missing, false), ReportError);

  auto typed = to_json(sample_report());
  typed["seed_count"] = "three";
  CHECK_THROWS_AS(report_from_json(typed, false), ReportError);

  auto negative = to_json(sample_report());
  negative["sample_counts"]["ra_sets"] = -1;
  CHECK_THROWS_AS(report_from_json(negative, false), ReportError);

  CHECK_THROWS_AS(parse_report("{not json"), ReportError);
}

TEST_CASE("profit must agree with price, adopters and seed count") {
  auto j = to_json(sample_report());
  j["estimated_profit"]["value"] = j["estimated_profit"]["value"].get<double>() + 1e-6;
  CHECK_THROWS_AS(report_from_json(j), ReportError);

  auto count = to_json(sample_report());
  count["seed_count"] = 4;
  CHECK_THROWS_AS(report_from_json(count), ReportError);
}

TEST_CASE("csv rows line up with the header") {
  const auto header = csv_header();
  const auto row = csv_row(sample_report());
  auto columns = [](const std::string& s) { return std::count(s.begin(), s.end(), ',') + 1; };
  CHECK(columns(header) == columns(row));
  CHECK(row.rfind("ra-s,lt,", 0) == 0);
}
