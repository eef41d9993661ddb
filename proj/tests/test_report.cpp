#include "uqalt/report.hpp"

#include <catch_amalgamated.hpp>

using namespace uqalt;

TEST_CASE("suite names are canonicalized") {
  CHECK(canonical_suites({"qdet", "ybe", "ybe"}) == std::vector<std::string>{"ybe", "qdet"});
  CHECK(canonical_suites({"all"}) == suite_names());
}

TEST_CASE("configuration errors are caught before running") {
  RunConfig c;
  c.suites = {"ybe", "nosuch"};
  CHECK_THROWS_AS(run_suites(c), std::invalid_argument);
  c.suites = {"ybe"};
  c.format = "yaml";
  CHECK_THROWS_AS(validate(c), std::invalid_argument);
  c.format = "json";
  c.order = 0;
  CHECK_THROWS_AS(validate(c), std::invalid_argument);
}

TEST_CASE("a window overflow marks the group skipped and is not a failure") {
  RunConfig c;
  c.suites = {"drinfeld"};
  c.window = 2;
  const nlohmann::json r = report_json(c, run_suites(c));
  int skipped = 0;
  for (const auto &row : r.at("results")) skipped += row.at("status") == "skipped-overflow";
  CHECK(skipped > 0);
  CHECK_FALSE(report_has_failure(r));
}

TEST_CASE("PBW check detects a wrong quotient bound") {
  const GradedQuotient Q(4);
  CHECK(all_pass(check_pbw_dimensions(Q, 4)));
  // Asking past the bound raises rather than returning a wrong dimension.
  CHECK_THROWS_AS(check_pbw_dimensions(Q, 5), TruncationError);
}

TEST_CASE("report is deterministic without timings") {
  RunConfig c;
  c.suites = {"ybe", "serre"};
  c.max_total_degree = 5;
  const std::string a = report_json(c, run_suites(c)).dump();
  const std::string b = report_json(c, run_suites(c)).dump();
  CHECK(a == b);
  CHECK(a.find("wall_time") == std::string::npos);
  c.timings = true;
  CHECK(report_json(c, run_suites(c)).dump().find("group_wall_time_s") != std::string::npos);
}

TEST_CASE("text rendering summarizes statuses") {
  const nlohmann::json r = {{"results",
                             {{{"suite", "x"}, {"check", "a"}, {"params", nlohmann::json::object()}, {"status", "pass"}},
                              {{"suite", "x"}, {"check", "b"}, {"params", nlohmann::json::object()}, {"status", "fail"}}}}};
  CHECK(report_text(r).find("summary: 1 pass, 1 fail, 0 skipped-overflow") != std::string::npos);
  CHECK(report_has_failure(r));
}
