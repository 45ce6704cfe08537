#include "doctest.h"
#include "json.hpp"
#include "pipeline.hpp"

using namespace hfree;
using nlohmann::json;

TEST_CASE("configuration defaults") {
  RunConfig c = make_config("G24", {}, OrderMode::lex, {});
  CHECK(c.spec.subgroup == std::vector<int>{2, 3});
  CHECK(c.spec.shat == std::vector<int>{1, 2, 3});
  c = make_config("G24", {3, 2}, OrderMode::dc, {3, 1, 2});
  CHECK(c.spec.subgroup == std::vector<int>{2, 3});
  CHECK(c.spec.ordering_label() == "[3*,1,2*]");
  CHECK_THROWS_AS(make_config("G24", {4}, OrderMode::lex, {}), std::invalid_argument);
  CHECK_THROWS_AS(make_config("G24", {}, OrderMode::lex, {1, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(make_config("G99", {}, OrderMode::lex, {}), UnknownCase);
}

TEST_CASE("report") {
  auto r = run_case(make_config("G12", {2}, OrderMode::dc, {}));
  json j = json::parse(report_json(*r));
  CHECK(j["case"] == "G12");
  CHECK(j["n"] == 24);
  CHECK(j["missing"] == 9);
  CHECK(j["missing_entries"].size() == 9);
  CHECK(j["result"] == "incomplete");
  CHECK_FALSE(j.contains("spanning_set_size"));
  CHECK_FALSE(j.dump().find("_ms") != std::string::npos);
  CHECK(report_json(*r) == report_json(*run_case(make_config("G12", {2}, OrderMode::dc, {}))));
  json tj = json::parse(timings_json(*r));
  CHECK(tj.contains("fill_ms"));

  auto c = run_case(make_config("G12", {1}, OrderMode::dc, {}));
  json jc = json::parse(report_json(*c));
  CHECK(jc["result"] == "complete");
  CHECK(jc["spanning_set_size"] == 48);
  CHECK(json::parse(basis_json(*c)).size() == 24);
  CHECK(!fill_log(*c).empty());
}

TEST_CASE("suite tiers") {
  auto fast = suite_rows("fast");
  auto full = suite_rows("full");
  CHECK(fast.size() == 18);
  CHECK(full.size() > fast.size());
  for (const auto& row : fast) CHECK_FALSE(row.extended);
  CHECK_THROWS_AS(suite_rows(""), std::invalid_argument);
  CHECK_THROWS_AS(suite_rows("slow"), std::invalid_argument);
}

TEST_CASE("custom presentation") {
  Presentation p = parse_presentation(
      "group B3\ngens 3\nsubgroup 1 2\nrel 121 = 212\nrel 13 = 31\nrel 2323 = 3232\n");
  auto r = run_case(make_config(p, {}, OrderMode::lex, {}));
  CHECK(r->table->rows() == 8);  // |B3| / |S3|
  CHECK(r->outcome() == Outcome::complete);
}
