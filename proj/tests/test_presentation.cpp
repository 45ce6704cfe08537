#include "doctest.h"
#include "presentation.hpp"

using namespace hfree;

namespace {
bool has_relation(const Presentation& p, const char* lhs, const char* rhs) {
  for (const auto& r : p.relations) {
    if (to_string(r.lhs) == lhs && to_string(r.rhs) == rhs) return true;
  }
  return false;
}
}  // namespace

TEST_CASE("catalog G24") {
  Presentation p = catalog("G24");
  CHECK(p.ngens == 3);
  CHECK(p.relations.size() == 4);
  CHECK(has_relation(p, "121", "212"));
  CHECK(has_relation(p, "131", "313"));
  CHECK(has_relation(p, "2323", "3232"));
  CHECK(has_relation(p, "12312313'", "232'12312"));
  CHECK(p.default_subgroup == std::vector<int>{2, 3});
}

TEST_CASE("catalog G29 and G33D4") {
  Presentation g29 = catalog("G29");
  CHECK(g29.ngens == 4);
  CHECK(has_relation(g29, "432432", "324324"));
  CHECK(g29.default_subgroup == std::vector<int>{1, 2, 3});
  REQUIRE(g29.checks.size() == 1);
  CHECK(to_string(g29.checks[0].lhs) == "42'34'23'");

  Presentation d4 = catalog("G33D4");
  CHECK(d4.ngens == 5);
  CHECK(d4.default_subgroup == std::vector<int>{1, 2, 3, 5});
  CHECK(has_relation(d4, "543254", "432543"));
  CHECK(has_relation(d4, "324324", "432432"));
  CHECK(has_relation(d4, "4215421", "252'421542"));
  CHECK(has_relation(d4, "425432", "32543245'"));
}

TEST_CASE("catalog G31 extra relations") {
  Presentation p = catalog("G31");
  CHECK(p.ngens == 5);
  for (auto [l, r] : {std::pair{"124124", "412412"}, {"235235", "523523"},
                      {"232'523", "5232'52"}, {"1242'12", "242'124"},
                      {"212'5235", "52352'12"}, {"232'4124", "41242'32"}}) {
    CHECK_MESSAGE(has_relation(p, l, r), l);
  }
}

TEST_CASE("catalog names and unknown case") {
  CHECK(catalog_names().size() == 8);
  for (const auto& n : catalog_names()) {
    Presentation p = catalog(n);
    CHECK(p.name == n);
    CHECK_NOTHROW(p.validate());
  }
  CHECK_THROWS_AS(catalog("G34"), UnknownCase);
  CHECK_THROWS_AS(catalog(""), UnknownCase);
}

TEST_CASE("presentation text round trip") {
  for (const auto& n : catalog_names()) {
    Presentation p = catalog(n);
    Presentation q = parse_presentation(print_presentation(p));
    CHECK(q.name == p.name);
    CHECK(q.ngens == p.ngens);
    CHECK(q.default_subgroup == p.default_subgroup);
    REQUIRE(q.relations.size() == p.relations.size());
    for (std::size_t i = 0; i < p.relations.size(); ++i) {
      CHECK(q.relations[i].lhs == p.relations[i].lhs);
      CHECK(q.relations[i].rhs == p.relations[i].rhs);
    }
    CHECK(q.checks.size() == p.checks.size());
  }
}

TEST_CASE("presentation parse errors") {
  CHECK_THROWS_AS(parse_presentation("gens 2\nrel 13 = 31\n"),
                  PresentationError);
  CHECK_THROWS_AS(parse_presentation("gens 2\nrel 12 21\n"), PresentationError);
  CHECK_THROWS_AS(parse_presentation("gens 2\nfoo 1\n"), PresentationError);
  CHECK_THROWS(parse_presentation("gens 2\nrel 1x = 21\n"));
  Presentation p = parse_presentation(
      "# comment\ngroup T\ngens 2\nsubgroup 1\nrel 121 = 212  # braid\n");
  CHECK(p.relations.size() == 1);
  CHECK(p.default_subgroup == std::vector<int>{1});
}

TEST_CASE("CaseSpec validation and labels") {
  CaseSpec s{"G24", {2, 3}, OrderMode::dc, {1, 2, 3}};
  CHECK_NOTHROW(s.validate(3));
  CHECK(s.ordering_label() == "[1,2*,3*]");
  s.mode = OrderMode::lex;
  CHECK(s.ordering_label() == "(1,2*,3*)");

  CaseSpec all{"G24", {1, 2, 3}, OrderMode::lex, {1, 2, 3}};
  CHECK_THROWS(all.validate(3));
  CaseSpec none{"G24", {}, OrderMode::lex, {1, 2, 3}};
  CHECK_THROWS(none.validate(3));
  CaseSpec badshat{"G24", {2}, OrderMode::lex, {1, 1, 3}};
  CHECK_THROWS(badshat.validate(3));

  CHECK(parse_order_mode("dc") == OrderMode::dc);
  CHECK_THROWS(parse_order_mode("bfs"));
  CHECK(parse_digit_list("1,2, 3") == std::vector<int>{1, 2, 3});
  CHECK(parse_digit_list("23") == std::vector<int>{2, 3});
}

TEST_CASE("result table rows") {
  const auto& rows = result_table();
  int checks = 0, fails = 0;
  for (const auto& r : rows) (r.expected_missing == 0 ? checks : fails)++;
  // 18 fast rows plus 8 for G31 and 3 for G33
  CHECK(rows.size() == 29);
  CHECK(fails == 6);
  CHECK(checks == 23);
}
