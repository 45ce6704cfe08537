#include "doctest.h"
#include "pipeline.hpp"
#include "verify.hpp"

using namespace hfree;

TEST_CASE("relations hold in W") {
  for (const auto& name : catalog_names()) {
    if (name == "G31" || name.rfind("G33", 0) == 0) continue;  // extended
    Presentation p = catalog(name);
    CosetAction reg = todd_coxeter(p, {});
    RelationCheck rc = check_relations_in_W(p, reg);
    CHECK_MESSAGE(rc.ok(), name << ": " << (rc.ok() ? "" : rc.failures[0]));
    CHECK(rc.checked == p.relations.size() + p.checks.size());
  }
}

TEST_CASE("a false relation is caught") {
  Presentation p = catalog("G24");
  CosetAction reg = todd_coxeter(p, {});
  p.checks.push_back({parse_word("12"), parse_word("21")});
  RelationCheck rc = check_relations_in_W(p, reg);
  CHECK(rc.failures.size() == 1);
}

TEST_CASE("verification of complete tables") {
  RunConfig cfg = make_config("G24", {2, 3}, OrderMode::dc, {1, 2, 3});
  cfg.q1_check = true;
  auto r = run_case(cfg);
  REQUIRE(r->table->missing() == 0);
  CHECK(r->verify.ok());
  CHECK(r->verify.n == 42);
  CHECK(r->verify.quadratics_checked == 42 * 3);
  CHECK(r->verify.relations_checked == 42 * r->config.presentation.relations.size());
  REQUIRE(r->q1);
  CHECK(r->q1->ok());
  CHECK(r->q1->checked == 42 * 3);
  REQUIRE(r->relations_in_w);
  CHECK(r->relations_in_w->ok());
  CHECK(r->outcome() == Outcome::complete);
  CHECK(emit_basis(r->graph, *r->table).size() == 42);
  CHECK(emit_basis(r->graph, *r->table)[41] == "12323123231");

  // same answer with several threads
  ActionReport par = verify_action(*r->table, r->config.presentation, *r->algebra, 3);
  CHECK(par.ok());
  CHECK(par.relations_checked == r->verify.relations_checked);
}

TEST_CASE("a corrupted entry is detected") {
  RunConfig cfg = make_config("G24", {2, 3}, OrderMode::dc, {1, 2, 3});
  cfg.q1_check = true;
  auto r = run_case(cfg);
  const HeckeAlgebra& a = *r->algebra;
  MultTable& t = *r->table;
  // x_16.1 with the wrong sign on one coefficient
  ModuleVector v = t.get(15, 1);
  ModuleVector bad = v + ModuleVector::basis(23, a.one()).scaled(2);
  t.overwrite(15, 1, bad);
  ActionReport rep = verify_action(t, r->config.presentation, a);
  CHECK_FALSE(rep.ok());
  CHECK(!rep.violations.empty());
  // q = 1 image unchanged only if the perturbation vanishes there; it does not
  Q1Report q1 = q1_oracle(t, r->graph, a, *r->regular);
  CHECK_FALSE(q1.ok());

  // perturbation by (q-1) survives at q = 1 but not the H-relations
  t.overwrite(15, 1, v + ModuleVector::basis(23, a.one()).scaled(LaurentPoly::q() - 1));
  CHECK(q1_oracle(t, r->graph, a, *r->regular).ok());
  CHECK_FALSE(verify_action(t, r->config.presentation, a).ok());
  CHECK_FALSE(verify_action_modular(t, r->config.presentation, a, 7).ok());
}

TEST_CASE("modular verification agrees with exact verification") {
  for (const char* name : {"G24", "G29", "G22"}) {
    CAPTURE(name);
    RunConfig cfg = make_config(name, {}, OrderMode::lex, {});
    cfg.verify = VerifyMode::exact;
    auto r = run_case(cfg);
    REQUIRE(r->table->missing() == 0);
    CHECK(r->verify.method == "exact");
    CHECK(r->verify.ok());
    for (std::uint64_t seed : {1u, 2u, 3u}) {
      ActionReport m =
          verify_action_modular(*r->table, r->config.presentation, *r->algebra, seed);
      CHECK(m.method == "modular");
      CHECK(m.ok());
      CHECK(m.relations_checked == r->verify.relations_checked);
    }
  }
}

TEST_CASE("modular verification catches a wrong power of q") {
  RunConfig cfg = make_config("G29", {}, OrderMode::lex, {});
  cfg.verify = VerifyMode::modular;
  auto r = run_case(cfg);
  CHECK(r->verify.method == "modular");
  REQUIRE(r->verify.ok());
  MultTable& t = *r->table;
  // x_k.s scaled by q: still a single term at q = 1
  for (std::uint32_t l : {0u, 57u, 159u}) {
    for (int s = 1; s <= t.ngens(); ++s) {
      const ModuleVector v = t.get(l, s);
      t.overwrite(l, s, v.scaled(LaurentPoly::q()));
      CHECK_FALSE(
          verify_action_modular(t, r->config.presentation, *r->algebra, 11).ok());
      t.overwrite(l, s, v);
    }
  }
  CHECK(verify_action_modular(t, r->config.presentation, *r->algebra, 11).ok());
}

TEST_CASE("verify mode parsing and automatic choice") {
  CHECK(parse_verify_mode("auto") == VerifyMode::automatic);
  CHECK(parse_verify_mode("modular") == VerifyMode::modular);
  CHECK_THROWS_AS(parse_verify_mode("fast"), std::invalid_argument);
  auto r = run_case(make_config("G24", {}, OrderMode::lex, {}));
  CHECK(r->verify.method == "exact");
  CHECK(report_json(*r).find("\"verification\": \"exact\"") != std::string::npos);
}

TEST_CASE("incomplete tables") {
  RunConfig cfg = make_config("G12", {2}, OrderMode::dc, {});
  cfg.q1_check = true;
  auto r = run_case(cfg);
  CHECK(r->table->missing() == 9);
  CHECK_THROWS_AS(emit_basis(r->graph, *r->table), std::logic_error);
  // every filled entry is still correct at q = 1
  REQUIRE(r->q1);
  CHECK(r->q1->ok());
  CHECK(r->q1->checked == r->table->filled());
}
