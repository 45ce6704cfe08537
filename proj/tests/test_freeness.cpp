#include <algorithm>
#include <set>

#include "doctest.h"
#include "freeness.hpp"
#include "pipeline.hpp"

using namespace hfree;

namespace {

const LaurentPoly q = LaurentPoly::q();
const LaurentPoly qm1 = LaurentPoly::q() - 1;

LaurentPoly qp(int k) { return LaurentPoly::q_power(k); }

bool contains(const std::vector<Word>& list, const char* w) {
  return std::find(list.begin(), list.end(), parse_word(w)) != list.end();
}

// The G24 run used for the worked multiplication table: double coset
// ordering over (1,2,3), W0 = <2,3>.
const RunResult& g24() {
  static const auto r = run_case(make_config("G24", {2, 3}, OrderMode::dc, {1, 2, 3}));
  return *r;
}

// c * T_w * x_k, with k 1-based.
struct Lin {
  const HeckeAlgebra& alg;
  ModuleVector operator()(int k, const char* w = "", LaurentPoly c = 1) const {
    return ModuleVector::basis(k - 1, alg.from_word(parse_word(w)).scaled(c));
  }
  ModuleVector operator()(int k, const HeckeElt& h) const {
    return ModuleVector::basis(k - 1, h);
  }
  HeckeElt h(const char* w, LaurentPoly c = 1) const {
    return alg.from_word(parse_word(w)).scaled(c);
  }
};

void check_entry(const RunResult& r, int l, int s, const ModuleVector& want) {
  REQUIRE(r.table->has(l - 1, s));
  const ModuleVector& got = r.table->get(l - 1, s);
  CHECK_MESSAGE(got == want, "x" << l << "." << s << " = "
                                 << got.to_string(*r.algebra) << "\n expected "
                                 << want.to_string(*r.algebra));
}

}  // namespace

TEST_CASE("cyclic expansions of a braid relation") {
  Presentation p = parse_presentation("group T\ngens 2\nsubgroup 1\nrel 121 = 212\n");
  Expansions r = cyclic_expansions(p);
  REQUIRE(r.size() == 3);
  CHECK(contains(r[1], "2121'2'"));
  CHECK(contains(r[1], "2'1'212"));
  CHECK(contains(r[1], "2'1212'"));
  CHECK(contains(r[2], "1'2'121"));
  CHECK(contains(r[2], "1212'1'"));
  CHECK(contains(r[2], "1'2121'"));
  CHECK(r[1].size() == 3);
  CHECK(r[2].size() == 3);
}

TEST_CASE("cyclic expansions of a commutation") {
  Presentation p = parse_presentation("group T\ngens 3\nsubgroup 1\nrel 13 = 31\n");
  Expansions r = cyclic_expansions(p);
  CHECK(contains(r[1], "313'"));
  CHECK(contains(r[1], "3'13"));
  CHECK(contains(r[3], "1'31"));
  CHECK(contains(r[3], "131'"));
  CHECK(r[2].empty());
}

TEST_CASE("expansions with inverse letters") {
  Expansions r = cyclic_expansions(catalog("G24"));
  // from 3'2'3'2323 = ... style relations the solved form keeps inverses
  bool any_inverse = false;
  for (int s = 1; s <= 3; ++s) {
    for (const Word& w : r[s]) any_inverse = any_inverse || w.has_inverses();
  }
  CHECK(any_inverse);
}

TEST_CASE("every expansion of s equals s in W") {
  for (const char* name : {"G12", "G24", "G27", "G29"}) {
    Presentation p = catalog(name);
    CosetAction reg = todd_coxeter(p, {});
    Expansions r = cyclic_expansions(p);
    for (int s = 1; s <= p.ngens; ++s) {
      CHECK(!r[s].empty());
      for (const Word& w : r[s]) {
        CHECK(w == free_reduce(w));
        bool same = true;
        for (std::uint32_t c = 0; c < reg.n && same; ++c) {
          same = reg.act(c, w) == reg.act(c, s);
        }
        CHECK_MESSAGE(same, name << " R_" << s << " " << to_string(w));
      }
    }
  }
}

TEST_CASE("initial table") {
  const RunResult& r = g24();
  const HeckeAlgebra& a = *r.algebra;
  MultTable t = init_table(r.graph, a);
  Lin x{a};
  CHECK(t.filled() == 2 * (r.graph.n - 1) + 2);
  CHECK(t.get(0, 1) == x(2));
  CHECK(t.get(1, 1) == x(1, "", q) + x(2, "", qm1));
  CHECK(t.get(0, 2) == x(1, "2"));
  CHECK(t.get(0, 3) == x(1, "3"));
  CHECK(t.get(4, 1) == x(10));
  CHECK(t.get(9, 1) == x(5, "", q) + x(10, "", qm1));
  CHECK_FALSE(t.has(7, 2));  // x8.2 is not a tree edge
  CHECK_FALSE(t.has(2, 1));
  CHECK(t.provenance(0, 2)->kind == Provenance::Kind::subgroup);
  CHECK(t.provenance(0, 1)->kind == Provenance::Kind::tree);
  CHECK(t.provenance(1, 1)->kind == Provenance::Kind::tree_reverse);
}

TEST_CASE("apply_letter") {
  const RunResult& r = g24();
  const HeckeAlgebra& a = *r.algebra;
  MultTable t = init_table(r.graph, a);
  Lin x{a};
  auto v = apply_letter(x(1), {1, false}, t, a);
  REQUIRE(v);
  CHECK(*v == x(2));
  // x_1.1' = q^-1 x_2 + (q^-1 - 1) x_1
  v = apply_letter(x(1), {1, true}, t, a);
  REQUIRE(v);
  CHECK(*v == x(2, "", qp(-1)) + x(1, "", qp(-1) - 1));
  // coefficients act from the left: (T_2 x_1).2 = T_2 T_2 x_1
  v = apply_letter(x(1, "2"), {2, false}, t, a);
  REQUIRE(v);
  CHECK(*v == x(1, "22"));
  v = apply_word(x(1), parse_word("123"), t, a);
  REQUIRE(v);
  CHECK(*v == x(5));
  Missing blk{};
  CHECK_FALSE(apply_letter(x(3), {1, false}, t, a, &blk));
  CHECK(blk.coset == 2);
  CHECK(blk.gen == 1);
}

TEST_CASE("edge reversal") {
  const RunResult& r = g24();
  const HeckeAlgebra& a = *r.algebra;
  Lin x{a};
  MultTable t = init_table(r.graph, a);
  // x_8.2 = x_9 is not in the tree; put it in and revert to get x_9.2
  t.set(7, 2, x(9), {Provenance::Kind::expansion, {}, 0, 0, 0});
  RevertOutcome o = revert_edge(t, r.graph, a, 7, 2);
  REQUIRE(o.value);
  CHECK(*o.value == x(8, "", q) + x(9, "", qm1));

  // a loop never reverts
  o = revert_edge(t, r.graph, a, 0, 2);
  CHECK(o.permanent);
  CHECK_FALSE(o.value);

  // x_3.1 = 2 x_3 is a loop as well
  CHECK(revert_edge(t, r.graph, a, 2, 1).permanent);

  // unknown entry: blocked on itself
  o = revert_edge(t, r.graph, a, 10, 1);
  REQUIRE(o.blocked);
  CHECK(o.blocked->coset == 10);
  CHECK(o.blocked->gen == 1);

  // coefficient that is not a unit
  MultTable u = init_table(r.graph, a);
  u.set(7, 2, x(9, "2", qm1) + x(9, "", q), {Provenance::Kind::expansion, {}, 0, 0, 0});
  o = revert_edge(u, r.graph, a, 7, 2);
  CHECK_FALSE(o.value);
  CHECK(o.permanent);
}

TEST_CASE("edge reversal is an involution on complete tables") {
  for (const RunResult* rp : {&g24()}) {
    const RunResult& r = *rp;
    REQUIRE(r.table->missing() == 0);
    std::size_t reverted = 0;
    for (std::uint32_t l = 0; l < r.graph.n; ++l) {
      for (int s = 1; s <= r.graph.ngens; ++s) {
        RevertOutcome o = revert_edge(*r.table, r.graph, *r.algebra, l, s);
        if (!o.value) continue;
        ++reverted;
        const std::uint32_t n = r.graph.neighbor(l, s);
        CHECK(*o.value == r.table->get(n, s));
        // and back again, through a table holding only what is needed
        RevertOutcome back = revert_edge(*r.table, r.graph, *r.algebra, n, s);
        REQUIRE(back.value);
        CHECK(*back.value == r.table->get(l, s));
      }
    }
    CHECK(reverted > r.graph.n);
  }
}

TEST_CASE("the worked G24 table") {
  const RunResult& r = g24();
  REQUIRE(r.graph.n == 42);
  CHECK(r.table->missing() == 0);
  Lin x{*r.algebra};

  // braid consequences and coefficient entries
  check_entry(r, 8, 2, x(9));
  check_entry(r, 9, 2, x(8, "", q) + x(9, "", qm1));
  check_entry(r, 11, 1, x(19));
  check_entry(r, 19, 1, x(11, "", q) + x(19, "", qm1));
  check_entry(r, 15, 1, x(24));
  check_entry(r, 24, 1, x(15, "", q) + x(24, "", qm1));
  check_entry(r, 20, 1, x(28));
  check_entry(r, 23, 1, x(27));
  check_entry(r, 32, 2, x(33));
  check_entry(r, 33, 2, x(32, "", q) + x(33, "", qm1));
  check_entry(r, 3, 1, x(3, "2"));
  check_entry(r, 4, 1, x(4, "3"));
  check_entry(r, 12, 1, x(12, "232'"));
  check_entry(r, 10, 3, x(10, "2"));
  check_entry(r, 14, 2, x(14, "3"));
  check_entry(r, 34, 2, x(34, "232'"));
  check_entry(r, 13, 3, x(13, "2"));
  check_entry(r, 17, 2, x(17, "3"));
  check_entry(r, 37, 2, x(37, "232'"));
  check_entry(r, 35, 1, x(35, "2"));
  check_entry(r, 39, 1, x(39, "3"));

  check_entry(r, 16, 1,
              x(16, "3'23") -
                  (x(7, "3'232'", q) + x(9, "3'23") + x(15, "3'23") -
                   x(18, "2'", q) - x(24) - x(26))
                      .scaled(qm1) +
                  (x(5, "3'232'", q) + x(8, "3'23") - x(10, "2'", q) - x(22))
                      .scaled(qm1 * qm1));

  check_entry(r, 19, 3,
              x(19, "232'") - (x(11, "232'") - x(12)).scaled(qm1));

  check_entry(r, 21, 3,
              x(21, "232'") -
                  (x(20, "232'") - x(18, "2332'") - x(12, "2") + x(11, "23"))
                      .scaled(qm1) +
                  x(10, x.h("23") - x.h("2332'")).scaled(qm1 * qm1));

  check_entry(r, 24, 2,
              x(24, "3'23") - (x(22, "3'23") - x(23) + x(10, "3'232'", q) -
                               x(11, "2'", q))
                                  .scaled(qm1));

  check_entry(r, 25, 1,
              x(36, "23", qp(-2)) -
                  (x(35, "23", qp(-2)) + x(34, "3'23", qp(-1))).scaled(qm1));

  check_entry(r, 36, 1,
              x(25, "3'2'", qp(3)) +
                  (x(36) + x(35, "2'", q) + x(13, "23'2'", qp(2))).scaled(qm1));

  check_entry(r, 29, 1,
              x(37, "23", qp(-2)) -
                  (x(34, "23", qp(-1)) + x(35, "323", qp(-2))).scaled(qm1));

  check_entry(r, 25, 2,
              x(25, "3'23") - (x(12, "3'23") - x(13)).scaled(qm1));

  check_entry(r, 40, 1,
              x(21, "23", q) -
                  (x(20, "23", q) + x(19, "23", q) - x(12, "2'323", q) -
                   x(37, "223", qp(-2)) - x(36, "3'223", qp(-1)))
                      .scaled(qm1) +
                  (x(18, "23", q) - x(10, "323", q) -
                   x(35, x.h("3'223", qp(-1)) + x.h("2323", qp(-2))) -
                   x(34, x.h("3'3'223") + x.h("232", qp(-1))))
                      .scaled(qm1 * qm1));

  check_entry(r, 21, 1,
              x(40, "3'2'") -
                  (x(29, "3'") - x(28) + x(25, "3'2'3'2", q) - x(21) +
                   x(12, "3'2'3", q) - x(11, "", q))
                      .scaled(qm1) +
                  (x(5, "232'", q) - x(7, "", q) - x(20)).scaled(qm1 * qm1));

  check_entry(r, 31, 1,
              x(31, "3") -
                  (x(25, "2'3", q) + x(29, "3") - x(36, "232'", qp(-1)) -
                   x(37, "23", qp(-2)))
                      .scaled(qm1) -
                  (x(35, x.h("323", qp(-2)) + x.h("232'", qp(-1))) +
                   x(34, "23", qp(-1)) + x(13, "3"))
                      .scaled(qm1 * qm1));
}

TEST_CASE("fill result does not depend on the order") {
  for (auto cfg : {make_config("G12", {1}, OrderMode::dc, {1, 2, 3}),
                   make_config("G12", {2}, OrderMode::dc, {1, 2, 3}),
                   make_config("G24", {2, 3}, OrderMode::dc, {1, 2, 3})}) {
    const auto base = run_case(cfg);
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      RunConfig c = cfg;
      c.fill.seed = seed;
      const auto r = run_case(c);
      REQUIRE(r->table->missing() == base->table->missing());
      bool same = true;
      for (std::uint32_t l = 0; l < r->graph.n; ++l) {
        for (int s = 1; s <= r->graph.ngens; ++s) {
          if (r->table->has(l, s) != base->table->has(l, s)) {
            same = false;
          } else if (r->table->has(l, s)) {
            same = same && r->table->get(l, s) == base->table->get(l, s);
          }
        }
      }
      CHECK_MESSAGE(same, cfg.spec.group << " seed " << seed);
    }
  }
}

TEST_CASE("lazy and eager reversal agree") {
  RunConfig cfg = make_config("G24", {2, 3}, OrderMode::lex, {});
  cfg.fill.eager_revert = false;
  const auto r = run_case(cfg);
  CHECK(r->table->missing() == 0);
  CHECK(r->verify.ok());
}

TEST_CASE("fill counts for G12") {
  CHECK(run_case(make_config("G12", {1}, OrderMode::dc, {}))->table->missing() == 0);
  const auto r = run_case(make_config("G12", {2}, OrderMode::dc, {}));
  CHECK(r->table->missing() == 9);
  CHECK(r->fill.missing.size() == 9);
  CHECK(r->outcome() == Outcome::incomplete);
}

TEST_CASE("provenance and describe_step") {
  const RunResult& r = g24();
  std::size_t reverts = 0, expansions = 0;
  for (std::uint32_t l = 0; l < r.graph.n; ++l) {
    for (int s = 1; s <= 3; ++s) {
      const auto& p = r.table->provenance(l, s);
      REQUIRE(p);
      if (p->kind == Provenance::Kind::revert) ++reverts;
      if (p->kind == Provenance::Kind::expansion) ++expansions;
      CHECK(describe_step(*r.table, l, s).rfind("x_" + std::to_string(l + 1) + "." + std::to_string(s) + " = ", 0) == 0);
    }
  }
  CHECK(reverts > 0);
  CHECK(expansions > 0);
  CHECK(r.table->fill_order().size() == r.table->filled());
}

TEST_CASE("s' w acts trivially for every expansion w of s") {
  for (auto cfg : {make_config("G24", {2, 3}, OrderMode::dc, {1, 2, 3}),
                   make_config("G29", {1, 2, 3}, OrderMode::lex, {})}) {
    const auto r = run_case(cfg);
    REQUIRE(r->table->missing() == 0);
    const Expansions ex = cyclic_expansions(r->config.presentation);
    std::size_t checked = 0;
    for (int s = 1; s <= r->graph.ngens; ++s) {
      for (const Word& w : ex[s]) {
        const Word sw = Word({{static_cast<std::uint8_t>(s), true}}) * w;
        for (std::uint32_t l = 0; l < r->graph.n; l += 7) {
          const ModuleVector x = ModuleVector::basis(l, r->algebra->one());
          auto v = apply_word(x, sw, *r->table, *r->algebra);
          REQUIRE(v);
          CHECK(*v == x);
          ++checked;
        }
      }
    }
    CHECK(checked > 100);
  }
}
