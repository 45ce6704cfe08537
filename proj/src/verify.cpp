#include "verify.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <thread>
#include <tuple>

namespace hfree {

RelationCheck check_relations_in_W(const Presentation& p,
                                   const CosetAction& regular) {
  RelationCheck rep;
  auto check = [&](const Relation& r) {
    ++rep.checked;
    for (std::uint32_t c = 0; c < regular.n; ++c) {
      if (regular.act(c, r.lhs) != regular.act(c, r.rhs)) {
        rep.failures.push_back(to_string(r.lhs) + " = " + to_string(r.rhs));
        return;
      }
    }
  };
  for (const auto& r : p.relations) check(r);
  for (const auto& r : p.checks) check(r);
  return rep;
}

namespace {

std::string entry_name(std::uint32_t l, const std::string& what) {
  return "x_" + std::to_string(l + 1) + "." + what;
}

// Relation sides share prefixes (123 = 231, 231 = 312, ...), so they are
// evaluated through a trie: each distinct prefix is computed once per row.
struct Trie {
  struct Node {
    std::map<Letter, std::size_t, bool (*)(Letter, Letter)> next{
        [](Letter a, Letter b) {
          return std::tie(a.gen, a.inverted) < std::tie(b.gen, b.inverted);
        }};
    std::vector<std::size_t> sides;  // relation sides ending here
  };
  std::vector<Node> nodes{1};

  void insert(const Word& w, std::size_t side) {
    std::size_t at = 0;
    for (Letter l : w) {
      auto it = nodes[at].next.find(l);
      if (it == nodes[at].next.end()) {
        nodes.emplace_back();
        it = nodes[at].next.emplace(l, nodes.size() - 1).first;
      }
      at = it->second;
    }
    nodes[at].sides.push_back(side);
  }
};

void walk(const Trie& trie, std::size_t at, const ModuleVector& v,
          const MultTable& t, const HeckeAlgebra& alg,
          std::vector<std::optional<ModuleVector>>& result) {
  for (std::size_t side : trie.nodes[at].sides) result[side] = v;
  for (const auto& [letter, child] : trie.nodes[at].next) {
    if (auto w = apply_letter(v, letter, t, alg)) {
      walk(trie, child, *w, t, alg, result);
    }
  }
}

void verify_rows(const MultTable& t, const Presentation& p,
                 const HeckeAlgebra& alg, std::uint32_t begin,
                 std::uint32_t end, std::vector<std::string>& out) {
  const LaurentPoly q = LaurentPoly::q();
  Trie trie;
  for (std::size_t i = 0; i < p.relations.size(); ++i) {
    trie.insert(p.relations[i].lhs, 2 * i);
    trie.insert(p.relations[i].rhs, 2 * i + 1);
  }
  std::vector<std::optional<ModuleVector>> result(2 * p.relations.size());
  for (std::uint32_t l = begin; l < end; ++l) {
    const ModuleVector x = ModuleVector::basis(l, alg.one());
    std::fill(result.begin(), result.end(), std::nullopt);
    walk(trie, 0, x, t, alg, result);
    for (std::size_t i = 0; i < p.relations.size(); ++i) {
      const auto& a = result[2 * i];
      const auto& b = result[2 * i + 1];
      if (!a || !b || *a != *b) {
        const Relation& r = p.relations[i];
        out.push_back(entry_name(l, to_string(r.lhs)) +
                      " != " + entry_name(l, to_string(r.rhs)));
      }
    }
    for (int s = 1; s <= t.ngens(); ++s) {
      const ModuleVector& xs = t.get(l, s);
      auto xss = apply_letter(xs, {static_cast<std::uint8_t>(s), false}, t, alg);
      ModuleVector expect = xs.scaled(LaurentPoly::q_minus_one()) + x.scaled(q);
      if (!xss || *xss != expect) {
        out.push_back(entry_name(l, std::to_string(s) + std::to_string(s)) +
                      " violates the quadratic relation");
      }
    }
  }
}

}  // namespace

ActionReport verify_action(const MultTable& t, const Presentation& p,
                           const HeckeAlgebra& alg, unsigned jobs) {
  ActionReport rep;
  rep.n = t.rows();
  rep.missing = t.missing();
  if (rep.missing != 0) {
    rep.violations.push_back("table incomplete: " +
                             std::to_string(rep.missing) + " entries missing");
    return rep;
  }
  rep.relations_checked = std::size_t{t.rows()} * p.relations.size();
  rep.quadratics_checked = std::size_t{t.rows()} * t.ngens();

  jobs = std::clamp(jobs, 1u, std::max(1u, t.rows()));
  std::vector<std::vector<std::string>> found(jobs);
  const std::uint32_t chunk = (t.rows() + jobs - 1) / jobs;
  if (jobs == 1) {
    verify_rows(t, p, alg, 0, t.rows(), found[0]);
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) {
      const std::uint32_t b = std::min(t.rows(), j * chunk);
      const std::uint32_t e = std::min(t.rows(), b + chunk);
      pool.emplace_back([&, b, e, j] { verify_rows(t, p, alg, b, e, found[j]); });
    }
    for (auto& th : pool) th.join();
  }
  for (auto& f : found) {
    rep.violations.insert(rep.violations.end(), f.begin(), f.end());
  }
  return rep;
}

namespace {

// Arithmetic in GF(p), p = 2^61 - 1.
constexpr std::uint64_t kP = (std::uint64_t{1} << 61) - 1;

std::uint64_t add_p(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t s = a + b;
  return s >= kP ? s - kP : s;
}

std::uint64_t mul_p(std::uint64_t a, std::uint64_t b) {
  const unsigned __int128 z = static_cast<unsigned __int128>(a) * b;
  const std::uint64_t s = (static_cast<std::uint64_t>(z) & kP) +
                          static_cast<std::uint64_t>(z >> 61);
  return s >= kP ? s - kP : s;
}

std::uint64_t pow_p(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  for (; e; e >>= 1, a = mul_p(a, a)) {
    if (e & 1) r = mul_p(r, a);
  }
  return r;
}

std::uint64_t reduce_p(const Integer& c) {
  Integer r = c % kP;
  if (r < 0) r += kP;
  return r.convert_to<std::uint64_t>();
}

using Dense = std::vector<std::uint64_t>;

class ModularAction {
 public:
  ModularAction(const MultTable& t, const HeckeAlgebra& alg, std::uint64_t q)
      : t_(t), w0_(alg.coxeter()), dim_(w0_.size()), q_(q),
        qinv_(pow_p(q, kP - 2)), entries_(std::size_t{t.rows()} * t.ngens()) {
    order_.resize(dim_);
    for (std::uint32_t w = 0; w < dim_; ++w) order_[w] = w;
    std::stable_sort(order_.begin(), order_.end(), [&](auto a, auto b) {
      return w0_.length(a) < w0_.length(b);
    });
    for (std::uint32_t l = 0; l < t.rows(); ++l) {
      for (int s = 1; s <= t.ngens(); ++s) {
        auto& e = entries_[t.id(l, s)];
        for (const auto& [k, h] : t.get(l, s).terms()) {
          Target tg{k, {}};
          for (const auto& [w, c] : h.terms()) tg.coeffs.emplace_back(w, eval(c));
          e.push_back(std::move(tg));
        }
      }
    }
  }

  std::size_t size() const { return std::size_t{t_.rows()} * dim_; }
  std::uint64_t q() const { return q_; }

  // y.T_s, or y.T_s^-1 = q^-1 y.T_s + (q^-1 - 1) y.
  Dense apply(const Dense& y, Letter letter) const {
    Dense out(size(), 0);
    Dense prod(dim_ * dim_);
    for (std::uint32_t k = 0; k < t_.rows(); ++k) {
      const std::uint64_t* z = &y[std::size_t{k} * dim_];
      if (std::all_of(z, z + dim_, [](std::uint64_t c) { return c == 0; })) {
        continue;
      }
      // prod[v] = z T_v, built along reduced words.
      std::copy(z, z + dim_, prod.begin());
      for (std::uint32_t i = 1; i < dim_; ++i) {
        const std::uint32_t v = order_[i];
        const Letter last = w0_.reduced_word(v).letters().back();
        const std::uint32_t u = w0_.right(v, last.gen);
        mul_gen(&prod[std::size_t{u} * dim_], last.gen,
                &prod[std::size_t{v} * dim_]);
      }
      for (const auto& tg : entries_[t_.id(k, letter.gen)]) {
        std::uint64_t* dst = &out[std::size_t{tg.coset} * dim_];
        for (const auto& [v, c] : tg.coeffs) {
          const std::uint64_t* src = &prod[std::size_t{v} * dim_];
          for (std::uint32_t w = 0; w < dim_; ++w) {
            if (src[w]) dst[w] = add_p(dst[w], mul_p(c, src[w]));
          }
        }
      }
    }
    if (letter.inverted) {
      const std::uint64_t c = add_p(qinv_, kP - 1);
      for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = add_p(mul_p(qinv_, out[i]), mul_p(c, y[i]));
      }
    }
    return out;
  }

  Dense apply(Dense y, const Word& w) const {
    for (Letter l : w) y = apply(y, l);
    return y;
  }

 private:
  struct Target {
    std::uint32_t coset;
    std::vector<std::pair<std::uint32_t, std::uint64_t>> coeffs;
  };

  std::uint64_t eval(const LaurentPoly& p) const {
    std::uint64_t r = 0;
    for (const auto& [e, c] : p.terms()) {
      const std::uint64_t m = pow_p(e < 0 ? qinv_ : q_, e < 0 ? -e : e);
      r = add_p(r, mul_p(reduce_p(c), m));
    }
    return r;
  }

  // dst = src T_s in H0 at q.
  void mul_gen(const std::uint64_t* src, int s, std::uint64_t* dst) const {
    std::fill(dst, dst + dim_, 0);
    const std::uint64_t qm1 = add_p(q_, kP - 1);
    for (std::uint32_t w = 0; w < dim_; ++w) {
      if (!src[w]) continue;
      const std::uint32_t ws = w0_.right(w, s);
      if (w0_.length(ws) > w0_.length(w)) {
        dst[ws] = add_p(dst[ws], src[w]);
      } else {
        dst[ws] = add_p(dst[ws], mul_p(q_, src[w]));
        dst[w] = add_p(dst[w], mul_p(qm1, src[w]));
      }
    }
  }

  const MultTable& t_;
  const CoxeterData& w0_;
  std::uint32_t dim_;
  std::uint64_t q_, qinv_;
  std::vector<std::uint32_t> order_;
  std::vector<std::vector<Target>> entries_;
};

}  // namespace

ActionReport verify_action_modular(const MultTable& t, const Presentation& p,
                                   const HeckeAlgebra& alg, std::uint64_t seed,
                                   int rounds) {
  ActionReport rep;
  rep.method = "modular";
  rep.n = t.rows();
  rep.missing = t.missing();
  if (rep.missing != 0) {
    rep.violations.push_back("table incomplete: " +
                             std::to_string(rep.missing) + " entries missing");
    return rep;
  }
  rep.relations_checked = std::size_t{t.rows()} * p.relations.size();
  rep.quadratics_checked = std::size_t{t.rows()} * t.ngens();

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> pick(2, kP - 2);
  std::vector<bool> bad_rel(p.relations.size()), bad_quad(t.ngens() + 1);
  for (int round = 0; round < rounds; ++round) {
    const ModularAction act(t, alg, pick(rng));
    Dense y(act.size());
    for (auto& c : y) c = pick(rng);
    for (std::size_t i = 0; i < p.relations.size(); ++i) {
      const Relation& r = p.relations[i];
      if (act.apply(y, r.lhs) != act.apply(y, r.rhs)) bad_rel[i] = true;
    }
    const std::uint64_t qm1 = add_p(act.q(), kP - 1);
    for (int s = 1; s <= t.ngens(); ++s) {
      const Letter g{static_cast<std::uint8_t>(s), false};
      const Dense ys = act.apply(y, g);
      const Dense yss = act.apply(ys, g);
      for (std::size_t i = 0; i < y.size(); ++i) {
        if (yss[i] != add_p(mul_p(qm1, ys[i]), mul_p(act.q(), y[i]))) {
          bad_quad[s] = true;
          break;
        }
      }
    }
  }
  for (std::size_t i = 0; i < p.relations.size(); ++i) {
    if (bad_rel[i]) {
      const Relation& r = p.relations[i];
      rep.violations.push_back("x." + to_string(r.lhs) + " != x." +
                               to_string(r.rhs) + " at a random q");
    }
  }
  for (int s = 1; s <= t.ngens(); ++s) {
    if (bad_quad[s]) {
      rep.violations.push_back("x." + std::to_string(s) + std::to_string(s) +
                               " violates the quadratic relation at a random q");
    }
  }
  return rep;
}

Q1Report q1_oracle(const MultTable& t, const CosetGraph& g,
                   const HeckeAlgebra& alg, const CosetAction& regular) {
  Q1Report rep;
  const CoxeterData& w0 = alg.coxeter();
  for (std::uint32_t l = 0; l < t.rows(); ++l) {
    for (int s = 1; s <= t.ngens(); ++s) {
      if (!t.has(l, s)) continue;
      ++rep.checked;
      const std::uint32_t n = g.neighbor(l, s);
      std::vector<std::tuple<std::uint32_t, std::uint32_t, Integer>> terms;
      for (const auto& [k, h] : t.get(l, s).terms()) {
        for (auto& [w, c] : alg.eval_q1(h)) terms.emplace_back(k, w, c);
      }
      const std::string name = entry_name(l, std::to_string(s));
      if (terms.size() != 1 || std::get<0>(terms[0]) != n ||
          std::get<2>(terms[0]) != 1) {
        rep.violations.push_back(name + " is not a single term w*x_" +
                                 std::to_string(n + 1) + " at q=1");
        continue;
      }
      Word lhs = g.repword[l];
      lhs.push_back({static_cast<std::uint8_t>(s), false});
      const Word rhs = w0.reduced_word(std::get<1>(terms[0])) * g.repword[n];
      if (regular.act(regular.basepoint, lhs) !=
          regular.act(regular.basepoint, rhs)) {
        rep.violations.push_back(name + ": coefficient at q=1 is not rep(l)*s*rep(n)^-1");
      }
    }
  }
  return rep;
}

std::vector<std::string> emit_basis(const CosetGraph& g, const MultTable& t) {
  if (t.missing() != 0) {
    throw std::logic_error("basis requested for an incomplete table");
  }
  std::vector<std::string> out;
  out.reserve(g.n);
  for (const auto& w : g.repword) out.push_back(to_string(w));
  return out;
}

}  // namespace hfree
