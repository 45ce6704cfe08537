#include "freeness.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

namespace hfree {

// --- ModuleVector -----------------------------------------------------------

ModuleVector ModuleVector::basis(std::uint32_t k, HeckeElt h) {
  ModuleVector v;
  if (!h.is_zero()) v.terms_.emplace_back(k, std::move(h));
  return v;
}

ModuleVector ModuleVector::from_terms(std::vector<Term> terms) {
  std::stable_sort(terms.begin(), terms.end(),
                   [](const Term& a, const Term& b) { return a.first < b.first; });
  ModuleVector v;
  for (auto& t : terms) {
    if (!v.terms_.empty() && v.terms_.back().first == t.first) {
      v.terms_.back().second += t.second;
    } else {
      if (!v.terms_.empty() && v.terms_.back().second.is_zero()) {
        v.terms_.pop_back();
      }
      v.terms_.push_back(std::move(t));
    }
  }
  if (!v.terms_.empty() && v.terms_.back().second.is_zero()) {
    v.terms_.pop_back();
  }
  return v;
}

const HeckeElt* ModuleVector::coefficient(std::uint32_t k) const {
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), k,
      [](const Term& t, std::uint32_t x) { return t.first < x; });
  return it != terms_.end() && it->first == k ? &it->second : nullptr;
}

ModuleVector ModuleVector::operator-() const {
  ModuleVector v = *this;
  for (auto& t : v.terms_) t.second = -t.second;
  return v;
}

ModuleVector& ModuleVector::operator+=(const ModuleVector& o) {
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->first < a->first) {
      out.push_back(*b++);
    } else {
      HeckeElt h = std::move(a->second);
      h += b->second;
      if (!h.is_zero()) out.emplace_back(a->first, std::move(h));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

ModuleVector& ModuleVector::operator-=(const ModuleVector& o) {
  return *this += -o;
}

ModuleVector ModuleVector::scaled(const LaurentPoly& c) const {
  if (c.is_zero()) return {};
  ModuleVector v;
  v.terms_.reserve(terms_.size());
  for (const auto& [k, h] : terms_) v.terms_.emplace_back(k, h.scaled(c));
  return v;
}

ModuleVector ModuleVector::left_mul(const HeckeAlgebra& alg,
                                    const HeckeElt& h) const {
  ModuleVector v;
  v.terms_.reserve(terms_.size());
  for (const auto& [k, c] : terms_) {
    HeckeElt p = alg.mul(h, c);
    if (!p.is_zero()) v.terms_.emplace_back(k, std::move(p));
  }
  return v;
}

std::optional<ModuleVector> ModuleVector::div_exact(const LaurentPoly& d) const {
  ModuleVector v;
  v.terms_.reserve(terms_.size());
  for (const auto& [k, h] : terms_) {
    auto c = h.div_exact(d);
    if (!c) return std::nullopt;
    v.terms_.emplace_back(k, std::move(*c));
  }
  return v;
}

std::string ModuleVector::to_string(const HeckeAlgebra& alg) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [k, h] : terms_) {
    std::string x = "x" + std::to_string(k + 1);
    std::string term;
    if (h == alg.one()) {
      term = x;
    } else if (h == -alg.one()) {
      term = "-" + x;
    } else {
      term = "(" + alg.to_string(h) + ")*" + x;
    }
    if (out.empty()) {
      out = term;
    } else if (term.front() == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out;
}

// --- MultTable --------------------------------------------------------------

void MultTable::set(std::uint32_t l, int gen, ModuleVector v, Provenance p) {
  const std::size_t i = id(l, gen);
  if (entries_[i]) throw std::logic_error("table entry filled twice");
  entries_[i] = std::move(v);
  provenance_[i] = std::move(p);
  order_.push_back(i);
  ++filled_;
}

std::vector<Missing> MultTable::missing_entries() const {
  std::vector<Missing> out;
  for (std::uint32_t l = 0; l < n_; ++l) {
    for (int s = 1; s <= m_; ++s) {
      if (!has(l, s)) out.push_back({l, s});
    }
  }
  return out;
}

std::string MultTable::dump(const HeckeAlgebra& alg) const {
  std::ostringstream os;
  for (std::uint32_t l = 0; l < n_; ++l) {
    for (int s = 1; s <= m_; ++s) {
      os << 'x' << l + 1 << '.' << s << " = ";
      if (has(l, s)) {
        os << get(l, s).to_string(alg);
      } else {
        os << '?';
      }
      os << '\n';
    }
  }
  return os.str();
}

// --- expansions -------------------------------------------------------------

Expansions cyclic_expansions(const Presentation& p) {
  Expansions r(static_cast<std::size_t>(p.ngens) + 1);
  auto emit = [&](int s, Word w) {
    w = free_reduce(w);
    auto& list = r[s];
    if (std::find(list.begin(), list.end(), w) == list.end()) {
      list.push_back(std::move(w));
    }
  };
  for (const auto& rel : p.relations) {
    for (int side = 0; side < 2; ++side) {
      const Word& w = side == 0 ? rel.lhs : rel.rhs;
      const Word& other = side == 0 ? rel.rhs : rel.lhs;
      for (std::size_t i = 0; i < w.size(); ++i) {
        const Word a = w.slice(0, i);
        const Word b = w.slice(i + 1, w.size() - i - 1);
        if (!w[i].inverted) {
          emit(w[i].gen, invert_word(a) * other * invert_word(b));
        } else {
          emit(w[i].gen, b * invert_word(other) * a);
        }
      }
    }
  }
  return r;
}

// --- table operations -------------------------------------------------------

MultTable init_table(const CosetGraph& g, const HeckeAlgebra& alg) {
  MultTable t(g.n, g.ngens);
  const LaurentPoly q = LaurentPoly::q();
  for (std::uint32_t k = 0; k < g.n; ++k) {
    if (!g.parent[k]) continue;
    const auto [l, s] = *g.parent[k];
    t.set(l, s, ModuleVector::basis(k, alg.one()),
          {Provenance::Kind::tree, {}, l, 0, 0});
    t.set(k, s,
          ModuleVector::basis(l, HeckeElt::scalar(q)) +
              ModuleVector::basis(
                  k, HeckeElt::scalar(LaurentPoly::q_minus_one())),
          {Provenance::Kind::tree_reverse, {}, l, 0, 0});
  }
  for (int s : alg.coxeter().gens()) {
    if (g.neighbor(0, s) != 0) {
      throw std::logic_error("parabolic generator moves the trivial coset");
    }
    t.set(0, s, ModuleVector::basis(0, alg.generator(s)),
          {Provenance::Kind::subgroup, {}, 0, 0, 0});
  }
  return t;
}

std::optional<ModuleVector> apply_letter(const ModuleVector& v, Letter s,
                                         const MultTable& t,
                                         const HeckeAlgebra& alg,
                                         Missing* blocked) {
  for (const auto& term : v.terms()) {
    if (!t.has(term.first, s.gen)) {
      if (blocked) *blocked = {term.first, s.gen};
      return std::nullopt;
    }
  }
  std::vector<ModuleVector::Term> out;
  for (const auto& [k, h] : v.terms()) {
    for (const auto& [j, a] : t.get(k, s.gen).terms()) {
      out.emplace_back(j, alg.mul(h, a));
    }
  }
  ModuleVector r = ModuleVector::from_terms(std::move(out));
  if (s.inverted) {
    // x.s' = q^-1 x.s + (q^-1 - 1) x
    static const LaurentPoly qinv = LaurentPoly::q_power(-1);
    static const LaurentPoly qinvm1 = qinv - LaurentPoly(1);
    r = r.scaled(qinv) + v.scaled(qinvm1);
  }
  return r;
}

std::optional<ModuleVector> apply_word(ModuleVector v, const Word& w,
                                       const MultTable& t,
                                       const HeckeAlgebra& alg,
                                       Missing* blocked) {
  for (Letter l : w) {
    auto next = apply_letter(v, l, t, alg, blocked);
    if (!next) return std::nullopt;
    v = std::move(*next);
  }
  return v;
}

RevertOutcome revert_edge(const MultTable& t, const CosetGraph& g,
                          const HeckeAlgebra& alg, std::uint32_t l, int s,
                          bool braid_units) {
  RevertOutcome out;
  const std::uint32_t n = g.neighbor(l, s);
  if (n == l) {
    out.permanent = true;
    return out;
  }
  if (!t.has(l, s)) {
    out.blocked = Missing{l, s};
    return out;
  }
  const ModuleVector& e = t.get(l, s);
  const HeckeElt* alpha = e.coefficient(n);
  std::optional<HeckeElt> alpha_inv =
      alpha ? alg.invert_q_monomial(*alpha) : std::nullopt;
  if (!alpha_inv && alpha && braid_units) {
    alpha_inv = alg.invert_braid_monomial(*alpha);
  }
  if (!alpha_inv) {
    out.permanent = true;
    return out;
  }

  const LaurentPoly q = LaurentPoly::q();
  const LaurentPoly& qm1 = LaurentPoly::q_minus_one();
  const ModuleVector xl = ModuleVector::basis(l, alg.one());
  const ModuleVector alpha_xn = ModuleVector::basis(n, *alpha);
  const ModuleVector q_alpha_inv_xl =
      ModuleVector::basis(l, alpha_inv->scaled(q));

  // Case 1: x_l.s = alpha x_n - (q-1) beta.
  bool exact = false;
  if (auto beta = (alpha_xn - e).div_exact(qm1)) {
    exact = true;
    Missing blk{};
    if (auto bs = apply_letter(*beta, {static_cast<std::uint8_t>(s), true}, t,
                               alg, &blk)) {
      out.value = q_alpha_inv_xl + ModuleVector::basis(n, HeckeElt::scalar(qm1)) +
                  bs->left_mul(alg, *alpha_inv).scaled(q * qm1);
      out.lemma_case = 1;
      return out;
    }
    out.blocked = blk;
  }
  // Case 2: x_l.s = alpha x_n + (q-1)(x_l + beta).
  if (auto d = (e - alpha_xn).div_exact(qm1)) {
    exact = true;
    ModuleVector beta = *d - xl;
    Missing blk{};
    if (auto bs = apply_letter(beta, {static_cast<std::uint8_t>(s), false}, t,
                               alg, &blk)) {
      out.value = q_alpha_inv_xl - bs->left_mul(alg, *alpha_inv).scaled(qm1);
      out.lemma_case = 2;
      out.blocked.reset();
      return out;
    }
    if (!out.blocked) out.blocked = blk;
  }
  if (!exact) out.permanent = true;
  return out;
}

std::string describe_step(const MultTable& t, std::uint32_t l, int s) {
  const auto& p = t.provenance(l, s);
  std::ostringstream os;
  os << "x_" << l + 1 << '.' << s << " = ";
  if (!p) return os.str() + "?";
  switch (p->kind) {
    case Provenance::Kind::expansion:
      os << "x_" << l + 1 << '.' << to_string(p->word);
      break;
    case Provenance::Kind::revert:
      os << "revert(x_" << p->source + 1 << '.' << s << ")";
      break;
    case Provenance::Kind::tree:
      os << "tree";
      break;
    case Provenance::Kind::tree_reverse:
      os << "tree reverse(x_" << p->source + 1 << '.' << s << ")";
      break;
    case Provenance::Kind::subgroup:
      os << s << " * x_1";
      break;
  }
  return os.str();
}

// --- fill loop --------------------------------------------------------------

namespace {

constexpr std::int64_t kUntried = -1;
constexpr std::int64_t kNever = -2;

class Filler {
 public:
  Filler(MultTable& t, const Expansions& r, const CosetGraph& g,
         const HeckeAlgebra& alg, const FillOptions& opts)
      : t_(t), r_(r), g_(g), alg_(alg), opts_(opts),
        blockers_(std::size_t{t.rows()} * t.ngens()) {
    if (opts.seed) rng_.seed(*opts.seed);
  }

  FillReport run() {
    FillReport rep;
    const std::size_t initial = t_.filled();
    for (;;) {
      ++rep.sweeps;
      bool progress = false;
      std::vector<Missing> todo = t_.missing_entries();
      if (opts_.seed) std::shuffle(todo.begin(), todo.end(), rng_);
      for (const Missing& e : todo) {
        if (t_.has(e.coset, e.gen)) continue;
        if (!attempt(e, rep, false)) continue;
        progress = true;
        if (!opts_.eager_revert) continue;
        const std::uint32_t n = g_.neighbor(e.coset, e.gen);
        if (n != e.coset && !t_.has(n, e.gen)) attempt({n, e.gen}, rep, true);
      }
      if (!progress) break;
    }
    rep.filled = t_.filled() - initial;
    rep.missing = t_.missing_entries();
    return rep;
  }

 private:
  bool still_blocked(std::int64_t b) const {
    if (b == kNever) return true;
    if (b == kUntried) return false;
    const auto id = static_cast<std::size_t>(b);
    return !t_.has(static_cast<std::uint32_t>(id / t_.ngens()),
                   static_cast<int>(id % t_.ngens()) + 1);
  }

  bool attempt(Missing e, FillReport& rep, bool revert_only) {
    const auto& words = r_[e.gen];
    auto& blk = blockers_[t_.id(e.coset, e.gen)];
    if (blk.empty()) blk.assign(words.size() + 1, kUntried);

    std::vector<std::size_t> tries;
    if (revert_only) {
      tries.push_back(words.size());
    } else {
      tries.resize(words.size() + 1);
      std::iota(tries.begin(), tries.end(), 0);
      if (opts_.seed) std::shuffle(tries.begin(), tries.end(), rng_);
    }

    for (std::size_t i : tries) {
      if (still_blocked(blk[i])) continue;
      if (i < words.size()) {
        Missing why{};
        auto v = apply_word(ModuleVector::basis(e.coset, alg_.one()), words[i],
                            t_, alg_, &why);
        if (v) {
          t_.set(e.coset, e.gen, std::move(*v),
                 {Provenance::Kind::expansion, words[i], e.coset, 0, ++step_});
          rep.steps.push_back(describe_step(t_, e.coset, e.gen));
          return true;
        }
        blk[i] = static_cast<std::int64_t>(t_.id(why.coset, why.gen));
      } else {
        const std::uint32_t src = g_.neighbor(e.coset, e.gen);
        RevertOutcome out =
            revert_edge(t_, g_, alg_, src, e.gen, opts_.braid_units);
        if (out.value) {
          t_.set(e.coset, e.gen, std::move(*out.value),
                 {Provenance::Kind::revert, {}, src, out.lemma_case, ++step_});
          rep.steps.push_back(describe_step(t_, e.coset, e.gen));
          return true;
        }
        blk[i] = out.permanent
                     ? kNever
                     : static_cast<std::int64_t>(
                           t_.id(out.blocked->coset, out.blocked->gen));
      }
    }
    return false;
  }

  MultTable& t_;
  const Expansions& r_;
  const CosetGraph& g_;
  const HeckeAlgebra& alg_;
  const FillOptions& opts_;
  std::vector<std::vector<std::int64_t>> blockers_;
  std::mt19937_64 rng_;
  std::size_t step_ = 0;
};

}  // namespace

FillReport fixpoint_fill(MultTable& t, const Expansions& r,
                         const CosetGraph& g, const HeckeAlgebra& alg,
                         const FillOptions& opts) {
  return Filler(t, r, g, alg, opts).run();
}

}  // namespace hfree
