#include "hecke.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace hfree {

CoxeterData::CoxeterData(const Presentation& p, const std::vector<int>& gens,
                         const EnumerationOptions& opts)
    : gens_(gens) {
  std::sort(gens_.begin(), gens_.end());
  local_.fill(-1);
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (gens_[i] < 1 || gens_[i] > p.ngens) {
      throw PresentationError("parabolic generator out of range");
    }
    local_[gens_[i]] = static_cast<int>(i);
  }

  // Subgroup presentation: relations among J only, relabelled to 1..|J|.
  Presentation sub;
  sub.ngens = static_cast<int>(gens_.size());
  auto relabel = [&](const Word& w) {
    std::vector<Letter> out;
    for (Letter l : w) {
      out.push_back({static_cast<std::uint8_t>(local_[l.gen] + 1), l.inverted});
    }
    return Word(std::move(out));
  };
  for (const auto& r : p.restricted_to(gens_)) {
    sub.relations.push_back({relabel(r.lhs), relabel(r.rhs)});
  }
  const CosetAction reg = todd_coxeter(sub, {}, opts);
  const std::size_t n = reg.n;
  const std::size_t k = gens_.size();

  right_ = reg.perm;
  length_.assign(n, -1);
  word_.assign(n, Word{});
  length_[0] = 0;
  // Standardised numbering is BFS order, so a single pass suffices.
  for (std::uint32_t w = 0; w < n; ++w) {
    for (std::size_t s = 0; s < k; ++s) {
      std::uint32_t ws = right_[s][w];
      if (length_[ws] < 0) {
        length_[ws] = length_[w] + 1;
        word_[ws] = word_[w];
        word_[ws].push_back({static_cast<std::uint8_t>(gens_[s]), false});
      }
    }
  }
  for (std::uint32_t w = 0; w < n; ++w) {
    for (std::size_t s = 0; s < k; ++s) {
      if (std::abs(length_[right_[s][w]] - length_[w]) != 1) {
        throw PresentationError(
            "parabolic subgroup relations do not define a Coxeter group");
      }
    }
  }

  left_.assign(k, std::vector<std::uint32_t>(n));
  for (std::size_t s = 0; s < k; ++s) {
    left_[s][0] = right_[s][0];
    for (std::uint32_t w = 1; w < n; ++w) {
      const Letter last = word_[w].letters().back();
      const std::uint32_t parent = right_[local_[last.gen]][w];
      left_[s][w] = right_[local_[last.gen]][left_[s][parent]];
    }
  }
}

std::uint32_t CoxeterData::element_of(const Word& w) const {
  std::uint32_t e = identity();
  for (Letter l : w) e = right(e, l.gen);
  return e;
}

int CoxeterData::max_length() const {
  return *std::max_element(length_.begin(), length_.end());
}

// --- HeckeElt ---------------------------------------------------------------

HeckeElt HeckeElt::basis(std::uint32_t w, LaurentPoly c) {
  HeckeElt h;
  if (!c.is_zero()) h.terms_.emplace_back(w, std::move(c));
  return h;
}

HeckeElt HeckeElt::from_terms(std::vector<Term> terms) {
  std::stable_sort(terms.begin(), terms.end(),
                   [](const Term& a, const Term& b) { return a.first < b.first; });
  HeckeElt h;
  for (auto& t : terms) {
    if (!h.terms_.empty() && h.terms_.back().first == t.first) {
      h.terms_.back().second += t.second;
      if (h.terms_.back().second.is_zero()) h.terms_.pop_back();
    } else if (!t.second.is_zero()) {
      h.terms_.push_back(std::move(t));
    }
  }
  return h;
}

const LaurentPoly* HeckeElt::coefficient(std::uint32_t w) const {
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), w,
      [](const Term& t, std::uint32_t x) { return t.first < x; });
  return it != terms_.end() && it->first == w ? &it->second : nullptr;
}

const LaurentPoly* HeckeElt::as_scalar() const {
  return terms_.size() == 1 && terms_.front().first == 0
             ? &terms_.front().second
             : nullptr;
}

HeckeElt HeckeElt::operator-() const {
  HeckeElt h = *this;
  for (auto& t : h.terms_) t.second = -t.second;
  return h;
}

HeckeElt& HeckeElt::operator+=(const HeckeElt& o) {
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
      LaurentPoly c = std::move(a->second);
      c += b->second;
      if (!c.is_zero()) out.emplace_back(a->first, std::move(c));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

HeckeElt& HeckeElt::operator-=(const HeckeElt& o) { return *this += -o; }

HeckeElt HeckeElt::scaled(const LaurentPoly& c) const {
  if (c.is_zero()) return {};
  HeckeElt h;
  h.terms_.reserve(terms_.size());
  for (const auto& [w, p] : terms_) h.terms_.emplace_back(w, p * c);
  return h;
}

std::optional<HeckeElt> HeckeElt::div_exact(const LaurentPoly& d) const {
  HeckeElt h;
  h.terms_.reserve(terms_.size());
  for (const auto& [w, p] : terms_) {
    auto c = p.div_exact(d);
    if (!c) return std::nullopt;
    h.terms_.emplace_back(w, std::move(*c));
  }
  return h;
}

// --- HeckeAlgebra -----------------------------------------------------------

HeckeElt HeckeAlgebra::generator(int label) const {
  return HeckeElt::basis(data_.right(CoxeterData::identity(), label));
}

HeckeElt HeckeAlgebra::mul_gen_right(const HeckeElt& h, int label,
                                     bool inverted) const {
  std::vector<HeckeElt::Term> out;
  out.reserve(2 * h.support_size());
  for (const auto& [w, c] : h.terms()) {
    const std::uint32_t ws = data_.right(w, label);
    const bool up = data_.length(ws) > data_.length(w);
    if (!inverted) {
      if (up) {
        out.emplace_back(ws, c);
      } else {
        out.emplace_back(ws, c.shifted(1));
        out.emplace_back(w, c.shift_minus_self(1));
      }
    } else {
      if (!up) {
        out.emplace_back(ws, c);
      } else {
        out.emplace_back(ws, c.shifted(-1));
        out.emplace_back(w, c.shift_minus_self(-1));
      }
    }
  }
  return HeckeElt::from_terms(std::move(out));
}

HeckeElt HeckeAlgebra::mul_gen_left(int label, bool inverted,
                                    const HeckeElt& h) const {
  std::vector<HeckeElt::Term> out;
  out.reserve(2 * h.support_size());
  for (const auto& [w, c] : h.terms()) {
    const std::uint32_t sw = data_.left(label, w);
    const bool up = data_.length(sw) > data_.length(w);
    if (!inverted) {
      if (up) {
        out.emplace_back(sw, c);
      } else {
        out.emplace_back(sw, c.shifted(1));
        out.emplace_back(w, c.shift_minus_self(1));
      }
    } else {
      if (!up) {
        out.emplace_back(sw, c);
      } else {
        out.emplace_back(sw, c.shifted(-1));
        out.emplace_back(w, c.shift_minus_self(-1));
      }
    }
  }
  return HeckeElt::from_terms(std::move(out));
}

HeckeElt HeckeAlgebra::from_word(const Word& w) const {
  HeckeElt h = one();
  for (Letter l : w) h = mul_gen_right(h, l.gen, l.inverted);
  return h;
}

HeckeElt HeckeAlgebra::mul_right_fold(const HeckeElt& a,
                                      const HeckeElt& b) const {
  // a * T_v for every v in supp(b), sharing prefixes along the BFS tree.
  std::vector<std::optional<HeckeElt>> memo(data_.size());
  memo[0] = a;
  auto get = [&](auto&& self, std::uint32_t v) -> const HeckeElt& {
    if (memo[v]) return *memo[v];
    const Letter last = data_.reduced_word(v).letters().back();
    const std::uint32_t parent = data_.right(v, last.gen);
    memo[v] = mul_gen_right(self(self, parent), last.gen, false);
    return *memo[v];
  };
  std::vector<HeckeElt::Term> out;
  for (const auto& [v, c] : b.terms()) {
    for (const auto& [w, p] : get(get, v).terms()) out.emplace_back(w, p * c);
  }
  return HeckeElt::from_terms(std::move(out));
}

HeckeElt HeckeAlgebra::mul_left_fold(const HeckeElt& a,
                                     const HeckeElt& b) const {
  std::vector<HeckeElt::Term> out;
  for (const auto& [u, c] : a.terms()) {
    HeckeElt cur = b;
    const auto& letters = data_.reduced_word(u).letters();
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
      cur = mul_gen_left(it->gen, false, cur);
    }
    for (const auto& [w, p] : cur.terms()) out.emplace_back(w, c * p);
  }
  return HeckeElt::from_terms(std::move(out));
}

HeckeElt HeckeAlgebra::mul(const HeckeElt& a, const HeckeElt& b) const {
  if (a.is_zero() || b.is_zero()) return {};
  if (const LaurentPoly* c = a.as_scalar()) return b.scaled(*c);
  if (const LaurentPoly* c = b.as_scalar()) return a.scaled(*c);
  std::size_t right_cost = 0, left_cost = 0;
  for (const auto& t : b.terms()) right_cost += data_.length(t.first);
  for (const auto& t : a.terms()) left_cost += data_.length(t.first);
  right_cost *= a.support_size();
  left_cost *= b.support_size();
  return right_cost <= left_cost ? mul_right_fold(a, b) : mul_left_fold(a, b);
}

std::optional<HeckeElt> HeckeAlgebra::invert_q_monomial(
    const HeckeElt& m) const {
  if (m.support_size() != 1) return std::nullopt;
  const auto& [w, c] = m.terms().front();
  auto k = c.power_of_q();
  if (!k) return std::nullopt;
  return from_word(invert_word(data_.reduced_word(w)))
      .scaled(LaurentPoly::q_power(-*k));
}

std::optional<HeckeElt> HeckeAlgebra::invert_braid_monomial(
    const HeckeElt& m, Word* word, std::size_t budget) const {
  const auto top = eval_q1(m);
  if (top.size() != 1 || top.front().second != 1) return std::nullopt;

  // h must live on {v : l(v) <= l(w)} with a bare power of q on T_w.
  auto shaped = [&](const HeckeElt& h, std::uint32_t w) {
    for (const auto& [v, c] : h.terms()) {
      if (data_.length(v) > data_.length(w)) return false;
    }
    const LaurentPoly* c = h.coefficient(w);
    return c && c->power_of_q().has_value();
  };

  std::vector<Letter> peeled;  // last letter first
  std::optional<int> k;
  auto search = [&](auto&& self, const HeckeElt& h, std::uint32_t w) -> bool {
    if (budget == 0) return false;
    --budget;
    if (data_.length(w) == 0) {
      if (h.support_size() != 1) return false;
      k = h.terms().front().second.power_of_q();
      return k.has_value();
    }
    for (int s : data_.gens()) {
      const std::uint32_t ws = data_.right(w, s);
      if (data_.length(ws) > data_.length(w)) continue;
      for (bool inv : {false, true}) {
        // strip T_s^{+1} by multiplying with T_s^{-1} and vice versa
        HeckeElt next = mul_gen_right(h, s, !inv);
        if (!shaped(next, ws)) continue;
        peeled.push_back({static_cast<std::uint8_t>(s), inv});
        if (self(self, next, ws)) return true;
        peeled.pop_back();
      }
    }
    return false;
  };
  if (!shaped(m, top.front().first) || !search(search, m, top.front().first)) {
    return std::nullopt;
  }
  std::reverse(peeled.begin(), peeled.end());
  Word found(std::move(peeled));
  HeckeElt inv =
      from_word(invert_word(found)).scaled(LaurentPoly::q_power(-*k));
  if (word) *word = std::move(found);
  return inv;
}

std::vector<std::pair<std::uint32_t, Integer>> HeckeAlgebra::eval_q1(
    const HeckeElt& h) const {
  std::vector<std::pair<std::uint32_t, Integer>> out;
  for (const auto& [w, c] : h.terms()) {
    Integer v = c.eval_at_one();
    if (v != 0) out.emplace_back(w, std::move(v));
  }
  return out;
}

std::string HeckeAlgebra::to_string(const HeckeElt& h) const {
  if (h.is_zero()) return "0";
  std::string out;
  for (const auto& [w, c] : h.terms()) {
    std::string coef = c.to_string();
    std::string basis = "T[" + hfree::to_string(data_.reduced_word(w)) + "]";
    std::string term;
    if (c.terms().size() > 1) {
      term = "(" + coef + ")*" + basis;
    } else if (coef == "1") {
      term = basis;
    } else if (coef == "-1") {
      term = "-" + basis;
    } else {
      term = coef + "*" + basis;
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

}  // namespace hfree
