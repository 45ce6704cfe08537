#include "laurent.hpp"

#include <algorithm>
#include <sstream>

namespace hfree {

LaurentPoly::LaurentPoly(const Integer& c) {
  if (c != 0) terms_.emplace_back(0, c);
}

LaurentPoly LaurentPoly::monomial(const Integer& c, int exponent) {
  LaurentPoly p;
  if (c != 0) p.terms_.emplace_back(exponent, c);
  return p;
}

const LaurentPoly& LaurentPoly::q_minus_one() {
  static const LaurentPoly p = q() - LaurentPoly(1);
  return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  LaurentPoly p;
  for (auto& [e, c] : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == e) {
      p.terms_.back().second += c;
      if (p.terms_.back().second == 0) p.terms_.pop_back();
    } else if (c != 0) {
      p.terms_.emplace_back(e, std::move(c));
    }
  }
  return p;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& t : p.terms_) t.second = -t.second;
  return p;
}

void LaurentPoly::add_scaled(const LaurentPoly& o, int sign) {
  if (o.terms_.empty()) return;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->first < a->first) {
      out.emplace_back(b->first, sign > 0 ? b->second : Integer(-b->second));
      ++b;
    } else {
      Integer c = a->second;
      if (sign > 0) c += b->second; else c -= b->second;
      if (c != 0) out.emplace_back(a->first, std::move(c));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  add_scaled(o, +1);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  add_scaled(o, -1);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (b.terms_.size() == 1) {
    LaurentPoly p = a;
    const auto& [e, c] = b.terms_.front();
    const bool one = c == 1, minus_one = c == -1;
    for (auto& t : p.terms_) {
      t.first += e;
      if (minus_one) {
        t.second = -t.second;
      } else if (!one) {
        t.second *= c;
      }
    }
    return p;
  }
  if (a.terms_.size() == 1) return b * a;
  // q^k - 1 (k > 0) or q^k - 1 (k < 0, stored as -1 then +q^k)
  if (b.terms_.size() == 2) {
    const auto& [e0, c0] = b.terms_[0];
    const auto& [e1, c1] = b.terms_[1];
    if (e0 == 0 && c0 == -1 && c1 == 1) return a.shift_minus_self(e1);
    if (e1 == 0 && c1 == -1 && c0 == 1) return a.shift_minus_self(e0);
  }

  const int lo = a.min_exponent() + b.min_exponent();
  const int hi = a.max_exponent() + b.max_exponent();
  std::vector<Integer> dense(static_cast<std::size_t>(hi - lo + 1));
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      dense[static_cast<std::size_t>(ea + eb - lo)] += ca * cb;
    }
  }
  LaurentPoly p;
  for (std::size_t i = 0; i < dense.size(); ++i) {
    if (dense[i] != 0) {
      p.terms_.emplace_back(lo + static_cast<int>(i), std::move(dense[i]));
    }
  }
  return p;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly p = *this;
  for (auto& t : p.terms_) t.first += k;
  return p;
}

LaurentPoly LaurentPoly::shift_minus_self(int k) const {
  if (k == 0 || terms_.empty()) return {};
  LaurentPoly p;
  p.terms_.reserve(2 * terms_.size());
  auto a = terms_.begin();  // contributes +c at e + k
  auto b = terms_.begin();  // contributes -c at e
  while (a != terms_.end() || b != terms_.end()) {
    if (b == terms_.end() || (a != terms_.end() && a->first + k < b->first)) {
      p.terms_.emplace_back(a->first + k, a->second);
      ++a;
    } else if (a == terms_.end() || b->first < a->first + k) {
      p.terms_.emplace_back(b->first, -b->second);
      ++b;
    } else {
      Integer c = a->second - b->second;
      if (c != 0) p.terms_.emplace_back(b->first, std::move(c));
      ++a;
      ++b;
    }
  }
  return p;
}

std::optional<LaurentPoly> LaurentPoly::div_exact(const LaurentPoly& d) const {
  if (d.is_zero()) throw std::domain_error("division by zero polynomial");
  if (is_zero()) return LaurentPoly{};

  // Strip q-powers so both sides are polynomials with nonzero constant term;
  // the quotient then has to be an ordinary polynomial.
  const int shift = min_exponent() - d.min_exponent();
  const int na = max_exponent() - min_exponent();
  const int nd = d.max_exponent() - d.min_exponent();
  if (na < nd) return std::nullopt;

  std::vector<Integer> rem(static_cast<std::size_t>(na + 1));
  for (const auto& [e, c] : terms_) rem[e - min_exponent()] = c;
  std::vector<Integer> den(static_cast<std::size_t>(nd + 1));
  for (const auto& [e, c] : d.terms_) den[e - d.min_exponent()] = c;

  const Integer& lead = den.back();
  std::vector<Integer> quot(static_cast<std::size_t>(na - nd + 1));
  for (int i = na; i >= nd; --i) {
    Integer& top = rem[i];
    if (top == 0) continue;
    if (top % lead != 0) return std::nullopt;
    Integer t = top / lead;
    for (int j = 0; j <= nd; ++j) {
      if (den[j] != 0) rem[i - nd + j] -= t * den[j];
    }
    quot[i - nd] = std::move(t);
  }
  for (const auto& r : rem) {
    if (r != 0) return std::nullopt;
  }
  LaurentPoly p;
  for (std::size_t i = 0; i < quot.size(); ++i) {
    if (quot[i] != 0) {
      p.terms_.emplace_back(static_cast<int>(i) + shift, std::move(quot[i]));
    }
  }
  return p;
}

std::optional<int> LaurentPoly::power_of_q() const {
  if (terms_.size() == 1 && terms_.front().second == 1) {
    return terms_.front().first;
  }
  return std::nullopt;
}

Integer LaurentPoly::eval_at_one() const {
  Integer s = 0;
  for (const auto& t : terms_) s += t.second;
  return s;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Integer mag = c < 0 ? Integer(-c) : c;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << '*';
    os << 'q';
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

}  // namespace hfree
