#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hfree {

using Integer = boost::multiprecision::cpp_int;

// Element of Z[q, q^-1]. Terms are kept sorted by increasing exponent with
// no zero coefficients, so equality is structural.
class LaurentPoly {
 public:
  using Term = std::pair<int, Integer>;

  LaurentPoly() = default;
  LaurentPoly(int c) : LaurentPoly(Integer(c)) {}  // NOLINT: literal ints
  explicit LaurentPoly(const Integer& c);

  static LaurentPoly monomial(const Integer& c, int exponent);
  static LaurentPoly q_power(int exponent) { return monomial(1, exponent); }
  static LaurentPoly q() { return q_power(1); }
  // q - 1, the divisor that appears throughout the reversal lemma.
  static const LaurentPoly& q_minus_one();
  // Build from arbitrary (exponent, coefficient) pairs, merging duplicates.
  static LaurentPoly from_terms(std::vector<Term> terms);

  bool is_zero() const noexcept { return terms_.empty(); }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  int min_exponent() const { return terms_.front().first; }
  int max_exponent() const { return terms_.back().first; }

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) {
    return a += b;
  }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) {
    return a -= b;
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  // Multiply by q^k.
  LaurentPoly shifted(int k) const;
  // q^k * p - p, in one pass.
  LaurentPoly shift_minus_self(int k) const;

  // c with c * d == *this, or nullopt if no Laurent polynomial works.
  std::optional<LaurentPoly> div_exact(const LaurentPoly& d) const;

  // k iff *this == q^k.
  std::optional<int> power_of_q() const;

  Integer eval_at_one() const;

  // Decreasing exponents, e.g. "q^2 - 2*q + 1", "-q^-1 + 3".
  std::string to_string() const;

 private:
  void add_scaled(const LaurentPoly& o, int sign);
  std::vector<Term> terms_;
};

}  // namespace hfree
