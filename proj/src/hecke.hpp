#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "enumerate.hpp"
#include "laurent.hpp"
#include "presentation.hpp"

namespace hfree {

class GeneratorNotInParabolic : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The finite Coxeter group W0 = <J>, realised by its regular action. Element
// indices come from BFS over the generators in label order, so index 0 is
// the identity and the parent of every element has a smaller index.
class CoxeterData {
 public:
  CoxeterData(const Presentation& p, const std::vector<int>& gens,
              const EnumerationOptions& opts = {});

  std::size_t size() const noexcept { return length_.size(); }
  const std::vector<int>& gens() const noexcept { return gens_; }
  bool contains(int label) const noexcept {
    return label >= 1 && label <= 9 && local_[label] >= 0;
  }
  static constexpr std::uint32_t identity() { return 0; }

  std::uint32_t right(std::uint32_t w, int label) const {
    return right_[local(label)][w];
  }
  std::uint32_t left(int label, std::uint32_t w) const {
    return left_[local(label)][w];
  }
  int length(std::uint32_t w) const { return length_[w]; }
  const Word& reduced_word(std::uint32_t w) const { return word_[w]; }
  // Element reached by the word; inverse letters act as the generator.
  std::uint32_t element_of(const Word& w) const;
  int max_length() const;

 private:
  int local(int label) const {
    if (!contains(label)) {
      throw GeneratorNotInParabolic("generator " + std::to_string(label) +
                                    " is not in the parabolic subgroup");
    }
    return local_[label];
  }

  std::vector<int> gens_;
  std::array<int, 10> local_{};
  std::vector<std::vector<std::uint32_t>> right_, left_;
  std::vector<int> length_;
  std::vector<Word> word_;
};

// Element of H0 in the natural basis {T_w}: sorted (w, coefficient) pairs
// without zero coefficients.
class HeckeElt {
 public:
  using Term = std::pair<std::uint32_t, LaurentPoly>;

  HeckeElt() = default;
  static HeckeElt basis(std::uint32_t w, LaurentPoly c = LaurentPoly(1));
  static HeckeElt scalar(LaurentPoly c) { return basis(0, std::move(c)); }
  // Merges duplicate indices and drops zeros.
  static HeckeElt from_terms(std::vector<Term> terms);

  bool is_zero() const noexcept { return terms_.empty(); }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t support_size() const noexcept { return terms_.size(); }
  const LaurentPoly* coefficient(std::uint32_t w) const;
  // Coefficient of T_e if that is the only term.
  const LaurentPoly* as_scalar() const;

  HeckeElt operator-() const;
  HeckeElt& operator+=(const HeckeElt& o);
  HeckeElt& operator-=(const HeckeElt& o);
  friend HeckeElt operator+(HeckeElt a, const HeckeElt& b) { return a += b; }
  friend HeckeElt operator-(HeckeElt a, const HeckeElt& b) { return a -= b; }
  HeckeElt scaled(const LaurentPoly& c) const;
  // Coefficient-wise exact division; nullopt if any division is inexact.
  std::optional<HeckeElt> div_exact(const LaurentPoly& d) const;
  friend bool operator==(const HeckeElt&, const HeckeElt&) = default;

 private:
  std::vector<Term> terms_;
};

// Iwahori-Hecke algebra of W0 with T_s^2 = (q-1) T_s + q.
class HeckeAlgebra {
 public:
  explicit HeckeAlgebra(CoxeterData data) : data_(std::move(data)) {}

  const CoxeterData& coxeter() const noexcept { return data_; }
  std::size_t dimension() const noexcept { return data_.size(); }

  HeckeElt one() const { return HeckeElt::scalar(LaurentPoly(1)); }
  HeckeElt generator(int label) const;

  HeckeElt mul_gen_right(const HeckeElt& h, int label, bool inverted) const;
  HeckeElt mul_gen_left(int label, bool inverted, const HeckeElt& h) const;
  HeckeElt from_word(const Word& w) const;
  HeckeElt mul(const HeckeElt& a, const HeckeElt& b) const;

  // For m = q^k T_w returns q^-k T_w^-1; nullopt for anything else.
  std::optional<HeckeElt> invert_q_monomial(const HeckeElt& m) const;

  // Recognises m = q^k T_{s1}^{e1}...T_{sr}^{er} with s1..sr a reduced word
  // and e_i = +-1, by peeling signed right descents. Returns the inverse and,
  // through `word`, the signed word found. Gives up after `budget` steps.
  std::optional<HeckeElt> invert_braid_monomial(const HeckeElt& m,
                                                Word* word = nullptr,
                                                std::size_t budget = 4096) const;

  // Specialisation q -> 1: a Z-combination of W0 elements.
  std::vector<std::pair<std::uint32_t, Integer>> eval_q1(
      const HeckeElt& h) const;

  // "poly * T[word]" terms, basis words in their stored reduced form.
  std::string to_string(const HeckeElt& h) const;

 private:
  HeckeElt mul_right_fold(const HeckeElt& a, const HeckeElt& b) const;
  HeckeElt mul_left_fold(const HeckeElt& a, const HeckeElt& b) const;

  CoxeterData data_;
};

}  // namespace hfree
