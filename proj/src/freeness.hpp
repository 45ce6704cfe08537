#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cosetgraph.hpp"
#include "hecke.hpp"
#include "presentation.hpp"

namespace hfree {

// Sum of h_k * x_k with h_k in H0: sorted by coset index, no zero terms.
class ModuleVector {
 public:
  using Term = std::pair<std::uint32_t, HeckeElt>;

  ModuleVector() = default;
  static ModuleVector basis(std::uint32_t k, HeckeElt h);
  static ModuleVector from_terms(std::vector<Term> terms);

  bool is_zero() const noexcept { return terms_.empty(); }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  const HeckeElt* coefficient(std::uint32_t k) const;

  ModuleVector operator-() const;
  ModuleVector& operator+=(const ModuleVector& o);
  ModuleVector& operator-=(const ModuleVector& o);
  friend ModuleVector operator+(ModuleVector a, const ModuleVector& b) {
    return a += b;
  }
  friend ModuleVector operator-(ModuleVector a, const ModuleVector& b) {
    return a -= b;
  }
  ModuleVector scaled(const LaurentPoly& c) const;
  ModuleVector left_mul(const HeckeAlgebra& alg, const HeckeElt& h) const;
  std::optional<ModuleVector> div_exact(const LaurentPoly& d) const;
  friend bool operator==(const ModuleVector&, const ModuleVector&) = default;

  // "(h)*x12 + x3", cosets printed 1-based.
  std::string to_string(const HeckeAlgebra& alg) const;

 private:
  std::vector<Term> terms_;
};

// Table entry x_l.s that is still unknown.
struct Missing {
  std::uint32_t coset;
  int gen;
};

struct Provenance {
  enum class Kind { tree, tree_reverse, subgroup, expansion, revert };
  Kind kind;
  Word word;                  // expansion used
  std::uint32_t source = 0;   // revert: the row whose entry was reverted
  int revert_case = 0;        // 1 or 2
  std::size_t step = 0;       // order of filling, 0 for initial entries
};

// The |W/W0| x |S| table of entries x_l.s.
class MultTable {
 public:
  MultTable(std::uint32_t n, int ngens)
      : n_(n), m_(ngens), entries_(std::size_t{n} * ngens),
        provenance_(std::size_t{n} * ngens) {}

  std::uint32_t rows() const noexcept { return n_; }
  int ngens() const noexcept { return m_; }
  std::size_t id(std::uint32_t l, int gen) const {
    return std::size_t{l} * m_ + (gen - 1);
  }
  bool has(std::uint32_t l, int gen) const {
    return entries_[id(l, gen)].has_value();
  }
  const ModuleVector& get(std::uint32_t l, int gen) const {
    return *entries_[id(l, gen)];
  }
  const std::optional<Provenance>& provenance(std::uint32_t l, int gen) const {
    return provenance_[id(l, gen)];
  }
  void set(std::uint32_t l, int gen, ModuleVector v, Provenance p);
  // Test hook for negative controls; keeps provenance.
  void overwrite(std::uint32_t l, int gen, ModuleVector v) {
    entries_[id(l, gen)] = std::move(v);
  }
  std::size_t filled() const noexcept { return filled_; }
  std::size_t missing() const noexcept { return entries_.size() - filled_; }
  std::vector<Missing> missing_entries() const;
  // Entries in the order they were filled (initial ones first).
  const std::vector<std::size_t>& fill_order() const noexcept { return order_; }

  // One line per entry "x<l>.<s> = ...", "?" for missing entries.
  std::string dump(const HeckeAlgebra& alg) const;

 private:
  std::uint32_t n_;
  int m_;
  std::vector<std::optional<ModuleVector>> entries_;
  std::vector<std::optional<Provenance>> provenance_;
  std::vector<std::size_t> order_;
  std::size_t filled_ = 0;
};

// R_s for every generator label s (index 0 unused).
using Expansions = std::vector<std::vector<Word>>;

// Every way of solving a relation for one generator occurrence, freely
// reduced and deduplicated: for u = v and a side a s b, s -> a' (other) b';
// for an occurrence a s' b, s -> b (other)' a.
Expansions cyclic_expansions(const Presentation& p);

// Tree entries both ways and x_1.s = T_s x_1 for s in J.
MultTable init_table(const CosetGraph& g, const HeckeAlgebra& alg);

// v.s (or v.s' if inverted) through the table. On a missing entry returns
// nullopt and reports it through `blocked`.
std::optional<ModuleVector> apply_letter(const ModuleVector& v, Letter s,
                                         const MultTable& t,
                                         const HeckeAlgebra& alg,
                                         Missing* blocked = nullptr);

std::optional<ModuleVector> apply_word(ModuleVector v, const Word& w,
                                       const MultTable& t,
                                       const HeckeAlgebra& alg,
                                       Missing* blocked = nullptr);

struct RevertOutcome {
  std::optional<ModuleVector> value;  // entry x_n.s for n = l.s
  int lemma_case = 0;
  std::optional<Missing> blocked;     // retry once this entry is known
  bool permanent = false;             // can never apply for this edge
};

// From the known entry x_l.s derive x_n.s, n = l.s, by edge reversal when
// the coefficient of x_n is q^k T_w, or with braid_units also when it is
// q^k times a signed product of generators along a reduced word.
RevertOutcome revert_edge(const MultTable& t, const CosetGraph& g,
                          const HeckeAlgebra& alg, std::uint32_t l, int s,
                          bool braid_units = true);

struct FillOptions {
  std::optional<std::uint64_t> seed;  // randomise sweep and attempt order
  bool eager_revert = true;           // revert right after each fill
  bool braid_units = true;            // see revert_edge
};

struct FillReport {
  std::size_t filled = 0;
  std::vector<Missing> missing;
  std::vector<std::string> steps;  // "x_9.2 = revert(x_8.2)"
  std::size_t sweeps = 0;
};

FillReport fixpoint_fill(MultTable& t, const Expansions& r,
                         const CosetGraph& g, const HeckeAlgebra& alg,
                         const FillOptions& opts = {});

// "x_3.1 = x_3.2'1'212" style description of one filled entry.
std::string describe_step(const MultTable& t, std::uint32_t l, int s);

}  // namespace hfree
