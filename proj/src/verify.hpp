#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cosetgraph.hpp"
#include "enumerate.hpp"
#include "freeness.hpp"
#include "hecke.hpp"
#include "presentation.hpp"

namespace hfree {

struct RelationCheck {
  std::size_t checked = 0;
  std::vector<std::string> failures;  // "u = v" that differ somewhere in W
  bool ok() const { return failures.empty(); }
};

// Evaluates every relation and every companion check on all points of the
// regular action of W.
RelationCheck check_relations_in_W(const Presentation& p,
                                   const CosetAction& regular);

struct ActionReport {
  std::uint32_t n = 0;
  std::size_t missing = 0;
  std::size_t relations_checked = 0;
  std::size_t quadratics_checked = 0;
  std::vector<std::string> violations;
  std::string method = "exact";
  bool ok() const { return missing == 0 && violations.empty(); }
};

// On a complete table: x_l.u == x_l.v for every relation and
// (x_l.s).s == (q-1) x_l.s + q x_l, all computed through the table alone.
ActionReport verify_action(const MultTable& t, const Presentation& p,
                           const HeckeAlgebra& alg, unsigned jobs = 1);

// The same identities, checked on random vectors over the R-basis
// {T_w x_k} with q specialised to a random t in GF(2^61-1). Each round misses
// a false identity with probability below (degree + 1) / 2^61.
ActionReport verify_action_modular(const MultTable& t, const Presentation& p,
                                   const HeckeAlgebra& alg, std::uint64_t seed,
                                   int rounds = 2);

struct Q1Report {
  std::size_t checked = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// At q = 1 each filled entry x_l.s must collapse to w x_n with n = l.s and
// rep(l) s = w rep(n) in W, checked in the regular action of W.
Q1Report q1_oracle(const MultTable& t, const CosetGraph& g,
                   const HeckeAlgebra& alg, const CosetAction& regular);

// Representative words of a completed table: the H0-basis of H.
std::vector<std::string> emit_basis(const CosetGraph& g, const MultTable& t);

}  // namespace hfree
