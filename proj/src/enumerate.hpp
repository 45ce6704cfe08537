#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "presentation.hpp"

namespace hfree {

// Right action of the involutive generators of W on the cosets of <J>.
// perm[g][c] is the image of coset c under generator label g + 1.
// Cosets are numbered in BFS order from the basepoint 0.
struct CosetAction {
  int ngens = 0;
  std::uint32_t n = 0;
  std::vector<std::vector<std::uint32_t>> perm;
  std::uint32_t basepoint = 0;

  std::uint32_t act(std::uint32_t c, int gen) const { return perm[gen - 1][c]; }
  // Inverse letters act like plain ones since every generator is an involution.
  std::uint32_t act(std::uint32_t c, const Word& w) const;

  // One row per coset, one column per generator, 1-based coset numbers.
  std::string to_csv() const;

  friend bool operator==(const CosetAction&, const CosetAction&) = default;
};

class CosetLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EnumerationOptions {
  std::size_t max_cosets = std::size_t{1} << 22;
};

// Relators of W over generator indices 0..m-1: u * reverse(v) for every
// relation, freely and cyclically reduced with s*s = 1, plus s*s for each
// generator.
std::vector<std::vector<std::uint8_t>> involutive_relators(
    const Presentation& p);

// HLT coset enumeration with lookahead. `subgroup` lists generator labels.
CosetAction todd_coxeter(const Presentation& p,
                         const std::vector<int>& subgroup,
                         const EnumerationOptions& opts = {});

// Same, from raw relators over generator indices 0..ngens-1.
CosetAction todd_coxeter(int ngens,
                         const std::vector<std::vector<std::uint8_t>>& relators,
                         const std::vector<int>& subgroup,
                         const EnumerationOptions& opts = {});

// |W|, i.e. the size of the regular action.
std::uint64_t group_order(const Presentation& p,
                          const EnumerationOptions& opts = {});

}  // namespace hfree
