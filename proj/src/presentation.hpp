#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "word.hpp"

namespace hfree {

struct Relation {
  Word lhs;
  Word rhs;
};

class PresentationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownCase : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Generators 1..ngens with both sides of every relation kept as written.
// Generators are involutions in W; the Hecke quadratic relation is implied.
struct Presentation {
  std::string name;
  int ngens = 0;
  std::vector<Relation> relations;
  // Identities that must hold in W but are not used for filling.
  std::vector<Relation> checks;
  std::vector<int> default_subgroup;

  // Relations whose letters all lie in `gens`.
  std::vector<Relation> restricted_to(const std::vector<int>& gens) const;
  void validate() const;
};

enum class OrderMode { lex, dc };

std::string_view to_string(OrderMode m);
OrderMode parse_order_mode(std::string_view s);

// One row of the result tables: which parabolic and which coset ordering.
struct CaseSpec {
  std::string group;
  std::vector<int> subgroup;  // J, sorted
  OrderMode mode = OrderMode::lex;
  std::vector<int> shat;      // permutation of 1..m

  void validate(int ngens) const;
  // "(1,2,3)" for lex, "[1,2,3]" for dc.
  std::string ordering_label() const;
};

// Line-based text format:
//   group <NAME> / gens <m> / subgroup <d>( <d>)* / rel <word> = <word>
//   check <word> = <word>    (verified in W only)
// '#' starts a comment.
Presentation parse_presentation(std::string_view text);
std::string print_presentation(const Presentation& p);

// Comma or space separated digit list, e.g. "1,2,3".
std::vector<int> parse_digit_list(std::string_view text);

const std::vector<std::string>& catalog_names();
std::string_view catalog_text(std::string_view name);
Presentation catalog(std::string_view name);

// Known order of W and index of the default parabolic, as tabulated.
struct CatalogSizes {
  std::uint64_t group_order;
  std::uint64_t index;
  std::uint64_t parabolic_order;
};
CatalogSizes catalog_sizes(std::string_view name);

struct TableRow {
  CaseSpec spec;
  int expected_missing;  // 0 for a checkmark
  bool extended;         // belongs to the slow tier
};

// All rows of the published result tables, in table order.
const std::vector<TableRow>& result_table();

}  // namespace hfree
