#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>
#include <string_view>

#include "cosetgraph.hpp"
#include "enumerate.hpp"
#include "freeness.hpp"
#include "hecke.hpp"
#include "presentation.hpp"
#include "verify.hpp"

namespace hfree {

// exact: Laurent polynomial arithmetic on every row. modular: random q and
// random vectors mod 2^61-1. automatic: exact while the table holds at most
// kExactVerifyLimit Laurent terms, modular above.
enum class VerifyMode { automatic, exact, modular };
inline constexpr std::size_t kExactVerifyLimit = 1000000;

// Number of (w, q^k) terms over all filled entries.
std::size_t coefficient_terms(const MultTable& t);
VerifyMode parse_verify_mode(std::string_view s);

struct RunConfig {
  Presentation presentation;
  CaseSpec spec;
  EnumerationOptions enumeration;
  FillOptions fill;
  unsigned jobs = 1;
  bool q1_check = false;
  VerifyMode verify = VerifyMode::automatic;
  std::uint64_t verify_seed = 0x9e3779b97f4a7c15;
};

// Catalogued case with optional overrides; empty vectors mean "default".
RunConfig make_config(Presentation p, std::vector<int> subgroup,
                      OrderMode mode, std::vector<int> shat);
RunConfig make_config(std::string_view case_name, std::vector<int> subgroup,
                      OrderMode mode, std::vector<int> shat);

struct Timings {
  double enumerate_ms = 0, graph_ms = 0, hecke_ms = 0, fill_ms = 0,
         verify_ms = 0, q1_ms = 0;
};

enum class Outcome { complete = 0, incomplete = 10, inconsistent = 20 };

// Everything produced by enumerate -> graph -> fill -> verify.
struct RunResult {
  RunConfig config;
  CosetAction action;
  CosetGraph graph;
  std::unique_ptr<HeckeAlgebra> algebra;
  std::unique_ptr<MultTable> table;
  FillReport fill;
  ActionReport verify;
  std::optional<CosetAction> regular;  // only with q1_check
  std::optional<RelationCheck> relations_in_w;
  std::optional<Q1Report> q1;
  Timings timings;

  Outcome outcome() const;
};

std::unique_ptr<RunResult> run_case(RunConfig config);

// Deterministic JSON report (no timings).
std::string report_json(const RunResult& r);
std::string timings_json(const RunResult& r);
// One line per step-3 fill, in fill order.
std::string fill_log(const RunResult& r);
std::string basis_json(const RunResult& r);

// Rows of the result tables for a tier: "fast" or "full".
std::vector<TableRow> suite_rows(std::string_view tier);

struct Exclusion {
  std::string group;
  std::string reason;
};
// Cases a tier does not run, with the reason printed by the suite.
std::vector<Exclusion> suite_exclusions(std::string_view tier);

}  // namespace hfree
