#include "pipeline.hpp"

#include <algorithm>
#include <chrono>

#include "json.hpp"

namespace hfree {

namespace {

class Stopwatch {
 public:
  double lap_ms() {
    auto now = std::chrono::steady_clock::now();
    double ms = std::chrono::duration<double, std::milli>(now - last_).count();
    last_ = now;
    return ms;
  }

 private:
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

std::string entry_label(const Missing& m) {
  return "x_" + std::to_string(m.coset + 1) + "." + std::to_string(m.gen);
}

}  // namespace

RunConfig make_config(std::string_view case_name, std::vector<int> subgroup,
                      OrderMode mode, std::vector<int> shat) {
  return make_config(catalog(case_name), std::move(subgroup), mode,
                     std::move(shat));
}

RunConfig make_config(Presentation p, std::vector<int> subgroup,
                      OrderMode mode, std::vector<int> shat) {
  p.validate();
  RunConfig c;
  c.presentation = std::move(p);
  c.spec.group = c.presentation.name;
  c.spec.subgroup =
      subgroup.empty() ? c.presentation.default_subgroup : std::move(subgroup);
  std::sort(c.spec.subgroup.begin(), c.spec.subgroup.end());
  c.spec.mode = mode;
  if (shat.empty()) {
    for (int g = 1; g <= c.presentation.ngens; ++g) shat.push_back(g);
  }
  c.spec.shat = std::move(shat);
  c.spec.validate(c.presentation.ngens);
  return c;
}

Outcome RunResult::outcome() const {
  const bool q1_bad = q1 && !q1->ok();
  const bool rel_bad = relations_in_w && !relations_in_w->ok();
  if (!verify.violations.empty() && table->missing() == 0) {
    return Outcome::inconsistent;
  }
  if (q1_bad || rel_bad) return Outcome::inconsistent;
  return table->missing() == 0 ? Outcome::complete : Outcome::incomplete;
}

std::size_t coefficient_terms(const MultTable& t) {
  std::size_t n = 0;
  for (std::uint32_t l = 0; l < t.rows(); ++l) {
    for (int s = 1; s <= t.ngens(); ++s) {
      if (!t.has(l, s)) continue;
      for (const auto& [k, h] : t.get(l, s).terms()) {
        for (const auto& [w, c] : h.terms()) n += c.terms().size();
      }
    }
  }
  return n;
}

VerifyMode parse_verify_mode(std::string_view s) {
  if (s == "auto") return VerifyMode::automatic;
  if (s == "exact") return VerifyMode::exact;
  if (s == "modular") return VerifyMode::modular;
  throw std::invalid_argument("verify mode must be auto, exact or modular, got '" +
                              std::string(s) + "'");
}

std::unique_ptr<RunResult> run_case(RunConfig config) {
  config.presentation.validate();
  config.spec.validate(config.presentation.ngens);
  auto r = std::make_unique<RunResult>();
  r->config = std::move(config);
  const RunConfig& c = r->config;
  Stopwatch sw;

  r->action = todd_coxeter(c.presentation, c.spec.subgroup, c.enumeration);
  r->timings.enumerate_ms = sw.lap_ms();

  r->graph = build_graph(r->action, c.spec);
  r->timings.graph_ms = sw.lap_ms();

  r->algebra = std::make_unique<HeckeAlgebra>(
      CoxeterData(c.presentation, c.spec.subgroup, c.enumeration));
  r->timings.hecke_ms = sw.lap_ms();

  r->table = std::make_unique<MultTable>(init_table(r->graph, *r->algebra));
  r->fill = fixpoint_fill(*r->table, cyclic_expansions(c.presentation),
                          r->graph, *r->algebra, c.fill);
  r->timings.fill_ms = sw.lap_ms();

  if (r->table->missing() == 0) {
    const bool exact =
        c.verify == VerifyMode::exact ||
        (c.verify == VerifyMode::automatic &&
         coefficient_terms(*r->table) <= kExactVerifyLimit);
    r->verify = exact ? verify_action(*r->table, c.presentation, *r->algebra, c.jobs)
                      : verify_action_modular(*r->table, c.presentation,
                                              *r->algebra, c.verify_seed);
  } else {
    r->verify.n = r->table->rows();
    r->verify.missing = r->table->missing();
    r->verify.method = "none";
  }
  r->timings.verify_ms = sw.lap_ms();

  if (c.q1_check) {
    r->regular = todd_coxeter(c.presentation, {}, c.enumeration);
    r->relations_in_w = check_relations_in_W(c.presentation, *r->regular);
    r->q1 = q1_oracle(*r->table, r->graph, *r->algebra, *r->regular);
    r->timings.q1_ms = sw.lap_ms();
  }
  return r;
}

std::string report_json(const RunResult& r) {
  using nlohmann::json;
  const auto& spec = r.config.spec;
  json j;
  j["case"] = spec.group;
  j["mode"] = std::string(to_string(spec.mode));
  j["shat"] = spec.shat;
  j["subgroup"] = spec.subgroup;
  j["ordering"] = spec.ordering_label();
  j["n"] = r.table->rows();
  j["parabolic_order"] = r.algebra->dimension();
  j["filled_by_fill"] = r.fill.filled;
  j["sweeps"] = r.fill.sweeps;
  j["missing"] = r.table->missing();
  json missing = json::array();
  for (const auto& m : r.fill.missing) missing.push_back(entry_label(m));
  j["missing_entries"] = missing;
  j["verification"] = r.verify.method;
  j["coefficient_terms"] = coefficient_terms(*r.table);
  j["relations_checked"] = r.verify.relations_checked;
  j["quadratics_checked"] = r.verify.quadratics_checked;
  j["violations"] = r.verify.violations;
  if (r.regular) j["group_order"] = r.regular->n;
  if (r.relations_in_w) {
    j["relations_in_W"] = {{"checked", r.relations_in_w->checked},
                           {"failures", r.relations_in_w->failures}};
  }
  if (r.q1) {
    j["q1_check"] = {{"checked", r.q1->checked},
                     {"violations", r.q1->violations}};
  }
  const Outcome o = r.outcome();
  j["result"] = o == Outcome::complete     ? "complete"
                : o == Outcome::incomplete ? "incomplete"
                                           : "inconsistent";
  if (o == Outcome::complete) {
    // x_1 is the identity, so the H0-span of the x_l is a right ideal
    // containing 1, i.e. all of H.
    const auto span = static_cast<std::uint64_t>(r.algebra->dimension()) *
                      r.table->rows();
    j["conclusion"] = "H is generated by " + std::to_string(r.table->rows()) +
                      " elements over H0, hence spanned by " +
                      std::to_string(span) + " elements over Z[q,q^-1]";
    j["spanning_set_size"] = span;
  }
  return j.dump(2) + "\n";
}

std::string timings_json(const RunResult& r) {
  nlohmann::json j = {{"enumerate_ms", r.timings.enumerate_ms},
                      {"graph_ms", r.timings.graph_ms},
                      {"hecke_ms", r.timings.hecke_ms},
                      {"fill_ms", r.timings.fill_ms},
                      {"verify_ms", r.timings.verify_ms},
                      {"q1_ms", r.timings.q1_ms}};
  return j.dump(2) + "\n";
}

std::string fill_log(const RunResult& r) {
  std::string out;
  for (const auto& s : r.fill.steps) out += s + "\n";
  return out;
}

std::string basis_json(const RunResult& r) {
  nlohmann::json j = emit_basis(r.graph, *r.table);
  return j.dump() + "\n";
}

std::vector<TableRow> suite_rows(std::string_view tier) {
  if (tier != "fast" && tier != "full") {
    throw std::invalid_argument("tier must be 'fast' or 'full'");
  }
  std::vector<TableRow> out;
  for (const auto& row : result_table()) {
    if (tier == "full" || !row.extended) out.push_back(row);
  }
  return out;
}

std::vector<Exclusion> suite_exclusions(std::string_view tier) {
  suite_rows(tier);  // validates the name
  std::vector<Exclusion> out = {
      {"G34",
       "needs a two-layer computation through G33 that takes weeks on one "
       "machine; not run"}};
  if (tier == "fast") {
    out.push_back({"G31, G33A4, G33D4", "extended tier, run with 'full'"});
  }
  return out;
}

}  // namespace hfree
