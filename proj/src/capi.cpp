#include "hfree/hfree.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "json.hpp"
#include "pipeline.hpp"

struct hfree_session {
  std::unique_ptr<hfree::RunResult> result;
};

namespace {

thread_local std::string last_error;

hfree_status fail(hfree_status s, std::string msg) {
  last_error = std::move(msg);
  return s;
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

// Runs f, translating exceptions into status codes.
template <class F>
hfree_status guarded(F&& f) {
  try {
    last_error.clear();
    return f();
  } catch (const hfree::UnknownCase& e) {
    return fail(HFREE_E_UNKNOWN_CASE, e.what());
  } catch (const hfree::SyntaxError& e) {
    return fail(HFREE_E_SYNTAX, e.what());
  } catch (const hfree::PresentationError& e) {
    return fail(HFREE_E_SYNTAX, e.what());
  } catch (const hfree::CosetLimitExceeded& e) {
    return fail(HFREE_E_COSET_LIMIT, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(HFREE_E_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(HFREE_E_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(HFREE_E_INTERNAL, e.what());
  }
}

nlohmann::json row_json(const hfree::TableRow& row) {
  return {{"case", row.spec.group},
          {"subgroup", row.spec.subgroup},
          {"mode", std::string(hfree::to_string(row.spec.mode))},
          {"shat", row.spec.shat},
          {"ordering", row.spec.ordering_label()},
          {"expected_missing", row.expected_missing},
          {"extended", row.extended}};
}

}  // namespace

extern "C" {

void hfree_options_init(hfree_options* opts) {
  if (opts) *opts = hfree_options{};
}

const char* hfree_version(void) { return "1.0.0"; }

const char* hfree_status_string(hfree_status s) {
  switch (s) {
    case HFREE_OK: return "ok";
    case HFREE_E_ARGUMENT: return "invalid argument";
    case HFREE_E_UNKNOWN_CASE: return "unknown case";
    case HFREE_E_SYNTAX: return "syntax error";
    case HFREE_E_COSET_LIMIT: return "coset limit exceeded";
    case HFREE_E_INCOMPLETE: return "table incomplete";
    case HFREE_E_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* hfree_last_error(void) { return last_error.c_str(); }

void hfree_string_free(char* s) { std::free(s); }

hfree_status hfree_catalog_names(char** out) {
  if (!out) return fail(HFREE_E_ARGUMENT, "null output pointer");
  return guarded([&] {
    std::string s;
    for (const auto& n : hfree::catalog_names()) s += std::string(n) + "\n";
    *out = dup(s);
    return HFREE_OK;
  });
}

hfree_status hfree_catalog_text(const char* name, char** out) {
  if (!name || !out) return fail(HFREE_E_ARGUMENT, "null argument");
  return guarded([&] {
    *out = dup(std::string(hfree::catalog_text(name)));
    return HFREE_OK;
  });
}

hfree_status hfree_group_order(const char* case_name, uint64_t max_cosets,
                               uint64_t* out) {
  if (!case_name || !out) return fail(HFREE_E_ARGUMENT, "null argument");
  return guarded([&] {
    hfree::EnumerationOptions eo;
    if (max_cosets) eo.max_cosets = max_cosets;
    *out = hfree::group_order(hfree::catalog(case_name), eo);
    return HFREE_OK;
  });
}

hfree_status hfree_suite_plan(const char* tier, char** out) {
  if (!tier || !out) return fail(HFREE_E_ARGUMENT, "null argument");
  return guarded([&] {
    nlohmann::json j;
    j["tier"] = tier;
    j["rows"] = nlohmann::json::array();
    for (const auto& row : hfree::suite_rows(tier)) {
      j["rows"].push_back(row_json(row));
    }
    nlohmann::json excluded = nlohmann::json::array();
    for (const auto& e : hfree::suite_exclusions(tier)) {
      excluded.push_back({{"case", e.group}, {"reason", e.reason}});
    }
    j["excluded"] = excluded;
    *out = dup(j.dump(2) + "\n");
    return HFREE_OK;
  });
}

hfree_status hfree_run(const hfree_options* opts, hfree_session** out) {
  if (!opts || !out) return fail(HFREE_E_ARGUMENT, "null argument");
  *out = nullptr;
  if (!opts->case_name && !opts->presentation_text) {
    return fail(HFREE_E_ARGUMENT, "no case given");
  }
  return guarded([&] {
    std::vector<int> subgroup, shat;
    if (opts->subgroup) subgroup = hfree::parse_digit_list(opts->subgroup);
    if (opts->shat) shat = hfree::parse_digit_list(opts->shat);
    const hfree::OrderMode mode = opts->order
                                      ? hfree::parse_order_mode(opts->order)
                                      : hfree::OrderMode::lex;
    hfree::RunConfig cfg =
        opts->presentation_text
            ? hfree::make_config(
                  hfree::parse_presentation(opts->presentation_text),
                  subgroup, mode, shat)
            : hfree::make_config(opts->case_name, subgroup, mode, shat);
    if (opts->max_cosets) cfg.enumeration.max_cosets = opts->max_cosets;
    if (opts->has_seed) cfg.fill.seed = opts->seed;
    cfg.fill.braid_units = !opts->strict_units;
    cfg.jobs = opts->jobs ? opts->jobs : 1;
    cfg.q1_check = opts->q1_check != 0;
    if (opts->verify) cfg.verify = hfree::parse_verify_mode(opts->verify);
    auto s = std::make_unique<hfree_session>();
    s->result = hfree::run_case(std::move(cfg));
    *out = s.release();
    return HFREE_OK;
  });
}

void hfree_session_free(hfree_session* s) { delete s; }

hfree_outcome hfree_session_outcome(const hfree_session* s) {
  return static_cast<hfree_outcome>(s->result->outcome());
}

uint32_t hfree_session_cosets(const hfree_session* s) {
  return s->result->table->rows();
}

size_t hfree_session_missing(const hfree_session* s) {
  return s->result->table->missing();
}

size_t hfree_session_violations(const hfree_session* s) {
  const auto& r = *s->result;
  size_t n = r.verify.violations.size();
  if (r.q1) n += r.q1->violations.size();
  if (r.relations_in_w) n += r.relations_in_w->failures.size();
  return n;
}

hfree_status hfree_session_label(const hfree_session* s, char** out) {
  if (!s || !out) return fail(HFREE_E_ARGUMENT, "null argument");
  return guarded([&] {
    *out = dup(s->result->config.spec.ordering_label());
    return HFREE_OK;
  });
}

hfree_status hfree_render(const hfree_session* s, hfree_artifact kind,
                          char** out) {
  if (!s || !out) return fail(HFREE_E_ARGUMENT, "null argument");
  const auto& r = *s->result;
  return guarded([&] {
    std::string text;
    switch (kind) {
      case HFREE_REPORT: text = hfree::report_json(r); break;
      case HFREE_TIMINGS: text = hfree::timings_json(r); break;
      case HFREE_BASIS:
        if (r.table->missing() != 0) {
          return fail(HFREE_E_INCOMPLETE,
                      "no basis: " + std::to_string(r.table->missing()) +
                          " entries missing");
        }
        text = hfree::basis_json(r);
        break;
      case HFREE_DOT: text = hfree::export_dot(r.graph, r.config.spec.group); break;
      case HFREE_TABLE: text = r.table->dump(*r.algebra); break;
      case HFREE_LOG: text = hfree::fill_log(r); break;
      case HFREE_COSETS: text = r.action.to_csv(); break;
      case HFREE_REPWORDS: text = hfree::repwords_json(r.graph); break;
      default: return fail(HFREE_E_ARGUMENT, "unknown artifact kind");
    }
    *out = dup(text);
    return HFREE_OK;
  });
}

hfree_status hfree_entry(const hfree_session* s, uint32_t coset, int gen,
                         char** out) {
  if (!s || !out) return fail(HFREE_E_ARGUMENT, "null argument");
  const auto& t = *s->result->table;
  if (coset < 1 || coset > t.rows() || gen < 1 || gen > t.ngens()) {
    return fail(HFREE_E_ARGUMENT, "entry out of range");
  }
  if (!t.has(coset - 1, gen)) {
    return fail(HFREE_E_INCOMPLETE, "entry not filled");
  }
  return guarded([&] {
    *out = dup(t.get(coset - 1, gen).to_string(*s->result->algebra));
    return HFREE_OK;
  });
}

}  // extern "C"
