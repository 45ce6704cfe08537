#ifndef HFREE_HFREE_H
#define HFREE_HFREE_H

#include <stddef.h>
#include <stdint.h>

#if defined(HFREE_BUILDING_LIBRARY)
#define HFREE_API __attribute__((visibility("default")))
#else
#define HFREE_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hfree_status {
  HFREE_OK = 0,
  HFREE_E_ARGUMENT = 1,      /* null pointer, bad subgroup/ordering, bad tier */
  HFREE_E_UNKNOWN_CASE = 2,
  HFREE_E_SYNTAX = 3,        /* presentation text or word did not parse */
  HFREE_E_COSET_LIMIT = 4,   /* enumeration exceeded max_cosets */
  HFREE_E_INCOMPLETE = 5,    /* artifact needs a complete table */
  HFREE_E_INTERNAL = 99
} hfree_status;

/* Same numbers as the CLI exit codes. */
typedef enum hfree_outcome {
  HFREE_COMPLETE = 0,
  HFREE_INCOMPLETE = 10,
  HFREE_INCONSISTENT = 20
} hfree_outcome;

typedef enum hfree_artifact {
  HFREE_REPORT = 0,   /* JSON, deterministic */
  HFREE_TIMINGS = 1,  /* JSON, wall clock per stage */
  HFREE_BASIS = 2,    /* JSON array of representative words */
  HFREE_DOT = 3,
  HFREE_TABLE = 4,    /* one "x<l>.<s> = ..." line per filled entry */
  HFREE_LOG = 5,      /* fill steps in order */
  HFREE_COSETS = 6,   /* CSV of the permutation action */
  HFREE_REPWORDS = 7  /* JSON, available for incomplete tables too */
} hfree_artifact;

typedef struct hfree_session hfree_session;

typedef struct hfree_options {
  const char* case_name;          /* catalogue name, e.g. "G24" */
  const char* presentation_text;  /* optional; replaces the catalogue entry */
  const char* subgroup;           /* "2,3"; NULL for the default */
  const char* order;              /* "lex" or "dc"; NULL for lex */
  const char* shat;               /* "1,2,3"; NULL for 1..m */
  uint64_t max_cosets;            /* 0 for the default */
  int has_seed;
  uint64_t seed;                  /* shuffles the fill order */
  unsigned jobs;                  /* verification threads, 0 means 1 */
  int q1_check;                   /* also enumerate W and run the q=1 oracle */
  int strict_units;               /* revert only on q^k T_w coefficients */
  const char* verify;             /* "auto", "exact" or "modular"; NULL for auto */
} hfree_options;

HFREE_API void hfree_options_init(hfree_options* opts);

HFREE_API const char* hfree_version(void);
HFREE_API const char* hfree_status_string(hfree_status s);
/* Message for the last failed call on this thread ("" if none). */
HFREE_API const char* hfree_last_error(void);

/* Strings returned through char** belong to the caller. */
HFREE_API void hfree_string_free(char* s);

/* Newline separated catalogue names. */
HFREE_API hfree_status hfree_catalog_names(char** out);
HFREE_API hfree_status hfree_catalog_text(const char* name, char** out);

/* |W| by enumerating the regular action. */
HFREE_API hfree_status hfree_group_order(const char* case_name,
                                         uint64_t max_cosets, uint64_t* out);

/* JSON rows for "fast" or "full", plus cases left out and why. */
HFREE_API hfree_status hfree_suite_plan(const char* tier, char** out);

HFREE_API hfree_status hfree_run(const hfree_options* opts,
                                 hfree_session** out);
HFREE_API void hfree_session_free(hfree_session* s);

HFREE_API hfree_outcome hfree_session_outcome(const hfree_session* s);
HFREE_API uint32_t hfree_session_cosets(const hfree_session* s);
HFREE_API size_t hfree_session_missing(const hfree_session* s);
HFREE_API size_t hfree_session_violations(const hfree_session* s);
/* Ordering label such as "[1,2*,3*]". */
HFREE_API hfree_status hfree_session_label(const hfree_session* s, char** out);

HFREE_API hfree_status hfree_render(const hfree_session* s,
                                    hfree_artifact kind, char** out);

/* Entry x_l.s with 1-based l, or HFREE_E_INCOMPLETE if still missing. */
HFREE_API hfree_status hfree_entry(const hfree_session* s, uint32_t coset,
                                   int gen, char** out);

#ifdef __cplusplus
}
#endif

#endif
