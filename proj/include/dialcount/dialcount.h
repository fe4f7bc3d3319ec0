// Copyright 2026 The dialcount Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/* C interface to the dialcount library. Every fallible call returns a
 * dc_status; on failure dc_last_error() describes the problem (per thread).
 * Strings returned through `char**` are owned by the caller and released
 * with dc_string_free. Label lists are comma-separated ("a,b,c"); an empty
 * string is the empty set, and a NULL order means the canonical order. */

#ifndef DIALCOUNT_H
#define DIALCOUNT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(DIALCOUNT_BUILDING)
#    define DIALCOUNT_API __declspec(dllexport)
#  else
#    define DIALCOUNT_API __declspec(dllimport)
#  endif
#else
#  define DIALCOUNT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct dc_space dc_space;

typedef enum dc_status {
  DC_OK = 0,
  DC_ERR_INVALID_ARGUMENT = 1,
  DC_ERR_PARSE = 2,
  DC_ERR_IO = 3,
  DC_ERR_NOT_EQUIVALENCE = 4,
  DC_ERR_UNKNOWN_ELEMENT = 5,
  DC_ERR_UNKNOWN_ATTRIBUTE = 6,
  DC_ERR_UNKNOWN_RELATION = 7,
  DC_ERR_UNIVERSE_MISMATCH = 8,
  DC_ERR_BUDGET_EXCEEDED = 9,
  DC_ERR_RULE_VIOLATION = 10,
  DC_ERR_NOT_A_PREORDER = 11,
  DC_ERR_INTERNAL = 99
} dc_status;

/* snake_case name, e.g. "not_an_equivalence". */
DIALCOUNT_API const char* dc_status_name(dc_status status);
DIALCOUNT_API const char* dc_last_error(void);
DIALCOUNT_API void dc_string_free(char* text);
DIALCOUNT_API const char* dc_version(void);

/* ---- spaces ------------------------------------------------------------ */

/* Space-file JSON; `relation` selects a named relation (NULL/"" = default). */
DIALCOUNT_API dc_status dc_space_from_json(const char* json_text, const char* relation,
                                           dc_space** out);
DIALCOUNT_API dc_status dc_space_load(const char* path, const char* relation, dc_space** out);
/* Information table CSV; indiscernibility over the listed attributes. */
DIALCOUNT_API dc_status dc_space_from_csv(const char* csv_text, const char* attributes,
                                          dc_space** out);
DIALCOUNT_API dc_status dc_space_load_csv(const char* path, const char* attributes,
                                          dc_space** out);
/* The embedded worked example; relation is "R" or "Q". */
DIALCOUNT_API dc_status dc_space_paper_example(const char* relation, dc_space** out);
DIALCOUNT_API void dc_space_free(dc_space* space);

DIALCOUNT_API size_t dc_space_size(const dc_space* space);
DIALCOUNT_API dc_status dc_space_label(const dc_space* space, size_t index, const char** out);
/* Symmetrized relatedness of two labels. */
DIALCOUNT_API dc_status dc_space_related(const dc_space* space, const char* x, const char* y,
                                         int* out);
DIALCOUNT_API dc_status dc_space_is_equivalence(const dc_space* space, int* out);

/* what: "relation" | "classes" | "neighbourhoods" | "lower" | "upper" |
 *       "neighbourhood-lower" | "neighbourhood-upper" | "definite".
 * The set-valued queries read `set`. */
DIALCOUNT_API dc_status dc_space_query(const dc_space* space, const char* what, const char* set,
                                       char** out_json);

/* ---- counting ---------------------------------------------------------- */

/* method: "ipc" | "hpc" | "hppc" | "ippc". */
DIALCOUNT_API dc_status dc_count(const dc_space* space, const char* method, const char* order,
                                 char** out_json);
DIALCOUNT_API dc_status dc_induce(const dc_space* space, const char* method, const char* order,
                                  const char* set, char** out_json);

/* ---- granules ---------------------------------------------------------- */

/* mode: "hpc" (reconstruct from the HPC count of `order`), "maximal-ipc"
 * (enumerate orders, needs n <= budget), "check" (decisions about `set`). */
DIALCOUNT_API dc_status dc_granules(const dc_space* space, const char* mode, const char* order,
                                    const char* set, size_t budget, char** out_json);

/* ---- measures ---------------------------------------------------------- */

/* measure(Q, R): "pos" | "delta" | "gk" | "cons" | "gcons". `q` is the
 * dependent knowledge, `r` the approximating one. `consistency_constant`
 * ("p/q", integer or decimal) is read by cons and gcons; NULL means 0. */
DIALCOUNT_API dc_status dc_measure(const dc_space* q, const dc_space* r, const char* measure,
                                   const char* consistency_constant, char** out_json);

/* function: "k" | "k1" | "k2" | "k-star" | "k1-star" | "k2-star". */
DIALCOUNT_API dc_status dc_inclusion(const dc_space* space, const char* function, const char* x,
                                     const char* y, char** out_json);

/* ---- countability ------------------------------------------------------ */

/* method: "ippc" | "hppc". exact != 0 enumerates (n <= budget); otherwise
 * `samples` random orders are drawn from `seed`. */
DIALCOUNT_API dc_status dc_countability(const dc_space* space, const char* method, int exact,
                                        size_t budget, uint64_t samples, uint64_t seed,
                                        char** out_json);
DIALCOUNT_API dc_status dc_index_exact(const dc_space* space, const char* method, size_t budget,
                                       uint64_t* numerator, uint64_t* denominator);

/* ---- permutation quotient ---------------------------------------------- */

/* Signature classes of all n! orders (n <= budget) and, when with_table is
 * nonzero, the partial composition table (n <= table_budget). */
DIALCOUNT_API dc_status dc_cipca(const dc_space* space, size_t budget, int with_table,
                                 size_t table_budget, char** out_json);

/* ---- worked example ---------------------------------------------------- */

/* *erratum_set_matches is 1 when every divergence between the printed and
 * recomputed rows is one of the documented ones, else 0. */
DIALCOUNT_API dc_status dc_verify_paper_example(char** out_json, int* erratum_set_matches);

#ifdef __cplusplus
}
#endif

#endif /* DIALCOUNT_H */
