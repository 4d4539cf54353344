/*
 * (C) Copyright 2026 rado developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 *
 * C interface to the rado engine: exact generalized Schur number search,
 * closed-form bounds, colour certificates and reproduction reports for
 * equations  c1 x1 + ... + c_{k-1} x_{k-1} = x_k + shift  over {1..n}.
 *
 * Conventions:
 *  - every function returns a rado_status; results come out through
 *    pointer parameters and are only valid when RADO_OK is returned;
 *  - objects are opaque handles released with the matching *_free/close;
 *  - strings returned through char** are heap copies; release them with
 *    rado_string_free;
 *  - rado_last_error() describes the most recent failure on this thread.
 */
#ifndef RADO_H
#define RADO_H

#include <stdint.h>

#if defined(_WIN32)
#define RADO_API __declspec(dllexport)
#else
#define RADO_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rado_status {
  RADO_OK = 0,
  RADO_ERR_ARGUMENT = 1,     /* malformed input (parse error, bad handle) */
  RADO_ERR_PRECONDITION = 2, /* valid input outside an operation's domain */
  RADO_ERR_INTEGRITY = 3,    /* stored certificate fails verification */
  RADO_ERR_IO = 4,           /* filesystem failure */
  RADO_ERR_INTERNAL = 5,     /* engine invariant violated; report a bug */
  RADO_ERR_TIMEOUT = 6       /* budget exhausted with no usable result */
} rado_status;

typedef enum rado_search_state {
  RADO_SEARCH_EXACT = 0,       /* value proved by exhaustion */
  RADO_SEARCH_EXCEEDS_CAP = 1, /* witness of length cap found; value > cap */
  RADO_SEARCH_TIMEOUT = 2      /* budget hit; value is best length found */
} rado_search_state;

typedef enum rado_regularity {
  RADO_REGULAR_POSITIVE_RATIO = 0,
  RADO_REGULAR_NEGATIVE_RATIO_HOM_REGULAR = 1,
  RADO_NOT_REGULAR = 2,
  RADO_DEGENERATE_S = 3,
  RADO_HOMOGENEOUS_REGULAR = 4,
  RADO_HOMOGENEOUS_NOT_REGULAR = 5
} rado_regularity;

typedef struct rado_equation rado_equation;
typedef struct rado_coloring rado_coloring;
typedef struct rado_result rado_result;
typedef struct rado_store rado_store;

typedef struct rado_search_options {
  int threads;        /* worker threads; <= 1 means single-threaded */
  int64_t budget_ms;  /* wall-clock budget; <= 0 means unlimited */
  int partition_depth; /* prefix depth for splitting work across threads */
} rado_search_options;

/* Fills options with the defaults (1 thread, no budget, depth 10). */
RADO_API void rado_search_options_init(rado_search_options* options);

RADO_API const char* rado_engine_version(void);

/* Message for the most recent error on the calling thread ("" if none). */
RADO_API const char* rado_last_error(void);

RADO_API void rado_string_free(char* s);

/* ---- equations -------------------------------------------------------- */

RADO_API rado_status rado_equation_create(const int64_t* coeffs,
                                          int64_t num_coeffs, int64_t shift,
                                          rado_equation** out);
/* Accepts the CLI syntax, e.g. "coeffs=1,1 shift=-1". */
RADO_API rado_status rado_equation_parse(const char* text,
                                         rado_equation** out);
RADO_API void rado_equation_free(rado_equation* eq);
RADO_API rado_status rado_equation_format(const rado_equation* eq,
                                          char** out);
RADO_API rado_status rado_equation_s(const rado_equation* eq, int64_t* out);
RADO_API rado_status rado_equation_regularity(const rado_equation* eq,
                                              rado_regularity* out);
RADO_API const char* rado_regularity_name(rado_regularity regularity);

/* ---- colorings -------------------------------------------------------- */

RADO_API rado_status rado_coloring_create(int num_colors, const int* colors,
                                          int64_t length,
                                          rado_coloring** out);
/* Whitespace-separated colour list, e.g. "1 2 2 1". */
RADO_API rado_status rado_coloring_parse(const char* text, int num_colors,
                                         rado_coloring** out);
RADO_API void rado_coloring_free(rado_coloring* coloring);
RADO_API rado_status rado_coloring_format(const rado_coloring* coloring,
                                          char** out);
RADO_API rado_status rado_coloring_length(const rado_coloring* coloring,
                                          int64_t* out);
RADO_API rado_status rado_coloring_num_colors(const rado_coloring* coloring,
                                              int* out);
/* Colour of position pos (1-based). */
RADO_API rado_status rado_coloring_at(const rado_coloring* coloring,
                                      int64_t pos, int* out);

/* out = 1 when the coloring admits no monochromatic solution. */
RADO_API rado_status rado_is_good_coloring(const rado_equation* eq,
                                           const rado_coloring* coloring,
                                           int* out);
/* out = 1 when the coloring is good for every shift -j, j = 0..s. */
RADO_API rado_status rado_is_excellent_coloring(const int64_t* coeffs,
                                                int64_t num_coeffs,
                                                const rado_coloring* coloring,
                                                int* out);

/* ---- search ----------------------------------------------------------- */

RADO_API rado_status rado_search_rado_number(
    const rado_equation* eq, int num_colors, int64_t cap,
    const rado_search_options* options, rado_result** out);
RADO_API rado_status rado_search_max_excellent(
    const int64_t* coeffs, int64_t num_coeffs, int num_colors, int64_t cap,
    const rado_search_options* options, rado_result** out);
/* out is NULL when no good coloring of length n exists (proved). */
RADO_API rado_status rado_find_good_coloring(
    const rado_equation* eq, int num_colors, int64_t n,
    const rado_search_options* options, rado_coloring** out);

RADO_API rado_status rado_result_state(const rado_result* result,
                                       rado_search_state* out);
RADO_API rado_status rado_result_value(const rado_result* result,
                                       int64_t* out);
/* Borrowed reference; valid until rado_result_free. */
RADO_API rado_status rado_result_witness(const rado_result* result,
                                         const rado_coloring** out);
RADO_API rado_status rado_result_elapsed_ms(const rado_result* result,
                                            int64_t* out);
RADO_API rado_status rado_result_to_json(const rado_result* result,
                                         char** out);
RADO_API void rado_result_free(rado_result* result);

/* ---- closed-form bounds and constructions ----------------------------- */

RADO_API rado_status rado_upper_bound_neg(const int64_t* coeffs,
                                          int64_t num_coeffs, int64_t b,
                                          int64_t r_hom, int64_t* out);
RADO_API rado_status rado_lower_bound_neg(const int64_t* coeffs,
                                          int64_t num_coeffs, int64_t b,
                                          int64_t excellent_n, int64_t* out);
RADO_API rado_status rado_lift_coloring_neg(const rado_coloring* excellent,
                                            const int64_t* coeffs,
                                            int64_t num_coeffs, int64_t b,
                                            rado_coloring** out);
RADO_API rado_status rado_upper_bound_pos(const int64_t* coeffs,
                                          int64_t num_coeffs, int64_t b,
                                          int64_t r_hom, int64_t* out);
RADO_API rado_status rado_lower_bound_pos(const int64_t* coeffs,
                                          int64_t num_coeffs, int64_t b,
                                          int64_t excellent_n, int64_t* out);
RADO_API rado_status rado_lift_coloring_pos(const rado_coloring* excellent,
                                            const int64_t* coeffs,
                                            int64_t num_coeffs, int64_t b,
                                            rado_coloring** out);
RADO_API rado_status rado_trivial_bounds(const int64_t* coeffs,
                                         int64_t num_coeffs, int64_t b,
                                         int64_t* out_lower,
                                         int64_t* out_upper);
RADO_API rado_status rado_injection_neg(int64_t w, int64_t b, int64_t s,
                                        int64_t* out);
RADO_API rado_status rado_injection_pos(int64_t w, int64_t r_hom, int64_t m,
                                        int64_t q, int64_t* out);

/* Combined report; r_hom/excellent_n may be NULL when unknown.  With
 * consult_registry nonzero a missing r_hom is looked up in the table of
 * published homogeneous values. */
RADO_API rado_status rado_bounds_report(const rado_equation* eq,
                                        int num_colors,
                                        const int64_t* r_hom,
                                        const int64_t* excellent_n,
                                        int consult_registry,
                                        char** out_json);

/* ---- known values and formulas ---------------------------------------- */

/* source: 0 = cited, 1 = derived by algebra, 2 = derived by search. */
RADO_API rado_status rado_known_R(const int64_t* coeffs, int64_t num_coeffs,
                                  int num_colors, int* out_found,
                                  int64_t* out_value, int* out_source,
                                  char** out_citation);
/* family: "neg2", "neg3", "pos2" or "pos3". */
RADO_API rado_status rado_formula_family_value(const char* family, int64_t k,
                                               int64_t m, int64_t* out);
RADO_API rado_status rado_conjecture_value(const int64_t* coeffs,
                                           int64_t num_coeffs, int64_t shift,
                                           int64_t r_hom, int64_t* out);

/* ---- reports ----------------------------------------------------------- */

RADO_API rado_status rado_conjecture_check(const int64_t* coeffs,
                                           int64_t num_coeffs, int num_colors,
                                           const int64_t* shifts,
                                           int64_t num_shifts, int64_t cap,
                                           const rado_search_options* options,
                                           char** out_json);
/* scope: "all", "section-2", "section-3" or "conjecture".  store_dir may
 * be NULL to run without caching.  force nonzero ignores cached results. */
RADO_API rado_status rado_reproduce(const char* scope, const char* store_dir,
                                    int force,
                                    const rado_search_options* options,
                                    char** out_json);
RADO_API rado_status rado_render_text(const char* report_json, char** out);
RADO_API rado_status rado_render_csv(const char* report_json, char** out);

/* ---- certificate store ------------------------------------------------- */

RADO_API rado_status rado_store_open(const char* directory,
                                     rado_store** out);
RADO_API void rado_store_close(rado_store* store);
RADO_API rado_status rado_store_save_good(rado_store* store,
                                          const rado_equation* eq,
                                          int num_colors,
                                          const rado_coloring* coloring,
                                          int exact, char** out_id);
RADO_API rado_status rado_store_save_excellent(rado_store* store,
                                               const int64_t* coeffs,
                                               int64_t num_coeffs,
                                               int num_colors,
                                               const rado_coloring* coloring,
                                               int exact, char** out_id);
/* length_or_minus1 = -1 loads the longest stored certificate.  When no
 * matching certificate exists, returns RADO_OK with *out_found = 0. */
RADO_API rado_status rado_store_load_good(rado_store* store,
                                          const rado_equation* eq,
                                          int num_colors,
                                          int64_t length_or_minus1,
                                          int* out_found,
                                          rado_coloring** out_witness,
                                          int* out_exact);
RADO_API rado_status rado_store_load_excellent(rado_store* store,
                                               const int64_t* coeffs,
                                               int64_t num_coeffs,
                                               int num_colors,
                                               int64_t length_or_minus1,
                                               int* out_found,
                                               rado_coloring** out_witness,
                                               int* out_exact);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* RADO_H */
