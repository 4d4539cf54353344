/*
 * (C) Copyright 2026 rado developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "rado/rado.h"

#include <chrono>
#include <cstring>
#include <filesystem>
#include <ios>
#include <json.hpp>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include "core/bounds.hpp"
#include "core/coloring.hpp"
#include "core/equation.hpp"
#include "core/errors.hpp"
#include "core/registry.hpp"
#include "core/repro.hpp"
#include "core/search.hpp"
#include "core/serialize.hpp"
#include "core/store.hpp"
#include "core/version.hpp"

struct rado_equation {
  rado::Equation eq;
};

struct rado_coloring {
  rado::Coloring coloring;
};

struct rado_result {
  rado_search_state state;
  int64_t value;
  rado_coloring witness;
  int64_t elapsed_ms;
  std::string json;
};

struct rado_store {
  rado::CertificateStore store;
};

namespace {

thread_local std::string g_last_error;

template <typename F>
rado_status guarded(F&& f) {
  try {
    f();
    g_last_error.clear();
    return RADO_OK;
  } catch (const rado::precondition_error& e) {
    g_last_error = e.what();
    return RADO_ERR_PRECONDITION;
  } catch (const rado::integrity_error& e) {
    g_last_error = e.what();
    return RADO_ERR_INTEGRITY;
  } catch (const rado::timeout_error& e) {
    g_last_error = e.what();
    return RADO_ERR_TIMEOUT;
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return RADO_ERR_ARGUMENT;
  } catch (const std::filesystem::filesystem_error& e) {
    g_last_error = e.what();
    return RADO_ERR_IO;
  } catch (const std::ios_base::failure& e) {
    g_last_error = e.what();
    return RADO_ERR_IO;
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return RADO_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return RADO_ERR_INTERNAL;
  }
}

void require(const void* p, const char* name) {
  if (!p) throw std::invalid_argument(std::string(name) + " must not be null");
}

std::vector<rado::Int> to_vec(const int64_t* coeffs, int64_t num_coeffs) {
  require(coeffs, "coeffs");
  if (num_coeffs < 1) {
    throw std::invalid_argument("num_coeffs must be at least 1");
  }
  return std::vector<rado::Int>(coeffs, coeffs + num_coeffs);
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

rado::SearchOptions to_options(const rado_search_options* options) {
  rado::SearchOptions out;
  if (!options) return out;
  out.threads = options->threads;
  if (options->budget_ms > 0) {
    out.budget = std::chrono::milliseconds(options->budget_ms);
  }
  out.partition_depth = options->partition_depth;
  return out;
}

rado_search_state to_state(rado::SearchStatus status) {
  switch (status) {
    case rado::SearchStatus::Exact:
      return RADO_SEARCH_EXACT;
    case rado::SearchStatus::ExceedsCap:
      return RADO_SEARCH_EXCEEDS_CAP;
    case rado::SearchStatus::Timeout:
      return RADO_SEARCH_TIMEOUT;
  }
  return RADO_SEARCH_TIMEOUT;
}

rado_result* make_result(const rado::RadoResult& r) {
  return new rado_result{to_state(r.status), r.value,
                         rado_coloring{r.witness}, r.elapsed.count(),
                         rado::to_json(r)};
}

rado_result* make_result(const rado::ExcellenceResult& r) {
  return new rado_result{to_state(r.status), r.value,
                         rado_coloring{r.witness}, r.elapsed.count(),
                         rado::to_json(r)};
}

}  // namespace

extern "C" {

void rado_search_options_init(rado_search_options* options) {
  if (!options) return;
  const rado::SearchOptions defaults;
  options->threads = defaults.threads;
  options->budget_ms = 0;
  options->partition_depth = defaults.partition_depth;
}

const char* rado_engine_version(void) { return rado::kEngineVersion; }

const char* rado_last_error(void) { return g_last_error.c_str(); }

void rado_string_free(char* s) { delete[] s; }

/* ---- equations -------------------------------------------------------- */

rado_status rado_equation_create(const int64_t* coeffs, int64_t num_coeffs,
                                 int64_t shift, rado_equation** out) {
  return guarded([&] {
    require(out, "out");
    *out = new rado_equation{rado::Equation(to_vec(coeffs, num_coeffs),
                                            shift)};
  });
}

rado_status rado_equation_parse(const char* text, rado_equation** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = new rado_equation{rado::Equation::parse(text)};
  });
}

void rado_equation_free(rado_equation* eq) { delete eq; }

rado_status rado_equation_format(const rado_equation* eq, char** out) {
  return guarded([&] {
    require(eq, "eq");
    require(out, "out");
    *out = dup_string(eq->eq.str());
  });
}

rado_status rado_equation_s(const rado_equation* eq, int64_t* out) {
  return guarded([&] {
    require(eq, "eq");
    require(out, "out");
    *out = eq->eq.s();
  });
}

rado_status rado_equation_regularity(const rado_equation* eq,
                                     rado_regularity* out) {
  return guarded([&] {
    require(eq, "eq");
    require(out, "out");
    switch (rado::regularity_status(eq->eq)) {
      case rado::RegularityStatus::RegularPositiveRatio:
        *out = RADO_REGULAR_POSITIVE_RATIO;
        break;
      case rado::RegularityStatus::RegularNegativeRatioHomRegular:
        *out = RADO_REGULAR_NEGATIVE_RATIO_HOM_REGULAR;
        break;
      case rado::RegularityStatus::NotRegular:
        *out = RADO_NOT_REGULAR;
        break;
      case rado::RegularityStatus::DegenerateS:
        *out = RADO_DEGENERATE_S;
        break;
      case rado::RegularityStatus::HomogeneousRegular:
        *out = RADO_HOMOGENEOUS_REGULAR;
        break;
      case rado::RegularityStatus::HomogeneousNotRegular:
        *out = RADO_HOMOGENEOUS_NOT_REGULAR;
        break;
    }
  });
}

const char* rado_regularity_name(rado_regularity regularity) {
  switch (regularity) {
    case RADO_REGULAR_POSITIVE_RATIO:
      return rado::to_string(rado::RegularityStatus::RegularPositiveRatio);
    case RADO_REGULAR_NEGATIVE_RATIO_HOM_REGULAR:
      return rado::to_string(
          rado::RegularityStatus::RegularNegativeRatioHomRegular);
    case RADO_NOT_REGULAR:
      return rado::to_string(rado::RegularityStatus::NotRegular);
    case RADO_DEGENERATE_S:
      return rado::to_string(rado::RegularityStatus::DegenerateS);
    case RADO_HOMOGENEOUS_REGULAR:
      return rado::to_string(rado::RegularityStatus::HomogeneousRegular);
    case RADO_HOMOGENEOUS_NOT_REGULAR:
      return rado::to_string(rado::RegularityStatus::HomogeneousNotRegular);
  }
  return "unknown";
}

/* ---- colorings -------------------------------------------------------- */

rado_status rado_coloring_create(int num_colors, const int* colors,
                                 int64_t length, rado_coloring** out) {
  return guarded([&] {
    require(out, "out");
    if (length < 0) throw std::invalid_argument("length must be >= 0");
    if (length > 0) require(colors, "colors");
    std::vector<int> v(colors, colors + length);
    *out = new rado_coloring{rado::Coloring(num_colors, std::move(v))};
  });
}

rado_status rado_coloring_parse(const char* text, int num_colors,
                                rado_coloring** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = new rado_coloring{rado::Coloring::parse(text, num_colors)};
  });
}

void rado_coloring_free(rado_coloring* coloring) { delete coloring; }

rado_status rado_coloring_format(const rado_coloring* coloring, char** out) {
  return guarded([&] {
    require(coloring, "coloring");
    require(out, "out");
    *out = dup_string(coloring->coloring.str());
  });
}

rado_status rado_coloring_length(const rado_coloring* coloring, int64_t* out) {
  return guarded([&] {
    require(coloring, "coloring");
    require(out, "out");
    *out = coloring->coloring.length();
  });
}

rado_status rado_coloring_num_colors(const rado_coloring* coloring, int* out) {
  return guarded([&] {
    require(coloring, "coloring");
    require(out, "out");
    *out = coloring->coloring.num_colors();
  });
}

rado_status rado_coloring_at(const rado_coloring* coloring, int64_t pos,
                             int* out) {
  return guarded([&] {
    require(coloring, "coloring");
    require(out, "out");
    *out = coloring->coloring.at(pos);
  });
}

rado_status rado_is_good_coloring(const rado_equation* eq,
                                  const rado_coloring* coloring, int* out) {
  return guarded([&] {
    require(eq, "eq");
    require(coloring, "coloring");
    require(out, "out");
    *out = rado::is_good_coloring(eq->eq, coloring->coloring) ? 1 : 0;
  });
}

rado_status rado_is_excellent_coloring(const int64_t* coeffs,
                                       int64_t num_coeffs,
                                       const rado_coloring* coloring,
                                       int* out) {
  return guarded([&] {
    require(coloring, "coloring");
    require(out, "out");
    const auto cs = to_vec(coeffs, num_coeffs);
    *out = rado::is_excellent_coloring(cs, coloring->coloring) ? 1 : 0;
  });
}

/* ---- search ----------------------------------------------------------- */

rado_status rado_search_rado_number(const rado_equation* eq, int num_colors,
                                    int64_t cap,
                                    const rado_search_options* options,
                                    rado_result** out) {
  return guarded([&] {
    require(eq, "eq");
    require(out, "out");
    *out = make_result(
        rado::rado_number(eq->eq, num_colors, cap, to_options(options)));
  });
}

rado_status rado_search_max_excellent(const int64_t* coeffs,
                                      int64_t num_coeffs, int num_colors,
                                      int64_t cap,
                                      const rado_search_options* options,
                                      rado_result** out) {
  return guarded([&] {
    require(out, "out");
    const auto cs = to_vec(coeffs, num_coeffs);
    *out = make_result(rado::max_excellent_length(cs, num_colors, cap,
                                                  to_options(options)));
  });
}

rado_status rado_find_good_coloring(const rado_equation* eq, int num_colors,
                                    int64_t n,
                                    const rado_search_options* options,
                                    rado_coloring** out) {
  return guarded([&] {
    require(eq, "eq");
    require(out, "out");
    auto found =
        rado::find_good_coloring(eq->eq, num_colors, n, to_options(options));
    *out = found ? new rado_coloring{std::move(*found)} : nullptr;
  });
}

rado_status rado_result_state(const rado_result* result,
                              rado_search_state* out) {
  return guarded([&] {
    require(result, "result");
    require(out, "out");
    *out = result->state;
  });
}

rado_status rado_result_value(const rado_result* result, int64_t* out) {
  return guarded([&] {
    require(result, "result");
    require(out, "out");
    *out = result->value;
  });
}

rado_status rado_result_witness(const rado_result* result,
                                const rado_coloring** out) {
  return guarded([&] {
    require(result, "result");
    require(out, "out");
    *out = &result->witness;
  });
}

rado_status rado_result_elapsed_ms(const rado_result* result, int64_t* out) {
  return guarded([&] {
    require(result, "result");
    require(out, "out");
    *out = result->elapsed_ms;
  });
}

rado_status rado_result_to_json(const rado_result* result, char** out) {
  return guarded([&] {
    require(result, "result");
    require(out, "out");
    *out = dup_string(result->json);
  });
}

void rado_result_free(rado_result* result) { delete result; }

/* ---- closed-form bounds and constructions ----------------------------- */

rado_status rado_upper_bound_neg(const int64_t* coeffs, int64_t num_coeffs,
                                 int64_t b, int64_t r_hom, int64_t* out) {
  return guarded([&] {
    require(out, "out");
    *out = rado::upper_bound_neg(to_vec(coeffs, num_coeffs), b, r_hom);
  });
}

rado_status rado_lower_bound_neg(const int64_t* coeffs, int64_t num_coeffs,
                                 int64_t b, int64_t excellent_n,
                                 int64_t* out) {
  return guarded([&] {
    require(out, "out");
    *out = rado::lower_bound_neg(to_vec(coeffs, num_coeffs), b, excellent_n);
  });
}

rado_status rado_lift_coloring_neg(const rado_coloring* excellent,
                                   const int64_t* coeffs, int64_t num_coeffs,
                                   int64_t b, rado_coloring** out) {
  return guarded([&] {
    require(excellent, "excellent");
    require(out, "out");
    const auto cs = to_vec(coeffs, num_coeffs);
    *out = new rado_coloring{
        rado::lift_coloring_neg(excellent->coloring, cs, b)};
  });
}

rado_status rado_upper_bound_pos(const int64_t* coeffs, int64_t num_coeffs,
                                 int64_t b, int64_t r_hom, int64_t* out) {
  return guarded([&] {
    require(out, "out");
    *out = rado::upper_bound_pos(to_vec(coeffs, num_coeffs), b, r_hom);
  });
}

rado_status rado_lower_bound_pos(const int64_t* coeffs, int64_t num_coeffs,
                                 int64_t b, int64_t excellent_n,
                                 int64_t* out) {
  return guarded([&] {
    require(out, "out");
    *out = rado::lower_bound_pos(to_vec(coeffs, num_coeffs), b, excellent_n);
  });
}

rado_status rado_lift_coloring_pos(const rado_coloring* excellent,
                                   const int64_t* coeffs, int64_t num_coeffs,
                                   int64_t b, rado_coloring** out) {
  return guarded([&] {
    require(excellent, "excellent");
    require(out, "out");
    const auto cs = to_vec(coeffs, num_coeffs);
    *out = new rado_coloring{
        rado::lift_coloring_pos(excellent->coloring, cs, b)};
  });
}

rado_status rado_trivial_bounds(const int64_t* coeffs, int64_t num_coeffs,
                                int64_t b, int64_t* out_lower,
                                int64_t* out_upper) {
  return guarded([&] {
    require(out_lower, "out_lower");
    require(out_upper, "out_upper");
    const auto [lo, hi] = rado::trivial_bounds(to_vec(coeffs, num_coeffs), b);
    *out_lower = lo;
    *out_upper = hi;
  });
}

rado_status rado_injection_neg(int64_t w, int64_t b, int64_t s, int64_t* out) {
  return guarded([&] {
    require(out, "out");
    *out = rado::injection_neg(w, b, s);
  });
}

rado_status rado_injection_pos(int64_t w, int64_t r_hom, int64_t m, int64_t q,
                               int64_t* out) {
  return guarded([&] {
    require(out, "out");
    *out = rado::injection_pos(w, r_hom, m, q);
  });
}

rado_status rado_bounds_report(const rado_equation* eq, int num_colors,
                               const int64_t* r_hom,
                               const int64_t* excellent_n,
                               int consult_registry, char** out_json) {
  return guarded([&] {
    require(eq, "eq");
    require(out_json, "out_json");
    std::optional<rado::Int> r = r_hom ? std::optional<rado::Int>(*r_hom)
                                       : std::nullopt;
    if (!r && consult_registry) {
      if (auto kv = rado::known_R(eq->eq.coeffs(), num_colors)) {
        r = kv->value;
      }
    }
    std::optional<rado::Int> n = excellent_n
                                     ? std::optional<rado::Int>(*excellent_n)
                                     : std::nullopt;
    const auto start = std::chrono::steady_clock::now();
    const rado::BoundsReport report =
        rado::make_bounds_report(eq->eq, num_colors, r, n);
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
    *out_json = dup_string(rado::to_json(report, elapsed));
  });
}

/* ---- known values and formulas ---------------------------------------- */

rado_status rado_known_R(const int64_t* coeffs, int64_t num_coeffs,
                         int num_colors, int* out_found, int64_t* out_value,
                         int* out_source, char** out_citation) {
  return guarded([&] {
    require(out_found, "out_found");
    require(out_value, "out_value");
    require(out_source, "out_source");
    const auto cs = to_vec(coeffs, num_coeffs);
    if (auto kv = rado::known_R(cs, num_colors)) {
      *out_found = 1;
      *out_value = kv->value;
      *out_source = static_cast<int>(kv->source);
      if (out_citation) *out_citation = dup_string(kv->citation);
    } else {
      *out_found = 0;
      *out_value = 0;
      *out_source = 0;
      if (out_citation) *out_citation = nullptr;
    }
  });
}

rado_status rado_formula_family_value(const char* family, int64_t k, int64_t m,
                                      int64_t* out) {
  return guarded([&] {
    require(family, "family");
    require(out, "out");
    const auto parsed = rado::formula_family_from_string(family);
    if (!parsed) {
      throw std::invalid_argument(std::string("unknown formula family: ") +
                                  family);
    }
    *out = rado::formula_family_value(*parsed, k, m);
  });
}

rado_status rado_conjecture_value(const int64_t* coeffs, int64_t num_coeffs,
                                  int64_t shift, int64_t r_hom, int64_t* out) {
  return guarded([&] {
    require(out, "out");
    *out = rado::conjecture_value(to_vec(coeffs, num_coeffs), shift, r_hom);
  });
}

/* ---- reports ----------------------------------------------------------- */

rado_status rado_conjecture_check(const int64_t* coeffs, int64_t num_coeffs,
                                  int num_colors, const int64_t* shifts,
                                  int64_t num_shifts, int64_t cap,
                                  const rado_search_options* options,
                                  char** out_json) {
  return guarded([&] {
    require(shifts, "shifts");
    require(out_json, "out_json");
    if (num_shifts < 1) {
      throw std::invalid_argument("num_shifts must be at least 1");
    }
    const auto cs = to_vec(coeffs, num_coeffs);
    const std::vector<rado::Int> sh(shifts, shifts + num_shifts);
    const rado::ConjectureReport report =
        rado::conjecture_check(cs, num_colors, sh, cap, to_options(options));
    *out_json = dup_string(rado::to_json(report));
  });
}

rado_status rado_reproduce(const char* scope, const char* store_dir, int force,
                           const rado_search_options* options,
                           char** out_json) {
  return guarded([&] {
    require(scope, "scope");
    require(out_json, "out_json");
    std::optional<rado::CertificateStore> store;
    if (store_dir) store.emplace(store_dir);
    const rado::ReproReport report = rado::reproduce_report(
        scope, store ? &*store : nullptr, force != 0, to_options(options));
    *out_json = dup_string(rado::to_json(report));
  });
}

rado_status rado_render_text(const char* report_json, char** out) {
  return guarded([&] {
    require(report_json, "report_json");
    require(out, "out");
    std::string rendered;
    try {
      rendered = rado::render_report_text(report_json);
    } catch (const nlohmann::json::exception& e) {
      throw std::invalid_argument(std::string("bad report JSON: ") + e.what());
    }
    *out = dup_string(rendered);
  });
}

rado_status rado_render_csv(const char* report_json, char** out) {
  return guarded([&] {
    require(report_json, "report_json");
    require(out, "out");
    std::string rendered;
    try {
      rendered = rado::render_report_csv(report_json);
    } catch (const nlohmann::json::exception& e) {
      throw std::invalid_argument(std::string("bad report JSON: ") + e.what());
    }
    *out = dup_string(rendered);
  });
}

/* ---- certificate store ------------------------------------------------- */

rado_status rado_store_open(const char* directory, rado_store** out) {
  return guarded([&] {
    require(directory, "directory");
    require(out, "out");
    *out = new rado_store{rado::CertificateStore(directory)};
  });
}

void rado_store_close(rado_store* store) { delete store; }

rado_status rado_store_save_good(rado_store* store, const rado_equation* eq,
                                 int num_colors,
                                 const rado_coloring* coloring, int exact,
                                 char** out_id) {
  return guarded([&] {
    require(store, "store");
    require(eq, "eq");
    require(coloring, "coloring");
    const std::string id = store->store.save_good(
        eq->eq, num_colors, coloring->coloring, exact != 0);
    if (out_id) *out_id = dup_string(id);
  });
}

rado_status rado_store_save_excellent(rado_store* store, const int64_t* coeffs,
                                      int64_t num_coeffs, int num_colors,
                                      const rado_coloring* coloring, int exact,
                                      char** out_id) {
  return guarded([&] {
    require(store, "store");
    require(coloring, "coloring");
    const auto cs = to_vec(coeffs, num_coeffs);
    const std::string id = store->store.save_excellent(
        cs, num_colors, coloring->coloring, exact != 0);
    if (out_id) *out_id = dup_string(id);
  });
}

rado_status rado_store_load_good(rado_store* store, const rado_equation* eq,
                                 int num_colors, int64_t length_or_minus1,
                                 int* out_found, rado_coloring** out_witness,
                                 int* out_exact) {
  return guarded([&] {
    require(store, "store");
    require(eq, "eq");
    require(out_found, "out_found");
    const auto cert =
        store->store.load_good(eq->eq, num_colors, length_or_minus1);
    *out_found = cert ? 1 : 0;
    if (out_witness) {
      *out_witness = cert ? new rado_coloring{cert->witness} : nullptr;
    }
    if (out_exact) *out_exact = cert && cert->exact ? 1 : 0;
  });
}

rado_status rado_store_load_excellent(rado_store* store, const int64_t* coeffs,
                                      int64_t num_coeffs, int num_colors,
                                      int64_t length_or_minus1, int* out_found,
                                      rado_coloring** out_witness,
                                      int* out_exact) {
  return guarded([&] {
    require(store, "store");
    require(out_found, "out_found");
    const auto cs = to_vec(coeffs, num_coeffs);
    const auto cert =
        store->store.load_excellent(cs, num_colors, length_or_minus1);
    *out_found = cert ? 1 : 0;
    if (out_witness) {
      *out_witness = cert ? new rado_coloring{cert->witness} : nullptr;
    }
    if (out_exact) *out_exact = cert && cert->exact ? 1 : 0;
  });
}

} /* extern "C" */
