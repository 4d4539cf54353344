/*
 * (C) Copyright 2026 rado developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <chrono>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "core/coloring.hpp"
#include "core/equation.hpp"

namespace rado {

struct SearchOptions {
  // 1 = reference single-threaded depth-first search (reproducible witness).
  // More workers split the tree at partition_depth; the reported value is
  // independent of the worker count.
  int threads = 1;
  // Wall-clock budget.  On expiry the search reports Timeout together with
  // the best good length found so far instead of guessing.
  std::optional<std::chrono::milliseconds> budget;
  int partition_depth = 10;
};

enum class SearchStatus {
  Exact,       // value fully certified by exhausting the tree
  ExceedsCap,  // a good/excellent coloring of length cap exists
  Timeout,     // budget expired; value = best witnessed length, a lower bound
};

const char* to_string(SearchStatus status);

struct RadoResult {
  Equation equation;
  int num_colors;
  SearchStatus status;
  // Exact: the Rado number r (no good coloring of length r, witness has
  // length r-1).  ExceedsCap: cap.  Timeout: longest good length witnessed.
  Int value;
  Coloring witness;
  std::chrono::milliseconds elapsed{0};
};

struct ExcellenceResult {
  std::vector<Int> coeffs;
  int num_colors;
  SearchStatus status;
  // Exact: the largest length carrying an excellent coloring (cap itself
  // carries none).  ExceedsCap: cap.  Timeout: best witnessed length.
  Int value;
  Coloring witness;
  std::chrono::milliseconds elapsed{0};
};

// Lexicographically least canonical good coloring of exactly [1, n], or
// nullopt when none exists.  Throws timeout_error if a budget expires before
// either outcome is certain.
std::optional<Coloring> find_good_coloring(const Equation& eq, int num_colors,
                                           Int n,
                                           const SearchOptions& options = {});

// Exact Rado number up to cap.  Witnesses are re-verified with
// is_good_coloring before returning.
RadoResult rado_number(const Equation& eq, int num_colors, Int cap,
                       const SearchOptions& options = {});

// Longest interval carrying an excellent coloring, up to cap.  Witnesses are
// re-verified with is_excellent_coloring before returning.
ExcellenceResult max_excellent_length(std::span<const Int> coeffs,
                                      int num_colors, Int cap,
                                      const SearchOptions& options = {});

}  // namespace rado
