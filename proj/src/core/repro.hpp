/*
 * (C) Copyright 2026 rado developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "core/search.hpp"
#include "core/store.hpp"

namespace rado {

struct ConjectureRow {
  Int shift;
  std::optional<Int> r_hom;
  std::string r_source;  // "registry" | "search" | "unknown"
  std::optional<Int> predicted;
  std::string search_status;  // SearchStatus name or "skipped"
  std::optional<Int> search_value;
  std::string verdict;  // "agree" | "disagree" | "inconclusive"
  double elapsed_ms = 0;
};

struct ExcellencePremise {
  std::optional<Int> r_hom;
  std::optional<Int> max_excellent;
  std::string status;  // SearchStatus name or "skipped"
  bool equals_r_minus_1 = false;
  double elapsed_ms = 0;
};

struct ConjectureReport {
  std::vector<Int> coeffs;
  int num_colors;
  Int cap;
  ExcellencePremise premise;
  std::vector<ConjectureRow> rows;
  int agree = 0;
  int disagree = 0;
  int inconclusive = 0;
};

// Tests the closed-form prediction of conjecture_value per shift against the
// exact search, with verdicts agree / disagree / inconclusive(cap).  R comes
// from the registry when known, otherwise from a search within cap.  Also
// checks the premise that the longest excellent interval has length R - 1.
// Requires s >= 1 and s | shift for every shift.
ConjectureReport conjecture_check(std::span<const Int> coeffs, int num_colors,
                                  std::span<const Int> shifts, Int cap,
                                  const SearchOptions& options = {});

struct ReproRow {
  std::string section;   // "registry" | "neg-shift" | "pos-shift" | "conjecture"
  std::string claim;
  std::string equation;  // Equation::str(), or coefficient list for excellence
  int num_colors = 0;
  std::optional<Int> claimed;
  std::string search_status;  // SearchStatus name, "skipped" or "verified"
  std::optional<Int> search_value;
  std::string verdict;  // "confirmed" | "refuted" | "inconclusive" | "recorded"
  bool expect_refuted = false;  // superseded-formula rows
  bool cached = false;
  std::string note;
  double elapsed_ms = 0;
};

struct ReproReport {
  std::string scope;
  std::vector<ReproRow> rows;
  int confirmed = 0;
  int refuted_expected = 0;
  int refuted_unexpected = 0;
  int inconclusive = 0;
  int recorded = 0;
  bool all_ok = false;
};

// Re-derives the library's citable claims at desk scale: registry values
// within reach of a search (cap <= 30, t <= 3), the closed-form families for
// negative and positive shifts, the superseded positive 3-color formula
// (expected to be refuted), trivial-bound tightness, and the conjecture
// batteries.  scope: "all" | "section-2" | "section-3" | "conjecture"
// ("section-2" = negative shifts, "section-3" = positive shifts).
//
// When a store is supplied, exact cached certificates short-circuit the
// corresponding searches unless force is set, and fresh exact results are
// saved back.  A null store keeps the run side-effect free.
ReproReport reproduce_report(const std::string& scope, CertificateStore* store,
                             bool force, const SearchOptions& options = {});

}  // namespace rado
