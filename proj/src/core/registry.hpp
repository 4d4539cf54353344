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

#include "core/equation.hpp"

namespace rado {

enum class KnownSource {
  Cited,            // taken from the literature, with citation
  DerivedByAlgebra, // solved out of a cited closed form
  DerivedBySearch,  // established by this engine, witness in the store
};

const char* to_string(KnownSource source);

struct KnownValue {
  std::vector<Int> coeffs;
  int num_colors;
  Int value;  // t-color value of the homogeneous equation (shift 0)
  KnownSource source;
  std::string citation;
};

// Homogeneous t-color values the library ships with.  All-ones coefficient
// lists with t = 2 follow the closed form k^2 - k - 1 (Landman & Robertson,
// "Ramsey Theory on the Integers", Thm 8.23); x + y = z carries the classical
// Schur values for t <= 5; the 3-color all-ones values for k = 4..6 are
// solved out of the (m+1)R - m closed forms.  Read-only after load.
std::optional<KnownValue> known_R(std::span<const Int> coeffs,
                                  int num_colors);

// The closed-form value families for all-ones equations
// x_1 + ... + x_{k-1} = x_k + shift with shift = -(k-2)m ("neg") or
// +(k-2)m ("pos"):
//   NegTwoColor:   t = 2, k >= 3, m >= 1:  (m+1)(k^2-k-2) + 1
//   NegThreeColor: t = 3, k in 3..6, m >= 1: (m+1)(R_3(k) - 1) + 1
//   PosTwoColor:   t = 2, k >= 3, m >= 1:  m - ceil(m / (k^2-k-1)) + 1
//   PosThreeColor: t = 3, k = 3, m = b >= 1: b - ceil(b / 14) + 1
enum class FormulaFamily {
  NegTwoColor,
  NegThreeColor,
  PosTwoColor,
  PosThreeColor,
};

const char* to_string(FormulaFamily family);
std::optional<FormulaFamily> formula_family_from_string(std::string_view name);

Int formula_family_value(FormulaFamily family, Int k, Int m);

// The earlier published closed form for the 3-color value of x + y = z + b,
// b - ceil((b-1) / 14) (Landman & Robertson, Thm 9.15).  It overcounts by
// one whenever b is not congruent to 1 mod 14; kept so reproduction runs can
// exhibit the refutation.
Int superseded_pos_three_value(Int b);

// Predicted exact value for nonzero shift given the homogeneous value R:
//   shift = +b:  b/s - ceil(b / (sR)) + 1
//   shift = -b:  (b/s)(R - 1) + R
// Requires s >= 1, s | shift, shift != 0, R >= 1.
Int conjecture_value(std::span<const Int> coeffs, Int shift, Int R);

}  // namespace rado
