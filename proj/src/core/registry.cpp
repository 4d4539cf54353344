/*
 * (C) Copyright 2026 rado developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "core/registry.hpp"

#include <algorithm>
#include <stdexcept>

#include "core/errors.hpp"
#include "core/math_util.hpp"

namespace rado {

namespace {

bool all_ones(std::span<const Int> coeffs) {
  return std::all_of(coeffs.begin(), coeffs.end(),
                     [](Int c) { return c == 1; });
}

constexpr const char* kTwoColorAllOnesCitation =
    "Landman & Robertson, Ramsey Theory on the Integers, Thm 8.23";

// 3-color values of x_1 + ... + x_{k-1} = x_k for k = 3..6.  k = 3 is the
// classical 3-color Schur value; the rest solve (m+1)R - m against the
// 3-color closed forms 42m+43, 93m+94, 172m+173.
Int three_color_all_ones(Int k) {
  switch (k) {
    case 3:
      return 14;
    case 4:
      return 43;
    case 5:
      return 94;
    case 6:
      return 173;
    default:
      throw precondition_error("3-color closed forms cover k in 3..6 only");
  }
}

}  // namespace

const char* to_string(KnownSource source) {
  switch (source) {
    case KnownSource::Cited:
      return "cited";
    case KnownSource::DerivedByAlgebra:
      return "derived_by_algebra";
    case KnownSource::DerivedBySearch:
      return "derived_by_search";
  }
  return "?";
}

std::optional<KnownValue> known_R(std::span<const Int> coeffs,
                                  int num_colors) {
  std::vector<Int> cs(coeffs.begin(), coeffs.end());
  Equation(cs, 0);  // validate the coefficient list
  if (!all_ones(cs)) return std::nullopt;
  const Int k = static_cast<Int>(cs.size()) + 1;

  if (num_colors == 2) {
    return KnownValue{cs, 2, k * k - k - 1, KnownSource::Cited,
                      kTwoColorAllOnesCitation};
  }
  if (k == 3) {
    switch (num_colors) {
      case 3:
        return KnownValue{cs, 3, 14, KnownSource::Cited,
                          "Schur (1916); 3-color Schur value"};
      case 4:
        return KnownValue{cs, 4, 45, KnownSource::Cited,
                          "Baumert (1965); 4-color Schur value"};
      case 5:
        return KnownValue{cs, 5, 161, KnownSource::Cited,
                          "Heule (2018); 5-color Schur value, SAT proof"};
      default:
        return std::nullopt;
    }
  }
  if (num_colors == 3 && k >= 4 && k <= 6) {
    return KnownValue{cs, 3, three_color_all_ones(k),
                      KnownSource::DerivedByAlgebra,
                      "solves (m+1)R - m against the 3-color closed form"};
  }
  return std::nullopt;
}

const char* to_string(FormulaFamily family) {
  switch (family) {
    case FormulaFamily::NegTwoColor:
      return "neg2";
    case FormulaFamily::NegThreeColor:
      return "neg3";
    case FormulaFamily::PosTwoColor:
      return "pos2";
    case FormulaFamily::PosThreeColor:
      return "pos3";
  }
  return "?";
}

std::optional<FormulaFamily> formula_family_from_string(
    std::string_view name) {
  if (name == "neg2") return FormulaFamily::NegTwoColor;
  if (name == "neg3") return FormulaFamily::NegThreeColor;
  if (name == "pos2") return FormulaFamily::PosTwoColor;
  if (name == "pos3") return FormulaFamily::PosThreeColor;
  return std::nullopt;
}

Int formula_family_value(FormulaFamily family, Int k, Int m) {
  if (m < 1) throw precondition_error("m must be >= 1");
  if (k < 3) throw precondition_error("closed forms need k >= 3");
  switch (family) {
    case FormulaFamily::NegTwoColor:
      return (m + 1) * (k * k - k - 2) + 1;
    case FormulaFamily::NegThreeColor:
      return (m + 1) * (three_color_all_ones(k) - 1) + 1;
    case FormulaFamily::PosTwoColor:
      return m - ceil_div(m, k * k - k - 1) + 1;
    case FormulaFamily::PosThreeColor:
      if (k != 3) {
        throw precondition_error("the 3-color positive form covers k = 3 only");
      }
      return m - ceil_div(m, 14) + 1;
  }
  throw std::invalid_argument("unknown formula family");
}

Int superseded_pos_three_value(Int b) {
  if (b < 1) throw precondition_error("b must be >= 1");
  return b - ceil_div(b - 1, 14);
}

Int conjecture_value(std::span<const Int> coeffs, Int shift, Int R) {
  if (shift == 0) {
    throw precondition_error("prediction applies to nonzero shift");
  }
  if (R < 1) throw precondition_error("R must be >= 1");
  std::vector<Int> cs(coeffs.begin(), coeffs.end());
  const Int s = Equation(cs, 0).s();
  if (s < 1) throw precondition_error("s = 0: prediction does not apply");
  const Int b = shift < 0 ? -shift : shift;
  if (b % s != 0) throw precondition_error("s does not divide shift");
  const Int ratio = b / s;
  if (shift > 0) return ratio - ceil_div(ratio, R) + 1;
  return ratio * (R - 1) + R;
}

}  // namespace rado
