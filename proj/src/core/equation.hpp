/*
 * (C) Copyright 2026 rado developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "core/math_util.hpp"

namespace rado {

// A linear equation of the fixed shape
//
//     c_1 x_1 + ... + c_{k-1} x_{k-1} = x_k + shift
//
// over positive integer variables, with every c_i >= 1.  The coefficient of
// x_k is pinned to -1 by construction; the whole library is about this shape.
class Equation {
 public:
  Equation(std::vector<Int> coeffs, Int shift);

  // Round trip of str(): "coeffs=1,1 shift=-1".  Both fields required.
  static Equation parse(std::string_view text);

  const std::vector<Int>& coeffs() const { return coeffs_; }
  Int shift() const { return shift_; }

  // Number of variables, k.
  int k() const { return static_cast<int>(coeffs_.size()) + 1; }

  // The signed coefficient sum s = c_1 + ... + c_{k-1} - 1.  Drives every
  // divisibility precondition.  s = 0 exactly when coeffs == {1}.
  Int s() const;

  std::string str() const;

  bool operator==(const Equation&) const = default;

 private:
  std::vector<Int> coeffs_;
  Int shift_;
};

// An ordered assignment (x_1, ..., x_k).  Permutations are distinct tuples;
// variables need not take distinct values.
using SolutionTuple = std::vector<Int>;

// Does the tuple satisfy the equation?  Throws std::invalid_argument when
// tuple.size() != k.
bool is_solution(const Equation& eq, std::span<const Int> tuple);

// All solutions with entries in [1, p] whose maximum entry is exactly p,
// in lexicographic order.  Union over p = 1..n gives every solution in
// [1, n]^k; the search engine leans on that decomposition.
std::vector<SolutionTuple> enumerate_solutions_with_max(const Equation& eq,
                                                        Int p);

enum class RegularityStatus {
  RegularPositiveRatio,           // shift/s is a positive integer
  RegularNegativeRatioHomRegular, // shift/s negative integer, shift=0 case regular
  NotRegular,
  DegenerateS,                    // shift != 0 and s = 0
  HomogeneousRegular,             // shift = 0, some signed subset sums to zero
  HomogeneousNotRegular,
};

const char* to_string(RegularityStatus status);

// Classifies the equation.  For shift = 0 this runs the zero-subset-sum test
// over the signed coefficient multiset {c_1, ..., c_{k-1}, -1}; for the
// equations of this shape that is equivalent to "some c_i = 1", which is kept
// as a tested property rather than assumed here.
RegularityStatus regularity_status(const Equation& eq);

}  // namespace rado
