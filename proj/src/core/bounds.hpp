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
#include <utility>

#include "core/coloring.hpp"
#include "core/equation.hpp"

namespace rado {

// Bounds for r(E; t) of equations c_1 x_1 + ... + c_{k-1} x_{k-1} = x_k + b~.
// Throughout, b > 0 denotes |b~|; "neg" operations are about b~ = -b and
// "pos" operations about b~ = +b.  Every operation requires s >= 1 and s | b
// and throws precondition_error loudly otherwise.  R is the t-color value of
// the homogeneous equation (shift 0) and is always an explicit input, taken
// from the registry or from a search by the caller, never computed here.

// Upper bound for shift -b: (b/s + 1) * R - b/s.  Exact when R is exact and
// the homogeneous equation is t-regular.
Int upper_bound_neg(std::span<const Int> coeffs, Int b, Int R);

// Lower bound for shift -b from an excellent coloring of length n:
// (b/s + 1) * n + 1.
Int lower_bound_neg(std::span<const Int> coeffs, Int b, Int n);

// Stretches an excellent coloring chi of [1, n] to a good coloring of
// [1, (b/s + 1) * n] for shift -b by repeating each entry b/s + 1 times.
// The result is re-verified with is_good_coloring before returning.
Coloring lift_coloring_neg(const Coloring& chi, std::span<const Int> coeffs,
                           Int b);

// Upper bound for shift +b: b/s - ceil(b / (s * R)) + 1.
Int upper_bound_pos(std::span<const Int> coeffs, Int b, Int R);

// Lower bound for shift +b from an excellent coloring of length n:
// b/s - ceil(b / (s * (n+1))) + 1.
Int lower_bound_pos(std::span<const Int> coeffs, Int b, Int n);

// Builds the good coloring behind lower_bound_pos: writes b = s((n+1)m - q)
// with m = ceil(b / (s(n+1))) and 0 <= q <= n, stretches chi by factor m
// (factor 1 means chi itself), drops the last q entries and reverses.
// Re-verified with is_good_coloring for shift +b before returning.
Coloring lift_coloring_pos(const Coloring& chi, std::span<const Int> coeffs,
                           Int b);

// Bounds that need no homogeneous input, for shift +b:
// ceil((b+1)/(s+1)) <= r <= b/s.  The upper bound comes from the constant
// tuple (b/s, ..., b/s); below the lower bound no solutions exist at all.
std::pair<Int, Int> trivial_bounds(std::span<const Int> coeffs, Int b);

// Affine maps witnessing the upper bounds.  injection_neg sends solutions of
// the homogeneous equation to solutions of shift -b via
// f(w) = (b/s + 1) w - b/s; injection_pos, with b = s(Rm - q), sends them to
// solutions of shift +b via f(w) = (R - w) m - q + w.  Both are pure
// formulas; injection_neg checks s >= 1 and s | b because it divides.
Int injection_neg(Int w, Int b, Int s);
Int injection_pos(Int w, Int R, Int m, Int q);

enum class BoundMethod {
  UpperNeg,
  LowerNeg,
  UpperPos,
  LowerPos,
  TrivialLower,
  TrivialUpper,
};

const char* to_string(BoundMethod method);

struct BoundSide {
  Int value;
  BoundMethod method;
};

// Best bounds assembled from whatever inputs are available.  shift < 0 has
// no trivial bounds, so a side may be absent there when its input is.
struct BoundsReport {
  Equation equation;
  int num_colors;
  std::optional<BoundSide> lower;
  std::optional<BoundSide> upper;
  std::optional<Int> r_hom_used;       // R fed to a theorem bound
  std::optional<Int> excellent_n_used; // excellent length fed to a bound
};

// Requires shift != 0, s >= 1 and s | |shift|.  R and excellent_n are
// optional explicit inputs; sides that lack their input are omitted.
BoundsReport make_bounds_report(const Equation& eq, int num_colors,
                                std::optional<Int> r_hom,
                                std::optional<Int> excellent_n);

}  // namespace rado
