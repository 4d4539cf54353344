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

#include "core/equation.hpp"

namespace rado {

// A t-coloring of an initial interval [1, n]: colors()[i-1] is the color of
// integer i, colors are 1-based values in [1, num_colors].  The empty
// coloring (n = 0) is valid and vacuously good/excellent.
class Coloring {
 public:
  // Empty coloring on one color.
  Coloring() : num_colors_(1) {}
  Coloring(int num_colors, std::vector<int> colors);

  // Whitespace-separated 1-based color indices on one line: "1 2 2 1".
  // A blank string parses to the empty coloring.
  static Coloring parse(std::string_view text, int num_colors);

  int num_colors() const { return num_colors_; }
  Int length() const { return static_cast<Int>(colors_.size()); }
  const std::vector<int>& colors() const { return colors_; }

  // Color of the integer pos, 1-based.
  int at(Int pos) const { return colors_[static_cast<std::size_t>(pos - 1)]; }

  // Canonical form: the first occurrence of color c precedes the first
  // occurrence of color c+1.  Searches emit only canonical witnesses; inputs
  // from elsewhere may be arbitrary.
  bool is_canonical() const;

  std::string str() const;

  bool operator==(const Coloring&) const = default;

 private:
  int num_colors_;
  std::vector<int> colors_;
};

// No monochromatic solution with entries in [1, length].  Entries of any
// solution tuple automatically lie in the colored interval.
bool is_good_coloring(const Equation& eq, const Coloring& coloring);

// Good for c_1 x_1 + ... + c_{k-1} x_{k-1} = x_k - j simultaneously for every
// j = 0..s.  The shift-0 instance makes every excellent coloring good for the
// homogeneous equation.
bool is_excellent_coloring(std::span<const Int> coeffs,
                           const Coloring& coloring);

}  // namespace rado
