/*
 * (C) Copyright 2026 rado developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <cstdint>

namespace rado {

using Int = std::int64_t;

// Integer ceiling a/d, d >= 1, rounded toward +infinity for any sign of a.
// Every divisibility-sensitive formula in the library goes through this one
// definition.
constexpr Int ceil_div(Int a, Int d) {
  return a >= 0 ? (a + d - 1) / d : -((-a) / d);
}

}  // namespace rado
