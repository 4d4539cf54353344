/*
 * (C) Copyright 2026 rado developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "core/bounds.hpp"

#include <numeric>
#include <stdexcept>

#include "core/errors.hpp"

namespace rado {

namespace {

Int coefficient_sum_s(std::span<const Int> coeffs) {
  // Validation of the coefficient list itself is Equation's job.
  return Equation(std::vector<Int>(coeffs.begin(), coeffs.end()), 0).s();
}

// Shared precondition: s >= 1, b >= 1, s | b.  Returns b/s.
Int exact_ratio(std::span<const Int> coeffs, Int b) {
  const Int s = coefficient_sum_s(coeffs);
  if (s < 1) {
    throw precondition_error("s = 0: divisibility-based bounds do not apply");
  }
  if (b < 1) {
    throw precondition_error("b must be a positive integer");
  }
  if (b % s != 0) {
    throw precondition_error("s does not divide b");
  }
  return b / s;
}

void require_r_hom(Int R) {
  if (R < 1) throw precondition_error("R must be >= 1");
}

}  // namespace

const char* to_string(BoundMethod method) {
  switch (method) {
    case BoundMethod::UpperNeg:
      return "upper_bound_neg";
    case BoundMethod::LowerNeg:
      return "lower_bound_neg";
    case BoundMethod::UpperPos:
      return "upper_bound_pos";
    case BoundMethod::LowerPos:
      return "lower_bound_pos";
    case BoundMethod::TrivialLower:
      return "trivial";
    case BoundMethod::TrivialUpper:
      return "trivial";
  }
  return "?";
}

Int upper_bound_neg(std::span<const Int> coeffs, Int b, Int R) {
  const Int ratio = exact_ratio(coeffs, b);
  require_r_hom(R);
  return (ratio + 1) * R - ratio;
}

Int lower_bound_neg(std::span<const Int> coeffs, Int b, Int n) {
  const Int ratio = exact_ratio(coeffs, b);
  if (n < 0) throw precondition_error("excellent length must be >= 0");
  return (ratio + 1) * n + 1;
}

Coloring lift_coloring_neg(const Coloring& chi, std::span<const Int> coeffs,
                           Int b) {
  const Int ratio = exact_ratio(coeffs, b);
  if (!is_excellent_coloring(coeffs, chi)) {
    throw precondition_error("coloring is not excellent for these coefficients");
  }
  const Int s = coefficient_sum_s(coeffs);
  // Range of shifts the stretched coloring has to dodge; must stay within
  // the excellence range [0, s] for the construction to be sound.
  const Int j_max = ceil_div(s * b, b + s);
  if (j_max < 0 || j_max > s) {
    throw std::logic_error("stretch shift range escaped [0, s]");
  }
  const Int factor = ratio + 1;
  const Int n = chi.length();
  std::vector<int> lifted;
  lifted.reserve(static_cast<std::size_t>(factor * n));
  for (Int i = 1; i <= factor * n; ++i) {
    lifted.push_back(chi.at(ceil_div(i, factor)));
  }
  Coloring result(chi.num_colors(), std::move(lifted));
  const Equation target(std::vector<Int>(coeffs.begin(), coeffs.end()), -b);
  if (!is_good_coloring(target, result)) {
    throw std::logic_error("stretched coloring failed goodness re-check");
  }
  return result;
}

Int upper_bound_pos(std::span<const Int> coeffs, Int b, Int R) {
  const Int ratio = exact_ratio(coeffs, b);
  require_r_hom(R);
  const Int m = ceil_div(ratio, R);
  const Int q = R * m - ratio;  // b = s(Rm - q)
  if (q < 0 || q > R - 1) {
    throw std::logic_error("decomposition escaped 0 <= q <= R-1");
  }
  return ratio - m + 1;
}

Int lower_bound_pos(std::span<const Int> coeffs, Int b, Int n) {
  const Int ratio = exact_ratio(coeffs, b);
  if (n < 0) throw precondition_error("excellent length must be >= 0");
  return ratio - ceil_div(ratio, n + 1) + 1;
}

Coloring lift_coloring_pos(const Coloring& chi, std::span<const Int> coeffs,
                           Int b) {
  const Int ratio = exact_ratio(coeffs, b);
  if (!is_excellent_coloring(coeffs, chi)) {
    throw precondition_error("coloring is not excellent for these coefficients");
  }
  const Int s = coefficient_sum_s(coeffs);
  const Int n = chi.length();
  const Int m = ceil_div(ratio, n + 1);
  const Int q = (n + 1) * m - ratio;  // b = s((n+1)m - q)
  if (q < 0 || q > n) {
    throw std::logic_error("decomposition escaped 0 <= q <= n");
  }
  // Stretch factor m (m = 1 keeps chi), then truncate q entries and reverse.
  Coloring alpha =
      (m == 1) ? chi : lift_coloring_neg(chi, coeffs, s * (m - 1));
  const Int keep = m * n - q;
  std::vector<int> reversed;
  reversed.reserve(static_cast<std::size_t>(keep));
  for (Int i = keep; i >= 1; --i) {
    reversed.push_back(alpha.at(i));
  }
  Coloring result(chi.num_colors(), std::move(reversed));
  const Equation target(std::vector<Int>(coeffs.begin(), coeffs.end()), b);
  if (!is_good_coloring(target, result)) {
    throw std::logic_error("reversed coloring failed goodness re-check");
  }
  return result;
}

std::pair<Int, Int> trivial_bounds(std::span<const Int> coeffs, Int b) {
  const Int ratio = exact_ratio(coeffs, b);
  const Int s = coefficient_sum_s(coeffs);
  return {ceil_div(b + 1, s + 1), ratio};
}

Int injection_neg(Int w, Int b, Int s) {
  if (s < 1) throw precondition_error("s must be >= 1");
  if (b < 1 || b % s != 0) {
    throw precondition_error("b must be a positive multiple of s");
  }
  const Int ratio = b / s;
  return (ratio + 1) * w - ratio;
}

Int injection_pos(Int w, Int R, Int m, Int q) {
  return (R - w) * m - q + w;
}

BoundsReport make_bounds_report(const Equation& eq, int num_colors,
                                std::optional<Int> r_hom,
                                std::optional<Int> excellent_n) {
  if (num_colors < 1) {
    throw std::invalid_argument("number of colors must be >= 1");
  }
  if (eq.shift() == 0) {
    throw precondition_error("bounds apply to equations with nonzero shift");
  }
  const Int b = eq.shift() < 0 ? -eq.shift() : eq.shift();
  exact_ratio(eq.coeffs(), b);  // validates s >= 1 and s | b up front

  BoundsReport report{eq, num_colors, std::nullopt, std::nullopt,
                      std::nullopt, std::nullopt};
  if (eq.shift() < 0) {
    if (r_hom) {
      report.upper = BoundSide{upper_bound_neg(eq.coeffs(), b, *r_hom),
                               BoundMethod::UpperNeg};
      report.r_hom_used = r_hom;
    }
    if (excellent_n) {
      report.lower = BoundSide{lower_bound_neg(eq.coeffs(), b, *excellent_n),
                               BoundMethod::LowerNeg};
      report.excellent_n_used = excellent_n;
    }
  } else {
    const auto [trivial_lower, trivial_upper] =
        trivial_bounds(eq.coeffs(), b);
    report.lower = BoundSide{trivial_lower, BoundMethod::TrivialLower};
    report.upper = BoundSide{trivial_upper, BoundMethod::TrivialUpper};
    if (r_hom) {
      // Never looser than the trivial upper bound.
      report.upper = BoundSide{upper_bound_pos(eq.coeffs(), b, *r_hom),
                               BoundMethod::UpperPos};
      report.r_hom_used = r_hom;
    }
    if (excellent_n) {
      const Int candidate = lower_bound_pos(eq.coeffs(), b, *excellent_n);
      if (candidate >= report.lower->value) {
        report.lower = BoundSide{candidate, BoundMethod::LowerPos};
        report.excellent_n_used = excellent_n;
      }
    }
  }
  return report;
}

}  // namespace rado
