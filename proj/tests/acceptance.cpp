/*
 * (C) Copyright 2026 rado developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

// Acceptance gate: ten fixed criteria with pinned expected values and time
// limits, one PASS/FAIL line each.  Exit code 0 only when all ten pass.

#include <chrono>
#include <cstdio>
#include <exception>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "core/bounds.hpp"
#include "core/registry.hpp"
#include "core/search.hpp"
#include "oracle.hpp"

using rado::Coloring;
using rado::Equation;
using rado::FormulaFamily;
using rado::Int;
using rado::SearchOptions;
using rado::SearchStatus;

namespace {

int g_failures = 0;

struct Timer {
  std::chrono::steady_clock::time_point start =
      std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start)
        .count();
  }
};

void report(int criterion, const char* what, bool value_ok, double seconds,
            double limit_seconds) {
  const bool ok = value_ok && seconds <= limit_seconds;
  if (!ok) ++g_failures;
  std::printf("%s criterion %2d: %s (%.2f s, limit %g s)%s\n",
              ok ? "PASS" : "FAIL", criterion, what, seconds, limit_seconds,
              value_ok ? "" : " [wrong value]");
  std::fflush(stdout);
}

Int searched(const std::vector<Int>& coeffs, Int shift, int colors, Int cap,
             int threads = 1) {
  SearchOptions options;
  options.threads = threads;
  const auto result = rado::rado_number(Equation(coeffs, shift), colors, cap,
                                        options);
  if (result.status != SearchStatus::Exact) return -1;
  return result.value;
}

// Criteria 1-6 as one table so the determinism criterion can replay it.
struct ValueCase {
  std::vector<Int> coeffs;
  Int shift;
  int colors;
  Int cap;
  Int expected;
};

const std::vector<ValueCase> kValueCases = {
    {{1, 1}, 0, 2, 6, 5},        // 1
    {{1, 1}, 0, 3, 15, 14},      // 1
    {{3, 1}, 2, 2, 10, 8},       // 2
    {{1, 1}, -1, 2, 10, 9},      // 3
    {{1, 1}, -2, 2, 14, 13},     // 3
    {{1, 1, 1}, -2, 2, 22, 21},  // 3
    {{1, 1}, -1, 3, 28, 27},     // 4
    {{1, 1}, 2, 3, 4, 2},        // 5
    {{1, 1}, 14, 3, 15, 14},     // 5
    {{1, 1}, 15, 3, 15, 14},     // 5
    {{3, 1}, 6, 1, 4, 2},        // 6
    {{3, 1}, 6, 2, 4, 2},        // 6
    {{3, 1}, 6, 3, 4, 2},        // 6
    {{3, 1}, 6, 4, 4, 2},        // 6
};

void criterion_1() {
  Timer t2;
  const bool ok2 = searched({1, 1}, 0, 2, 6) == 5;
  report(1, "2-color value of x+y=z is 5", ok2, t2.seconds(), 0.1);
  Timer t3;
  const bool ok3 = searched({1, 1}, 0, 3, 15) == 14;
  report(1, "3-color value of x+y=z is 14", ok3, t3.seconds(), 5.0);
}

void criterion_2() {
  Timer t;
  const bool ok = searched({3, 1}, 2, 2, 10) == 8;
  report(2, "2-color value of 3x+y=z+2 is 8", ok, t.seconds(), 1.0);
}

void criterion_3() {
  struct Case {
    std::vector<Int> coeffs;
    Int shift, cap, k, m;
  };
  const Case cases[] = {{{1, 1}, -1, 10, 3, 1},
                        {{1, 1}, -2, 14, 3, 2},
                        {{1, 1, 1}, -2, 22, 4, 1}};
  for (const Case& c : cases) {
    Timer t;
    const Int expected =
        rado::formula_family_value(FormulaFamily::NegTwoColor, c.k, c.m);
    const Int got = searched(c.coeffs, c.shift, 2, c.cap);
    char what[96];
    std::snprintf(what, sizeof what,
                  "2-color value at shift %lld equals closed form %lld",
                  static_cast<long long>(c.shift),
                  static_cast<long long>(expected));
    report(3, what, got == expected, t.seconds(), 10.0);
  }
}

void criterion_4() {
  Timer t;
  SearchOptions options;
  options.budget = std::chrono::minutes(14);
  const auto result = rado::rado_number(Equation({1, 1}, -1), 3, 28, options);
  bool ok = result.status == SearchStatus::Exact && result.value == 27;
  const char* what = "3-color value of x+y=z-1 is 27 (direct search)";
  if (!ok) {
    // Pin the value from both sides instead: stretch the longest excellent
    // 3-coloring for the lower bound, use the search-verified homogeneous
    // value for the upper bound.
    what = "3-color value of x+y=z-1 is 27 (bound closure)";
    const Int R = searched({1, 1}, 0, 3, 15);
    const auto exc = rado::max_excellent_length(std::vector<Int>{1, 1}, 3, 14);
    if (R == 14 && exc.status == SearchStatus::Exact && exc.value == 13) {
      const Coloring lifted =
          rado::lift_coloring_neg(exc.witness, std::vector<Int>{1, 1}, 1);
      const Int lower = rado::lower_bound_neg(std::vector<Int>{1, 1}, 1, 13);
      const Int upper = rado::upper_bound_neg(std::vector<Int>{1, 1}, 1, R);
      ok = lifted.length() == 26 && lower == 27 && upper == 27;
    }
  }
  report(4, what, ok, t.seconds(), 900.0);
}

void criterion_5() {
  for (Int b : {Int{2}, Int{14}, Int{15}}) {
    Timer t;
    const Int expected =
        rado::formula_family_value(FormulaFamily::PosThreeColor, 3, b);
    const Int got = searched({1, 1}, b, 3, expected + 1);
    char what[96];
    std::snprintf(what, sizeof what,
                  "3-color value at shift +%lld equals closed form %lld",
                  static_cast<long long>(b), static_cast<long long>(expected));
    report(5, what, got == expected, t.seconds(), 30.0);
  }
  // The superseded closed form says 1 at b = 2; the constant solution
  // (2, 2, 2) refutes it.
  Timer t;
  const bool refuted =
      rado::superseded_pos_three_value(2) == 1 &&
      rado::is_solution(Equation({1, 1}, 2), std::vector<Int>{2, 2, 2}) &&
      searched({1, 1}, 2, 3, 4) == 2;
  report(5, "superseded form refuted at shift +2 by (2,2,2)", refuted,
         t.seconds(), 30.0);
}

void criterion_6() {
  const auto bounds = rado::trivial_bounds(std::vector<Int>{3, 1}, 6);
  for (int colors = 1; colors <= 4; ++colors) {
    Timer t;
    const bool ok = bounds.first == 2 && bounds.second == 2 &&
                    searched({3, 1}, 6, colors, 4) == 2;
    char what[96];
    std::snprintf(what, sizeof what,
                  "trivial bounds pin the %d-color value of 3x+y=z+6 at 2",
                  colors);
    report(6, what, ok, t.seconds(), 1.0);
  }
}

void criterion_7() {
  struct Case {
    std::vector<Int> coeffs;
    int colors;
  };
  const Case cases[] = {{{1, 1}, 2}, {{1, 1, 1}, 2}, {{1, 1}, 3}};
  for (const Case& c : cases) {
    Timer t;
    const Int R = rado::known_R(c.coeffs, c.colors)->value;
    const auto result = rado::max_excellent_length(c.coeffs, c.colors, R);
    const bool ok =
        result.status == SearchStatus::Exact && result.value == R - 1 &&
        rado::is_excellent_coloring(c.coeffs, result.witness);
    char what[96];
    std::snprintf(what, sizeof what,
                  "longest excellent %d-coloring for k=%d has length %lld",
                  c.colors, static_cast<int>(c.coeffs.size()) + 1,
                  static_cast<long long>(R - 1));
    report(7, what, ok, t.seconds(), 60.0);
  }
}

void criterion_8() {
  Timer t;
  std::mt19937 rng(424243u);
  std::uniform_int_distribution<int> k1_dist(1, 3);
  std::uniform_int_distribution<Int> coeff_dist(1, 3);
  std::uniform_int_distribution<Int> ratio_dist(1, 4);
  std::uniform_int_distribution<Int> w_dist(-8, 16);
  int done = 0;
  bool ok = true;
  while (done < 200 && ok) {
    const int k1 = k1_dist(rng);
    std::vector<Int> coeffs;
    for (int i = 0; i < k1; ++i) coeffs.push_back(coeff_dist(rng));
    Int s = -1;
    for (Int c : coeffs) s += c;
    if (s < 1) continue;  // the divisibility framework needs s >= 1
    const Int b = s * ratio_dist(rng);

    // A random excellent coloring: a prefix of the longest witness.
    const auto exc = rado::max_excellent_length(coeffs, 2, 8);
    const Int max_len = exc.witness.length();
    if (max_len < 1) {
      ok = false;  // every coefficient list admits the length-1 coloring
      break;
    }
    const Int len = std::uniform_int_distribution<Int>(1, max_len)(rng);
    std::vector<int> prefix(exc.witness.colors().begin(),
                            exc.witness.colors().begin() + len);
    const Coloring chi(2, prefix);
    if (!rado::is_excellent_coloring(coeffs, chi)) {
      ok = false;  // prefixes of excellent colorings stay excellent
      break;
    }

    try {
      const Coloring neg = rado::lift_coloring_neg(chi, coeffs, b);
      ok = ok && testoracle::brute_force_is_good(Equation(coeffs, -b), neg);
      const Coloring pos = rado::lift_coloring_pos(chi, coeffs, b);
      ok = ok && testoracle::brute_force_is_good(Equation(coeffs, b), pos);
    } catch (const std::exception&) {
      ok = false;
      break;
    }

    // Correspondence identities on arbitrary integer tuples.
    std::vector<Int> w;
    for (int i = 0; i < k1; ++i) w.push_back(w_dist(rng));
    Int W = 0;
    for (int i = 0; i < k1; ++i) {
      W += coeffs[static_cast<std::size_t>(i)] * w[static_cast<std::size_t>(i)];
    }
    Int lhs_neg = 0;
    for (int i = 0; i < k1; ++i) {
      lhs_neg += coeffs[static_cast<std::size_t>(i)] *
                 rado::injection_neg(w[static_cast<std::size_t>(i)], b, s);
    }
    ok = ok && lhs_neg == rado::injection_neg(W, b, s) - b;

    const Int R = std::uniform_int_distribution<Int>(1, 6)(rng);
    const Int m = std::uniform_int_distribution<Int>(2, 4)(rng);
    const Int q = std::uniform_int_distribution<Int>(0, R - 1)(rng);
    Int lhs_pos = 0;
    for (int i = 0; i < k1; ++i) {
      lhs_pos += coeffs[static_cast<std::size_t>(i)] *
                 rado::injection_pos(w[static_cast<std::size_t>(i)], R, m, q);
    }
    ok = ok && lhs_pos == rado::injection_pos(W, R, m, q) + s * (R * m - q);

    ++done;
  }
  report(8, "200 random construction and injection instances hold", ok,
         t.seconds(), 120.0);
}

void criterion_9() {
  Timer t;
  const std::vector<std::vector<Int>> families = {{1},    {2},    {1, 1},
                                                  {1, 2}, {2, 1}, {2, 2}};
  bool ok = true;
  for (const auto& coeffs : families) {
    for (Int shift = -3; shift <= 3; ++shift) {
      const Equation eq(coeffs, shift);
      const auto result = rado::rado_number(eq, 2, 8);
      const auto brute = testoracle::brute_force_rado(eq, 2, 8);
      if (brute) {
        ok = ok && result.status == SearchStatus::Exact &&
             result.value == *brute;
      } else {
        ok = ok && result.status == SearchStatus::ExceedsCap;
      }
    }
  }
  report(9, "engine equals full 2^n enumeration on the small grid", ok,
         t.seconds(), 60.0);
}

void criterion_10() {
  Timer t;
  bool ok = true;
  for (const ValueCase& c : kValueCases) {
    const Int single = searched(c.coeffs, c.shift, c.colors, c.cap, 1);
    const Int parallel = searched(c.coeffs, c.shift, c.colors, c.cap, 8);
    ok = ok && single == c.expected && parallel == c.expected;
  }
  report(10, "criteria 1-6 values identical with 1 and 8 workers", ok,
         t.seconds(), 900.0);
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  if (g_failures == 0) {
    std::printf("acceptance: all criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d check(s) failed\n", g_failures);
  return 1;
}
