#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <optional>

#include "core/errors.hpp"
#include "core/search.hpp"
#include "oracle.hpp"

using rado::Coloring;
using rado::Equation;
using rado::Int;
using rado::max_excellent_length;
using rado::SearchOptions;
using rado::SearchStatus;

TEST_CASE("find_good_coloring agrees with exhaustive enumeration") {
  const Equation eqs[] = {Equation({1, 1}, 0),  Equation({1, 1}, -1),
                          Equation({1, 1}, 2),  Equation({2, 1}, -3),
                          Equation({1, 2}, 1),  Equation({2, 2}, 2),
                          Equation({1, 1, 1}, -2)};
  for (const Equation& eq : eqs) {
    for (int t : {1, 2, 3}) {
      for (Int n = 0; n <= 7; ++n) {
        const auto engine = find_good_coloring(eq, t, n);
        const auto brute = testoracle::brute_force_find_good(eq, t, n);
        CHECK(engine.has_value() == brute.has_value());
        if (engine) {
          CHECK(testoracle::brute_force_is_good(eq, *engine));
          CHECK(engine->length() == n);
          CHECK(engine->is_canonical());
        }
      }
    }
  }
}

TEST_CASE("search witnesses are lexicographically least") {
  // The lex-least good 2-coloring of [1, 4] for x + y = z.  For canonical
  // colorings lex order over color strings matches the brute-force order.
  const auto witness = find_good_coloring(Equation({1, 1}, 0), 2, 4);
  REQUIRE(witness.has_value());
  CHECK(witness->colors() == std::vector<int>{1, 2, 2, 1});

  const auto brute =
      testoracle::brute_force_find_good(Equation({1, 1}, 0), 2, 4);
  REQUIRE(brute.has_value());
  CHECK(*witness == *brute);
}

TEST_CASE("rado_number matches brute force on a grid") {
  // Every coefficient list over {1, 2} up to length 2 and |shift| <= 3,
  // 2 colors, values within a cap of 8.  Skips shift = 0 non-regular cases
  // where no finite value exists below the cap; those must report
  // ExceedsCap, matching a brute force that finds good colorings at 8.
  const std::vector<std::vector<Int>> families = {{1}, {2},    {1, 1},
                                                  {1, 2}, {2, 1}, {2, 2}};
  const Int cap = 8;
  for (const auto& coeffs : families) {
    for (Int shift = -3; shift <= 3; ++shift) {
      const Equation eq(coeffs, shift);
      const auto result = rado_number(eq, 2, cap);
      const auto brute = testoracle::brute_force_rado(eq, 2, cap);
      if (brute) {
        CHECK(result.status == SearchStatus::Exact);
        CHECK(result.value == *brute);
        CHECK(result.witness.length() == *brute - 1);
        CHECK(testoracle::brute_force_is_good(eq, result.witness));
      } else {
        CHECK(result.status == SearchStatus::ExceedsCap);
        CHECK(result.value == cap);
        CHECK(result.witness.length() == cap);
        CHECK(testoracle::brute_force_is_good(eq, result.witness));
      }
    }
  }
}

TEST_CASE("classical values") {
  CHECK(rado_number(Equation({1, 1}, 0), 2, 10).value == 5);
  CHECK(rado_number(Equation({1, 1}, 0), 1, 10).value == 2);
  CHECK(rado_number(Equation({1, 1, 1}, 0), 2, 15).value == 11);
  CHECK(rado_number(Equation({1, 1}, -1), 2, 15).value == 9);
  // (2, 2, 2) solves x + y = z + 2 while [1, 1] has no solution at all.
  CHECK(rado_number(Equation({1, 1}, 2), 2, 15).value == 2);
}

TEST_CASE("argument validation") {
  const Equation eq({1, 1}, 0);
  CHECK_THROWS_AS(rado_number(eq, 0, 5), std::invalid_argument);
  CHECK_THROWS_AS(rado_number(eq, 2, 0), std::invalid_argument);
  CHECK_THROWS_AS(rado_number(eq, 2, Int{200'000}), std::invalid_argument);
  CHECK_THROWS_AS(find_good_coloring(eq, 2, -1), std::invalid_argument);
}

TEST_CASE("single color") {
  // With one color every solution is monochromatic: r is the least n whose
  // interval contains a solution.
  const auto result = rado_number(Equation({1, 1}, 2), 1, 10);
  CHECK(result.status == SearchStatus::Exact);
  CHECK(result.value == 2);  // (2, 2, 2)
}

TEST_CASE("excellence search agrees with brute force") {
  const std::vector<std::vector<Int>> families = {{1, 1}, {1, 2}, {2, 2}};
  for (const auto& coeffs : families) {
    for (int t : {1, 2}) {
      const Int cap = 6;
      const auto result = max_excellent_length(coeffs, t, cap);
      const auto brute = testoracle::brute_force_max_excellent(coeffs, t, cap);
      if (brute.capped) {
        CHECK(result.status == SearchStatus::ExceedsCap);
        CHECK(result.value == cap);
      } else {
        CHECK(result.status == SearchStatus::Exact);
        CHECK(result.value == brute.max);
        CHECK(result.witness.length() == brute.max);
        CHECK(testoracle::brute_force_is_excellent(coeffs, result.witness));
      }
    }
  }
}

TEST_CASE("longest excellent interval for x + y = z on two colors") {
  const std::vector<Int> coeffs{1, 1};
  const auto result = max_excellent_length(coeffs, 2, 10);
  CHECK(result.status == SearchStatus::Exact);
  CHECK(result.value == 4);

  const auto capped = max_excellent_length(coeffs, 2, 3);
  CHECK(capped.status == SearchStatus::ExceedsCap);
  CHECK(capped.value == 3);
  CHECK(testoracle::brute_force_is_excellent(coeffs, capped.witness));
}

TEST_CASE("tiny budget reports timeout with a usable lower bound") {
  SearchOptions options;
  options.budget = std::chrono::milliseconds(0);
  const auto result = rado_number(Equation({1, 1}, -1), 3, 30, options);
  CHECK(result.status == SearchStatus::Timeout);
  CHECK(result.value >= 0);
  CHECK(result.value <= 30);
  CHECK(result.witness.length() == result.value);
  if (result.value > 0) {
    CHECK(testoracle::brute_force_is_good(Equation({1, 1}, -1),
                                          result.witness));
  }
  // No good 4-coloring of [1, 45] exists, and proving that exceeds any
  // realistic budget, so the budget check must fire before the answer.
  CHECK_THROWS_AS(find_good_coloring(Equation({1, 1}, 0), 4, 45, options),
                  rado::timeout_error);
}

TEST_CASE("thread count does not change the exact value or witness") {
  const Equation eq({1, 1}, -1);
  const auto reference = rado_number(eq, 2, 15);
  for (int threads : {2, 4, 8}) {
    for (int depth : {2, 6, 10}) {
      SearchOptions options;
      options.threads = threads;
      options.partition_depth = depth;
      const auto parallel = rado_number(eq, 2, 15, options);
      CHECK(parallel.status == reference.status);
      CHECK(parallel.value == reference.value);
      CHECK(parallel.witness == reference.witness);
    }
  }
}

TEST_CASE("parallel excellence matches single-threaded") {
  const std::vector<Int> coeffs{1, 1};
  const auto reference = max_excellent_length(coeffs, 3, 14);
  SearchOptions options;
  options.threads = 4;
  options.partition_depth = 3;
  const auto parallel = max_excellent_length(coeffs, 3, 14, options);
  CHECK(parallel.status == reference.status);
  CHECK(parallel.value == reference.value);
  CHECK(reference.value == 13);
}

TEST_CASE("search is deterministic across repeat runs") {
  const Equation eq({2, 1}, -3);
  const auto first = rado_number(eq, 2, 20);
  const auto second = rado_number(eq, 2, 20);
  CHECK(first.status == second.status);
  CHECK(first.value == second.value);
  CHECK(first.witness == second.witness);
}
