#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "core/bounds.hpp"
#include "core/errors.hpp"
#include "core/search.hpp"
#include "oracle.hpp"

using rado::BoundMethod;
using rado::Coloring;
using rado::Equation;
using rado::Int;

namespace {

// The longest excellent 2-coloring for x + y = z, used as lift input.
const std::vector<Int> kSchur{1, 1};
const Coloring kExcellent4(2, {1, 2, 2, 1});

}  // namespace

TEST_CASE("negative-shift bound formulas") {
  CHECK(rado::upper_bound_neg(kSchur, 1, 5) == 9);
  CHECK(rado::upper_bound_neg(kSchur, 2, 5) == 13);
  CHECK(rado::upper_bound_neg(kSchur, 1, 14) == 27);
  CHECK(rado::lower_bound_neg(kSchur, 1, 4) == 9);
  CHECK(rado::lower_bound_neg(kSchur, 2, 4) == 13);
  CHECK(rado::lower_bound_neg(kSchur, 1, 13) == 27);
  // k = 4: s = 2, b = 2m.
  const std::vector<Int> k4{1, 1, 1};
  CHECK(rado::upper_bound_neg(k4, 2, 11) == 21);
  CHECK(rado::lower_bound_neg(k4, 2, 10) == 21);
}

TEST_CASE("bound preconditions") {
  CHECK_THROWS_AS(rado::upper_bound_neg(kSchur, 0, 5),
                  rado::precondition_error);
  CHECK_THROWS_AS(rado::upper_bound_neg(kSchur, -1, 5),
                  rado::precondition_error);
  CHECK_THROWS_AS(rado::upper_bound_neg(std::vector<Int>{1, 1, 1}, 3, 11),
                  rado::precondition_error);
  CHECK_THROWS_AS(rado::upper_bound_neg(std::vector<Int>{1}, 1, 2),
                  rado::precondition_error);
  CHECK_THROWS_AS(rado::upper_bound_neg(kSchur, 1, 0),
                  rado::precondition_error);
  CHECK_THROWS_AS(rado::lower_bound_neg(kSchur, 1, -1),
                  rado::precondition_error);
  CHECK_THROWS_AS(rado::trivial_bounds(std::vector<Int>{1, 1, 1}, 5),
                  rado::precondition_error);
}

TEST_CASE("stretching an excellent coloring") {
  const Coloring lifted = rado::lift_coloring_neg(kExcellent4, kSchur, 1);
  CHECK(lifted.length() == 8);
  CHECK(lifted.colors() ==
        std::vector<int>{1, 1, 2, 2, 2, 2, 1, 1});
  CHECK(testoracle::brute_force_is_good(Equation({1, 1}, -1), lifted));

  const Coloring lifted2 = rado::lift_coloring_neg(kExcellent4, kSchur, 2);
  CHECK(lifted2.length() == 12);
  CHECK(testoracle::brute_force_is_good(Equation({1, 1}, -2), lifted2));

  // Goodness alone is not enough: 1 2 1 is good for x + y = z yet (1, 1, 3)
  // solves x + y = z - 1 monochromatically, and the lift must refuse it.
  const Coloring good_not_excellent(2, {1, 2, 1});
  REQUIRE(testoracle::brute_force_is_good(Equation({1, 1}, 0),
                                          good_not_excellent));
  REQUIRE_FALSE(testoracle::brute_force_is_excellent(kSchur,
                                                     good_not_excellent));
  CHECK_THROWS_AS(rado::lift_coloring_neg(good_not_excellent, kSchur, 1),
                  rado::precondition_error);
}

TEST_CASE("positive-shift bound formulas") {
  CHECK(rado::upper_bound_pos(kSchur, 14, 5) == 12);
  CHECK(rado::upper_bound_pos(kSchur, 2, 14) == 2);
  CHECK(rado::upper_bound_pos(kSchur, 15, 14) == 14);
  CHECK(rado::upper_bound_pos(kSchur, 28, 14) == 27);
  CHECK(rado::lower_bound_pos(kSchur, 14, 4) == 12);
  CHECK(rado::lower_bound_pos(kSchur, 2, 13) == 2);
  // k = 4, s = 2: b = 2m with m = 11, R = 11.
  CHECK(rado::upper_bound_pos(std::vector<Int>{1, 1, 1}, 22, 11) == 11);
}

TEST_CASE("truncate-and-reverse construction") {
  const Coloring lifted = rado::lift_coloring_pos(kExcellent4, kSchur, 14);
  CHECK(lifted.length() == 11);
  CHECK(testoracle::brute_force_is_good(Equation({1, 1}, 14), lifted));

  // m = 1 keeps the coloring and only truncates.
  const Coloring small = rado::lift_coloring_pos(kExcellent4, kSchur, 3);
  CHECK(small.length() == 2);
  CHECK(testoracle::brute_force_is_good(Equation({1, 1}, 3), small));

  CHECK_THROWS_AS(
      rado::lift_coloring_pos(Coloring(2, {1, 2, 2, 1, 1}), kSchur, 3),
      rado::precondition_error);
}

TEST_CASE("trivial bounds") {
  CHECK(rado::trivial_bounds(kSchur, 5) == std::pair<Int, Int>{3, 5});
  CHECK(rado::trivial_bounds(kSchur, 1) == std::pair<Int, Int>{1, 1});
  CHECK(rado::trivial_bounds(std::vector<Int>{3, 1}, 6) ==
        std::pair<Int, Int>{2, 2});
  CHECK(rado::trivial_bounds(std::vector<Int>{1, 1, 1}, 4) ==
        std::pair<Int, Int>{2, 2});
}

TEST_CASE("bounds sandwich the searched value") {
  // Positive shifts where both theorem inputs are available.
  for (Int b : {Int{1}, Int{2}, Int{3}, Int{5}, Int{8}, Int{14}}) {
    const Equation eq({1, 1}, b);
    const Int r = rado::rado_number(eq, 2, 20).value;
    const auto [lo_triv, hi_triv] = rado::trivial_bounds(kSchur, b);
    CHECK(lo_triv <= r);
    CHECK(r <= hi_triv);
    const Int lo = rado::lower_bound_pos(kSchur, b, 4);
    const Int hi = rado::upper_bound_pos(kSchur, b, 5);
    CHECK(lo <= r);
    CHECK(r <= hi);
    CHECK(lo == hi);  // n + 1 = R makes the two formulas coincide
  }
  // Negative shifts.
  for (Int b : {Int{1}, Int{2}, Int{3}}) {
    const Equation eq({1, 1}, -b);
    const Int r = rado::rado_number(eq, 2, 35).value;
    CHECK(rado::lower_bound_neg(kSchur, b, 4) <= r);
    CHECK(r <= rado::upper_bound_neg(kSchur, b, 5));
  }
}

TEST_CASE("affine injection identities") {
  // injection_neg images satisfy sum c_i f(w_i) = f(sum c_i w_i) - b for
  // arbitrary integers w_i; injection_pos the same with + b when
  // b = s(Rm - q).  Checked over random coefficients and arguments.
  std::mt19937 rng(20260816u);
  std::uniform_int_distribution<Int> coeff_dist(1, 3);
  std::uniform_int_distribution<Int> w_dist(-10, 20);
  std::uniform_int_distribution<int> k1_dist(1, 3);
  for (int iter = 0; iter < 500; ++iter) {
    const int k1 = k1_dist(rng);
    std::vector<Int> coeffs;
    for (int i = 0; i < k1; ++i) coeffs.push_back(coeff_dist(rng));
    Int s = -1;
    for (Int c : coeffs) s += c;
    if (s < 1) continue;

    std::vector<Int> w;
    for (int i = 0; i < k1; ++i) w.push_back(w_dist(rng));
    Int W = 0;
    for (int i = 0; i < k1; ++i) W += coeffs[static_cast<std::size_t>(i)] *
                                      w[static_cast<std::size_t>(i)];

    const Int b_neg = s * std::uniform_int_distribution<Int>(1, 6)(rng);
    Int lhs = 0;
    for (int i = 0; i < k1; ++i) {
      lhs += coeffs[static_cast<std::size_t>(i)] *
             rado::injection_neg(w[static_cast<std::size_t>(i)], b_neg, s);
    }
    CHECK(lhs == rado::injection_neg(W, b_neg, s) - b_neg);

    const Int R = std::uniform_int_distribution<Int>(1, 8)(rng);
    const Int m = std::uniform_int_distribution<Int>(2, 5)(rng);
    const Int q = std::uniform_int_distribution<Int>(0, R - 1)(rng);
    const Int b_pos = s * (R * m - q);
    Int lhs_pos = 0;
    for (int i = 0; i < k1; ++i) {
      lhs_pos += coeffs[static_cast<std::size_t>(i)] *
                 rado::injection_pos(w[static_cast<std::size_t>(i)], R, m, q);
    }
    CHECK(lhs_pos == rado::injection_pos(W, R, m, q) + b_pos);
  }
}

TEST_CASE("bounds report assembles the right sides") {
  // Negative shift: sides appear only with their inputs.
  const Equation neg({1, 1}, -2);
  auto report = rado::make_bounds_report(neg, 2, std::nullopt, std::nullopt);
  CHECK_FALSE(report.lower.has_value());
  CHECK_FALSE(report.upper.has_value());

  report = rado::make_bounds_report(neg, 2, 5, std::nullopt);
  REQUIRE(report.upper.has_value());
  CHECK(report.upper->value == 13);
  CHECK(report.upper->method == BoundMethod::UpperNeg);
  CHECK_FALSE(report.lower.has_value());
  CHECK(report.r_hom_used == 5);

  report = rado::make_bounds_report(neg, 2, 5, 4);
  REQUIRE(report.lower.has_value());
  CHECK(report.lower->value == 13);
  CHECK(report.lower->method == BoundMethod::LowerNeg);

  // Positive shift: trivial bounds always present, upgraded by inputs.
  const Equation pos({1, 1}, 14);
  report = rado::make_bounds_report(pos, 2, std::nullopt, std::nullopt);
  REQUIRE(report.lower.has_value());
  REQUIRE(report.upper.has_value());
  CHECK(report.lower->method == BoundMethod::TrivialLower);
  CHECK(report.upper->method == BoundMethod::TrivialUpper);
  CHECK(report.lower->value == 8);
  CHECK(report.upper->value == 14);

  report = rado::make_bounds_report(pos, 2, 5, 4);
  CHECK(report.lower->value == 12);
  CHECK(report.lower->method == BoundMethod::LowerPos);
  CHECK(report.upper->value == 12);
  CHECK(report.upper->method == BoundMethod::UpperPos);

  // A weak excellent length must not degrade the trivial lower bound.
  report = rado::make_bounds_report(Equation({1, 1}, 2), 2, std::nullopt, 0);
  CHECK(report.lower->method == BoundMethod::TrivialLower);
  CHECK(report.lower->value == 2);
  CHECK_FALSE(report.excellent_n_used.has_value());

  CHECK_THROWS_AS(
      rado::make_bounds_report(Equation({1, 1}, 0), 2, 5, std::nullopt),
      rado::precondition_error);
  CHECK_THROWS_AS(
      rado::make_bounds_report(Equation({1, 1, 1}, 3), 2, 11, std::nullopt),
      rado::precondition_error);
}

TEST_CASE("lower bounds never exceed upper bounds on consistent inputs") {
  // R from the registry scale, n = R - 1 (the premise value).
  for (Int b : {Int{1}, Int{2}, Int{4}, Int{7}, Int{14}, Int{30}}) {
    for (Int sign : {Int{-1}, Int{1}}) {
      const Equation eq({1, 1}, sign * b);
      const auto report = rado::make_bounds_report(eq, 2, 5, 4);
      REQUIRE(report.lower.has_value());
      REQUIRE(report.upper.has_value());
      CHECK(report.lower->value <= report.upper->value);
    }
  }
}
