/*
 * (C) Copyright 2026 rado developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "core/equation.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace rado {

namespace {

constexpr Int kMaxCoefficient = 1'000'000'000;
constexpr Int kMaxShiftMagnitude = 1'000'000'000'000;
constexpr std::size_t kMaxCoefficients = 30;

Int parse_int(std::string_view token, const char* what) {
  Int value = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw std::invalid_argument(std::string("cannot parse ") + what + ": '" +
                                std::string(token) + "'");
  }
  return value;
}

}  // namespace

Equation::Equation(std::vector<Int> coeffs, Int shift)
    : coeffs_(std::move(coeffs)), shift_(shift) {
  if (coeffs_.empty()) {
    throw std::invalid_argument("equation needs at least one coefficient");
  }
  if (coeffs_.size() > kMaxCoefficients) {
    throw std::invalid_argument("too many coefficients");
  }
  for (Int c : coeffs_) {
    if (c < 1 || c > kMaxCoefficient) {
      throw std::invalid_argument("coefficients must lie in [1, 10^9]");
    }
  }
  if (shift_ < -kMaxShiftMagnitude || shift_ > kMaxShiftMagnitude) {
    throw std::invalid_argument("shift out of supported range");
  }
}

Equation Equation::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string token;
  std::vector<Int> coeffs;
  bool have_coeffs = false;
  bool have_shift = false;
  Int shift = 0;
  while (in >> token) {
    if (token.starts_with("coeffs=")) {
      std::string_view rest = std::string_view(token).substr(7);
      while (!rest.empty()) {
        auto comma = rest.find(',');
        std::string_view piece = rest.substr(0, comma);
        coeffs.push_back(parse_int(piece, "coefficient"));
        if (comma == std::string_view::npos) break;
        rest = rest.substr(comma + 1);
        if (rest.empty()) {
          throw std::invalid_argument("trailing comma in coefficient list");
        }
      }
      have_coeffs = true;
    } else if (token.starts_with("shift=")) {
      shift = parse_int(std::string_view(token).substr(6), "shift");
      have_shift = true;
    } else {
      throw std::invalid_argument("unexpected token '" + token +
                                  "' in equation text");
    }
  }
  if (!have_coeffs || !have_shift) {
    throw std::invalid_argument(
        "equation text needs both 'coeffs=...' and 'shift=...'");
  }
  return Equation(std::move(coeffs), shift);
}

Int Equation::s() const {
  return std::accumulate(coeffs_.begin(), coeffs_.end(), Int{0}) - 1;
}

std::string Equation::str() const {
  std::string out = "coeffs=";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(coeffs_[i]);
  }
  out += " shift=";
  out += std::to_string(shift_);
  return out;
}

bool is_solution(const Equation& eq, std::span<const Int> tuple) {
  if (tuple.size() != static_cast<std::size_t>(eq.k())) {
    throw std::invalid_argument("tuple length does not match variable count");
  }
  Int lhs = 0;
  for (std::size_t i = 0; i < eq.coeffs().size(); ++i) {
    lhs += eq.coeffs()[i] * tuple[i];
  }
  return lhs == tuple.back() + eq.shift();
}

std::vector<SolutionTuple> enumerate_solutions_with_max(const Equation& eq,
                                                        Int p) {
  if (p < 1) {
    throw std::invalid_argument("interval endpoint must be >= 1");
  }
  const auto& cs = eq.coeffs();
  const int m = static_cast<int>(cs.size());
  std::vector<SolutionTuple> out;
  std::vector<Int> x(m, 1);
  // Odometer over (x_1, ..., x_{k-1}) in [1, p]^{k-1}, last coordinate
  // fastest, which yields lexicographic order of the full tuple since x_k is
  // a function of the prefix.
  while (true) {
    Int lhs = 0;
    for (int i = 0; i < m; ++i) lhs += cs[i] * x[i];
    const Int z = lhs - eq.shift();
    if (z >= 1 && z <= p) {
      Int mx = z;
      for (int i = 0; i < m; ++i) mx = std::max(mx, x[i]);
      if (mx == p) {
        SolutionTuple tuple(x.begin(), x.end());
        tuple.push_back(z);
        out.push_back(std::move(tuple));
      }
    }
    int i = m - 1;
    while (i >= 0 && x[i] == p) {
      x[i] = 1;
      --i;
    }
    if (i < 0) break;
    ++x[i];
  }
  return out;
}

const char* to_string(RegularityStatus status) {
  switch (status) {
    case RegularityStatus::RegularPositiveRatio:
      return "RegularPositiveRatio";
    case RegularityStatus::RegularNegativeRatioHomRegular:
      return "RegularNegativeRatioHomRegular";
    case RegularityStatus::NotRegular:
      return "NotRegular";
    case RegularityStatus::DegenerateS:
      return "DegenerateS";
    case RegularityStatus::HomogeneousRegular:
      return "HomogeneousRegular";
    case RegularityStatus::HomogeneousNotRegular:
      return "HomogeneousNotRegular";
  }
  return "?";
}

namespace {

// Does any nonempty subset of `values` sum to zero?  Incremental reachable-sum
// set; the multisets here are tiny (k <= 31).
bool has_zero_subset(const std::vector<Int>& values) {
  std::unordered_set<Int> reachable;
  for (Int v : values) {
    std::unordered_set<Int> next = reachable;
    next.insert(v);
    for (Int r : reachable) next.insert(r + v);
    if (next.contains(0)) return true;
    reachable = std::move(next);
  }
  return false;
}

bool homogeneous_regular(const Equation& eq) {
  std::vector<Int> signed_coeffs = eq.coeffs();
  signed_coeffs.push_back(-1);
  return has_zero_subset(signed_coeffs);
}

}  // namespace

RegularityStatus regularity_status(const Equation& eq) {
  if (eq.shift() == 0) {
    return homogeneous_regular(eq) ? RegularityStatus::HomogeneousRegular
                                   : RegularityStatus::HomogeneousNotRegular;
  }
  const Int s = eq.s();
  if (s == 0) return RegularityStatus::DegenerateS;
  if (eq.shift() % s == 0) {
    const Int ratio = eq.shift() / s;
    if (ratio > 0) return RegularityStatus::RegularPositiveRatio;
    if (homogeneous_regular(eq)) {
      return RegularityStatus::RegularNegativeRatioHomRegular;
    }
  }
  return RegularityStatus::NotRegular;
}

}  // namespace rado
