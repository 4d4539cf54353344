/*
 * (C) Copyright 2026 rado developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "core/coloring.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace rado {

namespace {
constexpr int kMaxColors = 63;
}

Coloring::Coloring(int num_colors, std::vector<int> colors)
    : num_colors_(num_colors), colors_(std::move(colors)) {
  if (num_colors_ < 1 || num_colors_ > kMaxColors) {
    throw std::invalid_argument("number of colors must lie in [1, 63]");
  }
  for (int c : colors_) {
    if (c < 1 || c > num_colors_) {
      throw std::invalid_argument("color entries must lie in [1, num_colors]");
    }
  }
}

Coloring Coloring::parse(std::string_view text, int num_colors) {
  std::istringstream in{std::string(text)};
  std::string token;
  std::vector<int> colors;
  while (in >> token) {
    int value = 0;
    auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
      throw std::invalid_argument("cannot parse color '" + token + "'");
    }
    colors.push_back(value);
  }
  return Coloring(num_colors, std::move(colors));
}

bool Coloring::is_canonical() const {
  int max_seen = 0;
  for (int c : colors_) {
    if (c > max_seen + 1) return false;
    max_seen = std::max(max_seen, c);
  }
  return true;
}

std::string Coloring::str() const {
  std::string out;
  for (std::size_t i = 0; i < colors_.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(colors_[i]);
  }
  return out;
}

bool is_good_coloring(const Equation& eq, const Coloring& coloring) {
  const Int n = coloring.length();
  if (n == 0) return true;
  const auto& cs = eq.coeffs();
  const int m = static_cast<int>(cs.size());
  std::vector<Int> x(m, 1);
  // Walk (x_1, ..., x_{k-1}) in [1, n]^{k-1}; x_k is determined.
  while (true) {
    Int lhs = 0;
    for (int i = 0; i < m; ++i) lhs += cs[i] * x[i];
    const Int z = lhs - eq.shift();
    if (z >= 1 && z <= n) {
      const int color = coloring.at(z);
      bool mono = true;
      for (int i = 0; i < m; ++i) {
        if (coloring.at(x[i]) != color) {
          mono = false;
          break;
        }
      }
      if (mono) return false;
    }
    int i = m - 1;
    while (i >= 0 && x[i] == n) {
      x[i] = 1;
      --i;
    }
    if (i < 0) break;
    ++x[i];
  }
  return true;
}

bool is_excellent_coloring(std::span<const Int> coeffs,
                           const Coloring& coloring) {
  std::vector<Int> cs(coeffs.begin(), coeffs.end());
  const Equation base(cs, 0);
  const Int s = base.s();
  for (Int j = 0; j <= s; ++j) {
    if (!is_good_coloring(Equation(cs, -j), coloring)) return false;
  }
  return true;
}

}  // namespace rado
