/*
 * (C) Copyright 2026 rado developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <stdexcept>

namespace rado {

// An operation's mathematical precondition does not hold (s = 0, s does not
// divide b, coloring not excellent, ...).  Malformed inputs (bad ranges,
// parse failures) raise std::invalid_argument instead.
class precondition_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A stored certificate failed re-verification on load.
class integrity_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A time budget expired before an operation could certify its answer.
class timeout_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace rado
