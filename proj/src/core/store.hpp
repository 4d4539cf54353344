/*
 * (C) Copyright 2026 rado developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "core/coloring.hpp"
#include "core/equation.hpp"

namespace rado {

enum class CertificateKind { Good, Excellent };

// A witness coloring persisted as one human-diffable JSON file.  `exact`
// records that the producing search also exhausted length n+1, so the
// certified value is final rather than just a lower bound.
struct Certificate {
  CertificateKind kind;
  std::vector<Int> coeffs;
  Int shift = 0;   // Good only
  Int j_max = 0;   // Excellent only: good for shifts -0..-j_max
  int num_colors;
  Coloring witness;
  bool exact = false;
  std::string created_at;  // ISO 8601 UTC
  std::string engine_version;
};

// One-directory certificate store: single writer, any number of readers.
// Writes go through a temp file + rename.  Both save and load re-verify the
// witness (good or excellent, as tagged) and its content checksum; anything
// that fails raises integrity_error.
class CertificateStore {
 public:
  explicit CertificateStore(std::filesystem::path directory);

  const std::filesystem::path& directory() const { return directory_; }

  // Returns the certificate id (the file stem).
  std::string save_good(const Equation& eq, int num_colors,
                        const Coloring& witness, bool exact);
  std::string save_excellent(std::span<const Int> coeffs, int num_colors,
                             const Coloring& witness, bool exact);

  // length = -1 loads the longest stored witness for the key.
  std::optional<Certificate> load_good(const Equation& eq, int num_colors,
                                       Int length = -1) const;
  std::optional<Certificate> load_excellent(std::span<const Int> coeffs,
                                            int num_colors,
                                            Int length = -1) const;

  // Load by id, verifying integrity.
  Certificate load_by_id(const std::string& id) const;

 private:
  std::filesystem::path directory_;
};

}  // namespace rado
