/*
 * (C) Copyright 2026 rado developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "core/store.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <system_error>

#include <json.hpp>

#include "core/errors.hpp"
#include "core/version.hpp"

namespace rado {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string utc_now_iso8601() {
  const std::time_t now = std::time(nullptr);
  std::tm tm_utc{};
  gmtime_r(&now, &tm_utc);
  char buffer[32];
  std::strftime(buffer, sizeof buffer, "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
  return buffer;
}

// Content checksum over the mathematically meaningful fields; catches edits
// that would otherwise leave a still-verifying coloring with altered
// metadata (e.g. a flipped `exact` flag).
std::string content_checksum(const Certificate& cert) {
  std::ostringstream payload;
  payload << (cert.kind == CertificateKind::Good ? "good" : "excellent");
  payload << "|coeffs=";
  for (std::size_t i = 0; i < cert.coeffs.size(); ++i) {
    if (i) payload << ',';
    payload << cert.coeffs[i];
  }
  if (cert.kind == CertificateKind::Good) {
    payload << "|shift=" << cert.shift;
  } else {
    payload << "|j_max=" << cert.j_max;
  }
  payload << "|colors=" << cert.num_colors;
  payload << "|coloring=" << cert.witness.str();
  payload << "|exact=" << (cert.exact ? 1 : 0);
  const std::string text = payload.str();
  std::uint64_t hash = 1469598103934665603ULL;  // FNV-1a 64
  for (unsigned char ch : text) {
    hash ^= ch;
    hash *= 1099511628211ULL;
  }
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%016llx",
                static_cast<unsigned long long>(hash));
  return buffer;
}

std::string key_stem(CertificateKind kind, std::span<const Int> coeffs,
                     Int shift_or_jmax, int num_colors, Int length) {
  std::ostringstream out;
  out << (kind == CertificateKind::Good ? "good" : "excellent") << "__c";
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i) out << '_';
    out << coeffs[i];
  }
  if (kind == CertificateKind::Good) {
    out << "__b" << shift_or_jmax;
  }
  out << "__t" << num_colors << "__n" << length;
  return out.str();
}

ordered_json to_json(const Certificate& cert) {
  ordered_json doc;
  doc["kind"] = cert.kind == CertificateKind::Good ? "good" : "excellent";
  doc["coeffs"] = cert.coeffs;
  if (cert.kind == CertificateKind::Good) {
    doc["shift"] = cert.shift;
  } else {
    doc["j_max"] = cert.j_max;
  }
  doc["colors"] = cert.num_colors;
  doc["length"] = cert.witness.length();
  doc["coloring"] = cert.witness.str();
  doc["exact"] = cert.exact;
  doc["created_at"] = cert.created_at;
  doc["engine_version"] = cert.engine_version;
  doc["checksum"] = content_checksum(cert);
  return doc;
}

Certificate from_json_unchecked(const ordered_json& doc) {
  Certificate cert;
  const std::string kind = doc.at("kind").get<std::string>();
  if (kind == "good") {
    cert.kind = CertificateKind::Good;
    cert.shift = doc.at("shift").get<Int>();
  } else if (kind == "excellent") {
    cert.kind = CertificateKind::Excellent;
    cert.j_max = doc.at("j_max").get<Int>();
  } else {
    throw integrity_error("certificate kind '" + kind + "' is unknown");
  }
  cert.coeffs = doc.at("coeffs").get<std::vector<Int>>();
  cert.num_colors = doc.at("colors").get<int>();
  cert.witness =
      Coloring::parse(doc.at("coloring").get<std::string>(), cert.num_colors);
  if (cert.witness.length() != doc.at("length").get<Int>()) {
    throw integrity_error("certificate length field disagrees with coloring");
  }
  cert.exact = doc.at("exact").get<bool>();
  cert.created_at = doc.at("created_at").get<std::string>();
  cert.engine_version = doc.at("engine_version").get<std::string>();
  if (doc.at("checksum").get<std::string>() != content_checksum(cert)) {
    throw integrity_error("certificate checksum mismatch");
  }
  return cert;
}

// Any malformed field in a stored file is a tampering signal, not a caller
// mistake.
Certificate from_json(const ordered_json& doc) {
  try {
    return from_json_unchecked(doc);
  } catch (const integrity_error&) {
    throw;
  } catch (const std::exception& e) {
    throw integrity_error(std::string("malformed certificate: ") + e.what());
  }
}

// Goodness/excellence re-check shared by save and load paths.
void verify_certificate(const Certificate& cert) {
  if (cert.kind == CertificateKind::Good) {
    const Equation eq(cert.coeffs, cert.shift);
    if (!is_good_coloring(eq, cert.witness)) {
      throw integrity_error("stored coloring is not good for its equation");
    }
  } else {
    const Equation base(cert.coeffs, 0);
    if (cert.j_max != base.s()) {
      throw integrity_error("certificate j_max disagrees with coefficients");
    }
    if (!is_excellent_coloring(cert.coeffs, cert.witness)) {
      throw integrity_error("stored coloring is not excellent");
    }
  }
}

}  // namespace

CertificateStore::CertificateStore(std::filesystem::path directory)
    : directory_(std::move(directory)) {
  std::error_code ec;
  std::filesystem::create_directories(directory_, ec);
  if (ec || !std::filesystem::is_directory(directory_)) {
    throw std::filesystem::filesystem_error("cannot create certificate store",
                                            directory_,
                                            ec ? ec : std::make_error_code(
                                                std::errc::not_a_directory));
  }
}

namespace {

std::string write_certificate(const std::filesystem::path& directory,
                              Certificate cert) {
  cert.created_at = utc_now_iso8601();
  cert.engine_version = kEngineVersion;
  verify_certificate(cert);
  const std::string stem =
      key_stem(cert.kind, cert.coeffs,
               cert.kind == CertificateKind::Good ? cert.shift : cert.j_max,
               cert.num_colors, cert.witness.length());
  const auto tmp_path = directory / (stem + ".json.tmp");
  const auto final_path = directory / (stem + ".json");
  {
    std::ofstream out(tmp_path);
    if (!out) {
      throw std::ios_base::failure("cannot write '" + tmp_path.string() +
                                   "'");
    }
    out << to_json(cert).dump(2) << '\n';
  }
  std::filesystem::rename(tmp_path, final_path);
  return stem;
}

std::optional<Certificate> scan_for(
    const std::filesystem::path& directory, CertificateKind kind,
    std::span<const Int> coeffs, Int shift_or_jmax, int num_colors,
    Int length) {
  if (!std::filesystem::exists(directory)) return std::nullopt;
  std::optional<Certificate> best;
  for (const auto& entry : std::filesystem::directory_iterator(directory)) {
    if (entry.path().extension() != ".json") continue;
    std::ifstream in(entry.path());
    ordered_json doc;
    try {
      doc = ordered_json::parse(in);
    } catch (const nlohmann::json::exception&) {
      throw integrity_error("certificate '" + entry.path().string() +
                            "' is not valid JSON");
    }
    Certificate cert = from_json(doc);
    if (cert.kind != kind || cert.num_colors != num_colors) continue;
    if (!std::equal(cert.coeffs.begin(), cert.coeffs.end(), coeffs.begin(),
                    coeffs.end())) {
      continue;
    }
    if (kind == CertificateKind::Good && cert.shift != shift_or_jmax) continue;
    if (length >= 0 && cert.witness.length() != length) continue;
    verify_certificate(cert);
    if (!best || cert.witness.length() > best->witness.length()) {
      best = std::move(cert);
    }
  }
  return best;
}

}  // namespace

std::string CertificateStore::save_good(const Equation& eq, int num_colors,
                                        const Coloring& witness, bool exact) {
  Certificate cert;
  cert.kind = CertificateKind::Good;
  cert.coeffs = eq.coeffs();
  cert.shift = eq.shift();
  cert.num_colors = num_colors;
  cert.witness = witness;
  cert.exact = exact;
  return write_certificate(directory_, std::move(cert));
}

std::string CertificateStore::save_excellent(std::span<const Int> coeffs,
                                             int num_colors,
                                             const Coloring& witness,
                                             bool exact) {
  Certificate cert;
  cert.kind = CertificateKind::Excellent;
  cert.coeffs.assign(coeffs.begin(), coeffs.end());
  cert.j_max = Equation(cert.coeffs, 0).s();
  cert.num_colors = num_colors;
  cert.witness = witness;
  cert.exact = exact;
  return write_certificate(directory_, std::move(cert));
}

std::optional<Certificate> CertificateStore::load_good(const Equation& eq,
                                                       int num_colors,
                                                       Int length) const {
  return scan_for(directory_, CertificateKind::Good, eq.coeffs(), eq.shift(),
                  num_colors, length);
}

std::optional<Certificate> CertificateStore::load_excellent(
    std::span<const Int> coeffs, int num_colors, Int length) const {
  return scan_for(directory_, CertificateKind::Excellent, coeffs, 0,
                  num_colors, length);
}

Certificate CertificateStore::load_by_id(const std::string& id) const {
  const auto path = directory_ / (id + ".json");
  std::ifstream in(path);
  if (!in) {
    throw std::ios_base::failure("certificate '" + id + "' not found");
  }
  ordered_json doc;
  try {
    doc = ordered_json::parse(in);
  } catch (const nlohmann::json::exception&) {
    throw integrity_error("certificate '" + id + "' is not valid JSON");
  }
  Certificate cert = from_json(doc);
  verify_certificate(cert);
  return cert;
}

}  // namespace rado
