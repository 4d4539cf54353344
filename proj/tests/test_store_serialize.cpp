#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>
#include <string>

#include "core/bounds.hpp"
#include "core/errors.hpp"
#include "core/repro.hpp"
#include "core/search.hpp"
#include "core/serialize.hpp"
#include "core/store.hpp"

using rado::CertificateStore;
using rado::Coloring;
using rado::Equation;
using rado::Int;

namespace {

namespace fs = std::filesystem;

// Fresh scratch directory per test case.
struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& tag)
      : path(fs::temp_directory_path() /
             ("rado_test_" + tag + "_" +
              std::to_string(
                  std::chrono::steady_clock::now().time_since_epoch()
                      .count()))) {
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void spit(const fs::path& p, const std::string& text) {
  std::ofstream out(p);
  out << text;
}

// Compares JSON content with the volatile fields pinned.
nlohmann::ordered_json normalized(const std::string& text) {
  auto doc = nlohmann::ordered_json::parse(text);
  if (doc.contains("elapsed_ms")) doc["elapsed_ms"] = 0;
  if (doc.contains("engine_version")) doc["engine_version"] = "test";
  return doc;
}

const fs::path kGoldenDir = TEST_GOLDEN_DIR;

void check_against_golden(const std::string& json_text,
                          const std::string& golden_name) {
  const fs::path golden_path = kGoldenDir / golden_name;
  REQUIRE_MESSAGE(fs::exists(golden_path), golden_path.string());
  CHECK_MESSAGE(normalized(json_text) == normalized(slurp(golden_path)),
                "golden mismatch for ", golden_name, ":\n", json_text);
}

}  // namespace

TEST_CASE("good certificate round trip") {
  TempDir dir("good");
  CertificateStore store(dir.path);
  const Equation eq({1, 1}, -1);
  const Coloring witness =
      rado::rado_number(eq, 2, 10).witness;  // length 8, exact
  const std::string id = store.save_good(eq, 2, witness, true);
  CHECK(id.find("good__c1_1__b-1__t2__n8") == 0);

  const auto loaded = store.load_good(eq, 2);
  REQUIRE(loaded.has_value());
  CHECK(loaded->witness == witness);
  CHECK(loaded->exact);
  CHECK(loaded->num_colors == 2);
  CHECK(loaded->shift == -1);
  CHECK_FALSE(loaded->created_at.empty());

  // Exact-length and by-id loads.
  CHECK(store.load_good(eq, 2, 8).has_value());
  CHECK_FALSE(store.load_good(eq, 2, 7).has_value());
  CHECK(store.load_by_id(id).witness == witness);

  // Different key, no hit.
  CHECK_FALSE(store.load_good(Equation({1, 1}, -2), 2).has_value());
  CHECK_FALSE(store.load_good(eq, 3).has_value());
}

TEST_CASE("longest certificate wins") {
  TempDir dir("longest");
  CertificateStore store(dir.path);
  const Equation eq({1, 1}, 0);
  store.save_good(eq, 2, Coloring(2, {1, 2, 2, 1}), true);
  store.save_good(eq, 2, Coloring(2, {1, 2, 2}), false);
  const auto loaded = store.load_good(eq, 2);
  REQUIRE(loaded.has_value());
  CHECK(loaded->witness.length() == 4);
}

TEST_CASE("excellent certificate round trip") {
  TempDir dir("excellent");
  CertificateStore store(dir.path);
  const std::vector<Int> coeffs{1, 1};
  const Coloring witness(2, {1, 2, 2, 1});
  const std::string id = store.save_excellent(coeffs, 2, witness, true);
  CHECK(id.find("excellent__c1_1__t2__n4") == 0);
  const auto loaded = store.load_excellent(coeffs, 2);
  REQUIRE(loaded.has_value());
  CHECK(loaded->witness == witness);
  CHECK(loaded->j_max == 1);
}

TEST_CASE("saving a bad witness is rejected") {
  TempDir dir("reject");
  CertificateStore store(dir.path);
  CHECK_THROWS_AS(
      store.save_good(Equation({1, 1}, 0), 2, Coloring(2, {1, 2, 2, 1, 1}),
                      false),
      rado::integrity_error);
  CHECK_THROWS_AS(
      store.save_excellent(std::vector<Int>{1, 1}, 2,
                           Coloring(2, {1, 2, 2, 1, 1}), false),
      rado::integrity_error);
}

TEST_CASE("tampered certificates fail integrity checks") {
  TempDir dir("tamper");
  CertificateStore store(dir.path);
  const Equation eq({1, 1}, 0);
  const std::string id = store.save_good(eq, 2, Coloring(2, {1, 2, 2, 1}),
                                         true);
  const fs::path file = dir.path / (id + ".json");
  const std::string original = slurp(file);

  // Flip the exact flag without updating the checksum.
  spit(file, std::regex_replace(original, std::regex("\"exact\": true"),
                                "\"exact\": false"));
  CHECK_THROWS_AS(store.load_good(eq, 2), rado::integrity_error);

  // Truncate to malformed JSON.
  spit(file, original.substr(0, original.size() / 2));
  CHECK_THROWS_AS(store.load_good(eq, 2), rado::integrity_error);

  // Wrong field type.
  spit(file, std::regex_replace(original, std::regex("\"colors\": 2"),
                                "\"colors\": \"two\""));
  CHECK_THROWS_AS(store.load_good(eq, 2), rado::integrity_error);

  // Intact file loads again.
  spit(file, original);
  CHECK(store.load_good(eq, 2).has_value());
}

TEST_CASE("search result JSON matches the golden file") {
  const auto result = rado::rado_number(Equation({1, 1}, -1), 2, 10);
  check_against_golden(rado::to_json(result), "search_result.json");
}

TEST_CASE("excellence result JSON matches the golden file") {
  const auto result =
      rado::max_excellent_length(std::vector<Int>{1, 1}, 2, 10);
  check_against_golden(rado::to_json(result), "excellence_result.json");
}

TEST_CASE("bounds report JSON matches the golden file") {
  const auto report = rado::make_bounds_report(Equation({1, 1}, 14), 2,
                                               Int{5}, Int{4});
  check_against_golden(rado::to_json(report, std::chrono::milliseconds{3}),
                       "bounds_report.json");
}

TEST_CASE("conjecture report JSON matches the golden file") {
  const std::vector<Int> coeffs{1, 1};
  const std::vector<Int> shifts{-1, 2};
  const auto report = rado::conjecture_check(coeffs, 2, shifts, 12);
  check_against_golden(rado::to_json(report), "conjecture_report.json");
}

TEST_CASE("text and CSV renderings") {
  const auto result = rado::rado_number(Equation({1, 1}, 0), 2, 6);
  const std::string text = rado::render_report_text(rado::to_json(result));
  CHECK(text.find("coeffs=1,1 shift=0 colors=2") != std::string::npos);
  CHECK(text.find("Exact 5") != std::string::npos);
  CHECK(text.find("witness: 1 2 2 1") != std::string::npos);

  const std::vector<Int> coeffs{1, 1};
  const std::vector<Int> shifts{-1, 2};
  const std::string report_json =
      rado::to_json(rado::conjecture_check(coeffs, 2, shifts, 12));
  const std::string csv = rado::render_report_csv(report_json);
  CHECK(csv.find("shift,r_hom,r_source,predicted") == 0);
  CHECK(csv.find("\n-1,5,registry,9,exact,9,agree\n") != std::string::npos);
  CHECK(csv.find("\n2,5,registry,2,exact,2,agree\n") != std::string::npos);

  CHECK_THROWS_AS(rado::render_report_csv(rado::to_json(result)),
                  std::invalid_argument);
  CHECK_THROWS_AS(rado::render_report_text("{\"method\": \"nope\"}"),
                  std::invalid_argument);
}

TEST_CASE("reproduce JSON has the shared schema and sane counters") {
  // Scope section-3 exercises searches, formulas and expected refutations
  // without the long 3-color run.
  const auto report = rado::reproduce_report("section-3", nullptr, false);
  const auto doc = nlohmann::ordered_json::parse(rado::to_json(report));
  CHECK(doc.at("method") == "reproduce");
  CHECK(doc.at("scope") == "section-3");
  for (const char* key :
       {"coeffs", "shift", "colors", "status", "value", "witness"}) {
    CHECK(doc.at(key).is_null());
  }
  const auto& summary = doc.at("summary");
  CHECK(summary.at("refuted_unexpected").get<int>() == 0);
  CHECK(summary.at("inconclusive").get<int>() == 0);
  CHECK(summary.at("refuted_expected").get<int>() == 2);
  CHECK(summary.at("confirmed").get<int>() > 10);
  CHECK(summary.at("all_ok").get<bool>());
  CHECK(doc.at("rows").size() == report.rows.size());

  // Text and CSV renderings accept the reproduce schema.
  const std::string text = rado::render_report_text(rado::to_json(report));
  CHECK(text.find("summary: confirmed=") != std::string::npos);
  const std::string csv = rado::render_report_csv(rado::to_json(report));
  CHECK(csv.find("section,claim,equation") == 0);
}

TEST_CASE("reproduce caches exact results in the store") {
  TempDir dir("cache");
  CertificateStore store(dir.path);
  const auto first = rado::reproduce_report("section-3", &store, false);
  CHECK(first.all_ok);
  // The store starts empty, so a first-run row can only be cached when an
  // earlier row in the same report searched the same equation — which is
  // exactly the refutation rows re-deriving their corrected twins' values.
  int cached_first = 0;
  for (const auto& row : first.rows) {
    if (row.cached) {
      ++cached_first;
      CHECK(row.expect_refuted);
    }
  }
  CHECK(cached_first == 2);

  const auto second = rado::reproduce_report("section-3", &store, false);
  CHECK(second.all_ok);
  int cached_rows = 0;
  for (const auto& row : second.rows) cached_rows += row.cached ? 1 : 0;
  CHECK(cached_rows > 5);
  CHECK(first.confirmed == second.confirmed);
  CHECK(first.refuted_expected == second.refuted_expected);

  const auto forced = rado::reproduce_report("section-3", &store, true);
  CHECK(forced.all_ok);
  for (const auto& row : forced.rows) CHECK_FALSE(row.cached);
}
