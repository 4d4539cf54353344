/*
 * (C) Copyright 2026 rado developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "core/serialize.hpp"

#include <json.hpp>
#include <sstream>
#include <stdexcept>

#include "core/bounds.hpp"
#include "core/repro.hpp"
#include "core/search.hpp"
#include "core/version.hpp"

namespace rado {

namespace {

using json = nlohmann::ordered_json;

json witness_array(const Coloring& coloring) {
  json arr = json::array();
  for (int c : coloring.colors()) arr.push_back(c);
  return arr;
}

json opt(const std::optional<Int>& v) {
  return v ? json(*v) : json(nullptr);
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string csv_cell(const json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return csv_escape(v.get<std::string>());
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  return v.dump();
}

}  // namespace

std::string to_json(const RadoResult& result) {
  json j;
  j["coeffs"] = result.equation.coeffs();
  j["shift"] = result.equation.shift();
  j["colors"] = result.num_colors;
  j["status"] = to_string(result.status);
  j["value"] = result.value;
  j["witness"] = witness_array(result.witness);
  j["method"] = "search";
  j["elapsed_ms"] = result.elapsed.count();
  j["engine_version"] = kEngineVersion;
  return dump(j);
}

std::string to_json(const ExcellenceResult& result) {
  Int s = -1;
  for (Int c : result.coeffs) s += c;
  json j;
  j["coeffs"] = result.coeffs;
  j["shift"] = nullptr;
  j["j_max"] = s;
  j["colors"] = result.num_colors;
  j["status"] = to_string(result.status);
  j["value"] = result.value;
  j["witness"] = witness_array(result.witness);
  j["method"] = "excellence-search";
  j["elapsed_ms"] = result.elapsed.count();
  j["engine_version"] = kEngineVersion;
  return dump(j);
}

std::string to_json(const BoundsReport& report,
                    std::chrono::milliseconds elapsed) {
  json j;
  j["coeffs"] = report.equation.coeffs();
  j["shift"] = report.equation.shift();
  j["colors"] = report.num_colors;
  const bool pinned = report.lower && report.upper &&
                      report.lower->value == report.upper->value;
  j["status"] = pinned ? json("exact") : json(nullptr);
  j["value"] = pinned ? json(report.lower->value) : json(nullptr);
  j["witness"] = nullptr;
  j["method"] = "bounds";
  if (report.lower) {
    j["lower"] = {{"value", report.lower->value},
                  {"method", to_string(report.lower->method)}};
  } else {
    j["lower"] = nullptr;
  }
  if (report.upper) {
    j["upper"] = {{"value", report.upper->value},
                  {"method", to_string(report.upper->method)}};
  } else {
    j["upper"] = nullptr;
  }
  j["inputs"] = {{"r_hom", opt(report.r_hom_used)},
                 {"excellent_n", opt(report.excellent_n_used)}};
  j["elapsed_ms"] = elapsed.count();
  j["engine_version"] = kEngineVersion;
  return dump(j);
}

std::string to_json(const ConjectureReport& report) {
  json j;
  j["coeffs"] = report.coeffs;
  j["shift"] = nullptr;
  j["colors"] = report.num_colors;
  j["status"] = nullptr;
  j["value"] = nullptr;
  j["witness"] = nullptr;
  j["method"] = "conjecture-check";
  j["cap"] = report.cap;
  j["premise"] = {{"r_hom", opt(report.premise.r_hom)},
                  {"max_excellent", opt(report.premise.max_excellent)},
                  {"status", report.premise.status},
                  {"equals_r_minus_1", report.premise.equals_r_minus_1}};
  json rows = json::array();
  double total_ms = report.premise.elapsed_ms;
  for (const ConjectureRow& row : report.rows) {
    rows.push_back({{"shift", row.shift},
                    {"r_hom", opt(row.r_hom)},
                    {"r_source", row.r_source},
                    {"predicted", opt(row.predicted)},
                    {"search_status", row.search_status},
                    {"search_value", opt(row.search_value)},
                    {"verdict", row.verdict}});
    total_ms += row.elapsed_ms;
  }
  j["rows"] = std::move(rows);
  j["summary"] = {{"agree", report.agree},
                  {"disagree", report.disagree},
                  {"inconclusive", report.inconclusive}};
  j["elapsed_ms"] = total_ms;
  j["engine_version"] = kEngineVersion;
  return dump(j);
}

std::string to_json(const ReproReport& report) {
  json j;
  j["coeffs"] = nullptr;
  j["shift"] = nullptr;
  j["colors"] = nullptr;
  j["status"] = nullptr;
  j["value"] = nullptr;
  j["witness"] = nullptr;
  j["method"] = "reproduce";
  j["scope"] = report.scope;
  json rows = json::array();
  double total_ms = 0.0;
  for (const ReproRow& row : report.rows) {
    rows.push_back({{"section", row.section},
                    {"claim", row.claim},
                    {"equation", row.equation},
                    {"colors", row.num_colors},
                    {"claimed", opt(row.claimed)},
                    {"search_status", row.search_status},
                    {"search_value", opt(row.search_value)},
                    {"verdict", row.verdict},
                    {"expect_refuted", row.expect_refuted},
                    {"cached", row.cached},
                    {"note", row.note}});
    total_ms += row.elapsed_ms;
  }
  j["rows"] = std::move(rows);
  j["summary"] = {{"confirmed", report.confirmed},
                  {"refuted_expected", report.refuted_expected},
                  {"refuted_unexpected", report.refuted_unexpected},
                  {"inconclusive", report.inconclusive},
                  {"recorded", report.recorded},
                  {"all_ok", report.all_ok}};
  j["elapsed_ms"] = total_ms;
  j["engine_version"] = kEngineVersion;
  return dump(j);
}

namespace {

std::string status_word(const std::string& status) {
  if (status == "exact") return "Exact";
  if (status == "exceeds_cap") return "ExceedsCap";
  if (status == "timeout") return "Timeout";
  return status;
}

std::string equation_line(const json& j) {
  std::ostringstream out;
  out << "coeffs=";
  const auto& coeffs = j.at("coeffs");
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i) out << ',';
    out << coeffs[i].get<Int>();
  }
  if (!j.at("shift").is_null()) {
    out << " shift=" << j.at("shift").get<Int>();
  } else if (j.contains("j_max")) {
    out << " (excellence, j_max=" << j.at("j_max").get<Int>() << ")";
  }
  out << " colors=" << j.at("colors").get<int>();
  return out.str();
}

std::string render_search_text(const json& j) {
  std::ostringstream out;
  out << equation_line(j) << '\n';
  out << status_word(j.at("status").get<std::string>()) << ' '
      << j.at("value").get<Int>() << '\n';
  out << "witness:";
  for (const auto& c : j.at("witness")) out << ' ' << c.get<int>();
  out << '\n';
  out << "elapsed: " << j.at("elapsed_ms").dump() << " ms\n";
  return out.str();
}

std::string render_bounds_text(const json& j) {
  std::ostringstream out;
  out << equation_line(j) << '\n';
  for (const char* side : {"lower", "upper"}) {
    out << side << ": ";
    const auto& b = j.at(side);
    if (b.is_null()) {
      out << "none";
    } else {
      out << b.at("value").get<Int>() << " ("
          << b.at("method").get<std::string>() << ")";
    }
    out << '\n';
  }
  if (!j.at("value").is_null()) {
    out << "value: " << j.at("value").get<Int>() << '\n';
  }
  const auto& inputs = j.at("inputs");
  out << "inputs: r_hom="
      << (inputs.at("r_hom").is_null() ? std::string("none")
                                       : inputs.at("r_hom").dump())
      << " excellent_n="
      << (inputs.at("excellent_n").is_null() ? std::string("none")
                                             : inputs.at("excellent_n").dump())
      << '\n';
  return out.str();
}

std::string render_conjecture_text(const json& j) {
  std::ostringstream out;
  out << equation_line(j) << " cap=" << j.at("cap").get<Int>() << '\n';
  const auto& premise = j.at("premise");
  out << "premise: R="
      << (premise.at("r_hom").is_null() ? std::string("unknown")
                                        : premise.at("r_hom").dump())
      << " max_excellent="
      << (premise.at("max_excellent").is_null()
              ? std::string("unknown")
              : premise.at("max_excellent").dump())
      << " (" << premise.at("status").get<std::string>() << ")"
      << " equals_R_minus_1="
      << (premise.at("equals_r_minus_1").get<bool>() ? "yes" : "no") << '\n';
  for (const auto& row : j.at("rows")) {
    out << "shift=" << row.at("shift").get<Int>() << " predicted="
        << (row.at("predicted").is_null() ? std::string("none")
                                          : row.at("predicted").dump())
        << " search=" << row.at("search_status").get<std::string>() << ':'
        << (row.at("search_value").is_null() ? std::string("-")
                                             : row.at("search_value").dump())
        << " verdict=" << row.at("verdict").get<std::string>() << '\n';
  }
  const auto& s = j.at("summary");
  out << "summary: agree=" << s.at("agree").get<int>()
      << " disagree=" << s.at("disagree").get<int>()
      << " inconclusive=" << s.at("inconclusive").get<int>() << '\n';
  return out.str();
}

std::string render_reproduce_text(const json& j) {
  std::ostringstream out;
  out << "scope: " << j.at("scope").get<std::string>() << '\n';
  for (const auto& row : j.at("rows")) {
    out << '[' << row.at("section").get<std::string>() << "] "
        << row.at("verdict").get<std::string>() << ": "
        << row.at("claim").get<std::string>() << " ("
        << row.at("equation").get<std::string>() << ", "
        << row.at("colors").get<int>() << " colors)";
    const auto& status = row.at("search_status");
    out << " | search " << status.get<std::string>();
    if (!row.at("search_value").is_null()) {
      out << ':' << row.at("search_value").dump();
    }
    if (row.at("cached").get<bool>()) out << " (cached)";
    const std::string note = row.at("note").get<std::string>();
    if (!note.empty()) out << " | " << note;
    out << '\n';
  }
  const auto& s = j.at("summary");
  out << "summary: confirmed=" << s.at("confirmed").get<int>()
      << " refuted_expected=" << s.at("refuted_expected").get<int>()
      << " refuted_unexpected=" << s.at("refuted_unexpected").get<int>()
      << " inconclusive=" << s.at("inconclusive").get<int>()
      << " recorded=" << s.at("recorded").get<int>()
      << " all_ok=" << (s.at("all_ok").get<bool>() ? "yes" : "no") << '\n';
  return out.str();
}

}  // namespace

std::string render_report_text(const std::string& report_json) {
  const json j = json::parse(report_json);
  const std::string method = j.at("method").get<std::string>();
  if (method == "search" || method == "excellence-search") {
    return render_search_text(j);
  }
  if (method == "bounds") return render_bounds_text(j);
  if (method == "conjecture-check") return render_conjecture_text(j);
  if (method == "reproduce") return render_reproduce_text(j);
  throw std::invalid_argument("unknown report method: " + method);
}

std::string render_report_csv(const std::string& report_json) {
  const json j = json::parse(report_json);
  const std::string method = j.at("method").get<std::string>();
  std::ostringstream out;
  if (method == "reproduce") {
    out << "section,claim,equation,colors,claimed,search_status,"
           "search_value,verdict,expect_refuted,cached,note\n";
    for (const auto& row : j.at("rows")) {
      out << csv_cell(row.at("section")) << ',' << csv_cell(row.at("claim"))
          << ',' << csv_cell(row.at("equation")) << ','
          << csv_cell(row.at("colors")) << ',' << csv_cell(row.at("claimed"))
          << ',' << csv_cell(row.at("search_status")) << ','
          << csv_cell(row.at("search_value")) << ','
          << csv_cell(row.at("verdict")) << ','
          << csv_cell(row.at("expect_refuted")) << ','
          << csv_cell(row.at("cached")) << ',' << csv_cell(row.at("note"))
          << '\n';
    }
    return out.str();
  }
  if (method == "conjecture-check") {
    out << "shift,r_hom,r_source,predicted,search_status,search_value,"
           "verdict\n";
    for (const auto& row : j.at("rows")) {
      out << csv_cell(row.at("shift")) << ',' << csv_cell(row.at("r_hom"))
          << ',' << csv_cell(row.at("r_source")) << ','
          << csv_cell(row.at("predicted")) << ','
          << csv_cell(row.at("search_status")) << ','
          << csv_cell(row.at("search_value")) << ','
          << csv_cell(row.at("verdict")) << '\n';
    }
    return out.str();
  }
  throw std::invalid_argument("no CSV rendering for method: " + method);
}

}  // namespace rado
