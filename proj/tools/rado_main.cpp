/*
 * (C) Copyright 2026 rado developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

// Command-line front end.  Talks to the engine exclusively through the
// C interface in rado/rado.h; the only other dependencies are CLI11 for
// argument handling and json.hpp for reading report summaries back.
//
// Exit codes: 0 success / claim holds, 1 failure or refutation,
// 2 bad invocation or input, 3 inconclusive (cap or budget hit).

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "rado/rado.h"

namespace {

struct Options {
  std::vector<int64_t> coeffs;
  int64_t shift = 0;
  int colors = 2;
  int64_t cap = 40;
  int threads = 1;
  std::string budget;
  int partition_depth = 10;
  std::string format = "text";
  std::string out;
  std::string store_dir;
  // verify
  std::string coloring;
  std::string coloring_file;
  bool excellent = false;
  // bounds
  std::optional<int64_t> r_hom;
  std::optional<int64_t> excellent_n;
  bool no_registry = false;
  // conjecture
  std::string shifts;
  // reproduce
  std::string scope = "all";
  bool force = false;
  std::string csv;
};

int exit_for(rado_status status) {
  switch (status) {
    case RADO_OK:
      return 0;
    case RADO_ERR_INTEGRITY:
    case RADO_ERR_INTERNAL:
      return 1;
    case RADO_ERR_ARGUMENT:
    case RADO_ERR_PRECONDITION:
    case RADO_ERR_IO:
      return 2;
    case RADO_ERR_TIMEOUT:
      return 3;
  }
  return 1;
}

int fail(rado_status status) {
  std::cerr << "error: " << rado_last_error() << '\n';
  return exit_for(status);
}

int fail_usage(const std::string& message) {
  std::cerr << "error: " << message << '\n';
  return 2;
}

// "500ms", "30s", "5m", "1h"; a bare number means seconds.
bool parse_budget_ms(const std::string& text, int64_t* out) {
  if (text.empty()) {
    *out = 0;
    return true;
  }
  std::size_t pos = 0;
  long long value = 0;
  try {
    value = std::stoll(text, &pos);
  } catch (...) {
    return false;
  }
  if (value < 0) return false;
  const std::string unit = text.substr(pos);
  if (unit == "ms") {
    *out = value;
  } else if (unit.empty() || unit == "s") {
    *out = value * 1000;
  } else if (unit == "m") {
    *out = value * 60'000;
  } else if (unit == "h") {
    *out = value * 3'600'000;
  } else {
    return false;
  }
  return true;
}

bool fill_search_options(const Options& opt, rado_search_options* search) {
  rado_search_options_init(search);
  search->threads = opt.threads;
  search->partition_depth = opt.partition_depth;
  return parse_budget_ms(opt.budget, &search->budget_ms);
}

bool write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return true;
  }
  std::ofstream file(path);
  if (!file) return false;
  file << text;
  return file.good();
}

// Holders so early returns never leak C-API objects.
struct StringOut {
  char* value = nullptr;
  ~StringOut() { rado_string_free(value); }
};

struct EquationOut {
  rado_equation* value = nullptr;
  ~EquationOut() { rado_equation_free(value); }
};

struct ColoringOut {
  rado_coloring* value = nullptr;
  ~ColoringOut() { rado_coloring_free(value); }
};

struct ResultOut {
  rado_result* value = nullptr;
  ~ResultOut() { rado_result_free(value); }
};

struct StoreOut {
  rado_store* value = nullptr;
  ~StoreOut() { rado_store_close(value); }
};

int emit_report(const Options& opt, const char* json) {
  std::string text = json;
  if (opt.format == "text") {
    StringOut rendered;
    if (rado_status st = rado_render_text(json, &rendered.value);
        st != RADO_OK) {
      return fail(st);
    }
    text = rendered.value;
  }
  if (!write_output(text, opt.out)) {
    return fail_usage("cannot write " + opt.out);
  }
  return 0;
}

int save_witness(const Options& opt, const rado_result* result,
                 const rado_equation* eq, bool excellent_kind) {
  if (opt.store_dir.empty()) return 0;
  const rado_coloring* witness = nullptr;
  if (rado_status st = rado_result_witness(result, &witness); st != RADO_OK) {
    return fail(st);
  }
  int64_t length = 0;
  rado_coloring_length(witness, &length);
  if (length < 1) return 0;
  rado_search_state state;
  rado_result_state(result, &state);
  const int exact = state == RADO_SEARCH_EXACT ? 1 : 0;

  StoreOut store;
  if (rado_status st = rado_store_open(opt.store_dir.c_str(), &store.value);
      st != RADO_OK) {
    return fail(st);
  }
  StringOut id;
  rado_status st;
  if (excellent_kind) {
    st = rado_store_save_excellent(store.value, opt.coeffs.data(),
                                   static_cast<int64_t>(opt.coeffs.size()),
                                   opt.colors, witness, exact, &id.value);
  } else {
    st = rado_store_save_good(store.value, eq, opt.colors, witness, exact,
                              &id.value);
  }
  if (st != RADO_OK) return fail(st);
  std::cerr << "saved certificate " << id.value << '\n';
  return 0;
}

int finish_search(const Options& opt, const rado_result* result,
                  const rado_equation* eq, bool excellent_kind) {
  StringOut json;
  if (rado_status st = rado_result_to_json(result, &json.value);
      st != RADO_OK) {
    return fail(st);
  }
  if (int rc = emit_report(opt, json.value); rc != 0) return rc;
  if (int rc = save_witness(opt, result, eq, excellent_kind); rc != 0) {
    return rc;
  }
  rado_search_state state;
  rado_result_state(result, &state);
  return state == RADO_SEARCH_EXACT ? 0 : 3;
}

int run_search(const Options& opt) {
  rado_search_options search;
  if (!fill_search_options(opt, &search)) {
    return fail_usage("bad --budget value: " + opt.budget);
  }
  EquationOut eq;
  if (rado_status st =
          rado_equation_create(opt.coeffs.data(),
                               static_cast<int64_t>(opt.coeffs.size()),
                               opt.shift, &eq.value);
      st != RADO_OK) {
    return fail(st);
  }
  ResultOut result;
  if (rado_status st = rado_search_rado_number(eq.value, opt.colors, opt.cap,
                                               &search, &result.value);
      st != RADO_OK) {
    return fail(st);
  }
  return finish_search(opt, result.value, eq.value, false);
}

int run_excellence(const Options& opt) {
  rado_search_options search;
  if (!fill_search_options(opt, &search)) {
    return fail_usage("bad --budget value: " + opt.budget);
  }
  ResultOut result;
  if (rado_status st = rado_search_max_excellent(
          opt.coeffs.data(), static_cast<int64_t>(opt.coeffs.size()),
          opt.colors, opt.cap, &search, &result.value);
      st != RADO_OK) {
    return fail(st);
  }
  return finish_search(opt, result.value, nullptr, true);
}

int run_verify(Options& opt, bool colors_given) {
  std::string text = opt.coloring;
  if (!opt.coloring_file.empty()) {
    std::ifstream file(opt.coloring_file);
    if (!file) return fail_usage("cannot read " + opt.coloring_file);
    std::ostringstream buf;
    buf << file.rdbuf();
    text = buf.str();
  }
  std::vector<int> entries;
  {
    std::istringstream in(text);
    int v = 0;
    while (in >> v) entries.push_back(v);
    in.clear();
    std::string rest;
    if (in >> rest) return fail_usage("bad coloring entry: " + rest);
  }
  if (entries.empty()) return fail_usage("empty coloring");
  if (!colors_given) {
    opt.colors = *std::max_element(entries.begin(), entries.end());
  }

  ColoringOut coloring;
  if (rado_status st = rado_coloring_create(
          opt.colors, entries.data(), static_cast<int64_t>(entries.size()),
          &coloring.value);
      st != RADO_OK) {
    return fail(st);
  }

  int holds = 0;
  std::string description;
  if (opt.excellent) {
    if (rado_status st = rado_is_excellent_coloring(
            opt.coeffs.data(), static_cast<int64_t>(opt.coeffs.size()),
            coloring.value, &holds);
        st != RADO_OK) {
      return fail(st);
    }
    description = "excellent";
  } else {
    EquationOut eq;
    if (rado_status st =
            rado_equation_create(opt.coeffs.data(),
                                 static_cast<int64_t>(opt.coeffs.size()),
                                 opt.shift, &eq.value);
        st != RADO_OK) {
      return fail(st);
    }
    description = "good";
    if (rado_status st =
            rado_is_good_coloring(eq.value, coloring.value, &holds);
        st != RADO_OK) {
      return fail(st);
    }
  }

  std::string rendered;
  if (opt.format == "json") {
    nlohmann::ordered_json j;
    j["coeffs"] = opt.coeffs;
    if (opt.excellent) {
      j["shift"] = nullptr;
    } else {
      j["shift"] = opt.shift;
    }
    j["colors"] = opt.colors;
    j["length"] = entries.size();
    j["check"] = description;
    j["holds"] = holds != 0;
    rendered = j.dump(2) + "\n";
  } else {
    std::ostringstream out;
    out << description << " coloring of length " << entries.size() << ": "
        << (holds ? "yes" : "no") << '\n';
    rendered = out.str();
  }
  if (!write_output(rendered, opt.out)) {
    return fail_usage("cannot write " + opt.out);
  }
  return holds ? 0 : 1;
}

int run_bounds(const Options& opt) {
  EquationOut eq;
  if (rado_status st =
          rado_equation_create(opt.coeffs.data(),
                               static_cast<int64_t>(opt.coeffs.size()),
                               opt.shift, &eq.value);
      st != RADO_OK) {
    return fail(st);
  }
  const int64_t* r_ptr = opt.r_hom ? &*opt.r_hom : nullptr;
  const int64_t* n_ptr = opt.excellent_n ? &*opt.excellent_n : nullptr;
  StringOut json;
  if (rado_status st =
          rado_bounds_report(eq.value, opt.colors, r_ptr, n_ptr,
                             opt.no_registry ? 0 : 1, &json.value);
      st != RADO_OK) {
    return fail(st);
  }
  return emit_report(opt, json.value);
}

std::optional<std::vector<int64_t>> parse_int_list(const std::string& text) {
  std::vector<int64_t> values;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    try {
      std::size_t pos = 0;
      values.push_back(std::stoll(item, &pos));
      if (pos != item.size()) return std::nullopt;
    } catch (...) {
      return std::nullopt;
    }
  }
  if (values.empty()) return std::nullopt;
  return values;
}

int run_conjecture(const Options& opt) {
  rado_search_options search;
  if (!fill_search_options(opt, &search)) {
    return fail_usage("bad --budget value: " + opt.budget);
  }
  const auto shifts = parse_int_list(opt.shifts);
  if (!shifts) return fail_usage("bad --shifts value: " + opt.shifts);
  StringOut json;
  if (rado_status st = rado_conjecture_check(
          opt.coeffs.data(), static_cast<int64_t>(opt.coeffs.size()),
          opt.colors, shifts->data(), static_cast<int64_t>(shifts->size()),
          opt.cap, &search, &json.value);
      st != RADO_OK) {
    return fail(st);
  }
  if (int rc = emit_report(opt, json.value); rc != 0) return rc;
  const auto summary = nlohmann::json::parse(json.value).at("summary");
  if (summary.at("disagree").get<int>() > 0) return 1;
  if (summary.at("inconclusive").get<int>() > 0) return 3;
  return 0;
}

int run_reproduce(const Options& opt) {
  rado_search_options search;
  if (!fill_search_options(opt, &search)) {
    return fail_usage("bad --budget value: " + opt.budget);
  }
  StringOut json;
  if (rado_status st = rado_reproduce(
          opt.scope.c_str(),
          opt.store_dir.empty() ? nullptr : opt.store_dir.c_str(),
          opt.force ? 1 : 0, &search, &json.value);
      st != RADO_OK) {
    return fail(st);
  }
  if (int rc = emit_report(opt, json.value); rc != 0) return rc;
  if (!opt.csv.empty()) {
    StringOut csv;
    if (rado_status st = rado_render_csv(json.value, &csv.value);
        st != RADO_OK) {
      return fail(st);
    }
    std::ofstream file(opt.csv);
    if (!file) return fail_usage("cannot write " + opt.csv);
    file << csv.value;
  }
  const auto summary = nlohmann::json::parse(json.value).at("summary");
  if (summary.at("refuted_unexpected").get<int>() > 0) return 1;
  if (summary.at("inconclusive").get<int>() > 0) return 3;
  return 0;
}

void add_search_flags(CLI::App* cmd, Options& opt) {
  cmd->add_option("--threads", opt.threads, "worker threads")
      ->check(CLI::Range(1, 256));
  cmd->add_option("--budget", opt.budget,
                  "wall-clock budget, e.g. 500ms, 30s, 5m, 1h");
  cmd->add_option("--partition-depth", opt.partition_depth,
                  "prefix depth used to split work across threads")
      ->check(CLI::Range(1, 64));
}

void add_output_flags(CLI::App* cmd, Options& opt) {
  cmd->add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--out", opt.out, "write the report to a file");
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{
      "rado: exact search, closed-form bounds and reproduction reports for\n"
      "generalized Schur numbers of c1 x1 + ... + c_{k-1} x_{k-1} = xk + b"};
  app.set_version_flag("--version", rado_engine_version());
  app.require_subcommand(1);

  int rc = 0;

  auto* search = app.add_subcommand(
      "search", "exact value by exhaustive coloring search");
  search->add_option("--coeffs", opt.coeffs, "coefficients c1,...,c_{k-1}")
      ->delimiter(',')
      ->required();
  search->add_option("--shift", opt.shift, "right-hand shift b")->required();
  search->add_option("--colors", opt.colors, "number of colors")
      ->check(CLI::Range(1, 63));
  search->add_option("--cap", opt.cap, "largest interval length tried");
  search->add_option("--store", opt.store_dir,
                     "certificate directory for found witnesses");
  add_search_flags(search, opt);
  add_output_flags(search, opt);
  search->callback([&] { rc = run_search(opt); });

  auto* excellence = app.add_subcommand(
      "excellence", "longest interval with an excellent coloring");
  excellence
      ->add_option("--coeffs", opt.coeffs, "coefficients c1,...,c_{k-1}")
      ->delimiter(',')
      ->required();
  excellence->add_option("--colors", opt.colors, "number of colors")
      ->check(CLI::Range(1, 63));
  excellence->add_option("--cap", opt.cap, "largest interval length tried");
  excellence->add_option("--store", opt.store_dir,
                         "certificate directory for found witnesses");
  add_search_flags(excellence, opt);
  add_output_flags(excellence, opt);
  excellence->callback([&] { rc = run_excellence(opt); });

  auto* verify = app.add_subcommand(
      "verify", "check a coloring against an equation");
  verify->add_option("--coeffs", opt.coeffs, "coefficients c1,...,c_{k-1}")
      ->delimiter(',')
      ->required();
  verify->add_option("--shift", opt.shift, "right-hand shift b");
  auto* colors_opt =
      verify->add_option("--colors", opt.colors, "number of colors")
          ->check(CLI::Range(1, 63));
  verify->add_option("--coloring", opt.coloring,
                     "whitespace-separated colors, e.g. \"1 2 2 1\"");
  verify->add_option("--coloring-file", opt.coloring_file,
                     "file holding the coloring");
  verify->add_flag("--excellent", opt.excellent,
                   "check excellence instead of goodness (ignores --shift)");
  add_output_flags(verify, opt);
  verify->callback([&] {
    if (opt.coloring.empty() == opt.coloring_file.empty()) {
      rc = fail_usage("give exactly one of --coloring / --coloring-file");
      return;
    }
    rc = run_verify(opt, colors_opt->count() > 0);
  });

  auto* bounds = app.add_subcommand(
      "bounds", "closed-form lower/upper bounds for an equation");
  bounds->add_option("--coeffs", opt.coeffs, "coefficients c1,...,c_{k-1}")
      ->delimiter(',')
      ->required();
  bounds->add_option("--shift", opt.shift, "right-hand shift b")->required();
  bounds->add_option("--colors", opt.colors, "number of colors")
      ->check(CLI::Range(1, 63));
  bounds->add_option("--R", opt.r_hom,
                     "known homogeneous value r(E(0); t), if any");
  bounds->add_option("--excellent-n", opt.excellent_n,
                     "known excellent interval length, if any");
  bounds->add_flag("--no-registry", opt.no_registry,
                   "do not consult the table of published values");
  add_output_flags(bounds, opt);
  bounds->callback([&] { rc = run_bounds(opt); });

  auto* conjecture = app.add_subcommand(
      "conjecture", "compare searched values against the predicted formula");
  conjecture
      ->add_option("--coeffs", opt.coeffs, "coefficients c1,...,c_{k-1}")
      ->delimiter(',')
      ->required();
  conjecture->add_option("--colors", opt.colors, "number of colors")
      ->check(CLI::Range(1, 63));
  conjecture
      ->add_option("--shifts", opt.shifts,
                   "comma-separated shifts, e.g. \"-3,-2,-1,1,2,3\"")
      ->required();
  conjecture->add_option("--cap", opt.cap, "largest interval length tried");
  add_search_flags(conjecture, opt);
  add_output_flags(conjecture, opt);
  conjecture->callback([&] { rc = run_conjecture(opt); });

  auto* reproduce = app.add_subcommand(
      "reproduce", "re-derive the published values and formulas by search");
  reproduce->add_option("--scope", opt.scope, "row selection")
      ->check(CLI::IsMember({"all", "section-2", "section-3", "conjecture"}));
  reproduce->add_option("--store", opt.store_dir,
                        "certificate directory used as a cache");
  reproduce->add_flag("--force", opt.force, "ignore cached certificates");
  reproduce->add_option("--csv", opt.csv, "also write rows as CSV");
  add_search_flags(reproduce, opt);
  add_output_flags(reproduce, opt);
  reproduce->callback([&] { rc = run_reproduce(opt); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  return rc;
}
