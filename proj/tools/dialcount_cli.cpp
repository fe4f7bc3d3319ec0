// Copyright 2026 The dialcount Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. Talks to the library only through the C API.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dialcount/dialcount.h"
#include "json.hpp"

namespace {

using Json = nlohmann::ordered_json;

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitParse = 2,
  kExitSemantic = 3,
  kExitErratum = 4,
  kExitBudget = 5,
  kExitInternal = 6,
};

int exit_code_for(dc_status status) {
  switch (status) {
    case DC_OK: return kExitOk;
    case DC_ERR_INVALID_ARGUMENT: return kExitUsage;
    case DC_ERR_PARSE:
    case DC_ERR_IO: return kExitParse;
    case DC_ERR_BUDGET_EXCEEDED: return kExitBudget;
    case DC_ERR_NOT_EQUIVALENCE:
    case DC_ERR_UNKNOWN_ELEMENT:
    case DC_ERR_UNKNOWN_ATTRIBUTE:
    case DC_ERR_UNKNOWN_RELATION:
    case DC_ERR_UNIVERSE_MISMATCH:
    case DC_ERR_RULE_VIOLATION:
    case DC_ERR_NOT_A_PREORDER: return kExitSemantic;
    case DC_ERR_INTERNAL: return kExitInternal;
  }
  return kExitInternal;
}

struct Failure {
  int exit_code;
  std::string kind;
  std::string message;
};

void print_error(const Failure& f) {
  Json record;
  record["error"] = f.kind;
  record["message"] = f.message;
  std::cerr << record.dump() << '\n';
}

void check(dc_status status) {
  if (status != DC_OK) throw Failure{exit_code_for(status), dc_status_name(status), dc_last_error()};
}

struct SpaceDeleter {
  void operator()(dc_space* s) const { dc_space_free(s); }
};
using SpaceHandle = std::unique_ptr<dc_space, SpaceDeleter>;

struct CStringDeleter {
  void operator()(char* s) const { dc_string_free(s); }
};

Json take_json(char* raw) {
  std::unique_ptr<char, CStringDeleter> owned(raw);
  return Json::parse(owned.get());
}

const char* opt(const std::optional<std::string>& value) {
  return value ? value->c_str() : nullptr;
}

struct Options {
  std::optional<std::string> input;
  std::optional<std::string> csv;
  std::vector<std::string> relations;
  std::optional<std::string> order;
  std::string format = "json";
  std::optional<std::size_t> budget;
  std::size_t table_budget = 5;
  std::uint64_t samples = 10000;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> consistency;
  std::optional<std::string> method;
  std::optional<std::string> set;
  std::optional<std::string> x;
  std::optional<std::string> y;
  bool exact = false;
  bool table = false;
  bool pretty = false;
};

bool using_paper(const Options& o) {
  return !o.csv && (!o.input || *o.input == "paper");
}

// `which` indexes into --rel; missing entries fall back to the defaults of
// the embedded example (R for single-space commands, Q then R for measures).
SpaceHandle load_space(const Options& o, std::size_t which, const char* paper_default) {
  const std::optional<std::string> rel =
      which < o.relations.size() ? std::optional<std::string>(o.relations[which]) : std::nullopt;
  dc_space* raw = nullptr;
  if (o.csv) {
    check(dc_space_load_csv(o.csv->c_str(), rel ? rel->c_str() : "", &raw));
  } else if (using_paper(o)) {
    check(dc_space_paper_example(rel ? rel->c_str() : paper_default, &raw));
  } else {
    check(dc_space_load(o.input->c_str(), opt(rel), &raw));
  }
  return SpaceHandle(raw);
}

std::string tsv_cell(const Json& value) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_array() && std::all_of(value.begin(), value.end(),
                                      [](const Json& v) { return v.is_string(); })) {
    std::string out;
    for (const auto& v : value) out += (out.empty() ? "" : ",") + v.get<std::string>();
    return out;
  }
  return value.dump();
}

// One line per top-level key: key, then the array items (or the value)
// separated by tabs.
std::string to_tsv(const Json& doc) {
  std::string out;
  for (const auto& [key, value] : doc.items()) {
    out += key;
    if (value.is_array()) {
      for (const auto& item : value) out += "\t" + tsv_cell(item);
    } else {
      out += "\t" + tsv_cell(value);
    }
    out += "\n";
  }
  return out;
}

void print(const Options& o, const Json& doc) {
  if (o.format == "tsv") {
    std::cout << to_tsv(doc);
  } else {
    std::cout << doc.dump(o.pretty ? 2 : -1) << '\n';
  }
}

std::size_t budget_or(const Options& o, std::size_t fallback) { return o.budget.value_or(fallback); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dialectical counting, granular rough-set measures and permutation quotients"};
  app.fallthrough();
  app.require_subcommand(1);
  Options o;

  app.add_option("--input", o.input,
                 "Space file (JSON). Omit or pass 'paper' for the embedded worked example");
  app.add_option("--csv", o.csv, "Information table (CSV, first column = element label)");
  app.add_option("--rel", o.relations,
                 "Relation name in the space file, or comma-separated attributes with --csv. "
                 "Measures take two: --rel Q --rel R")
      ->take_all();
  app.add_option("--order", o.order, "Counting order as comma-separated labels");
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "tsv"}));
  app.add_flag("--pretty", o.pretty, "Indent JSON output");
  app.add_option("--budget", o.budget,
                 "Largest universe for full enumeration; n! orders are walked "
                 "(8 -> 40320, 10 -> 3628800)")
      ->check(CLI::PositiveNumber);
  app.add_option("--samples", o.samples, "Random orders drawn when sampling")->check(CLI::PositiveNumber);
  app.add_option("--seed", o.seed, "Seed for sampling (required with --samples)");
  app.add_option("--n", o.consistency, "Consistency constant n >= 0 (p/q, integer or decimal)");

  auto* space_cmd = app.add_subcommand("space", "Derived objects of a space");
  std::string space_query = "classes";
  space_cmd->add_option("query", space_query, "What to compute")
      ->check(CLI::IsMember({"relation", "classes", "neighbourhoods", "lower", "upper",
                             "neighbourhood-lower", "neighbourhood-upper", "definite"}));
  space_cmd->add_option("--set", o.set, "Set argument (comma-separated labels)");

  auto* count_cmd = app.add_subcommand("count", "Count the universe in an order");
  count_cmd->add_option("--method", o.method, "ipc | hpc | hppc | ippc")->required();

  auto* induce_cmd = app.add_subcommand("induce", "Count, then restrict to a subset");
  induce_cmd->add_option("--method", o.method, "ipc | hpc | hppc | ippc")->required();
  induce_cmd->add_option("--set", o.set, "Subset (comma-separated labels)")->required();

  auto* granules_cmd = app.add_subcommand("granules", "Granules recovered from counts");
  std::string granules_mode = "hpc";
  granules_cmd->add_option("mode", granules_mode, "hpc | maximal-ipc | check")
      ->check(CLI::IsMember({"hpc", "maximal-ipc", "check"}));
  granules_cmd->add_option("--set", o.set, "Set to classify (check mode)");

  auto* measures_cmd = app.add_subcommand("measures", "Dependency and consistency measures of (Q, R)");
  std::string measure = "delta";
  measures_cmd->add_option("measure", measure, "pos | delta | gk | cons | gcons")
      ->check(CLI::IsMember({"pos", "delta", "gk", "cons", "gcons"}));

  auto* inclusion_cmd = app.add_subcommand("inclusion", "Rough inclusion functions");
  std::string inclusion = "k";
  inclusion_cmd->add_option("function", inclusion, "k | k1 | k2 | k-star | k1-star | k2-star")
      ->check(CLI::IsMember({"k", "k1", "k2", "k-star", "k1-star", "k2-star"}));
  inclusion_cmd->add_option("--x", o.x, "X (comma-separated labels)");
  inclusion_cmd->add_option("--y", o.y, "Y (comma-separated labels)");

  auto* countability_cmd = app.add_subcommand("countability", "IPPC/HPPC countability and index");
  countability_cmd->add_option("--method", o.method, "ippc | hppc")->required();
  countability_cmd->add_flag("--exact", o.exact, "Enumerate all n! orders (n <= --budget, default 8)");

  auto* cipca_cmd = app.add_subcommand("cipca", "Quotient of all orders by IPC signature");
  cipca_cmd->add_flag("--table", o.table, "Also build the partial composition table");
  cipca_cmd->add_option("--table-budget", o.table_budget, "Largest n for the table (default 5)")
      ->check(CLI::PositiveNumber);

  auto* verify_cmd = app.add_subcommand("verify", "Check the embedded worked example");
  std::string verify_target;
  verify_cmd->add_option("target", verify_target, "paper-example")
      ->required()
      ->check(CLI::IsMember({"paper-example"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    print_error({kExitUsage, "usage", e.what()});
    return kExitUsage;
  }

  try {
    char* raw = nullptr;
    if (space_cmd->parsed()) {
      auto space = load_space(o, 0, "R");
      check(dc_space_query(space.get(), space_query.c_str(), opt(o.set), &raw));
    } else if (count_cmd->parsed()) {
      auto space = load_space(o, 0, "R");
      check(dc_count(space.get(), o.method->c_str(), opt(o.order), &raw));
    } else if (induce_cmd->parsed()) {
      auto space = load_space(o, 0, "R");
      check(dc_induce(space.get(), o.method->c_str(), opt(o.order), opt(o.set), &raw));
    } else if (granules_cmd->parsed()) {
      auto space = load_space(o, 0, "R");
      check(dc_granules(space.get(), granules_mode.c_str(), opt(o.order), opt(o.set),
                        budget_or(o, 8), &raw));
    } else if (measures_cmd->parsed()) {
      auto q = load_space(o, 0, "Q");
      auto r = load_space(o, 1, "R");
      check(dc_measure(q.get(), r.get(), measure.c_str(), opt(o.consistency), &raw));
    } else if (inclusion_cmd->parsed()) {
      auto space = load_space(o, 0, "R");
      check(dc_inclusion(space.get(), inclusion.c_str(), o.x ? o.x->c_str() : "",
                         o.y ? o.y->c_str() : "", &raw));
    } else if (countability_cmd->parsed()) {
      if (!o.exact && !o.seed) {
        throw Failure{kExitUsage, "usage", "sampling needs --seed (or pass --exact)"};
      }
      auto space = load_space(o, 0, "R");
      check(dc_countability(space.get(), o.method->c_str(), o.exact ? 1 : 0, budget_or(o, 8),
                            o.samples, o.seed.value_or(0), &raw));
    } else if (cipca_cmd->parsed()) {
      auto space = load_space(o, 0, "R");
      check(dc_cipca(space.get(), budget_or(o, 7), o.table ? 1 : 0, o.table_budget, &raw));
    } else if (verify_cmd->parsed()) {
      int matches = 0;
      check(dc_verify_paper_example(&raw, &matches));
      print(o, take_json(raw));
      return matches ? kExitOk : kExitErratum;
    }
    print(o, take_json(raw));
    return kExitOk;
  } catch (const Failure& f) {
    print_error(f);
    return f.exit_code;
  } catch (const std::exception& e) {
    print_error({kExitInternal, "internal_error", e.what()});
    return kExitInternal;
  }
}
