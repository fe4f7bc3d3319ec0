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

#include "dialcount/dialcount.h"

#include <cstring>
#include <string>
#include <string_view>
#include <vector>

#include "dialcount/cipca.hpp"
#include "dialcount/countability.hpp"
#include "dialcount/error.hpp"
#include "dialcount/granules.hpp"
#include "dialcount/io.hpp"
#include "dialcount/measures.hpp"
#include "dialcount/paper_example.hpp"
#include "json.hpp"

struct dc_space {
  dialcount::ApproximationSpace space;
};

namespace {

using dialcount::ApproximationSpace;
using dialcount::Error;
using dialcount::ErrorCode;
using Json = nlohmann::ordered_json;

thread_local std::string last_error;

dc_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return DC_ERR_INVALID_ARGUMENT;
    case ErrorCode::Parse: return DC_ERR_PARSE;
    case ErrorCode::Io: return DC_ERR_IO;
    case ErrorCode::NotAnEquivalence: return DC_ERR_NOT_EQUIVALENCE;
    case ErrorCode::UnknownElement: return DC_ERR_UNKNOWN_ELEMENT;
    case ErrorCode::UnknownAttribute: return DC_ERR_UNKNOWN_ATTRIBUTE;
    case ErrorCode::UnknownRelation: return DC_ERR_UNKNOWN_RELATION;
    case ErrorCode::UniverseMismatch: return DC_ERR_UNIVERSE_MISMATCH;
    case ErrorCode::BudgetExceeded: return DC_ERR_BUDGET_EXCEEDED;
    case ErrorCode::RuleViolation: return DC_ERR_RULE_VIOLATION;
    case ErrorCode::NotAPreorder: return DC_ERR_NOT_A_PREORDER;
  }
  return DC_ERR_INTERNAL;
}

// Runs `body`, translating exceptions into a status and last_error.
template <class Body>
dc_status guarded(Body&& body) {
  try {
    body();
    last_error.clear();
    return DC_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return DC_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return DC_ERR_INTERNAL;
  }
}

template <class T>
T& require(T* pointer, const char* what) {
  if (pointer == nullptr) throw Error(ErrorCode::InvalidArgument, std::string(what) + " is null");
  return *pointer;
}

const char* require_text(const char* text, const char* what) {
  if (text == nullptr) throw Error(ErrorCode::InvalidArgument, std::string(what) + " is null");
  return text;
}

std::string_view text_or_empty(const char* text) { return text ? std::string_view(text) : std::string_view(); }

std::vector<std::string> split_labels(std::string_view text) {
  std::vector<std::string> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    std::string_view item = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    out.emplace_back(item);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

dialcount::ElementSet parse_set(const ApproximationSpace& space, const char* labels) {
  return space.universe().make_set(split_labels(text_or_empty(labels)));
}

dialcount::Order parse_order(const ApproximationSpace& space, const char* labels) {
  if (labels == nullptr || *labels == '\0') return dialcount::Order::identity(space.size());
  return dialcount::Order::from_labels(space.universe(), split_labels(labels));
}

char* to_c_string(const Json& value) {
  const std::string text = value.dump();
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

void emit(char** out_json, const Json& value) { require(out_json, "out_json") = to_c_string(value); }

Json labels_json(const dialcount::Universe& universe, const dialcount::ElementSet& set) {
  return Json(universe.labels_of(set));
}

Json blocks_json(const dialcount::Universe& universe, const dialcount::Granulation& blocks) {
  Json out = Json::array();
  for (const auto& block : blocks.blocks()) out.push_back(labels_json(universe, block));
  return out;
}

Json sequence_json(const ApproximationSpace& space, const dialcount::CountSequence& seq) {
  Json out;
  out["method"] = dialcount::to_string(seq.method);
  out["order"] = seq.order.labels(space.universe());
  out["tokens"] = seq.rendered();
  return out;
}

Json rational_json(const dialcount::Rational& value) { return dialcount::to_string(value); }

Json vector_json(const dialcount::MeasureVector& v) {
  Json values = Json::array();
  for (const auto& x : v.values) values.push_back(rational_json(x));
  Json out;
  out["values"] = std::move(values);
  out["labels"] = v.labels;
  out["sum"] = rational_json(v.sum());
  return out;
}

Json index_report_json(const ApproximationSpace& space, const dialcount::IndexReport& report) {
  Json out;
  out["method"] = dialcount::to_string(report.method);
  out["countable"] = report.countable ? Json(*report.countable) : Json(nullptr);
  if (const auto* exact = std::get_if<dialcount::Rational>(&report.index)) {
    out["index"] = rational_json(*exact);
  } else {
    const auto& est = std::get<dialcount::IndexEstimate>(report.index);
    Json index;
    index["estimate"] = est.estimate;
    index["successes"] = est.successes;
    index["samples"] = est.samples;
    index["seed"] = est.seed;
    out["index"] = std::move(index);
  }
  out["witness"] = report.witness ? Json(report.witness->labels(space.universe())) : Json(nullptr);
  return out;
}

dialcount::CountMethod method_of(const char* method) {
  return dialcount::parse_count_method(text_or_empty(method));
}

}  // namespace

extern "C" {

const char* dc_status_name(dc_status status) {
  switch (status) {
    case DC_OK: return "ok";
    case DC_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case DC_ERR_PARSE: return "parse_error";
    case DC_ERR_IO: return "io_error";
    case DC_ERR_NOT_EQUIVALENCE: return "not_an_equivalence";
    case DC_ERR_UNKNOWN_ELEMENT: return "unknown_element";
    case DC_ERR_UNKNOWN_ATTRIBUTE: return "unknown_attribute";
    case DC_ERR_UNKNOWN_RELATION: return "unknown_relation";
    case DC_ERR_UNIVERSE_MISMATCH: return "universe_mismatch";
    case DC_ERR_BUDGET_EXCEEDED: return "budget_exceeded";
    case DC_ERR_RULE_VIOLATION: return "rule_violation";
    case DC_ERR_NOT_A_PREORDER: return "not_a_preorder";
    case DC_ERR_INTERNAL: return "internal_error";
  }
  return "unknown_status";
}

const char* dc_last_error(void) { return last_error.c_str(); }

void dc_string_free(char* text) { std::free(text); }

const char* dc_version(void) { return "0.1.0"; }

dc_status dc_space_from_json(const char* json_text, const char* relation, dc_space** out) {
  return guarded([&] {
    auto doc = dialcount::parse_space_document(require_text(json_text, "json_text"));
    require(out, "out") = new dc_space{doc.space(text_or_empty(relation))};
  });
}

dc_status dc_space_load(const char* path, const char* relation, dc_space** out) {
  return guarded([&] {
    auto doc = dialcount::load_space_document(require_text(path, "path"));
    require(out, "out") = new dc_space{doc.space(text_or_empty(relation))};
  });
}

dc_status dc_space_from_csv(const char* csv_text, const char* attributes, dc_space** out) {
  return guarded([&] {
    auto table = dialcount::parse_info_table(require_text(csv_text, "csv_text"));
    auto attrs = split_labels(text_or_empty(attributes));
    if (attrs.empty()) attrs = table.attributes();
    require(out, "out") = new dc_space{dialcount::ind_from_table(table, attrs)};
  });
}

dc_status dc_space_load_csv(const char* path, const char* attributes, dc_space** out) {
  return guarded([&] {
    auto table = dialcount::load_info_table(require_text(path, "path"));
    auto attrs = split_labels(text_or_empty(attributes));
    if (attrs.empty()) attrs = table.attributes();
    require(out, "out") = new dc_space{dialcount::ind_from_table(table, attrs)};
  });
}

dc_status dc_space_paper_example(const char* relation, dc_space** out) {
  return guarded([&] {
    auto doc = dialcount::parse_space_document(dialcount::paper_example::space_document_json());
    require(out, "out") = new dc_space{doc.space(text_or_empty(relation))};
  });
}

void dc_space_free(dc_space* space) { delete space; }

size_t dc_space_size(const dc_space* space) { return space ? space->space.size() : 0; }

dc_status dc_space_label(const dc_space* space, size_t index, const char** out) {
  return guarded([&] {
    const auto& universe = require(space, "space").space.universe();
    if (index >= universe.size()) throw Error(ErrorCode::InvalidArgument, "label index out of range");
    require(out, "out") = universe.label(index).c_str();
  });
}

dc_status dc_space_related(const dc_space* space, const char* x, const char* y, int* out) {
  return guarded([&] {
    require(out, "out") =
        require(space, "space").space.related(require_text(x, "x"), require_text(y, "y")) ? 1 : 0;
  });
}

dc_status dc_space_is_equivalence(const dc_space* space, int* out) {
  return guarded([&] { require(out, "out") = require(space, "space").space.is_equivalence() ? 1 : 0; });
}

dc_status dc_space_query(const dc_space* handle, const char* what, const char* set,
                         char** out_json) {
  return guarded([&] {
    const auto& space = require(handle, "space").space;
    const auto& universe = space.universe();
    const std::string_view query = text_or_empty(what);
    Json out;
    out["query"] = query;
    if (query == "relation") {
      Json pairs = Json::array();
      for (auto [i, j] : space.relation().pairs()) {
        pairs.push_back(Json::array({universe.label(i), universe.label(j)}));
      }
      const auto flags = space.relation().closures();
      Json closures = Json::array();
      if (flags.reflexive) closures.push_back("reflexive");
      if (flags.symmetric) closures.push_back("symmetric");
      if (flags.transitive) closures.push_back("transitive");
      out["elements"] = universe.labels();
      out["pairs"] = std::move(pairs);
      out["closures"] = std::move(closures);
      out["equivalence"] = space.is_equivalence();
    } else if (query == "classes") {
      out["blocks"] = blocks_json(universe, dialcount::classes(space));
    } else if (query == "neighbourhoods") {
      Json map = Json::object();
      for (dialcount::ElementIndex x = 0; x < space.size(); ++x) {
        map[universe.label(x)] = labels_json(universe, space.neighbourhood(x));
      }
      out["neighbourhoods"] = std::move(map);
      out["cover"] = dialcount::neighbourhoods_cover(space);
    } else {
      const auto subset = parse_set(space, set);
      out["set"] = labels_json(universe, subset);
      if (query == "lower") {
        out["result"] = labels_json(universe, dialcount::lower(space, subset));
      } else if (query == "upper") {
        out["result"] = labels_json(universe, dialcount::upper(space, subset));
      } else if (query == "neighbourhood-lower") {
        out["result"] = labels_json(universe, dialcount::neighbourhood_lower(space, subset));
      } else if (query == "neighbourhood-upper") {
        out["result"] = labels_json(universe, dialcount::neighbourhood_upper(space, subset));
      } else if (query == "definite") {
        out["result"] = dialcount::is_definite(space, subset);
      } else {
        throw Error(ErrorCode::InvalidArgument, "unknown space query '" + std::string(query) + "'");
      }
    }
    emit(out_json, out);
  });
}

dc_status dc_count(const dc_space* handle, const char* method, const char* order, char** out_json) {
  return guarded([&] {
    const auto& space = require(handle, "space").space;
    const auto seq = dialcount::count(space, parse_order(space, order), method_of(method));
    Json out = sequence_json(space, seq);
    Json tau = Json::array();
    Json eps = Json::array();
    for (std::size_t i = 0; i < seq.order.size(); ++i) {
      auto t = dialcount::tau(space, seq, i);
      auto e = dialcount::epsilon(space, seq, i);
      tau.push_back(t ? Json(space.universe().label(seq.order[*t])) : Json(nullptr));
      eps.push_back(e ? Json(space.universe().label(seq.order[*e])) : Json(nullptr));
    }
    out["tau"] = std::move(tau);
    out["epsilon"] = std::move(eps);
    emit(out_json, out);
  });
}

dc_status dc_induce(const dc_space* handle, const char* method, const char* order, const char* set,
                    char** out_json) {
  return guarded([&] {
    const auto& space = require(handle, "space").space;
    const auto seq = dialcount::count(space, parse_order(space, order), method_of(method));
    const auto subset = parse_set(space, set);
    Json out;
    out["method"] = dialcount::to_string(seq.method);
    out["order"] = seq.order.labels(space.universe());
    out["subset"] = labels_json(space.universe(), subset);
    out["tokens"] = dialcount::render(dialcount::induced(seq, subset));
    emit(out_json, out);
  });
}

dc_status dc_granules(const dc_space* handle, const char* mode, const char* order, const char* set,
                      size_t budget, char** out_json) {
  return guarded([&] {
    const auto& space = require(handle, "space").space;
    const auto& universe = space.universe();
    const std::string_view which = text_or_empty(mode);
    Json out;
    out["mode"] = which;
    if (which == "hpc") {
      const auto extraction =
          dialcount::granules_from_hpc(dialcount::hpc(space, parse_order(space, order)), space);
      out["blocks"] = blocks_json(universe, extraction.blocks);
      out["witness"] = sequence_json(space, extraction.witness);
    } else if (which == "maximal-ipc") {
      const auto extraction = dialcount::maximal_ipc_granules(space, budget);
      out["blocks"] = blocks_json(universe, extraction.blocks);
      out["witness"] = sequence_json(space, extraction.witness);
    } else if (which == "check") {
      const auto subset = parse_set(space, set);
      out["set"] = labels_json(universe, subset);
      out["is_granule"] = dialcount::is_granule(space, subset);
      out["is_lower_of_some"] = dialcount::is_lower_of_some(space, subset);
      out["is_upper_of_some"] = dialcount::is_upper_of_some(space, subset);
      out["is_definite"] = dialcount::is_definite(space, subset);
    } else {
      throw Error(ErrorCode::InvalidArgument, "unknown granules mode '" + std::string(which) + "'");
    }
    emit(out_json, out);
  });
}

dc_status dc_measure(const dc_space* q_handle, const dc_space* r_handle, const char* measure,
                     const char* consistency_constant, char** out_json) {
  return guarded([&] {
    const auto& q = require(q_handle, "q").space;
    const auto& r = require(r_handle, "r").space;
    const std::string_view which = text_or_empty(measure);
    const dialcount::ConsistencyParams params(
        consistency_constant ? dialcount::parse_rational(consistency_constant) : dialcount::Rational(0));
    Json out;
    out["measure"] = which;
    if (which == "pos") {
      out["elements"] = labels_json(q.universe(), dialcount::positive_region(q, r));
    } else if (which == "delta") {
      out["value"] = rational_json(dialcount::dependency_degree(q, r));
    } else if (which == "gk") {
      out.update(vector_json(dialcount::granular_dependency(q, r)));
    } else if (which == "cons") {
      out["n"] = rational_json(params.constant);
      out["value"] = rational_json(dialcount::consistency_degree(q, r, params));
    } else if (which == "gcons") {
      out["n"] = rational_json(params.constant);
      out.update(vector_json(dialcount::granular_consistency(q, r, params)));
    } else {
      throw Error(ErrorCode::InvalidArgument, "unknown measure '" + std::string(which) + "'");
    }
    emit(out_json, out);
  });
}

dc_status dc_inclusion(const dc_space* handle, const char* function, const char* x, const char* y,
                       char** out_json) {
  return guarded([&] {
    const auto& space = require(handle, "space").space;
    const std::string_view which = text_or_empty(function);
    const auto xs = parse_set(space, x);
    const auto ys = parse_set(space, y);
    Json out;
    out["function"] = which;
    out["x"] = labels_json(space.universe(), xs);
    out["y"] = labels_json(space.universe(), ys);
    if (which == "k") {
      out["value"] = rational_json(dialcount::rough_inclusion(xs, ys));
    } else if (which == "k1") {
      out["value"] = rational_json(dialcount::rough_inclusion_1(xs, ys));
    } else if (which == "k2") {
      out["value"] = rational_json(dialcount::rough_inclusion_2(xs, ys));
    } else if (which == "k-star") {
      out.update(vector_json(dialcount::granular_inclusion(space, xs, ys)));
    } else if (which == "k1-star") {
      out.update(vector_json(dialcount::granular_inclusion_1(space, xs, ys)));
    } else if (which == "k2-star") {
      out.update(vector_json(dialcount::granular_inclusion_2(space, xs, ys)));
    } else {
      throw Error(ErrorCode::InvalidArgument, "unknown inclusion function '" + std::string(which) + "'");
    }
    emit(out_json, out);
  });
}

dc_status dc_countability(const dc_space* handle, const char* method, int exact, size_t budget,
                          uint64_t samples, uint64_t seed, char** out_json) {
  return guarded([&] {
    const auto& space = require(handle, "space").space;
    const auto m = method_of(method);
    const auto report = exact ? dialcount::index_exact(space, m, budget)
                              : dialcount::index_estimate(space, m, samples, seed);
    emit(out_json, index_report_json(space, report));
  });
}

dc_status dc_index_exact(const dc_space* handle, const char* method, size_t budget,
                         uint64_t* numerator, uint64_t* denominator) {
  return guarded([&] {
    const auto& space = require(handle, "space").space;
    const auto report = dialcount::index_exact(space, method_of(method), budget);
    const auto& value = std::get<dialcount::Rational>(report.index);
    require(numerator, "numerator") = boost::multiprecision::numerator(value).convert_to<uint64_t>();
    require(denominator, "denominator") =
        boost::multiprecision::denominator(value).convert_to<uint64_t>();
  });
}

dc_status dc_cipca(const dc_space* handle, size_t budget, int with_table, size_t table_budget,
                   char** out_json) {
  return guarded([&] {
    const auto& space = require(handle, "space").space;
    const auto& universe = space.universe();
    const auto q = dialcount::quotient(space, budget);
    Json out;
    out["composition"] = "(x*y)(i) = x(y(i))";
    out["universe"] = universe.labels();
    out["counting_count"] = dialcount::counting_count(space, budget);
    Json classes = Json::array();
    for (const auto& cls : q.classes()) {
      Json members = Json::array();
      for (const auto& perm : cls.members) members.push_back(perm.to_string(universe));
      Json entry;
      entry["signature"] = dialcount::render(cls.signature);
      entry["members"] = std::move(members);
      classes.push_back(std::move(entry));
    }
    out["classes"] = std::move(classes);
    if (with_table) {
      Json table = Json::array();
      for (const auto& row : dialcount::operation_table(q, table_budget)) {
        Json cells = Json::array();
        for (const auto& cell : row) cells.push_back(cell ? Json(*cell) : Json(nullptr));
        table.push_back(std::move(cells));
      }
      out["op_table"] = std::move(table);
    } else {
      out["op_table"] = nullptr;
    }
    emit(out_json, out);
  });
}

dc_status dc_verify_paper_example(char** out_json, int* erratum_set_matches) {
  return guarded([&] {
    const auto report = dialcount::paper_example::verify();
    Json checks = Json::array();
    for (const auto& check : report.checks) {
      Json entry;
      entry["name"] = check.name;
      entry["printed"] = check.printed;
      entry["computed"] = check.computed;
      entry["divergent_positions"] = check.divergent_positions;
      entry["documented_divergence"] = check.documented_divergence;
      entry["status"] = !check.matches_documentation() ? "unexpected"
                        : check.divergent_positions.empty() ? "match"
                                                            : "documented-erratum";
      checks.push_back(std::move(entry));
    }
    Json out;
    out["checks"] = std::move(checks);
    out["erratum_set_matches"] = report.erratum_set_matches();
    emit(out_json, out);
    if (erratum_set_matches) *erratum_set_matches = report.erratum_set_matches() ? 1 : 0;
  });
}

}  // extern "C"
