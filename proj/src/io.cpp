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

#include "dialcount/io.hpp"

#include <fstream>
#include <sstream>

#include <boost/tokenizer.hpp>
#include "json.hpp"

#include "dialcount/error.hpp"

namespace dialcount {

namespace {

using nlohmann::json;

ClosureKinds parse_closures(const json& node) {
  if (!node.is_array()) throw Error(ErrorCode::Parse, "\"closures\" must be an array of strings");
  ClosureKinds kinds;
  for (const auto& item : node) {
    if (!item.is_string()) throw Error(ErrorCode::Parse, "\"closures\" must be an array of strings");
    const auto& name = item.get_ref<const std::string&>();
    if (name == "reflexive") {
      kinds.reflexive = true;
    } else if (name == "symmetric") {
      kinds.symmetric = true;
    } else if (name == "transitive") {
      kinds.transitive = true;
    } else {
      throw Error(ErrorCode::Parse, "unknown closure kind '" + name + "'");
    }
  }
  return kinds;
}

Relation parse_relation(const Universe& universe, const json& pairs, const json& closures) {
  std::vector<IndexPair> indices;
  if (!pairs.is_null()) {
    if (!pairs.is_array()) throw Error(ErrorCode::Parse, "\"pairs\" must be an array");
    for (const auto& pair : pairs) {
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() || !pair[1].is_string()) {
        throw Error(ErrorCode::Parse, "each pair must be a two-element array of labels");
      }
      indices.emplace_back(universe.index_of(pair[0].get_ref<const std::string&>()),
                           universe.index_of(pair[1].get_ref<const std::string&>()));
    }
  }
  Relation relation(universe.size(), indices);
  if (!closures.is_null()) relation = close(relation, parse_closures(closures));
  return relation;
}

const json& member_or_null(const json& object, const char* key) {
  static const json null_value;
  auto it = object.find(key);
  return it == object.end() ? null_value : *it;
}

std::string strip_line(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  using Separator = boost::escaped_list_separator<char>;
  boost::tokenizer<Separator> tokens(line, Separator('\\', ',', '"'));
  return {tokens.begin(), tokens.end()};
}

}  // namespace

SpaceDocument::SpaceDocument(Universe universe,
                             std::map<std::string, Relation, std::less<>> relations)
    : universe_(std::move(universe)), relations_(std::move(relations)) {}

std::vector<std::string> SpaceDocument::relation_names() const {
  std::vector<std::string> names;
  for (const auto& [name, relation] : relations_) names.push_back(name);
  return names;
}

ApproximationSpace SpaceDocument::space(std::string_view relation_name) const {
  if (auto it = relations_.find(relation_name); it != relations_.end()) {
    return ApproximationSpace(universe_, it->second);
  }
  if (relation_name.empty() && relations_.size() == 1) {
    return ApproximationSpace(universe_, relations_.begin()->second);
  }
  std::string known;
  for (const auto& [name, relation] : relations_) {
    if (name.empty()) continue;
    known += known.empty() ? name : ", " + name;
  }
  throw Error(ErrorCode::UnknownRelation,
              relation_name.empty()
                  ? "space file has several relations; pick one of: " + known
                  : "unknown relation '" + std::string(relation_name) + "' (known: " + known + ")");
}

SpaceDocument parse_space_document(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::Parse, std::string("space file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw Error(ErrorCode::Parse, "space file must be a JSON object");
  const json& elements = member_or_null(doc, "elements");
  if (!elements.is_array()) throw Error(ErrorCode::Parse, "\"elements\" must be an array of labels");
  std::vector<std::string> labels;
  for (const auto& e : elements) {
    if (!e.is_string()) throw Error(ErrorCode::Parse, "element labels must be strings");
    labels.push_back(e.get<std::string>());
  }
  Universe universe;
  try {
    universe = Universe(std::move(labels));
  } catch (const Error& e) {
    throw Error(ErrorCode::Parse, e.what());
  }

  std::map<std::string, Relation, std::less<>> relations;
  const json& pairs = member_or_null(doc, "pairs");
  const json& closures = member_or_null(doc, "closures");
  const json& named = member_or_null(doc, "relations");
  if (!pairs.is_null() || !closures.is_null() || named.is_null()) {
    relations.emplace("", parse_relation(universe, pairs, closures));
  }
  if (!named.is_null()) {
    if (!named.is_object()) throw Error(ErrorCode::Parse, "\"relations\" must be an object");
    for (const auto& [name, body] : named.items()) {
      if (name.empty()) throw Error(ErrorCode::Parse, "relation names must be nonempty");
      if (!body.is_object()) throw Error(ErrorCode::Parse, "relation '" + name + "' must be an object");
      relations.emplace(name, parse_relation(universe, member_or_null(body, "pairs"),
                                             member_or_null(body, "closures")));
    }
  }
  return SpaceDocument(std::move(universe), std::move(relations));
}

SpaceDocument load_space_document(const std::filesystem::path& path) {
  return parse_space_document(read_text_file(path));
}

InfoTable parse_info_table(std::string_view csv_text) {
  std::string text(csv_text);
  if (text.starts_with("\xEF\xBB\xBF")) text.erase(0, 3);
  std::istringstream in(text);
  std::string line;
  std::vector<std::string> header;
  std::vector<std::string> labels;
  std::vector<std::vector<std::string>> rows;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    line = strip_line(std::move(line));
    if (line.empty()) continue;
    std::vector<std::string> fields;
    try {
      fields = split_csv_line(line);
    } catch (const boost::escaped_list_error& e) {
      throw Error(ErrorCode::Parse, "CSV line " + std::to_string(line_number) + ": " + e.what());
    }
    if (header.empty()) {
      if (fields.size() < 2) {
        throw Error(ErrorCode::Parse, "CSV header needs an element column and at least one attribute");
      }
      header = std::move(fields);
      continue;
    }
    if (fields.size() != header.size()) {
      throw Error(ErrorCode::Parse, "CSV line " + std::to_string(line_number) + " has " +
                                        std::to_string(fields.size()) + " fields, header has " +
                                        std::to_string(header.size()));
    }
    labels.push_back(fields.front());
    rows.emplace_back(fields.begin() + 1, fields.end());
  }
  if (header.empty()) throw Error(ErrorCode::Parse, "CSV input is empty");
  try {
    return InfoTable(std::move(labels), {header.begin() + 1, header.end()}, std::move(rows));
  } catch (const Error& e) {
    throw Error(ErrorCode::Parse, e.what());
  }
}

InfoTable load_info_table(const std::filesystem::path& path) {
  return parse_info_table(read_text_file(path));
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace dialcount
