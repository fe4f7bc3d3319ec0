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

#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "dialcount/space.hpp"

namespace dialcount {

/// Parsed space file:
///   {"elements": [...], "pairs": [["a","b"], ...], "closures": [...],
///    "relations": {"R": {"pairs": [...], "closures": [...]}, ...}}
/// Top-level "pairs"/"closures" form the unnamed default relation; the
/// optional "relations" object adds named ones. Closures are applied on load.
class SpaceDocument {
 public:
  SpaceDocument(Universe universe, std::map<std::string, Relation, std::less<>> relations);

  const Universe& universe() const noexcept { return universe_; }
  std::vector<std::string> relation_names() const;

  /// Empty name selects the default relation, or the only named one.
  /// Throws UnknownRelation.
  ApproximationSpace space(std::string_view relation_name = {}) const;

 private:
  Universe universe_;
  std::map<std::string, Relation, std::less<>> relations_;
};

/// Throws Parse on malformed input, UnknownElement on unlisted labels.
SpaceDocument parse_space_document(std::string_view json_text);
SpaceDocument load_space_document(const std::filesystem::path& path);

/// CSV with a header row; first column is the element label, the remaining
/// columns are attributes. Quoted fields are supported.
InfoTable parse_info_table(std::string_view csv_text);
InfoTable load_info_table(const std::filesystem::path& path);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace dialcount
