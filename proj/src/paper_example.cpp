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

#include "dialcount/paper_example.hpp"

#include <algorithm>

#include "dialcount/io.hpp"
#include "dialcount/measures.hpp"

namespace dialcount::paper_example {

namespace {

constexpr std::string_view kSpaceDocument = R"({
  "elements": ["f", "b", "c", "a", "k", "i", "n", "h", "e", "l", "g", "m"],
  "relations": {
    "R": {
      "pairs": [["a", "b"], ["b", "c"], ["e", "f"], ["i", "k"], ["l", "m"], ["m", "n"], ["g", "h"]],
      "closures": ["reflexive", "symmetric", "transitive"]
    },
    "Q": {
      "pairs": [["a", "b"], ["e", "f"], ["i", "k"], ["l", "m"], ["m", "n"]],
      "closures": ["reflexive", "symmetric", "transitive"]
    }
  }
}
)";

std::vector<std::string> split(std::string_view text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    out.emplace_back(text.substr(start, comma - start));
    start = comma + 1;
  }
  return out;
}

std::string render_block(const Universe& universe, const ElementSet& block) {
  std::string out = "{";
  for (const auto& label : universe.labels_of(block)) out += (out.size() > 1 ? "," : "") + label;
  return out + "}";
}

// Blocks written with labels in canonical order, then sorted, so that two
// partitions compare as sets of sets.
std::vector<std::string> normalized_partition(const Universe& universe,
                                              const std::vector<std::vector<std::string>>& blocks) {
  std::vector<std::string> out;
  for (const auto& block : blocks) {
    out.push_back(render_block(universe, universe.make_set(block)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

RowCheck compare(std::string name, std::vector<std::string> printed,
                 std::vector<std::string> computed, std::vector<std::size_t> documented) {
  RowCheck check{std::move(name), std::move(printed), std::move(computed), {}, std::move(documented)};
  const std::size_t longest = std::max(check.printed.size(), check.computed.size());
  for (std::size_t i = 0; i < longest; ++i) {
    if (i >= check.printed.size() || i >= check.computed.size() ||
        check.printed[i] != check.computed[i]) {
      check.divergent_positions.push_back(i + 1);
    }
  }
  return check;
}

}  // namespace

std::string_view space_document_json() { return kSpaceDocument; }

Universe universe() { return parse_space_document(kSpaceDocument).universe(); }

ApproximationSpace r_space() { return parse_space_document(kSpaceDocument).space("R"); }

ApproximationSpace q_space() { return parse_space_document(kSpaceDocument).space("Q"); }

Order presented_order() { return Order::identity(12); }

std::vector<PrintedRow> printed_rows() {
  return {
      {"R-IPC", split("1_1,2_1,1_2,1_3,2_3,1_4,2_4,3_4,1_5,2_5,1_6,2_6"), {9, 10, 11, 12}},
      {"R-HPC", split("1_1,2_1,1_2,1_3,2_3,1_4,1_5,2_5,1_6,1_7,1_8,1_9"), {7, 8, 9, 10, 11, 12}},
      {"R-HPPC", split("1_1,2_1,*,*,3_1,*,4_1,5_1,*,*,*,*"), {}},
      {"Q-HPC", split("1_1,2_1,3_1,1_2,2_2,1_3,2_3,3_3,1_4,1_5,2_5,1_6"), {}},
  };
}

bool VerificationReport::erratum_set_matches() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const RowCheck& c) { return c.matches_documentation(); });
}

VerificationReport verify() {
  const ApproximationSpace r = r_space();
  const ApproximationSpace q = q_space();
  const Universe& s = r.universe();
  const Order order = presented_order();

  VerificationReport report;
  for (auto& row : printed_rows()) {
    const bool on_q = row.name.starts_with("Q-");
    const CountMethod method = parse_count_method(row.name.substr(2));
    report.checks.push_back(compare(row.name, std::move(row.tokens),
                                    count(on_q ? q : r, order, method).rendered(),
                                    std::move(row.documented_divergence)));
  }

  std::vector<std::vector<std::string>> computed_blocks;
  const Granulation q_classes = classes(q);
  for (const auto& block : q_classes.blocks()) computed_blocks.push_back(s.labels_of(block));
  report.checks.push_back(compare(
      "S|Q",
      normalized_partition(s, {{"a", "b"}, {"c"}, {"e", "f"}, {"i", "k"}, {"l", "m", "n"}, {"g"}, {"h"}}),
      normalized_partition(s, computed_blocks), {}));

  const ElementSet pos = positive_region(q, r);
  // The printed region leaves out {i,k}, a class of both R and Q.
  report.checks.push_back(compare("POS_R(Q)", split("f,n,e,l,m"), s.labels_of(pos), {2, 3, 4, 5, 6, 7}));

  report.checks.push_back(compare("induced Q-HPC on POS_R(Q)", split("1_1,2_3,1_4,1_5,1_6"),
                                  render(induced(hpc(q, order), pos)), {2, 3, 4, 5, 6, 7}));
  return report;
}

}  // namespace dialcount::paper_example
