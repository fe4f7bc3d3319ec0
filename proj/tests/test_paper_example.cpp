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

#include <algorithm>

#include "dialcount/paper_example.hpp"
#include "support/check.hpp"

using namespace dialcount;

namespace {

const paper_example::RowCheck& find(const paper_example::VerificationReport& r, const std::string& name) {
  const auto it = std::find_if(r.checks.begin(), r.checks.end(),
                               [&](const auto& c) { return c.name == name; });
  REQUIRE(it != r.checks.end());
  return *it;
}

}  // namespace

TEST_CASE("verification report") {
  const auto report = paper_example::verify();
  CHECK(report.erratum_set_matches());
  CHECK(find(report, "R-IPC").divergent_positions == std::vector<std::size_t>{9, 10, 11, 12});
  CHECK(find(report, "R-HPC").divergent_positions == std::vector<std::size_t>{7, 8, 9, 10, 11, 12});
  CHECK(find(report, "R-HPPC").divergent_positions.empty());
  CHECK(find(report, "Q-HPC").divergent_positions.empty());
  CHECK(find(report, "S|Q").divergent_positions.empty());
  const auto& pos = find(report, "POS_R(Q)");
  CHECK(pos.printed == std::vector<std::string>{"f", "n", "e", "l", "m"});
  CHECK(pos.computed == std::vector<std::string>{"f", "k", "i", "n", "e", "l", "m"});
}

TEST_CASE("fixture shape") {
  CHECK(paper_example::universe().labels() ==
        std::vector<std::string>{"f", "b", "c", "a", "k", "i", "n", "h", "e", "l", "g", "m"});
  CHECK(paper_example::r_space().is_equivalence());
  CHECK(classes(paper_example::q_space()).size() == 7);
  CHECK(paper_example::printed_rows().size() == 4);
}
