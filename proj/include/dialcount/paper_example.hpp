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

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "dialcount/counting.hpp"
#include "dialcount/space.hpp"

/// The worked example with two equivalences R and Q over twelve elements,
/// counted in the order the elements are listed.
namespace dialcount::paper_example {

/// Space-file JSON with the default relation empty and named relations R, Q.
std::string_view space_document_json();

Universe universe();
ApproximationSpace r_space();
ApproximationSpace q_space();
/// The listed order f,b,c,a,k,i,n,h,e,l,g,m (also the canonical order).
Order presented_order();

struct PrintedRow {
  std::string name;
  std::vector<std::string> tokens;
  /// 1-based positions where the printed row disagrees with the counting
  /// rules applied to the stated relation.
  std::vector<std::size_t> documented_divergence;
};

/// R-IPC, R-HPC, R-HPPC and Q-HPC rows as printed.
std::vector<PrintedRow> printed_rows();

struct RowCheck {
  std::string name;
  std::vector<std::string> printed;
  std::vector<std::string> computed;
  std::vector<std::size_t> divergent_positions;    // 1-based
  std::vector<std::size_t> documented_divergence;  // 1-based
  bool matches_documentation() const { return divergent_positions == documented_divergence; }
};

struct VerificationReport {
  std::vector<RowCheck> checks;
  bool erratum_set_matches() const;
};

/// Recomputes the four rows, S|Q, POS_R(Q) and the induced Q-HPC count.
VerificationReport verify();

}  // namespace dialcount::paper_example
