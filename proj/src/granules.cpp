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

#include "dialcount/granules.hpp"

#include <algorithm>

#include "dialcount/error.hpp"

namespace dialcount {

namespace {

Granulation hpc_blocks_of_canonical_order(const ApproximationSpace& space,
                                          std::string_view operation) {
  space.require_equivalence(operation);
  return granules_from_hpc(hpc(space, Order::identity(space.size())), space).blocks;
}

// A union of blocks: every block is inside the set or disjoint from it.
bool is_union_of_blocks(const Granulation& blocks, const ElementSet& set) {
  return std::all_of(blocks.blocks().begin(), blocks.blocks().end(), [&](const ElementSet& b) {
    return b.is_subset_of(set) || !b.intersects(set);
  });
}

void require_ipc(const CountSequence& seq, std::string_view operation) {
  if (seq.method != CountMethod::Ipc) {
    throw Error(ErrorCode::InvalidArgument, std::string(operation) + " expects an IPC count");
  }
  if (seq.tokens.size() != seq.order.size()) {
    throw Error(ErrorCode::InvalidArgument, "count has a token per position mismatch");
  }
}

}  // namespace

BlockExtraction granules_from_hpc(const CountSequence& seq, const ApproximationSpace& space) {
  if (seq.method != CountMethod::Hpc) {
    throw Error(ErrorCode::RuleViolation, "granule extraction expects an HPC count");
  }
  const std::size_t n = seq.order.size();
  if (n != space.size() || seq.tokens.size() != n) {
    throw Error(ErrorCode::UniverseMismatch, "HPC count does not match the space");
  }
  std::vector<ElementSet> blocks;
  std::vector<std::size_t> block_at(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const CountToken& token = seq.tokens[i];
    if (!token.is_defined()) {
      throw Error(ErrorCode::RuleViolation, "HPC counts never contain undefined tokens");
    }
    if (i == 0 || token.alpha() > 1) {
      block_at[i] = blocks.size();
      blocks.emplace_back(n);
    } else {
      auto first = tau(space, seq, i);
      if (!first || *first >= i) {
        throw Error(ErrorCode::RuleViolation,
                    "token " + token.to_string() + " at position " + std::to_string(i + 1) +
                        " opens a type but has no related earlier element");
      }
      block_at[i] = block_at[*first];
    }
    blocks[block_at[i]].set(seq.order[i]);
  }
  return {Granulation(n, std::move(blocks)), seq};
}

bool is_granule(const ApproximationSpace& space, const ElementSet& set) {
  const Granulation blocks = hpc_blocks_of_canonical_order(space, "is_granule");
  if (set.size() != space.size()) throw Error(ErrorCode::UniverseMismatch, "is_granule: set size");
  return std::find(blocks.blocks().begin(), blocks.blocks().end(), set) != blocks.blocks().end();
}

bool is_lower_of_some(const ApproximationSpace& space, const ElementSet& set) {
  const Granulation blocks = hpc_blocks_of_canonical_order(space, "is_lower_of_some");
  if (set.size() != space.size()) throw Error(ErrorCode::UniverseMismatch, "is_lower_of_some: set size");
  return is_union_of_blocks(blocks, set);
}

bool is_upper_of_some(const ApproximationSpace& space, const ElementSet& set) {
  // Any union of classes U satisfies U = upper(U); the empty set is upper(∅).
  const Granulation blocks = hpc_blocks_of_canonical_order(space, "is_upper_of_some");
  if (set.size() != space.size()) throw Error(ErrorCode::UniverseMismatch, "is_upper_of_some: set size");
  return is_union_of_blocks(blocks, set);
}

std::vector<std::size_t> new_type_runs(const CountSequence& seq) {
  std::vector<std::size_t> runs;
  std::size_t current = 0;
  for (const auto& token : seq.tokens) {
    if (token.is_defined() && token.alpha() == 1) {
      ++current;
    } else if (current > 0) {
      runs.push_back(current);
      current = 0;
    }
  }
  if (current > 0) runs.push_back(current);
  return runs;
}

Granulation split_ipc_count(const CountSequence& seq) {
  require_ipc(seq, "split_ipc_count");
  const std::size_t n = seq.order.size();
  std::vector<ElementSet> blocks;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == 0 || seq.tokens[i].alpha() > 1) blocks.emplace_back(n);
    blocks.back().set(seq.order[i]);
  }
  return Granulation(n, std::move(blocks));
}

Dominance compare_ipc_counts(const CountSequence& a, const CountSequence& b) {
  require_ipc(a, "compare_ipc_counts");
  require_ipc(b, "compare_ipc_counts");
  if (a.tokens.size() != b.tokens.size()) {
    throw Error(ErrorCode::InvalidArgument, "compared IPC counts have different lengths");
  }
  const auto runs_a = new_type_runs(a);
  const auto runs_b = new_type_runs(b);
  auto long_runs = [](const std::vector<std::size_t>& runs) {
    return std::count_if(runs.begin(), runs.end(), [](std::size_t r) { return r > 1; });
  };
  const bool b_dominates = !(runs_b < runs_a) && long_runs(runs_b) >= long_runs(runs_a);
  const bool a_dominates = !(runs_a < runs_b) && long_runs(runs_a) >= long_runs(runs_b);
  if (a_dominates && b_dominates) return Dominance::Equivalent;
  if (b_dominates) return Dominance::SecondDominates;
  if (a_dominates) return Dominance::FirstDominates;
  return Dominance::Incomparable;
}

bool preceq(const CountSequence& a, const CountSequence& b) {
  const Dominance d = compare_ipc_counts(a, b);
  return d == Dominance::Equivalent || d == Dominance::SecondDominates;
}

BlockExtraction maximal_ipc_granules(const ApproximationSpace& space, std::size_t budget) {
  const std::size_t n = space.size();
  check_budget(n, budget, "maximal_ipc_granules");
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "cannot count an empty universe");

  std::optional<CountSequence> best;
  std::vector<std::size_t> best_runs;
  // Lexicographic enumeration: the first count reaching the best run
  // sequence belongs to the smallest order.
  for_each_order(n, [&](const std::vector<ElementIndex>& elements) {
    CountSequence seq = ipc(space, Order(elements));
    auto runs = new_type_runs(seq);
    if (!best || best_runs < runs) {
      best = std::move(seq);
      best_runs = std::move(runs);
    }
  });
  return {split_ipc_count(*best), *best};
}

}  // namespace dialcount
