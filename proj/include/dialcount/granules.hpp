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
#include <vector>

#include "dialcount/counting.hpp"
#include "dialcount/enumerate.hpp"
#include "dialcount/space.hpp"

namespace dialcount {


struct BlockExtraction {
  Granulation blocks;
  CountSequence witness;
};

/// Reconstructs granules from an HPC count: the first position and every
/// token with alpha > 1 open a block; a token (1, j) joins the block of tau.
/// Throws RuleViolation if `seq` is not an HPC count of `space`.
BlockExtraction granules_from_hpc(const CountSequence& seq, const ApproximationSpace& space);

/// Decisions made from the HPC count of the canonical order. All three
/// require an equivalence.
bool is_granule(const ApproximationSpace& space, const ElementSet& set);
bool is_lower_of_some(const ApproximationSpace& space, const ElementSet& set);
bool is_upper_of_some(const ApproximationSpace& space, const ElementSet& set);

/// Lengths of the maximal runs of alpha == 1 tokens, left to right.
std::vector<std::size_t> new_type_runs(const CountSequence& seq);

/// Blocks of an IPC count: split the order before every token with alpha > 1.
Granulation split_ipc_count(const CountSequence& seq);

enum class Dominance { Equivalent, FirstDominates, SecondDominates, Incomparable };

/// b dominates a iff b's run sequence is lexicographically >= a's and b has
/// at least as many runs longer than 1. A preorder; ties are Equivalent.
/// Throws InvalidArgument on length mismatch or non-IPC input.
Dominance compare_ipc_counts(const CountSequence& a, const CountSequence& b);
/// a ⪯ b.
bool preceq(const CountSequence& a, const CountSequence& b);

/// Enumerates every order, keeps the IPC counts whose run sequence is
/// lexicographically greatest (these are maximal under ⪯), breaks ties by
/// the smallest order, and splits that count into blocks.
BlockExtraction maximal_ipc_granules(const ApproximationSpace& space,
                                     std::size_t budget = kDefaultEnumerationBudget);

}  // namespace dialcount
