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
#include <cstdint>
#include <optional>
#include <variant>

#include "dialcount/counting.hpp"
#include "dialcount/enumerate.hpp"
#include "dialcount/rational.hpp"
#include "dialcount/space.hpp"

namespace dialcount {

/// Largest universe for which IPPC countability is decided exactly
/// (Hamiltonian path search over 2^n subsets).
inline constexpr std::size_t kMaxExactCountabilitySize = 20;

struct Countability {
  bool countable = false;
  std::optional<Order> witness;  // lexicographically smallest fully defined order
};

/// Every element receives a defined HPPC/IPPC value under `order`.
bool fully_defined(const ApproximationSpace& space, const Order& order, CountMethod method);

/// IPPC: Hamiltonian path in the complement of the symmetrized off-diagonal
/// relation graph. HPPC: no two distinct elements related.
/// `method` must be Ippc or Hppc.
Countability countable(const ApproximationSpace& space, CountMethod method);

struct IndexEstimate {
  double estimate = 0.0;
  std::uint64_t successes = 0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
};

struct IndexReport {
  CountMethod method = CountMethod::Ippc;
  /// Empty only when sampling could not decide (large n, no successful sample).
  std::optional<bool> countable;
  std::variant<Rational, IndexEstimate> index;
  std::optional<Order> witness;
};

/// (#fully defined orders) / n! by full enumeration. Throws BudgetExceeded.
IndexReport index_exact(const ApproximationSpace& space, CountMethod method,
                        std::size_t budget = kDefaultEnumerationBudget);

/// Fraction of `samples` uniformly drawn orders that are fully defined.
/// Deterministic for a fixed seed.
IndexReport index_estimate(const ApproximationSpace& space, CountMethod method,
                           std::uint64_t samples, std::uint64_t seed);

}  // namespace dialcount
