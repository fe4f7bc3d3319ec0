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
#include <span>
#include <string>
#include <vector>

#include "dialcount/counting.hpp"
#include "dialcount/enumerate.hpp"
#include "dialcount/space.hpp"

namespace dialcount {

inline constexpr std::size_t kDefaultQuotientBudget = 7;
inline constexpr std::size_t kDefaultTableBudget = 5;

/// Bijection on 0..n-1. Applied to the canonical base order it yields the
/// counting order whose position i holds element images()[i].
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<ElementIndex> images);
  static Permutation identity(std::size_t n);

  std::size_t size() const noexcept { return images_.size(); }
  ElementIndex operator()(std::size_t i) const { return images_[i]; }
  std::span<const ElementIndex> images() const noexcept { return images_; }
  Permutation inverse() const;
  Order as_order() const { return Order(images_); }
  /// Labels of the images concatenated, e.g. "acb"; separated by ',' when
  /// any label is longer than one character.
  std::string to_string(const Universe& universe) const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<ElementIndex> images_;
};

/// (x * y)(i) = x(y(i)).
Permutation compose(const Permutation& x, const Permutation& y);

/// Lexicographic rank in [0, n!).
std::uint64_t permutation_rank(std::span<const ElementIndex> images);

/// IPC tokens of the order obtained by applying `perm` to the base order.
std::vector<CountToken> signature(const ApproximationSpace& space, const Permutation& perm);

struct SignatureClass {
  std::vector<CountToken> signature;
  std::vector<Permutation> members;  // lexicographically sorted
};

/// Partial binary operation on class indices; nullopt where undefined.
using OperationTable = std::vector<std::vector<std::optional<std::size_t>>>;

class SignatureQuotient {
 public:
  SignatureQuotient(std::size_t universe_size, std::vector<SignatureClass> classes);

  std::size_t universe_size() const noexcept { return universe_size_; }
  std::size_t size() const noexcept { return classes_.size(); }
  const std::vector<SignatureClass>& classes() const noexcept { return classes_; }
  const SignatureClass& operator[](std::size_t i) const { return classes_.at(i); }
  std::size_t class_of(const Permutation& perm) const;

 private:
  std::size_t universe_size_;
  std::vector<SignatureClass> classes_;
  std::vector<std::uint32_t> class_by_rank_;
};

/// Partition of all n! permutations by signature equality, classes ordered
/// by their lexicographically smallest member. Throws BudgetExceeded.
SignatureQuotient quotient(const ApproximationSpace& space,
                           std::size_t budget = kDefaultQuotientBudget);

/// a ⊙ b: the class containing every product x * y (x in a, y in b), or
/// nullopt when the products spread over several classes.
std::optional<std::size_t> odot(const SignatureQuotient& q, std::size_t a, std::size_t b);

/// Full ⊙ table. Throws BudgetExceeded when n > budget.
OperationTable operation_table(const SignatureQuotient& q,
                               std::size_t budget = kDefaultTableBudget);

/// n!, counted by walking the enumerator.
std::uint64_t counting_count(const ApproximationSpace& space,
                             std::size_t budget = kDefaultEnumerationBudget);

struct SemilinearReport {
  std::size_t collapsed_size = 0;  // elements after collapsing equivalent ones
  bool down_sets_are_chains = false;
  bool common_lower_bounds = false;
  std::optional<std::size_t> non_chain_witness;  // original index
  std::optional<std::pair<std::size_t, std::size_t>> no_lower_bound_witness;

  bool semilinear() const noexcept { return down_sets_are_chains && common_lower_bounds; }
};

/// `leq[i][j]` is i <= j. Equivalent elements are collapsed first.
/// Throws NotAPreorder unless reflexive and transitive.
SemilinearReport semilinear_check(const std::vector<std::vector<bool>>& leq);

struct CountPreorder {
  std::vector<CountSequence> counts;  // distinct IPC counts, first-seen order
  std::vector<std::vector<bool>> leq;  // preceq
};

/// The distinct IPC counts of `space` over all orders, with ⪯.
CountPreorder ipc_count_preorder(const ApproximationSpace& space,
                                 std::size_t budget = kDefaultQuotientBudget);

}  // namespace dialcount
