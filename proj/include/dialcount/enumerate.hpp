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

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string_view>
#include <thread>
#include <vector>

#include "dialcount/space.hpp"

namespace dialcount {

/// Default cap on n for algorithms that walk all n! orders (40320 at n = 8).
inline constexpr std::size_t kDefaultEnumerationBudget = 8;

/// n! for n <= 20. Throws InvalidArgument beyond.
std::uint64_t factorial(std::size_t n);

/// Throws BudgetExceeded when n > budget or budget == 0.
void check_budget(std::size_t n, std::size_t budget, std::string_view operation);

/// Visits all orders of 0..n-1 in lexicographic order.
template <class Visitor>
void for_each_order(std::size_t n, Visitor&& visit) {
  std::vector<ElementIndex> order(n);
  std::iota(order.begin(), order.end(), ElementIndex{0});
  do {
    visit(static_cast<const std::vector<ElementIndex>&>(order));
  } while (std::next_permutation(order.begin(), order.end()));
}

/// Sum of `score(order)` over all orders. Work is split by first element
/// across threads; the total does not depend on the split.
template <class Score>
std::uint64_t parallel_order_sum(std::size_t n, const Score& score) {
  if (n <= 1) {
    std::uint64_t total = 0;
    for_each_order(n, [&](const std::vector<ElementIndex>& order) { total += score(order); });
    return total;
  }
  const std::size_t workers =
      std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, n);
  std::vector<std::uint64_t> partial(n, 0);
  auto run_prefix = [&](std::size_t first) {
    std::vector<ElementIndex> order(n);
    order[0] = first;
    std::size_t k = 1;
    for (ElementIndex e = 0; e < n; ++e) {
      if (e != first) order[k++] = e;
    }
    std::uint64_t total = 0;
    do {
      total += score(static_cast<const std::vector<ElementIndex>&>(order));
    } while (std::next_permutation(order.begin() + 1, order.end()));
    partial[first] = total;
  };
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t first = w; first < n; first += workers) run_prefix(first);
      });
    }
  }
  return std::accumulate(partial.begin(), partial.end(), std::uint64_t{0});
}

}  // namespace dialcount
