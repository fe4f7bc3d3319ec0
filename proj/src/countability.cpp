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

#include "dialcount/countability.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "dialcount/error.hpp"

namespace dialcount {

namespace {

void require_partial_method(CountMethod method) {
  if (method != CountMethod::Ippc && method != CountMethod::Hppc) {
    throw Error(ErrorCode::InvalidArgument,
                "countability is defined for the ippc and hppc procedures only");
  }
}

bool all_defined(const ApproximationSpace& space, std::span<const ElementIndex> order,
                 CountMethod method) {
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (method == CountMethod::Ippc) {
      if (space.related(order[i - 1], order[i])) return false;
    } else {
      for (std::size_t k = 0; k < i; ++k) {
        if (space.related(order[k], order[i])) return false;
      }
    }
  }
  return true;
}

bool has_related_pair(const ApproximationSpace& space) {
  for (ElementIndex x = 0; x < space.size(); ++x) {
    for (ElementIndex y = x + 1; y < space.size(); ++y) {
      if (space.related(x, y)) return true;
    }
  }
  return false;
}

// Lexicographically smallest Hamiltonian path in the graph joining distinct
// unrelated elements. completes[mask] has bit v set when a path visiting
// exactly `mask` and ending at v extends to a full path.
std::optional<Order> smallest_unrelated_path(const ApproximationSpace& space) {
  const std::size_t n = space.size();
  if (n > kMaxExactCountabilitySize) {
    throw Error(ErrorCode::BudgetExceeded,
                "ippc countability is decided exactly only up to " +
                    std::to_string(kMaxExactCountabilitySize) + " elements");
  }
  std::vector<std::uint32_t> unrelated(n, 0);
  for (ElementIndex v = 0; v < n; ++v) {
    for (ElementIndex u = 0; u < n; ++u) {
      if (u != v && !space.related(v, u)) unrelated[v] |= std::uint32_t{1} << u;
    }
  }
  const std::uint32_t full = (n == 32) ? ~std::uint32_t{0} : ((std::uint32_t{1} << n) - 1);
  std::vector<std::uint32_t> completes(std::size_t{1} << n, 0);
  completes[full] = full;
  for (std::uint32_t mask = full; mask-- > 1;) {
    std::uint32_t bits = 0;
    for (ElementIndex u = 0; u < n; ++u) {
      const std::uint32_t ubit = std::uint32_t{1} << u;
      if ((mask & ubit) == 0 && (completes[mask | ubit] & ubit) != 0) {
        bits |= unrelated[u] & mask;
      }
    }
    completes[mask] = bits;
  }
  std::vector<ElementIndex> path;
  std::uint32_t mask = 0;
  for (ElementIndex s = 0; s < n; ++s) {
    const std::uint32_t sbit = std::uint32_t{1} << s;
    if (completes[sbit] & sbit) {
      path.push_back(s);
      mask = sbit;
      break;
    }
  }
  if (path.empty()) return std::nullopt;
  while (path.size() < n) {
    const ElementIndex last = path.back();
    for (ElementIndex u = 0; u < n; ++u) {
      const std::uint32_t ubit = std::uint32_t{1} << u;
      if ((mask & ubit) == 0 && (unrelated[last] & ubit) && (completes[mask | ubit] & ubit)) {
        path.push_back(u);
        mask |= ubit;
        break;
      }
    }
  }
  return Order(std::move(path));
}

}  // namespace

bool fully_defined(const ApproximationSpace& space, const Order& order, CountMethod method) {
  require_partial_method(method);
  if (order.size() != space.size()) throw Error(ErrorCode::UniverseMismatch, "order size");
  return all_defined(space, order.elements(), method);
}

Countability countable(const ApproximationSpace& space, CountMethod method) {
  require_partial_method(method);
  if (space.size() == 0) throw Error(ErrorCode::InvalidArgument, "cannot count an empty universe");
  if (method == CountMethod::Hppc) {
    // Any related pair shows up in the prefix of whichever comes second.
    if (has_related_pair(space)) return {false, std::nullopt};
    return {true, Order::identity(space.size())};
  }
  auto witness = smallest_unrelated_path(space);
  return {witness.has_value(), std::move(witness)};
}

IndexReport index_exact(const ApproximationSpace& space, CountMethod method, std::size_t budget) {
  require_partial_method(method);
  const std::size_t n = space.size();
  check_budget(n, budget, "index_exact");
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "cannot count an empty universe");
  const std::uint64_t defined = parallel_order_sum(n, [&](const std::vector<ElementIndex>& order) {
    return all_defined(space, order, method) ? std::uint64_t{1} : std::uint64_t{0};
  });
  IndexReport report;
  report.method = method;
  report.countable = defined > 0;
  report.index = Rational(static_cast<long long>(defined), static_cast<long long>(factorial(n)));
  if (defined > 0) report.witness = countable(space, method).witness;
  return report;
}

IndexReport index_estimate(const ApproximationSpace& space, CountMethod method,
                           std::uint64_t samples, std::uint64_t seed) {
  require_partial_method(method);
  if (samples == 0) throw Error(ErrorCode::InvalidArgument, "samples must be at least 1");
  const std::size_t n = space.size();
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "cannot count an empty universe");

  std::mt19937_64 rng(seed);
  std::vector<ElementIndex> order(n);
  std::optional<Order> sampled_witness;
  std::uint64_t successes = 0;
  for (std::uint64_t s = 0; s < samples; ++s) {
    std::iota(order.begin(), order.end(), ElementIndex{0});
    std::shuffle(order.begin(), order.end(), rng);
    if (all_defined(space, order, method)) {
      ++successes;
      if (!sampled_witness) sampled_witness = Order(order);
    }
  }

  IndexReport report;
  report.method = method;
  report.index = IndexEstimate{static_cast<double>(successes) / static_cast<double>(samples),
                               successes, samples, seed};
  if (method == CountMethod::Hppc || n <= kMaxExactCountabilitySize) {
    Countability decided = countable(space, method);
    report.countable = decided.countable;
    report.witness = std::move(decided.witness);
  } else if (sampled_witness) {
    report.countable = true;
    report.witness = std::move(sampled_witness);
  }
  return report;
}

}  // namespace dialcount
