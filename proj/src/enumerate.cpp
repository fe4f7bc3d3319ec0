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

#include "dialcount/enumerate.hpp"

#include "dialcount/error.hpp"

namespace dialcount {

std::uint64_t factorial(std::size_t n) {
  if (n > 20) throw Error(ErrorCode::InvalidArgument, "factorial overflows 64 bits past n = 20");
  std::uint64_t out = 1;
  for (std::size_t k = 2; k <= n; ++k) out *= k;
  return out;
}

void check_budget(std::size_t n, std::size_t budget, std::string_view operation) {
  if (budget == 0) throw Error(ErrorCode::InvalidArgument, "budget must be at least 1");
  if (n > budget) {
    throw Error(ErrorCode::BudgetExceeded,
                std::string(operation) + ": universe of " + std::to_string(n) +
                    " elements exceeds the enumeration budget of " + std::to_string(budget) +
                    " (n! orders)");
  }
}

}  // namespace dialcount
