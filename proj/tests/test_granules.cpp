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

#include "dialcount/counting.hpp"
#include "dialcount/enumerate.hpp"
#include "dialcount/granules.hpp"
#include "dialcount/paper_example.hpp"
#include "support/check.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace dialcount;
using namespace dialcount::testing;

namespace {

CountSequence ipc_of(std::initializer_list<std::pair<unsigned, unsigned>> tokens) {
  CountSequence seq;
  seq.method = CountMethod::Ipc;
  seq.order = Order::identity(tokens.size());
  for (auto [a, t] : tokens) seq.tokens.push_back(CountToken::defined(a, t));
  return seq;
}

}  // namespace

TEST_CASE("granules from the Q-based HPC row") {
  const auto q = paper_example::q_space();
  const auto got = granules_from_hpc(hpc(q, paper_example::presented_order()), q);
  CHECK(blocks_of(got.blocks) == blocks_of(classes(q)));
  CHECK(got.blocks.size() == 7);
  CHECK(got.witness.method == CountMethod::Hpc);
}

TEST_CASE("granules_from_hpc rejects other methods") {
  const auto s = space_from_labels({0, 0, 1});
  CHECK_THROWS_CODE(granules_from_hpc(ipc(s, Order::identity(3)), s), ErrorCode::RuleViolation);
  const auto d = space_from_labels({0, 1, 2});
  auto forged = hpc(d, Order::identity(3));
  forged.tokens[1] = CountToken::defined(1, 2);
  CHECK_THROWS_CODE(granules_from_hpc(forged, d), ErrorCode::RuleViolation);
}

TEST_CASE("granules_from_hpc recovers classes on every order, n <= 5") {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const auto& labels : all_partitions(n)) {
      const auto s = space_from_labels(labels);
      const auto expected = blocks_of(classes(s));
      for_each_order(n, [&](const std::vector<ElementIndex>& e) {
        CHECK(blocks_of(granules_from_hpc(hpc(s, Order(e)), s).blocks) == expected);
      });
    }
  }
}

TEST_CASE("granule classification on the worked example") {
  const auto r = paper_example::r_space();
  const Universe& u = r.universe();
  CHECK(is_granule(r, set_of(u, {"e", "f"})));
  CHECK(is_lower_of_some(r, set_of(u, {"e", "f", "l", "m", "n"})));
  CHECK(is_upper_of_some(r, set_of(u, {"e", "f", "l", "m", "n"})));
  const auto a = set_of(u, {"a"});
  CHECK_FALSE(is_granule(r, a));
  CHECK_FALSE(is_lower_of_some(r, a));
  CHECK_FALSE(is_upper_of_some(r, a));
  CHECK(is_lower_of_some(r, u.empty_set()));
  CHECK(is_upper_of_some(r, u.empty_set()));
}

TEST_CASE("run lengths and dominance") {
  const auto runs_two = ipc_of({{1, 1}, {1, 2}, {2, 2}});
  const auto no_runs = ipc_of({{1, 1}, {2, 1}, {3, 1}});
  const auto all_new = ipc_of({{1, 1}, {1, 2}, {1, 3}});
  CHECK(preceq(no_runs, runs_two));
  CHECK_FALSE(preceq(runs_two, no_runs));
  CHECK(compare_ipc_counts(runs_two, runs_two) == Dominance::Equivalent);
  CHECK(compare_ipc_counts(all_new, runs_two) == Dominance::FirstDominates);
  CHECK(compare_ipc_counts(runs_two, all_new) == Dominance::SecondDominates);
  CHECK(new_type_runs(all_new) == std::vector<std::size_t>{3});
  CHECK(split_ipc_count(runs_two).size() == 2);
}

TEST_CASE("maximal IPC granules") {
  const auto q = paper_example::q_space();
  const auto sub = q.restricted_to(set_of(q.universe(), {"a", "b", "c"}));
  const auto got = maximal_ipc_granules(sub);
  CHECK(blocks_of(got.blocks) == blocks_of(classes(sub)));
  CHECK(blocks_of(got.blocks) == std::set<std::vector<std::size_t>>{{0, 2}, {1}});
  CHECK(got.witness.method == CountMethod::Ipc);

  const ApproximationSpace d(Universe(letters(3)), Relation::diagonal(3));
  const ApproximationSpace c(Universe(letters(3)), Relation::complete(3));
  CHECK(maximal_ipc_granules(d).blocks.size() == 3);
  CHECK(maximal_ipc_granules(c).blocks.size() == 1);
  CHECK_THROWS_CODE(maximal_ipc_granules(q), ErrorCode::BudgetExceeded);
}

TEST_CASE("maximal IPC granules equal classes, n <= 5") {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const auto& labels : all_partitions(n)) {
      const auto s = space_from_labels(labels);
      CHECK(blocks_of(maximal_ipc_granules(s).blocks) == blocks_of(classes(s)));
    }
  }
}
