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

#include "dialcount/measures.hpp"
#include "dialcount/paper_example.hpp"
#include "support/check.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace dialcount;
using namespace dialcount::testing;

TEST_CASE("positive region matches the direct definition") {
  Rng rng(23);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + trial % 9;
    const auto q = random_equivalence(n, rng);
    const auto r = random_equivalence(n, rng);
    CHECK(positive_region(q, r) == direct_pos(q, r));
    CHECK(dependency_degree(q, r) ==
          frac(static_cast<std::int64_t>(direct_pos(q, r).count()), static_cast<std::int64_t>(n)));
  }
}

TEST_CASE("worked example measures") {
  const auto r = paper_example::r_space();
  const auto q = paper_example::q_space();
  const Universe& u = r.universe();
  // {i,k} is a class of both spaces, so it sits in the positive region.
  CHECK(u.labels_of(positive_region(q, r)) ==
        std::vector<std::string>{"f", "k", "i", "n", "e", "l", "m"});
  CHECK(dependency_degree(q, r) == frac(7, 12));
  CHECK(dependency_degree(r, q) == Rational(1));
  CHECK(consistency_degree(q, r, ConsistencyParams(Rational(2))) == frac(11, 16));

  const auto gk = granular_dependency(q, r);
  CHECK(gk.labels == std::vector<std::string>{"{f,e}", "{b,c,a}", "{k,i}", "{n,l,m}", "{h,g}"});
  CHECK(gk.values == std::vector<Rational>{frac(2, 12), 0, frac(2, 12), frac(3, 12), 0});
  CHECK(gk.sum() == dependency_degree(q, r));
}

TEST_CASE("trivial measure cases") {
  const auto s = space_from_labels({0, 0, 1, 2, 2});
  const auto gk = granular_dependency(s, s);
  CHECK(gk.values == std::vector<Rational>{frac(2, 5), frac(1, 5), frac(2, 5)});
  const ApproximationSpace c(Universe(letters(4)), Relation::complete(4));
  const ApproximationSpace d(Universe(letters(4)), Relation::diagonal(4));
  CHECK(granular_dependency(d, c).values == std::vector<Rational>{0});
  CHECK(consistency_degree(s, s, ConsistencyParams(Rational(0))) == 1);
  CHECK(consistency_degree(s, s, ConsistencyParams(Rational(7))) == 1);
  CHECK_THROWS_CODE(ConsistencyParams(Rational(-1)), ErrorCode::InvalidArgument);
  CHECK_THROWS_CODE(dependency_degree(s, c), ErrorCode::UniverseMismatch);
  const auto tol = space_from_pairs(5, {{0, 1}});
  CHECK_THROWS_CODE(dependency_degree(tol, s), ErrorCode::NotAnEquivalence);
}

TEST_CASE("granular consistency layout and identity") {
  const auto s = space_from_labels({0, 0, 1});
  const auto v = granular_consistency(s, s, ConsistencyParams(Rational(0)));
  REQUIRE(v.size() == 2 + 2 + 4);
  CHECK(v.values[0] == frac(2, 6));
  CHECK(v.values[2] == frac(2, 6));
  for (std::size_t i = 4; i < v.size(); ++i) CHECK(v.values[i] == 0);
  CHECK(v.sum() == 1);
  CHECK(v.labels[4] == "n*k*[1]*l[1]");

  const auto r = paper_example::r_space();
  const auto q = paper_example::q_space();
  const ConsistencyParams two(Rational(2));
  CHECK(granular_consistency(q, r, two).sum() == consistency_degree(q, r, two));
}

TEST_CASE("classical inclusion functions") {
  const Universe u(letters(4));
  const auto x = set_of(u, {"a", "b"});
  const auto y = set_of(u, {"b", "c"});
  CHECK(rough_inclusion(u.empty_set(), y) == 1);
  CHECK(rough_inclusion(x, x) == 1);
  CHECK(rough_inclusion(x, y) == frac(1, 2));
  CHECK(rough_inclusion_1(x, y) == frac(2, 3));
  CHECK(rough_inclusion_1(u.empty_set(), u.empty_set()) == 1);
  CHECK(rough_inclusion_2(x, y) == frac(3, 4));
  CHECK(rough_inclusion_2(u.full_set(), u.empty_set()) == 0);
}

TEST_CASE("granular inclusion on the worked example") {
  const auto r = paper_example::r_space();
  const Universe& u = r.universe();
  const auto x = set_of(u, {"e", "f", "l", "m", "n"});
  const auto y = set_of(u, {"l", "m", "n"});
  CHECK(granular_inclusion(r, x, y).values == std::vector<Rational>{0, 0, 0, frac(3, 5), 0});
  const auto uniform = granular_inclusion(r, set_of(u, {"a"}), y);
  CHECK(uniform.values == std::vector<Rational>(5, frac(1, 5)));
  const auto k2 = granular_inclusion_2(r, u.full_set(), u.full_set());
  CHECK(k2.values == std::vector<Rational>{frac(2, 12), frac(3, 12), frac(2, 12), frac(3, 12), frac(2, 12)});
  CHECK(granular_inclusion_1(r, set_of(u, {"a"}), y).values == std::vector<Rational>(5, frac(1, 5)));
  CHECK(granule_indicator(set_of(u, {"e", "f"}), x));
  CHECK_FALSE(granule_indicator(set_of(u, {"a", "b"}), x));
}

TEST_CASE("granular inclusion sums on random triples") {
  Rng rng(29);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + trial % 8;
    const auto s = random_equivalence(n, rng);
    const auto x = random_subset(n, rng, 0.7);
    const auto y = random_subset(n, rng, 0.7);
    const auto lx = lower(s, x);
    const auto k = granular_inclusion(s, x, y);
    if (lx.any()) {
      CHECK(k.sum() == frac(static_cast<std::int64_t>(lower(s, x & y).count()),
                            static_cast<std::int64_t>(lx.count())));
    }
    const auto k1 = granular_inclusion_1(s, x, y);
    if (lx.any()) {
      CHECK(k1.sum() == frac(static_cast<std::int64_t>(lower(s, y).count()),
                             static_cast<std::int64_t>(lower(s, x | y).count())));
    }
    const auto comp_y = ~x | y;
    CHECK(granular_inclusion_2(s, x, y).sum() ==
          frac(static_cast<std::int64_t>(lower(s, comp_y).count()), static_cast<std::int64_t>(n)));
    CHECK(granular_inclusion_2(s, x, y).sum() <= rough_inclusion_2(x, y));
  }
}
