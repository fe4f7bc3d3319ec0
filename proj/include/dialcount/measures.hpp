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

#include <string>
#include <vector>

#include "dialcount/rational.hpp"
#include "dialcount/space.hpp"

namespace dialcount {

/// Exact rational components with a provenance label per component.
struct MeasureVector {
  std::vector<Rational> values;
  std::vector<std::string> labels;

  std::size_t size() const noexcept { return values.size(); }
  Rational sum() const;
};

struct ConsistencyParams {
  Rational constant;  // n >= 0

  explicit ConsistencyParams(Rational n);
};

// Argument order follows the usual notation: the knowledge `dependent` (Q)
// is measured against the approximating knowledge `base` (R). Both spaces
// must be equivalences over the same universe.

/// POS_R(Q): union of the R-lower approximations of the Q-classes.
ElementSet positive_region(const ApproximationSpace& dependent, const ApproximationSpace& base);

/// delta(Q, R) = |POS_R(Q)| / |S|.
Rational dependency_degree(const ApproximationSpace& dependent, const ApproximationSpace& base);

/// gk(Q, R): one component per R-granule G_i in canonical order,
/// |G_i| / |S| when G_i lies in POS_R(Q), otherwise 0.
MeasureVector granular_dependency(const ApproximationSpace& dependent,
                                  const ApproximationSpace& base);

/// Cons(Q, R) = (a + b + n a b) / (n + 2) with a = delta(Q,R), b = delta(R,Q).
Rational consistency_degree(const ApproximationSpace& q, const ApproximationSpace& r,
                            const ConsistencyParams& params);

/// gCons(Q, R) = (k_1*..k_r*, l_1*..l_p*, n k_i* l_j for all (i, j)) where
/// k = gk(Q,R), l = gk(R,Q), and x* = x / (n + 2). Cross terms run over
/// (i, j) lexicographically and use the unstarred l_j. Components sum to Cons.
MeasureVector granular_consistency(const ApproximationSpace& q, const ApproximationSpace& r,
                                   const ConsistencyParams& params);

// Classical rough inclusion functions over a universe of `universe_size`.
Rational rough_inclusion(const ElementSet& x, const ElementSet& y);
Rational rough_inclusion_1(const ElementSet& x, const ElementSet& y);
Rational rough_inclusion_2(const ElementSet& x, const ElementSet& y);

/// chi_i(Z) = 1 iff G_i ⊆ Z.
bool granule_indicator(const ElementSet& granule, const ElementSet& set);

/// Granular replacements. Each returns one component per class G_i:
///   k*:  |G_i| chi_i(X ∩ Y) / |lower(X)|      if lower(X) nonempty, else 1/r each
///   k1*: |G_i| chi_i(Y) / |lower(X ∪ Y)|      if lower(X) nonempty, else 1/r each
///   k2*: |G_i| chi_i(X^c ∪ Y) / |S|
MeasureVector granular_inclusion(const ApproximationSpace& space, const ElementSet& x,
                                 const ElementSet& y);
MeasureVector granular_inclusion_1(const ApproximationSpace& space, const ElementSet& x,
                                   const ElementSet& y);
MeasureVector granular_inclusion_2(const ApproximationSpace& space, const ElementSet& x,
                                   const ElementSet& y);

}  // namespace dialcount
