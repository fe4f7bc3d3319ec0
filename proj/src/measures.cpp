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

#include "dialcount/error.hpp"

namespace dialcount {

namespace {

std::string render_block(const Universe& universe, const ElementSet& block) {
  std::string out = "{";
  bool first = true;
  for (const auto& label : universe.labels_of(block)) {
    if (!first) out += ",";
    out += label;
    first = false;
  }
  return out + "}";
}

void require_pair(const ApproximationSpace& a, const ApproximationSpace& b,
                  std::string_view operation) {
  if (!(a.universe() == b.universe())) {
    throw Error(ErrorCode::UniverseMismatch,
                std::string(operation) + ": spaces are over different universes");
  }
  if (a.size() == 0) throw Error(ErrorCode::InvalidArgument, std::string(operation) + ": empty universe");
  a.require_equivalence(operation);
  b.require_equivalence(operation);
}

void require_sets(const ElementSet& x, const ElementSet& y) {
  if (x.size() != y.size()) throw Error(ErrorCode::UniverseMismatch, "sets over different universes");
}

Rational ratio(std::size_t num, std::size_t den) {
  return Rational(static_cast<long long>(num), static_cast<long long>(den));
}

// Shared body of the three granular inclusion functions: component i is
// |G_i| chi_i(target) / denominator, or 1/r each when `uniform` holds.
MeasureVector per_granule(const ApproximationSpace& space, const ElementSet& target,
                          std::size_t denominator, bool uniform) {
  const Granulation granules = classes(space);
  const std::size_t r = granules.size();
  MeasureVector out;
  for (const auto& g : granules.blocks()) {
    out.labels.push_back(render_block(space.universe(), g));
    if (uniform) {
      out.values.push_back(ratio(1, r));
    } else if (granule_indicator(g, target)) {
      out.values.push_back(ratio(g.count(), denominator));
    } else {
      out.values.emplace_back(0);
    }
  }
  return out;
}

}  // namespace

Rational MeasureVector::sum() const {
  Rational total = 0;
  for (const auto& v : values) total += v;
  return total;
}

ConsistencyParams::ConsistencyParams(Rational n) : constant(std::move(n)) {
  if (constant < 0) throw Error(ErrorCode::InvalidArgument, "consistency constant must be >= 0");
}

ElementSet positive_region(const ApproximationSpace& dependent, const ApproximationSpace& base) {
  require_pair(dependent, base, "positive_region");
  ElementSet pos(base.size());
  const Granulation dependent_classes = classes(dependent);
  for (const auto& x : dependent_classes.blocks()) pos |= lower(base, x);
  return pos;
}

Rational dependency_degree(const ApproximationSpace& dependent, const ApproximationSpace& base) {
  return ratio(positive_region(dependent, base).count(), base.size());
}

MeasureVector granular_dependency(const ApproximationSpace& dependent,
                                  const ApproximationSpace& base) {
  const ElementSet pos = positive_region(dependent, base);
  MeasureVector out;
  const Granulation base_classes = classes(base);
  for (const auto& g : base_classes.blocks()) {
    out.labels.push_back(render_block(base.universe(), g));
    out.values.push_back(g.is_subset_of(pos) ? ratio(g.count(), base.size()) : Rational(0));
  }
  return out;
}

Rational consistency_degree(const ApproximationSpace& q, const ApproximationSpace& r,
                            const ConsistencyParams& params) {
  const Rational a = dependency_degree(q, r);
  const Rational b = dependency_degree(r, q);
  const Rational& n = params.constant;
  return (a + b + n * a * b) / (n + 2);
}

MeasureVector granular_consistency(const ApproximationSpace& q, const ApproximationSpace& r,
                                   const ConsistencyParams& params) {
  const MeasureVector k = granular_dependency(q, r);
  const MeasureVector l = granular_dependency(r, q);
  const Rational& n = params.constant;
  const Rational scale = n + 2;

  MeasureVector out;
  for (std::size_t i = 0; i < k.size(); ++i) {
    out.values.push_back(k.values[i] / scale);
    out.labels.push_back("k*[" + std::to_string(i + 1) + "] " + k.labels[i]);
  }
  for (std::size_t j = 0; j < l.size(); ++j) {
    out.values.push_back(l.values[j] / scale);
    out.labels.push_back("l*[" + std::to_string(j + 1) + "] " + l.labels[j]);
  }
  // Cross terms pair a starred k with an unstarred l.
  for (std::size_t i = 0; i < k.size(); ++i) {
    for (std::size_t j = 0; j < l.size(); ++j) {
      out.values.push_back(n * (k.values[i] / scale) * l.values[j]);
      out.labels.push_back("n*k*[" + std::to_string(i + 1) + "]*l[" + std::to_string(j + 1) + "]");
    }
  }
  return out;
}

Rational rough_inclusion(const ElementSet& x, const ElementSet& y) {
  require_sets(x, y);
  if (x.none()) return 1;
  return ratio((x & y).count(), x.count());
}

Rational rough_inclusion_1(const ElementSet& x, const ElementSet& y) {
  require_sets(x, y);
  const std::size_t joined = (x | y).count();
  if (joined == 0) return 1;
  return ratio(y.count(), joined);
}

Rational rough_inclusion_2(const ElementSet& x, const ElementSet& y) {
  require_sets(x, y);
  if (x.size() == 0) throw Error(ErrorCode::InvalidArgument, "k2 over an empty universe");
  return ratio((~x | y).count(), x.size());
}

bool granule_indicator(const ElementSet& granule, const ElementSet& set) {
  return granule.is_subset_of(set);
}

MeasureVector granular_inclusion(const ApproximationSpace& space, const ElementSet& x,
                                 const ElementSet& y) {
  require_sets(x, y);
  const ElementSet lower_x = lower(space, x);
  return per_granule(space, x & y, lower_x.count(), lower_x.none());
}

MeasureVector granular_inclusion_1(const ApproximationSpace& space, const ElementSet& x,
                                   const ElementSet& y) {
  require_sets(x, y);
  const ElementSet lower_x = lower(space, x);
  // lower is monotone, so lower(X ∪ Y) is nonempty whenever lower(X) is.
  return per_granule(space, y, lower(space, x | y).count(), lower_x.none());
}

MeasureVector granular_inclusion_2(const ApproximationSpace& space, const ElementSet& x,
                                   const ElementSet& y) {
  require_sets(x, y);
  space.require_equivalence("k2*");
  if (space.size() == 0) throw Error(ErrorCode::InvalidArgument, "k2* over an empty universe");
  return per_granule(space, ~x | y, space.size(), false);
}

}  // namespace dialcount
