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
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace dialcount {

using ElementIndex = std::size_t;

/// Subset of a universe, indexed by canonical position.
using ElementSet = boost::dynamic_bitset<>;

std::vector<ElementIndex> members(const ElementSet& set);

/// Finite universe with a canonical base order. Labels are distinct.
class Universe {
 public:
  Universe() = default;
  explicit Universe(std::vector<std::string> labels);

  std::size_t size() const noexcept { return labels_.size(); }
  bool empty() const noexcept { return labels_.empty(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(ElementIndex index) const { return labels_.at(index); }

  std::optional<ElementIndex> find(std::string_view label) const;
  /// Throws UnknownElement.
  ElementIndex index_of(std::string_view label) const;

  ElementSet empty_set() const { return ElementSet(size()); }
  ElementSet full_set() const { return ElementSet(size()).set(); }
  ElementSet make_set(std::span<const std::string> labels) const;
  std::vector<std::string> labels_of(const ElementSet& set) const;

  bool operator==(const Universe& other) const { return labels_ == other.labels_; }

 private:
  std::vector<std::string> labels_;
  std::map<std::string, ElementIndex, std::less<>> index_;
};

struct ClosureKinds {
  bool reflexive = false;
  bool symmetric = false;
  bool transitive = false;

  static constexpr ClosureKinds none() { return {}; }
  static constexpr ClosureKinds equivalence() { return {true, true, true}; }

  friend constexpr ClosureKinds operator|(ClosureKinds a, ClosureKinds b) {
    return {a.reflexive || b.reflexive, a.symmetric || b.symmetric,
            a.transitive || b.transitive};
  }
  bool operator==(const ClosureKinds&) const = default;
};

using IndexPair = std::pair<ElementIndex, ElementIndex>;

/// Directed binary relation over indices 0..n-1. Records which closures have
/// been applied; every recorded closure holds for the stored pairs.
class Relation {
 public:
  Relation() = default;
  explicit Relation(std::size_t universe_size);
  Relation(std::size_t universe_size, std::span<const IndexPair> pairs);

  static Relation diagonal(std::size_t universe_size);
  static Relation complete(std::size_t universe_size);

  std::size_t universe_size() const noexcept { return rows_.size(); }
  bool contains(ElementIndex from, ElementIndex to) const { return rows_.at(from).test(to); }
  /// Successors of `from` in the directed pair set.
  const ElementSet& row(ElementIndex from) const { return rows_.at(from); }
  std::vector<IndexPair> pairs() const;
  std::size_t pair_count() const;
  ClosureKinds closures() const noexcept { return closures_; }

  bool is_reflexive() const;
  bool is_symmetric() const;
  bool is_transitive() const;
  bool is_equivalence() const { return is_reflexive() && is_symmetric() && is_transitive(); }

  /// Image under a relabeling: (i, j) becomes (mapping[i], mapping[j]).
  Relation relabeled(std::span<const ElementIndex> mapping) const;

  bool operator==(const Relation& other) const { return rows_ == other.rows_; }

 private:
  friend Relation close(const Relation& relation, ClosureKinds kinds);

  std::vector<ElementSet> rows_;
  ClosureKinds closures_;
};

/// Smallest superset closed under every requested kind. Idempotent.
Relation close(const Relation& relation, ClosureKinds kinds);

/// Ordered blocks over a universe. Blocks are kept sorted by their first
/// member in the canonical order.
class Granulation {
 public:
  Granulation() = default;
  Granulation(std::size_t universe_size, std::vector<ElementSet> blocks);

  std::size_t universe_size() const noexcept { return universe_size_; }
  std::size_t size() const noexcept { return blocks_.size(); }
  const std::vector<ElementSet>& blocks() const noexcept { return blocks_; }
  const ElementSet& operator[](std::size_t i) const { return blocks_.at(i); }
  std::optional<std::size_t> block_of(ElementIndex element) const;
  bool is_partition() const;

  bool operator==(const Granulation& other) const = default;

 private:
  std::size_t universe_size_ = 0;
  std::vector<ElementSet> blocks_;
};

class ApproximationSpace {
 public:
  ApproximationSpace() = default;
  ApproximationSpace(Universe universe, Relation relation);

  const Universe& universe() const noexcept { return universe_; }
  const Relation& relation() const noexcept { return relation_; }
  std::size_t size() const noexcept { return universe_.size(); }

  /// Symmetrized view: (x,y) or (y,x) stored. related(x,x) needs (x,x) stored.
  bool related(ElementIndex x, ElementIndex y) const { return symmetric_rows_[x].test(y); }
  bool related(std::string_view x, std::string_view y) const;

  /// n(x) = {y : related(x, y)}.
  const ElementSet& neighbourhood(ElementIndex x) const { return symmetric_rows_.at(x); }
  ElementSet neighbourhood(std::string_view x) const;

  bool is_equivalence() const { return equivalence_; }
  /// Throws NotAnEquivalence naming `operation`.
  void require_equivalence(std::string_view operation) const;

  /// Same relation on the sub-universe `subset`, keeping canonical order.
  ApproximationSpace restricted_to(const ElementSet& subset) const;

 private:
  Universe universe_;
  Relation relation_;
  std::vector<ElementSet> symmetric_rows_;
  bool equivalence_ = false;
};

/// Equivalence classes ordered by first appearance. Throws NotAnEquivalence.
Granulation classes(const ApproximationSpace& space);

/// Class-based approximations; require an equivalence.
ElementSet lower(const ApproximationSpace& space, const ElementSet& set);
ElementSet upper(const ApproximationSpace& space, const ElementSet& set);

/// Neighbourhood-based analogues for tolerance (or arbitrary) relations:
/// unions of the n(x) contained in / meeting the set.
ElementSet neighbourhood_lower(const ApproximationSpace& space, const ElementSet& set);
ElementSet neighbourhood_upper(const ApproximationSpace& space, const ElementSet& set);

/// True iff the neighbourhoods form a cover: every x lies in some n(y).
bool neighbourhoods_cover(const ApproximationSpace& space);

/// lower(A) = A = upper(A), using neighbourhood granules (classes for equivalences).
bool is_definite(const ApproximationSpace& space, const ElementSet& set);

class InfoTable {
 public:
  InfoTable(std::vector<std::string> element_labels, std::vector<std::string> attributes,
            std::vector<std::vector<std::string>> rows);

  const std::vector<std::string>& element_labels() const noexcept { return element_labels_; }
  const std::vector<std::string>& attributes() const noexcept { return attributes_; }
  const std::vector<std::vector<std::string>>& rows() const noexcept { return rows_; }
  std::size_t attribute_index(std::string_view name) const;

 private:
  std::vector<std::string> element_labels_;
  std::vector<std::string> attributes_;
  std::vector<std::vector<std::string>> rows_;
};

/// Indiscernibility on `attributes`: x ~ y iff all listed values agree.
ApproximationSpace ind_from_table(const InfoTable& table, std::span<const std::string> attributes);

}  // namespace dialcount
