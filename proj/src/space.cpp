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

#include "dialcount/space.hpp"

#include <algorithm>
#include <set>

#include "dialcount/error.hpp"

namespace dialcount {

namespace {

void require_size(const ElementSet& set, std::size_t n, std::string_view what) {
  if (set.size() != n) {
    throw Error(ErrorCode::UniverseMismatch,
                std::string(what) + ": set has " + std::to_string(set.size()) +
                    " slots, universe has " + std::to_string(n));
  }
}

}  // namespace

std::vector<ElementIndex> members(const ElementSet& set) {
  std::vector<ElementIndex> out;
  out.reserve(set.count());
  for (auto i = set.find_first(); i != ElementSet::npos; i = set.find_next(i)) out.push_back(i);
  return out;
}

Universe::Universe(std::vector<std::string> labels) : labels_(std::move(labels)) {
  for (ElementIndex i = 0; i < labels_.size(); ++i) {
    auto [it, inserted] = index_.emplace(labels_[i], i);
    if (!inserted) {
      throw Error(ErrorCode::InvalidArgument, "duplicate element label '" + labels_[i] + "'");
    }
  }
}

std::optional<ElementIndex> Universe::find(std::string_view label) const {
  if (auto it = index_.find(label); it != index_.end()) return it->second;
  return std::nullopt;
}

ElementIndex Universe::index_of(std::string_view label) const {
  if (auto found = find(label)) return *found;
  throw Error(ErrorCode::UnknownElement, "unknown element '" + std::string(label) + "'");
}

ElementSet Universe::make_set(std::span<const std::string> labels) const {
  ElementSet set(size());
  for (const auto& label : labels) set.set(index_of(label));
  return set;
}

std::vector<std::string> Universe::labels_of(const ElementSet& set) const {
  require_size(set, size(), "labels_of");
  std::vector<std::string> out;
  for (ElementIndex i : members(set)) out.push_back(labels_[i]);
  return out;
}

Relation::Relation(std::size_t universe_size) : rows_(universe_size, ElementSet(universe_size)) {}

Relation::Relation(std::size_t universe_size, std::span<const IndexPair> pairs)
    : Relation(universe_size) {
  for (auto [from, to] : pairs) {
    if (from >= universe_size || to >= universe_size) {
      throw Error(ErrorCode::InvalidArgument, "relation pair index out of range");
    }
    rows_[from].set(to);
  }
}

Relation Relation::diagonal(std::size_t universe_size) {
  return close(Relation(universe_size), ClosureKinds::equivalence());
}

Relation Relation::complete(std::size_t universe_size) {
  Relation r(universe_size);
  for (auto& row : r.rows_) row.set();
  r.closures_ = ClosureKinds::equivalence();
  return r;
}

std::vector<IndexPair> Relation::pairs() const {
  std::vector<IndexPair> out;
  for (ElementIndex i = 0; i < rows_.size(); ++i) {
    for (ElementIndex j : members(rows_[i])) out.emplace_back(i, j);
  }
  return out;
}

std::size_t Relation::pair_count() const {
  std::size_t total = 0;
  for (const auto& row : rows_) total += row.count();
  return total;
}

bool Relation::is_reflexive() const {
  for (ElementIndex i = 0; i < rows_.size(); ++i) {
    if (!rows_[i].test(i)) return false;
  }
  return true;
}

bool Relation::is_symmetric() const {
  for (ElementIndex i = 0; i < rows_.size(); ++i) {
    for (ElementIndex j : members(rows_[i])) {
      if (!rows_[j].test(i)) return false;
    }
  }
  return true;
}

bool Relation::is_transitive() const {
  for (const auto& row : rows_) {
    for (ElementIndex j : members(row)) {
      if (!rows_[j].is_subset_of(row)) return false;
    }
  }
  return true;
}

Relation Relation::relabeled(std::span<const ElementIndex> mapping) const {
  if (mapping.size() != rows_.size()) {
    throw Error(ErrorCode::InvalidArgument, "relabeling size mismatch");
  }
  std::vector<IndexPair> moved;
  for (auto [i, j] : pairs()) moved.emplace_back(mapping[i], mapping[j]);
  Relation out(rows_.size(), moved);
  out.closures_ = closures_;
  return out;
}

Relation close(const Relation& relation, ClosureKinds kinds) {
  Relation out = relation;
  const ClosureKinds target = relation.closures_ | kinds;
  const std::size_t n = out.rows_.size();
  if (target.reflexive) {
    for (ElementIndex i = 0; i < n; ++i) out.rows_[i].set(i);
  }
  if (target.symmetric) {
    for (ElementIndex i = 0; i < n; ++i) {
      for (ElementIndex j : members(out.rows_[i])) out.rows_[j].set(i);
    }
  }
  if (target.transitive) {
    // Warshall; preserves reflexivity and symmetry of the input.
    for (ElementIndex k = 0; k < n; ++k) {
      for (ElementIndex i = 0; i < n; ++i) {
        if (out.rows_[i].test(k)) out.rows_[i] |= out.rows_[k];
      }
    }
  }
  out.closures_ = target;
  return out;
}

Granulation::Granulation(std::size_t universe_size, std::vector<ElementSet> blocks)
    : universe_size_(universe_size), blocks_(std::move(blocks)) {
  for (const auto& block : blocks_) {
    require_size(block, universe_size_, "granulation");
    if (block.none()) throw Error(ErrorCode::InvalidArgument, "granulation block is empty");
  }
  std::stable_sort(blocks_.begin(), blocks_.end(), [](const ElementSet& a, const ElementSet& b) {
    return a.find_first() < b.find_first();
  });
}

std::optional<std::size_t> Granulation::block_of(ElementIndex element) const {
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (blocks_[i].test(element)) return i;
  }
  return std::nullopt;
}

bool Granulation::is_partition() const {
  ElementSet seen(universe_size_);
  for (const auto& block : blocks_) {
    if (seen.intersects(block)) return false;
    seen |= block;
  }
  return seen.all();
}

ApproximationSpace::ApproximationSpace(Universe universe, Relation relation)
    : universe_(std::move(universe)), relation_(std::move(relation)) {
  const std::size_t n = universe_.size();
  if (relation_.universe_size() != n) {
    throw Error(ErrorCode::UniverseMismatch,
                "relation is over " + std::to_string(relation_.universe_size()) +
                    " elements, universe has " + std::to_string(n));
  }
  symmetric_rows_.assign(n, ElementSet(n));
  for (ElementIndex i = 0; i < n; ++i) {
    symmetric_rows_[i] |= relation_.row(i);
    for (ElementIndex j : members(relation_.row(i))) symmetric_rows_[j].set(i);
  }
  equivalence_ = relation_.is_equivalence();
}

bool ApproximationSpace::related(std::string_view x, std::string_view y) const {
  return related(universe_.index_of(x), universe_.index_of(y));
}

ElementSet ApproximationSpace::neighbourhood(std::string_view x) const {
  return neighbourhood(universe_.index_of(x));
}

void ApproximationSpace::require_equivalence(std::string_view operation) const {
  if (!equivalence_) {
    ClosureKinds missing{!relation_.is_reflexive(), !relation_.is_symmetric(),
                         !relation_.is_transitive()};
    std::string what;
    auto add = [&](bool flag, const char* name) {
      if (!flag) return;
      if (!what.empty()) what += ", ";
      what += name;
    };
    add(missing.reflexive, "reflexive");
    add(missing.symmetric, "symmetric");
    add(missing.transitive, "transitive");
    throw Error(ErrorCode::NotAnEquivalence,
                std::string(operation) + " requires an equivalence relation (not " + what + ")");
  }
}

ApproximationSpace ApproximationSpace::restricted_to(const ElementSet& subset) const {
  require_size(subset, size(), "restricted_to");
  std::vector<ElementIndex> kept = members(subset);
  std::vector<std::size_t> new_index(size(), 0);
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < kept.size(); ++k) {
    new_index[kept[k]] = k;
    labels.push_back(universe_.label(kept[k]));
  }
  std::vector<IndexPair> pairs;
  for (auto [i, j] : relation_.pairs()) {
    if (subset.test(i) && subset.test(j)) pairs.emplace_back(new_index[i], new_index[j]);
  }
  // Restriction preserves every closure property.
  Relation restricted = close(Relation(kept.size(), pairs), relation_.closures());
  return ApproximationSpace(Universe(std::move(labels)), std::move(restricted));
}

Granulation classes(const ApproximationSpace& space) {
  space.require_equivalence("classes");
  const std::size_t n = space.size();
  std::vector<ElementSet> blocks;
  ElementSet assigned(n);
  for (ElementIndex i = 0; i < n; ++i) {
    if (assigned.test(i)) continue;
    blocks.push_back(space.neighbourhood(i));
    assigned |= blocks.back();
  }
  return Granulation(n, std::move(blocks));
}

ElementSet lower(const ApproximationSpace& space, const ElementSet& set) {
  space.require_equivalence("lower approximation");
  return neighbourhood_lower(space, set);
}

ElementSet upper(const ApproximationSpace& space, const ElementSet& set) {
  space.require_equivalence("upper approximation");
  return neighbourhood_upper(space, set);
}

ElementSet neighbourhood_lower(const ApproximationSpace& space, const ElementSet& set) {
  require_size(set, space.size(), "lower approximation");
  ElementSet out(space.size());
  for (ElementIndex x = 0; x < space.size(); ++x) {
    const ElementSet& granule = space.neighbourhood(x);
    if (granule.is_subset_of(set)) out |= granule;
  }
  return out;
}

ElementSet neighbourhood_upper(const ApproximationSpace& space, const ElementSet& set) {
  require_size(set, space.size(), "upper approximation");
  ElementSet out(space.size());
  for (ElementIndex x = 0; x < space.size(); ++x) {
    const ElementSet& granule = space.neighbourhood(x);
    if (granule.intersects(set)) out |= granule;
  }
  return out;
}

bool neighbourhoods_cover(const ApproximationSpace& space) {
  ElementSet covered(space.size());
  for (ElementIndex x = 0; x < space.size(); ++x) covered |= space.neighbourhood(x);
  return covered.all();
}

bool is_definite(const ApproximationSpace& space, const ElementSet& set) {
  return neighbourhood_lower(space, set) == set && neighbourhood_upper(space, set) == set;
}

InfoTable::InfoTable(std::vector<std::string> element_labels, std::vector<std::string> attributes,
                     std::vector<std::vector<std::string>> rows)
    : element_labels_(std::move(element_labels)),
      attributes_(std::move(attributes)),
      rows_(std::move(rows)) {
  if (rows_.size() != element_labels_.size()) {
    throw Error(ErrorCode::InvalidArgument, "info table needs one row per element");
  }
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (rows_[r].size() != attributes_.size()) {
      throw Error(ErrorCode::Parse, "row for '" + element_labels_[r] + "' has " +
                                        std::to_string(rows_[r].size()) + " values, expected " +
                                        std::to_string(attributes_.size()));
    }
  }
  std::set<std::string_view> seen;
  for (const auto& name : attributes_) {
    if (!seen.insert(name).second) {
      throw Error(ErrorCode::Parse, "duplicate attribute '" + name + "'");
    }
  }
  Universe check(element_labels_);  // rejects duplicate labels
}

std::size_t InfoTable::attribute_index(std::string_view name) const {
  auto it = std::find(attributes_.begin(), attributes_.end(), name);
  if (it == attributes_.end()) {
    throw Error(ErrorCode::UnknownAttribute, "unknown attribute '" + std::string(name) + "'");
  }
  return static_cast<std::size_t>(it - attributes_.begin());
}

ApproximationSpace ind_from_table(const InfoTable& table, std::span<const std::string> attributes) {
  if (attributes.empty()) {
    throw Error(ErrorCode::InvalidArgument, "indiscernibility needs at least one attribute");
  }
  std::vector<std::size_t> columns;
  for (const auto& name : attributes) columns.push_back(table.attribute_index(name));

  const auto& rows = table.rows();
  const std::size_t n = rows.size();
  auto agree = [&](std::size_t a, std::size_t b) {
    return std::all_of(columns.begin(), columns.end(),
                       [&](std::size_t c) { return rows[a][c] == rows[b][c]; });
  };
  std::vector<IndexPair> pairs;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (agree(a, b)) pairs.emplace_back(a, b);
    }
  }
  return ApproximationSpace(Universe(table.element_labels()),
                            close(Relation(n, pairs), ClosureKinds::equivalence()));
}

}  // namespace dialcount
