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

#include "dialcount/cipca.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

#include "dialcount/error.hpp"
#include "dialcount/granules.hpp"

namespace dialcount {

namespace {

using SignatureKey = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

SignatureKey key_of(const std::vector<CountToken>& tokens) {
  SignatureKey key;
  key.reserve(tokens.size());
  for (const auto& t : tokens) key.emplace_back(t.alpha(), t.two_type());
  return key;
}

}  // namespace

Permutation::Permutation(std::vector<ElementIndex> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (ElementIndex e : images_) {
    if (e >= images_.size() || seen[e]) {
      throw Error(ErrorCode::InvalidArgument, "permutation is not a bijection");
    }
    seen[e] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<ElementIndex> images(n);
  std::iota(images.begin(), images.end(), ElementIndex{0});
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<ElementIndex> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out[images_[i]] = i;
  return Permutation(std::move(out));
}

std::string Permutation::to_string(const Universe& universe) const {
  const bool short_labels = std::all_of(universe.labels().begin(), universe.labels().end(),
                                        [](const std::string& l) { return l.size() == 1; });
  std::string out;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (!short_labels && i > 0) out += ",";
    out += universe.label(images_[i]);
  }
  return out;
}

Permutation compose(const Permutation& x, const Permutation& y) {
  if (x.size() != y.size()) throw Error(ErrorCode::InvalidArgument, "composing permutations of different sizes");
  std::vector<ElementIndex> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x(y(i));
  return Permutation(std::move(out));
}

std::uint64_t permutation_rank(std::span<const ElementIndex> images) {
  const std::size_t n = images.size();
  std::uint64_t rank = 0;
  std::uint32_t used = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint32_t below = (std::uint32_t{1} << images[i]) - 1;
    const auto smaller_unused = static_cast<std::uint64_t>(std::popcount(below & ~used));
    rank += smaller_unused * factorial(n - 1 - i);
    used |= std::uint32_t{1} << images[i];
  }
  return rank;
}

std::vector<CountToken> signature(const ApproximationSpace& space, const Permutation& perm) {
  if (perm.size() != space.size()) {
    throw Error(ErrorCode::UniverseMismatch, "permutation size differs from the universe size");
  }
  return ipc(space, perm.as_order()).tokens;
}

SignatureQuotient::SignatureQuotient(std::size_t universe_size, std::vector<SignatureClass> classes)
    : universe_size_(universe_size), classes_(std::move(classes)) {
  const std::uint64_t total = factorial(universe_size_);
  constexpr auto unassigned = ~std::uint32_t{0};
  class_by_rank_.assign(total, unassigned);
  for (std::size_t c = 0; c < classes_.size(); ++c) {
    for (const auto& member : classes_[c].members) {
      if (member.size() != universe_size_) {
        throw Error(ErrorCode::InvalidArgument, "quotient member has the wrong size");
      }
      auto& slot = class_by_rank_[permutation_rank(member.images())];
      if (slot != unassigned) throw Error(ErrorCode::InvalidArgument, "quotient classes overlap");
      slot = static_cast<std::uint32_t>(c);
    }
  }
  if (std::find(class_by_rank_.begin(), class_by_rank_.end(), unassigned) != class_by_rank_.end()) {
    throw Error(ErrorCode::InvalidArgument, "quotient classes do not cover every permutation");
  }
}

std::size_t SignatureQuotient::class_of(const Permutation& perm) const {
  if (perm.size() != universe_size_) throw Error(ErrorCode::UniverseMismatch, "permutation size");
  return class_by_rank_[permutation_rank(perm.images())];
}

SignatureQuotient quotient(const ApproximationSpace& space, std::size_t budget) {
  const std::size_t n = space.size();
  check_budget(n, budget, "quotient");
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "cannot count an empty universe");
  std::map<SignatureKey, std::size_t> class_index;
  std::vector<SignatureClass> classes;
  // Lexicographic enumeration: a class is first met at its smallest member.
  for_each_order(n, [&](const std::vector<ElementIndex>& images) {
    Permutation perm(images);
    auto tokens = signature(space, perm);
    auto [it, inserted] = class_index.try_emplace(key_of(tokens), classes.size());
    if (inserted) classes.push_back({std::move(tokens), {}});
    classes[it->second].members.push_back(std::move(perm));
  });
  return SignatureQuotient(n, std::move(classes));
}

std::optional<std::size_t> odot(const SignatureQuotient& q, std::size_t a, std::size_t b) {
  const auto& left = q[a].members;
  const auto& right = q[b].members;
  std::optional<std::size_t> target;
  for (const auto& x : left) {
    for (const auto& y : right) {
      const std::size_t c = q.class_of(compose(x, y));
      if (!target) {
        target = c;
      } else if (*target != c) {
        return std::nullopt;
      }
    }
  }
  return target;
}

OperationTable operation_table(const SignatureQuotient& q, std::size_t budget) {
  check_budget(q.universe_size(), budget, "operation_table");
  OperationTable table(q.size(), std::vector<std::optional<std::size_t>>(q.size()));
  for (std::size_t a = 0; a < q.size(); ++a) {
    for (std::size_t b = 0; b < q.size(); ++b) table[a][b] = odot(q, a, b);
  }
  return table;
}

std::uint64_t counting_count(const ApproximationSpace& space, std::size_t budget) {
  check_budget(space.size(), budget, "counting_count");
  std::uint64_t total = 0;
  for_each_order(space.size(), [&](const std::vector<ElementIndex>&) { ++total; });
  return total;
}

SemilinearReport semilinear_check(const std::vector<std::vector<bool>>& leq) {
  const std::size_t m = leq.size();
  for (const auto& row : leq) {
    if (row.size() != m) throw Error(ErrorCode::InvalidArgument, "comparison matrix is not square");
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (!leq[i][i]) throw Error(ErrorCode::NotAPreorder, "comparison is not reflexive");
    for (std::size_t j = 0; j < m; ++j) {
      if (!leq[i][j]) continue;
      for (std::size_t k = 0; k < m; ++k) {
        if (leq[j][k] && !leq[i][k]) {
          throw Error(ErrorCode::NotAPreorder, "comparison is not transitive");
        }
      }
    }
  }

  // One representative per equivalence class of the preorder.
  std::vector<std::size_t> reps;
  for (std::size_t i = 0; i < m; ++i) {
    bool first_of_class = true;
    for (std::size_t j = 0; j < i && first_of_class; ++j) {
      if (leq[i][j] && leq[j][i]) first_of_class = false;
    }
    if (first_of_class) reps.push_back(i);
  }

  SemilinearReport report;
  report.collapsed_size = reps.size();
  report.down_sets_are_chains = true;
  report.common_lower_bounds = true;
  for (std::size_t top : reps) {
    for (std::size_t a : reps) {
      for (std::size_t b : reps) {
        if (leq[a][top] && leq[b][top] && !leq[a][b] && !leq[b][a]) {
          report.down_sets_are_chains = false;
          if (!report.non_chain_witness) report.non_chain_witness = top;
        }
      }
    }
  }
  for (std::size_t x = 0; x < reps.size(); ++x) {
    for (std::size_t y = x + 1; y < reps.size(); ++y) {
      const std::size_t a = reps[x];
      const std::size_t b = reps[y];
      const bool bounded = std::any_of(reps.begin(), reps.end(),
                                       [&](std::size_t t) { return leq[t][a] && leq[t][b]; });
      if (!bounded) {
        report.common_lower_bounds = false;
        if (!report.no_lower_bound_witness) report.no_lower_bound_witness = std::pair{a, b};
      }
    }
  }
  return report;
}

CountPreorder ipc_count_preorder(const ApproximationSpace& space, std::size_t budget) {
  const std::size_t n = space.size();
  check_budget(n, budget, "ipc_count_preorder");
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "cannot count an empty universe");
  CountPreorder out;
  std::map<SignatureKey, std::size_t> seen;
  for_each_order(n, [&](const std::vector<ElementIndex>& elements) {
    CountSequence seq = ipc(space, Order(elements));
    if (seen.try_emplace(key_of(seq.tokens), out.counts.size()).second) {
      out.counts.push_back(std::move(seq));
    }
  });
  const std::size_t m = out.counts.size();
  out.leq.assign(m, std::vector<bool>(m, false));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) out.leq[i][j] = preceq(out.counts[i], out.counts[j]);
  }
  return out;
}

}  // namespace dialcount
