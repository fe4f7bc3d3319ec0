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
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dialcount/space.hpp"

namespace dialcount {

enum class CountMethod { Ipc, Hpc, Hppc, Ippc };

std::string_view to_string(CountMethod method) noexcept;
/// Case-insensitive "ipc" | "hpc" | "hppc" | "ippc". Throws InvalidArgument.
CountMethod parse_count_method(std::string_view text);

/// Outcome of counting one element: Defined(alpha, two_type) or Undefined.
/// The successor form s^r(1_j) corresponds to alpha = r + 1, two_type = j.
class CountToken {
 public:
  static CountToken defined(std::uint32_t alpha, std::uint32_t two_type);
  static constexpr CountToken undefined() noexcept { return CountToken{}; }

  bool is_defined() const noexcept { return alpha_ != 0; }
  std::uint32_t alpha() const noexcept { return alpha_; }
  std::uint32_t two_type() const noexcept { return two_type_; }

  /// "a_t" or "*".
  std::string to_string() const;
  static CountToken parse(std::string_view text);

  bool operator==(const CountToken&) const = default;

 private:
  constexpr CountToken() noexcept = default;
  constexpr CountToken(std::uint32_t alpha, std::uint32_t two_type) noexcept
      : alpha_(alpha), two_type_(two_type) {}

  std::uint32_t alpha_ = 0;
  std::uint32_t two_type_ = 0;
};

/// A counting order x_1..x_n: position -> element, bijective over 0..n-1.
class Order {
 public:
  Order() = default;
  explicit Order(std::vector<ElementIndex> elements);

  static Order identity(std::size_t n);
  static Order from_labels(const Universe& universe, std::span<const std::string> labels);

  std::size_t size() const noexcept { return elements_.size(); }
  ElementIndex operator[](std::size_t position) const { return elements_[position]; }
  std::span<const ElementIndex> elements() const noexcept { return elements_; }
  std::size_t position_of(ElementIndex element) const;
  std::vector<std::string> labels(const Universe& universe) const;

  auto operator<=>(const Order&) const = default;

 private:
  std::vector<ElementIndex> elements_;
};

struct CountSequence {
  CountMethod method = CountMethod::Ipc;
  Order order;
  std::vector<CountToken> tokens;

  std::vector<std::string> rendered() const;
};

CountSequence ipc(const ApproximationSpace& space, const Order& order);
CountSequence hpc(const ApproximationSpace& space, const Order& order);
CountSequence hppc(const ApproximationSpace& space, const Order& order);
CountSequence ippc(const ApproximationSpace& space, const Order& order);
CountSequence count(const ApproximationSpace& space, const Order& order, CountMethod method);

/// Earliest position k != position whose element is related to the element
/// at `position`. Positions are 0-based.
std::optional<std::size_t> tau(const ApproximationSpace& space, const CountSequence& seq,
                               std::size_t position);
/// Latest position k < position whose element is related to it.
std::optional<std::size_t> epsilon(const ApproximationSpace& space, const CountSequence& seq,
                                   std::size_t position);

/// Tokens at positions whose element lies in `subset`, in counting order.
std::vector<CountToken> induced(const CountSequence& seq, const ElementSet& subset);

std::vector<std::string> render(std::span<const CountToken> tokens);

}  // namespace dialcount
