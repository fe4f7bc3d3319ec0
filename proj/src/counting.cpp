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

#include <algorithm>
#include <cctype>
#include <charconv>

#include "dialcount/error.hpp"

namespace dialcount {

namespace {

void require_matching(const ApproximationSpace& space, const Order& order) {
  if (order.size() != space.size()) {
    throw Error(ErrorCode::UniverseMismatch,
                "order has " + std::to_string(order.size()) + " positions, universe has " +
                    std::to_string(space.size()));
  }
  if (space.size() == 0) throw Error(ErrorCode::InvalidArgument, "cannot count an empty universe");
}

bool related_to_any_earlier(const ApproximationSpace& space, const Order& order,
                            std::size_t position) {
  for (std::size_t k = 0; k < position; ++k) {
    if (space.related(order[k], order[position])) return true;
  }
  return false;
}

// IPC and HPC differ only in the new-type test.
template <class NewType>
CountSequence primitive_count(const ApproximationSpace& space, const Order& order,
                              CountMethod method, NewType starts_new_type) {
  require_matching(space, order);
  CountSequence seq{method, order, {}};
  seq.tokens.reserve(order.size());
  seq.tokens.push_back(CountToken::defined(1, 1));
  for (std::size_t i = 1; i < order.size(); ++i) {
    const CountToken prev = seq.tokens.back();
    seq.tokens.push_back(starts_new_type(i) ? CountToken::defined(1, prev.two_type() + 1)
                                            : CountToken::defined(prev.alpha() + 1, prev.two_type()));
  }
  return seq;
}

template <class Undefined>
CountSequence partial_count(const ApproximationSpace& space, const Order& order,
                            CountMethod method, Undefined is_undefined) {
  require_matching(space, order);
  CountSequence seq{method, order, {}};
  seq.tokens.reserve(order.size());
  std::uint32_t max_value = 1;
  seq.tokens.push_back(CountToken::defined(1, 1));
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (is_undefined(i)) {
      seq.tokens.push_back(CountToken::undefined());
    } else {
      seq.tokens.push_back(CountToken::defined(++max_value, 1));
    }
  }
  return seq;
}

}  // namespace

std::string_view to_string(CountMethod method) noexcept {
  switch (method) {
    case CountMethod::Ipc: return "ipc";
    case CountMethod::Hpc: return "hpc";
    case CountMethod::Hppc: return "hppc";
    case CountMethod::Ippc: return "ippc";
  }
  return "?";
}

CountMethod parse_count_method(std::string_view text) {
  std::string lowered(text);
  std::transform(lowered.begin(), lowered.end(), lowered.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  for (CountMethod m : {CountMethod::Ipc, CountMethod::Hpc, CountMethod::Hppc, CountMethod::Ippc}) {
    if (lowered == to_string(m)) return m;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown counting method '" + std::string(text) + "'");
}

CountToken CountToken::defined(std::uint32_t alpha, std::uint32_t two_type) {
  if (alpha == 0 || two_type == 0) {
    throw Error(ErrorCode::InvalidArgument, "count tokens need alpha >= 1 and two_type >= 1");
  }
  return CountToken(alpha, two_type);
}

std::string CountToken::to_string() const {
  if (!is_defined()) return "*";
  return std::to_string(alpha_) + "_" + std::to_string(two_type_);
}

CountToken CountToken::parse(std::string_view text) {
  if (text == "*") return undefined();
  auto underscore = text.find('_');
  auto number = [&](std::string_view part) {
    std::uint32_t value = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (ec != std::errc() || ptr != part.data() + part.size() || value == 0) {
      throw Error(ErrorCode::Parse, "malformed count token '" + std::string(text) + "'");
    }
    return value;
  };
  if (underscore == std::string_view::npos) return defined(number(text), 1);
  return defined(number(text.substr(0, underscore)), number(text.substr(underscore + 1)));
}

Order::Order(std::vector<ElementIndex> elements) : elements_(std::move(elements)) {
  std::vector<bool> seen(elements_.size(), false);
  for (ElementIndex e : elements_) {
    if (e >= elements_.size() || seen[e]) {
      throw Error(ErrorCode::InvalidArgument, "counting order is not a bijection");
    }
    seen[e] = true;
  }
}

Order Order::identity(std::size_t n) {
  std::vector<ElementIndex> elements(n);
  for (std::size_t i = 0; i < n; ++i) elements[i] = i;
  return Order(std::move(elements));
}

Order Order::from_labels(const Universe& universe, std::span<const std::string> labels) {
  if (labels.size() != universe.size()) {
    throw Error(ErrorCode::InvalidArgument,
                "order lists " + std::to_string(labels.size()) + " elements, universe has " +
                    std::to_string(universe.size()));
  }
  std::vector<ElementIndex> elements;
  for (const auto& label : labels) elements.push_back(universe.index_of(label));
  return Order(std::move(elements));
}

std::size_t Order::position_of(ElementIndex element) const {
  auto it = std::find(elements_.begin(), elements_.end(), element);
  if (it == elements_.end()) throw Error(ErrorCode::UnknownElement, "element not in order");
  return static_cast<std::size_t>(it - elements_.begin());
}

std::vector<std::string> Order::labels(const Universe& universe) const {
  std::vector<std::string> out;
  for (ElementIndex e : elements_) out.push_back(universe.label(e));
  return out;
}

std::vector<std::string> CountSequence::rendered() const { return render(tokens); }

std::vector<std::string> render(std::span<const CountToken> tokens) {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const auto& t : tokens) out.push_back(t.to_string());
  return out;
}

CountSequence ipc(const ApproximationSpace& space, const Order& order) {
  return primitive_count(space, order, CountMethod::Ipc,
                         [&](std::size_t i) { return space.related(order[i - 1], order[i]); });
}

CountSequence hpc(const ApproximationSpace& space, const Order& order) {
  // Related to some earlier element (predecessor included) opens a new type.
  return primitive_count(space, order, CountMethod::Hpc, [&](std::size_t i) {
    return related_to_any_earlier(space, order, i);
  });
}

CountSequence hppc(const ApproximationSpace& space, const Order& order) {
  return partial_count(space, order, CountMethod::Hppc, [&](std::size_t i) {
    return related_to_any_earlier(space, order, i);
  });
}

CountSequence ippc(const ApproximationSpace& space, const Order& order) {
  return partial_count(space, order, CountMethod::Ippc,
                       [&](std::size_t i) { return space.related(order[i - 1], order[i]); });
}

CountSequence count(const ApproximationSpace& space, const Order& order, CountMethod method) {
  switch (method) {
    case CountMethod::Ipc: return ipc(space, order);
    case CountMethod::Hpc: return hpc(space, order);
    case CountMethod::Hppc: return hppc(space, order);
    case CountMethod::Ippc: return ippc(space, order);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown counting method");
}

std::optional<std::size_t> tau(const ApproximationSpace& space, const CountSequence& seq,
                               std::size_t position) {
  require_matching(space, seq.order);
  if (position >= seq.order.size()) throw Error(ErrorCode::InvalidArgument, "position out of range");
  for (std::size_t k = 0; k < seq.order.size(); ++k) {
    if (k != position && space.related(seq.order[k], seq.order[position])) return k;
  }
  return std::nullopt;
}

std::optional<std::size_t> epsilon(const ApproximationSpace& space, const CountSequence& seq,
                                   std::size_t position) {
  require_matching(space, seq.order);
  if (position >= seq.order.size()) throw Error(ErrorCode::InvalidArgument, "position out of range");
  for (std::size_t k = position; k-- > 0;) {
    if (space.related(seq.order[k], seq.order[position])) return k;
  }
  return std::nullopt;
}

std::vector<CountToken> induced(const CountSequence& seq, const ElementSet& subset) {
  if (subset.size() != seq.order.size()) {
    throw Error(ErrorCode::UniverseMismatch, "induced: subset is over a different universe");
  }
  std::vector<CountToken> out;
  for (std::size_t i = 0; i < seq.order.size(); ++i) {
    if (subset.test(seq.order[i])) out.push_back(seq.tokens[i]);
  }
  return out;
}

}  // namespace dialcount
