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

#include "dialcount/error.hpp"

#include <cmath>
#include <string>

#include "dialcount/rational.hpp"

namespace dialcount {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "invalid_argument";
    case ErrorCode::Parse: return "parse_error";
    case ErrorCode::Io: return "io_error";
    case ErrorCode::NotAnEquivalence: return "not_an_equivalence";
    case ErrorCode::UnknownElement: return "unknown_element";
    case ErrorCode::UnknownAttribute: return "unknown_attribute";
    case ErrorCode::UnknownRelation: return "unknown_relation";
    case ErrorCode::UniverseMismatch: return "universe_mismatch";
    case ErrorCode::BudgetExceeded: return "budget_exceeded";
    case ErrorCode::RuleViolation: return "rule_violation";
    case ErrorCode::NotAPreorder: return "not_a_preorder";
  }
  return "unknown";
}

std::string to_string(const Rational& value) {
  return numerator(value).str() + "/" + denominator(value).str();
}

Rational parse_rational(std::string_view text) {
  auto fail = [&] {
    return Error(ErrorCode::Parse, "not a rational number: '" + std::string(text) + "'");
  };
  if (text.empty()) throw fail();
  using boost::multiprecision::cpp_int;
  auto parse_int = [&](std::string_view digits) {
    std::string_view body = digits;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
    if (body.empty() || body.find_first_not_of("0123456789") != std::string_view::npos) {
      throw fail();
    }
    return cpp_int(std::string(digits.front() == '+' ? digits.substr(1) : digits));
  };
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    cpp_int num = parse_int(text.substr(0, slash));
    cpp_int den = parse_int(text.substr(slash + 1));
    if (den == 0) throw fail();
    return Rational(num, den);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    if (frac.empty() || frac.find_first_not_of("0123456789") != std::string_view::npos) {
      throw fail();
    }
    bool negative = !whole.empty() && whole.front() == '-';
    std::string digits(whole);
    if (digits.empty() || digits == "-" || digits == "+") digits += "0";
    cpp_int int_part = parse_int(digits);
    cpp_int scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    Rational frac_part(cpp_int(std::string(frac)), scale);
    return negative ? Rational(int_part) - frac_part : Rational(int_part) + frac_part;
  }
  return Rational(parse_int(text));
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

}  // namespace dialcount
