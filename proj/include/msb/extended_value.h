// Copyright 2026 The Authors.
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

#ifndef MSB_EXTENDED_VALUE_H_
#define MSB_EXTENDED_VALUE_H_

#include <compare>
#include <limits>

namespace msb {

// An extended real of the form  unexplored * (+inf) + value.
//
// Arms that were never played have an unbounded confidence width when the
// reward range is unbounded. Rather than carrying floating-point infinities
// through sums and differences, every objective evaluation counts those arms
// separately and orders values lexicographically on (unexplored, value).
struct ExtendedValue {
  int unexplored = 0;
  double value = 0.0;

  constexpr bool finite() const { return unexplored == 0; }
  // +inf when any unbounded arm is present.
  constexpr double ToDouble() const {
    return unexplored > 0 ? std::numeric_limits<double>::infinity() : value;
  }

  friend constexpr std::partial_ordering operator<=>(const ExtendedValue& a,
                                                     const ExtendedValue& b) {
    if (a.unexplored != b.unexplored) return a.unexplored <=> b.unexplored;
    return a.value <=> b.value;
  }
  friend constexpr bool operator==(const ExtendedValue& a,
                                   const ExtendedValue& b) {
    return a.unexplored == b.unexplored && a.value == b.value;
  }
  friend constexpr ExtendedValue operator+(ExtendedValue a, ExtendedValue b) {
    return {a.unexplored + b.unexplored, a.value + b.value};
  }
  friend constexpr ExtendedValue operator+(ExtendedValue a, double b) {
    return {a.unexplored, a.value + b};
  }
  friend constexpr ExtendedValue operator*(double c, ExtendedValue a) {
    return {a.unexplored, c * a.value};
  }
};

// Exploration bonus of a set; `unexplored` counts arms with unbounded width.
using BonusValue = ExtendedValue;

}  // namespace msb

#endif  // MSB_EXTENDED_VALUE_H_
