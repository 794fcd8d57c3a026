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

#ifndef MSB_ACTION_SET_H_
#define MSB_ACTION_SET_H_

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace msb {

// Largest ground set an ActionSet can index.
inline constexpr int kMaxArms = 64;

// A subset of the arms [0, n) stored as a 64-bit incidence vector.
class ActionSet {
 public:
  constexpr ActionSet() = default;
  constexpr explicit ActionSet(std::uint64_t bits) : bits_(bits) {}

  // Throws MalformedInputError on indices outside [0, kMaxArms).
  static ActionSet FromIndices(std::span<const int> indices);
  static ActionSet Singleton(int i);

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool Contains(int i) const { return (bits_ >> i) & 1u; }

  constexpr ActionSet With(int i) const {
    return ActionSet(bits_ | (std::uint64_t{1} << i));
  }
  constexpr ActionSet Without(int i) const {
    return ActionSet(bits_ & ~(std::uint64_t{1} << i));
  }
  constexpr bool IsSubsetOf(ActionSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  // Highest element + 1, or 0 for the empty set.
  constexpr int Span() const { return 64 - std::countl_zero(bits_); }

  // Sorted ascending.
  std::vector<int> ToIndices() const;
  std::string ToString() const;

  template <typename Fn>
  void ForEach(Fn&& fn) const {
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
      fn(std::countr_zero(b));
    }
  }

  friend constexpr ActionSet operator|(ActionSet a, ActionSet b) {
    return ActionSet(a.bits_ | b.bits_);
  }
  friend constexpr ActionSet operator&(ActionSet a, ActionSet b) {
    return ActionSet(a.bits_ & b.bits_);
  }
  // Set difference.
  friend constexpr ActionSet operator-(ActionSet a, ActionSet b) {
    return ActionSet(a.bits_ & ~b.bits_);
  }
  friend constexpr bool operator==(ActionSet, ActionSet) = default;

 private:
  std::uint64_t bits_ = 0;
};

// Sum of weights over the elements of `a`.
double SumOver(std::span<const double> weights, ActionSet a);

}  // namespace msb

#endif  // MSB_ACTION_SET_H_
