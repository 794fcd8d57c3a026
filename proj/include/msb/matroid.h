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

#ifndef MSB_MATROID_H_
#define MSB_MATROID_H_

#include <span>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "msb/action_set.h"
#include "msb/extended_value.h"

namespace msb {

// Feasible family: all independent sets, or only the bases.
enum class ConstraintMode { kIndependentSets, kBases };

std::string_view ToString(ConstraintMode mode);
// Accepts "independent" and "bases". Throws ConfigError otherwise.
ConstraintMode ParseConstraintMode(std::string_view name);

struct UniformKind {
  int k = 0;
};

struct PartitionKind {
  std::vector<std::vector<int>> blocks;
  std::vector<int> caps;
};

struct GraphicKind {
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;
};

// A matroid on the ground set [0, n) given by one of three concrete
// independence structures. Immutable after construction.
class Matroid {
 public:
  using Kind = std::variant<UniformKind, PartitionKind, GraphicKind>;

  // The empty matroid (n = 0).
  Matroid() = default;

  // Throw MalformedInputError when the kind's invariants do not hold.
  static Matroid Uniform(int n, int k);
  static Matroid Partition(std::vector<std::vector<int>> blocks,
                           std::vector<int> caps);
  static Matroid Graphic(int vertices, std::vector<std::pair<int, int>> edges);
  // Complete graph on `vertices` nodes with edges in lexicographic order.
  static Matroid CompleteGraph(int vertices);

  int n() const { return n_; }
  int rank() const { return rank_; }
  const Kind& kind() const { return kind_; }

  // Throws MalformedInputError if `a` contains an index >= n.
  bool IsIndependent(ActionSet a) const;
  bool IsBasis(ActionSet a) const;
  bool IsFeasible(ActionSet a, ConstraintMode mode) const;

  ActionSet GroundSet() const;

 private:
  Matroid(int n, Kind kind);
  int ComputeRank() const;

  int n_ = 0;
  Kind kind_;
  int rank_ = 0;
};

// Maximizes e_A^T weights over the feasible family with Edmonds' greedy.
//
// Items are scanned by (weight descending, index ascending). In
// kIndependentSets mode only items with weight >= 0 are considered; in kBases
// mode every item is, so the result is a basis.
ActionSet LinearMaxGreedy(const Matroid& m, std::span<const double> weights,
                          ConstraintMode mode);

// Same scan with extended weights; an unexplored-tier weight counts as +inf.
ActionSet LinearMaxGreedy(const Matroid& m,
                          std::span<const ExtendedValue> weights,
                          ConstraintMode mode);

// Every feasible set in increasing order of its bit pattern (so the empty
// set comes first in kIndependentSets mode). Throws CapacityError for n > 20.
std::vector<ActionSet> EnumerateFeasible(const Matroid& m, ConstraintMode mode);

inline constexpr int kMaxEnumerationArms = 20;

}  // namespace msb

#endif  // MSB_MATROID_H_
