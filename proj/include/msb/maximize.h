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

// Approximate maximization of L + F over a matroid, where L is linear and F is
// normalized, nondecreasing and submodular. Both routines keep approximation
// factor 1 on L:
//
//   LocalSearch on independent sets:  L(S) + 2(1+eps) F(S) >= (L+F)(O)
//   GreedyBases on bases:             L(S) + 2 F(S)        >= (L+F)(O)

#ifndef MSB_MAXIMIZE_H_
#define MSB_MAXIMIZE_H_

#include <cstdint>
#include <functional>
#include <vector>

#include "msb/action_set.h"
#include "msb/extended_value.h"
#include "msb/matroid.h"

namespace msb {

using SetFunction = std::function<BonusValue(ActionSet)>;

// L(A) = offset + sum_{i in A} weights[i];  F given by `bonus`.
struct SplitObjective {
  std::vector<double> weights;
  double offset = 0.0;
  // Empty means F == 0.
  SetFunction bonus;
  // Caller asserts F(A) > 0 for every nonempty A; LocalSearch checks it on
  // the singletons.
  bool positivity = true;

  double Linear(ActionSet a) const;
  BonusValue Bonus(ActionSet a) const;
  ExtendedValue Value(ActionSet a) const { return Bonus(a) + Linear(a); }
};

struct LocalSearchParams {
  double epsilon = 0.1;
  // Safety cap on accepted moves; 0 selects a default derived from the
  // iteration bound of the method.
  std::int64_t max_iterations = 0;
};

struct MaximizeResult {
  ActionSet set;
  ExtendedValue value;
  // Accepted local moves (LocalSearch), greedy steps (GreedyBases) or sets
  // evaluated (BruteForceMax).
  std::int64_t iterations = 0;
  // LocalSearch only: (L+F) at the start point and after each accepted move.
  std::vector<ExtendedValue> trajectory;
};

// Starts from the greedy maximizer of L alone (or the best positive singleton
// when that is empty) and takes the first delete, add or swap that improves
// L + F by more than (eps/m) F(S), scanning deletes, then adds, then swaps in
// increasing index order. Throws IterationLimitError past the cap and
// MalformedInputError if positivity is claimed but a singleton has F = 0.
MaximizeResult LocalSearch(const Matroid& m, const SplitObjective& obj,
                           const LocalSearchParams& params = {});

// rank(m) steps, each adding the feasible element maximizing (L+F)(S + x);
// ties go to the lowest index. Always returns a basis.
MaximizeResult GreedyBases(const Matroid& m, const SplitObjective& obj);

// Exact maximizer by enumeration; ties go to the lowest bit pattern.
// Throws CapacityError for n > 20.
MaximizeResult BruteForceMax(const Matroid& m, const SplitObjective& obj,
                             ConstraintMode mode);

// Default LocalSearch move cap for the given start point.
std::int64_t DefaultMaxIterations(const Matroid& m, const SplitObjective& obj,
                                  ActionSet start, double epsilon);

}  // namespace msb

#endif  // MSB_MAXIMIZE_H_
