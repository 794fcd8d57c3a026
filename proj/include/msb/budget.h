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

// Minimization of (L1 - F1)^+ / (L2 + F2) over a matroid by binary search on
// the sign of the Lagrangian
//
//   Lag(lambda, S)        = L1(S) -   F1(S) - lambda (L2(S) +   F2(S))
//   Lag_kappa(lambda, S)  = L1(S) - k F1(S) - lambda (L2(S) + k F2(S))
//
// using a kappa-approximate maximizer of -Lag(lambda, .) as the inner solver.

#ifndef MSB_BUDGET_H_
#define MSB_BUDGET_H_

#include <cstdint>
#include <functional>
#include <vector>

#include "msb/action_set.h"
#include "msb/matroid.h"
#include "msb/maximize.h"

namespace msb {

using RealSetFunction = std::function<double(ActionSet)>;

struct RatioInstance {
  // L1(A) = entry_price + sum cost;  L1 is normalized iff entry_price == 0.
  std::vector<double> cost;
  double entry_price = 0.0;
  // Normalized, nondecreasing, submodular, positive off the empty set.
  RealSetFunction cost_bonus;
  // L2(A) = sum reward, with nonnegative entries.
  std::vector<double> reward;
  RealSetFunction reward_bonus;
  double kappa = 2.0;
  double eta = 0.1;

  double L1(ActionSet a) const;
  double F1(ActionSet a) const;
  double L2(ActionSet a) const;
  double F2(ActionSet a) const;
};

enum class InnerSolver { kLocalSearch, kGreedyBases };

// kappa of the inner solver: 2(1 + eps) for LocalSearch, 2 for GreedyBases.
double ApproximationFactor(InnerSolver inner, double epsilon);

// Lag(lambda, a), or Lag_kappa(lambda, a) when `kappa_mode` is set.
double Lagrangian(const RatioInstance& inst, double lambda, ActionSet a,
                  bool kappa_mode);

struct BisectionStep {
  double lambda = 0.0;
  ActionSet inner_set;
  double lagrangian_kappa = 0.0;
  // True when the step raised the lower end.
  bool raised_lower = false;
};

struct RatioResult {
  ActionSet set;
  double lambda_lower = 0.0;
  double lambda_upper = 0.0;
  double delta = 0.0;
  std::int64_t iterations = 0;
  // Returned A0 without bisecting because Lag_kappa(0, A0) <= 0.
  bool early_exit = false;
  std::vector<BisectionStep> steps;
};

struct RatioOptions {
  InnerSolver inner = InnerSolver::kGreedyBases;
  LocalSearchParams local_search;
  // Start set; empty selects the inner maximizer of L2 alone.
  ActionSet initial;
};

// Returns A with  (L1(A) - (kappa+eta) F1(A))^+ / (L2(A) + kappa F2(A)) <= the
// optimal ratio over the family the inner solver works on (independent sets
// for LocalSearch, bases for GreedyBases).
//
// Throws InfeasibleError when no nonempty feasible set exists.
RatioResult RatioBinarySearch(const Matroid& m, const RatioInstance& inst,
                              const RatioOptions& options);

struct RatioOptimum {
  ActionSet set;
  double ratio = 0.0;
};

// Exact minimum of (L1 - F1)^+ / (L2 + F2) over nonempty feasible sets.
// Throws CapacityError for n > 16 and InfeasibleError if nothing qualifies.
RatioOptimum BruteForceRatio(const Matroid& m, const RatioInstance& inst,
                             ConstraintMode mode);

inline constexpr int kMaxRatioEnumerationArms = 16;

}  // namespace msb

#endif  // MSB_BUDGET_H_
