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

#include "msb/budget.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "msb/errors.h"

namespace msb {
namespace {

constexpr std::int64_t kMaxRatioIterations = 2000;

ConstraintMode ModeFor(InnerSolver inner) {
  return inner == InnerSolver::kGreedyBases ? ConstraintMode::kBases
                                            : ConstraintMode::kIndependentSets;
}

// Maximizes  sum_i weights[i] + offset + bonus  with the inner routine.
ActionSet RunInner(const Matroid& m, const RatioOptions& options,
                   std::vector<double> weights, double offset,
                   RealSetFunction bonus) {
  SplitObjective obj;
  obj.weights = std::move(weights);
  obj.offset = offset;
  obj.positivity = static_cast<bool>(bonus);
  if (bonus) {
    obj.bonus = [bonus = std::move(bonus)](ActionSet a) {
      return BonusValue{0, bonus(a)};
    };
  }
  if (options.inner == InnerSolver::kGreedyBases) {
    return GreedyBases(m, obj).set;
  }
  return LocalSearch(m, obj, options.local_search).set;
}

void CheckInstance(const Matroid& m, const RatioInstance& inst) {
  if (static_cast<int>(inst.cost.size()) != m.n() ||
      static_cast<int>(inst.reward.size()) != m.n()) {
    throw MalformedInputError("ratio instance cost/reward length must equal n=" +
                              std::to_string(m.n()));
  }
  if (!(inst.kappa >= 1.0)) {
    throw MalformedInputError("kappa must be >= 1");
  }
  if (!(inst.eta > 0.0)) throw MalformedInputError("eta must be > 0");
  if (inst.entry_price < 0.0) {
    throw MalformedInputError("entry price L1(empty) must be >= 0");
  }
  for (double r : inst.reward) {
    if (r < 0.0) throw MalformedInputError("rewards L2 must be nonnegative");
  }
}

// Some nonempty feasible set, preferring `preferred`.
ActionSet NonemptyFeasible(const Matroid& m, ConstraintMode mode,
                           ActionSet preferred) {
  if (!preferred.empty() && m.IsFeasible(preferred, mode)) return preferred;
  if (m.rank() == 0) {
    throw InfeasibleError("the matroid has rank 0: no nonempty feasible set");
  }
  if (mode == ConstraintMode::kBases) {
    const std::vector<double> zeros(m.n(), 0.0);
    return LinearMaxGreedy(m, zeros, ConstraintMode::kBases);
  }
  for (int x = 0; x < m.n(); ++x) {
    if (m.IsIndependent(ActionSet::Singleton(x))) {
      return ActionSet::Singleton(x);
    }
  }
  throw InfeasibleError("no independent singleton exists");
}

}  // namespace

double RatioInstance::L1(ActionSet a) const {
  return entry_price + SumOver(cost, a);
}
double RatioInstance::F1(ActionSet a) const {
  return cost_bonus && !a.empty() ? cost_bonus(a) : 0.0;
}
double RatioInstance::L2(ActionSet a) const { return SumOver(reward, a); }
double RatioInstance::F2(ActionSet a) const {
  return reward_bonus && !a.empty() ? reward_bonus(a) : 0.0;
}

double ApproximationFactor(InnerSolver inner, double epsilon) {
  return inner == InnerSolver::kGreedyBases ? 2.0 : 2.0 * (1.0 + epsilon);
}

double Lagrangian(const RatioInstance& inst, double lambda, ActionSet a,
                  bool kappa_mode) {
  const double k = kappa_mode ? inst.kappa : 1.0;
  return inst.L1(a) - k * inst.F1(a) - lambda * (inst.L2(a) + k * inst.F2(a));
}

RatioResult RatioBinarySearch(const Matroid& m, const RatioInstance& inst,
                              const RatioOptions& options) {
  CheckInstance(m, inst);
  const ConstraintMode mode = ModeFor(options.inner);
  const double kappa = inst.kappa;

  // Step size from the largest achievable L2 + kappa^2 F2.
  const ActionSet b = RunInner(
      m, options, inst.reward, 0.0,
      inst.reward_bonus ? RealSetFunction([&inst, kappa](ActionSet a) {
        return kappa * inst.F2(a);
      })
                        : RealSetFunction());
  double min_singleton = std::numeric_limits<double>::infinity();
  for (int x = 0; x < m.n(); ++x) {
    const ActionSet single = ActionSet::Singleton(x);
    if (m.IsIndependent(single)) {
      min_singleton = std::min(min_singleton, inst.F1(single));
    }
  }
  const double denominator = inst.L2(b) + kappa * kappa * inst.F2(b);
  RatioResult result;
  result.delta = inst.eta * min_singleton / denominator;
  if (!(result.delta > 0.0) || std::isinf(result.delta)) {
    std::ostringstream msg;
    msg << "bisection step delta=" << result.delta
        << " is not a positive finite number (min singleton F1="
        << min_singleton << ", L2(B)+kappa^2 F2(B)=" << denominator << ")";
    throw MalformedInputError(msg.str());
  }

  ActionSet a = options.initial;
  if (a.empty()) {
    a = RunInner(m, options, inst.reward, 0.0, RealSetFunction());
  }
  a = NonemptyFeasible(m, mode, a);

  if (Lagrangian(inst, 0.0, a, /*kappa_mode=*/true) <= 0.0) {
    result.set = a;
    result.early_exit = true;
    return result;
  }

  double lower = 0.0;
  double upper = (inst.L1(a) - inst.F1(a)) / (inst.L2(a) + inst.F2(a));
  while (upper - lower >= result.delta) {
    const double lambda = 0.5 * (lower + upper);
    std::vector<double> weights(m.n());
    for (int i = 0; i < m.n(); ++i) {
      weights[i] = lambda * inst.reward[i] - inst.cost[i];
    }
    RealSetFunction bonus = [&inst, lambda](ActionSet s) {
      return inst.F1(s) + lambda * inst.F2(s);
    };
    const ActionSet s =
        RunInner(m, options, std::move(weights), -inst.entry_price, bonus);
    BisectionStep step;
    step.lambda = lambda;
    step.inner_set = s;
    step.lagrangian_kappa = Lagrangian(inst, lambda, s, /*kappa_mode=*/true);
    if (step.lagrangian_kappa >= 0.0) {
      lower = lambda;
      step.raised_lower = true;
    } else {
      upper = lambda;
      a = s;
    }
    result.steps.push_back(step);
    if (++result.iterations > kMaxRatioIterations) {
      throw NumericalError("ratio bisection exceeded " +
                           std::to_string(kMaxRatioIterations) + " steps");
    }
  }
  result.set = a;
  result.lambda_lower = lower;
  result.lambda_upper = upper;
  return result;
}

RatioOptimum BruteForceRatio(const Matroid& m, const RatioInstance& inst,
                             ConstraintMode mode) {
  if (m.n() > kMaxRatioEnumerationArms) {
    throw CapacityError("ratio enumeration limited to n <= 16, got n=" +
                        std::to_string(m.n()));
  }
  RatioOptimum best;
  bool found = false;
  for (ActionSet a : EnumerateFeasible(m, mode)) {
    if (a.empty()) continue;
    const double denominator = inst.L2(a) + inst.F2(a);
    if (!(denominator > 0.0)) continue;
    const double ratio = std::max(0.0, inst.L1(a) - inst.F1(a)) / denominator;
    if (!found || ratio < best.ratio) {
      best = {a, ratio};
      found = true;
    }
  }
  if (!found) {
    throw InfeasibleError("no nonempty feasible set with positive reward");
  }
  return best;
}

}  // namespace msb
