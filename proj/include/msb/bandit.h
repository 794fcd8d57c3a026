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

#ifndef MSB_BANDIT_H_
#define MSB_BANDIT_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "msb/action_set.h"
#include "msb/bonus.h"
#include "msb/matroid.h"

namespace msb {

// Independent Gaussian costs per arm for the budgeted setting.
struct CostModel {
  std::vector<double> mean;
  std::vector<double> sigma;
};

// Stochastic semi-bandit with independent Gaussian arms.
struct Environment {
  Matroid matroid;
  ConstraintMode mode = ConstraintMode::kBases;
  std::vector<double> mu_star;
  std::vector<double> sigma;
  std::optional<CostModel> costs;

  // Throws MalformedInputError on size mismatches or negative noise.
  void Validate() const;
  ActionSet OptimalAction() const;
  // (e_{A*} - e_A)^T mu_star, clamped at 0.
  double Gap(ActionSet a) const;
};

// Complete graph on five vertices with the star around vertex 0 first:
// edges 0..3 are (0,1),(0,2),(0,3),(0,4), the rest in lexicographic order.
Matroid StarFirstK5();

// mu_i = 1 + gap * 1{i < m} on the bases of StarFirstK5, unit noise.
Environment BasesK5(double gap = 0.1);
// mu_i = gap * (2 * 1{i < m-1} - 1) on the independent sets, unit noise.
Environment IndependentK5(double gap = 0.1);

enum class PolicyKind {
  kCucb,
  kEscbGreedy,
  kEscbLocalSearch,
  kEscbKlGreedy,
  kBudgetedRatio,
};

std::string_view ToString(PolicyKind kind);
// "cucb", "escb_greedy", "escb_localsearch", "escb_kl_greedy",
// "budgeted_ratio". Throws ConfigError otherwise.
PolicyKind ParsePolicyKind(std::string_view name);

struct Policy {
  PolicyKind kind = PolicyKind::kCucb;
  BonusSpec bonus;
  // LocalSearch threshold (ESCB_LocalSearch, and the budgeted inner solver
  // on independent sets).
  double epsilon = 0.1;
  // Budgeted only; kappa <= 0 selects the inner solver's factor.
  double kappa = 0.0;
  double eta = 0.1;

  // Table defaults: CUCB with 1.5 log t, ESCB variants with log t + m.
  static Policy Default(PolicyKind kind, int m);

  // Throws ConfigError for Greedy policies on independent sets, LocalSearch
  // on bases, or a bonus family the policy cannot use.
  void CheckCompatible(ConstraintMode mode) const;
};

// The action the policy plays this round: the maximizer of its index.
// BudgetedRatio needs `cost_stats`; all other policies ignore it.
ActionSet SelectAction(const Policy& policy, const ArmStats& stats,
                       const Matroid& m, ConstraintMode mode,
                       const ArmStats* cost_stats = nullptr);

struct RegretTrace {
  std::vector<std::int64_t> checkpoints;
  std::vector<double> cum_regret;
  std::uint64_t seed = 0;
  // Observations clipped into [-1, 1] (KL policies only).
  std::int64_t clipped = 0;
};

// 30 log-spaced rounds from 10 to `horizon`, deduplicated, plus `horizon`.
std::vector<std::int64_t> DefaultCheckpoints(std::int64_t horizon,
                                             int count = 30);

// Plays `horizon` rounds with semi-bandit feedback. Every round draws the full
// reward vector from the stream seeded by `seed`, so runs with equal seeds see
// the same rewards whatever the policy. Empty `checkpoints` selects
// DefaultCheckpoints.
RegretTrace RunSimulation(const Environment& env, const Policy& policy,
                          std::int64_t horizon, std::uint64_t seed,
                          std::span<const std::int64_t> checkpoints = {});

struct BudgetedResult {
  double total_reward = 0.0;
  double total_cost = 0.0;
  std::int64_t rounds_played = 0;
  std::vector<std::int64_t> play_counts;
};

// Plays until the next selected action's realized cost exceeds the remaining
// budget. Until every arm has been observed it plays the feasible set with the
// most unobserved arms; afterwards it minimizes the optimistic cost/reward
// ratio with RatioBinarySearch.
BudgetedResult RunBudgeted(const Environment& env, const Policy& policy,
                           double budget, std::uint64_t seed,
                           std::int64_t max_rounds = 10'000'000);

}  // namespace msb

#endif  // MSB_BANDIT_H_
