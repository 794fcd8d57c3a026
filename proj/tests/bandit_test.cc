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

#include <algorithm>
#include <cmath>
#include <vector>

#include "doctest.h"
#include "msb/bandit.h"
#include "msb/errors.h"
#include "msb/maximize.h"
#include "msb/rng.h"

namespace msb {
namespace {

ActionSet Set(std::initializer_list<int> xs) {
  std::vector<int> v(xs);
  return ActionSet::FromIndices(v);
}

double MeanFinal(const Environment& env, const Policy& p, std::int64_t horizon,
                 int runs) {
  double total = 0.0;
  for (int k = 0; k < runs; ++k) {
    total += RunSimulation(env, p, horizon, DeriveSeed(99, k)).cum_regret.back();
  }
  return total / runs;
}

TEST_CASE("presets") {
  const Environment b = BasesK5();
  CHECK(b.matroid.n() == 10);
  CHECK(b.matroid.rank() == 4);
  CHECK(b.mode == ConstraintMode::kBases);
  CHECK(b.mu_star[0] == doctest::Approx(1.1));
  CHECK(b.mu_star[3] == doctest::Approx(1.1));
  CHECK(b.mu_star[4] == 1.0);
  CHECK(b.sigma == std::vector<double>(10, 1.0));
  CHECK(b.OptimalAction() == Set({0, 1, 2, 3}));
  const Environment i = IndependentK5();
  CHECK(i.mode == ConstraintMode::kIndependentSets);
  CHECK(i.mu_star[2] == doctest::Approx(0.1));
  CHECK(i.mu_star[3] == doctest::Approx(-0.1));
  CHECK(i.OptimalAction() == Set({0, 1, 2}));
  CHECK(i.Gap(Set({0, 1, 2, 3})) == doctest::Approx(0.1));
}

TEST_CASE("rng is counter based and seeds differ per run") {
  CounterRng a(5);
  CounterRng b(5);
  for (int k = 0; k < 10; ++k) CHECK(a() == b());
  CHECK(a.counter() == 10);
  CHECK(DeriveSeed(1, 0) != DeriveSeed(1, 1));
  CHECK(DeriveSeed(1, 0) != DeriveSeed(2, 0));
}

TEST_CASE("first round explores the lexicographically first basis") {
  const Environment env = BasesK5();
  for (PolicyKind kind : {PolicyKind::kCucb, PolicyKind::kEscbGreedy}) {
    const ActionSet a = SelectAction(Policy::Default(kind, 4), ArmStats::Zero(10),
                                     env.matroid, env.mode);
    CHECK(a == Set({0, 1, 2, 3}));
  }
}

int RoundsToExplore(const Policy& p, const Matroid& m, ConstraintMode mode) {
  ArmStats s = ArmStats::Zero(m.n());
  const std::vector<double> x(m.n(), 0.5);
  for (int t = 1; t <= m.n(); ++t) {
    s.Observe(SelectAction(p, s, m, mode), x);
    if (std::all_of(s.counts.begin(), s.counts.end(),
                    [](std::int64_t c) { return c > 0; })) {
      return t;
    }
  }
  return -1;
}

TEST_CASE("forced exploration covers every arm") {
  // Each round plays the basis with the most unexplored arms. That meets
  // ceil(n/m) on uniform and partition matroids; on K5 the myopic choice
  // leaves a triangle after round two, so a fourth round is needed. Only the
  // r = inf policies have a strict unexplored tier; under r = 1 an unexplored
  // arm can tie with an explored one sitting at the cap.
  const Matroid uniform = Matroid::Uniform(10, 4);
  const Matroid partition =
      Matroid::Partition({{0, 1, 2}, {3, 4, 5}, {6, 7, 8, 9}}, {1, 1, 2});
  for (PolicyKind kind : {PolicyKind::kCucb, PolicyKind::kEscbGreedy}) {
    INFO(ToString(kind));
    const Policy p = Policy::Default(kind, 4);
    CHECK(RoundsToExplore(p, uniform, ConstraintMode::kBases) == 3);
    CHECK(RoundsToExplore(p, partition, ConstraintMode::kBases) == 3);
    CHECK(RoundsToExplore(p, StarFirstK5(), ConstraintMode::kBases) == 4);
  }
}

TEST_CASE("cucb with equal counts and exact means picks the optimum") {
  const Environment env = BasesK5();
  ArmStats s = ArmStats::Zero(10);
  s.t = 500;
  s.counts.assign(10, 50);
  s.means = env.mu_star;
  CHECK(SelectAction(Policy::Default(PolicyKind::kCucb, 4), s, env.matroid,
                     env.mode) == env.OptimalAction());
}

TEST_CASE("zero bonus and exact means give zero gap") {
  for (const Environment& env : {BasesK5(), IndependentK5()}) {
    ArmStats s = ArmStats::Zero(10);
    s.t = 100;
    for (int i = 0; i < 10; ++i) s.counts[i] = 1 + i;
    s.means = env.mu_star;
    for (PolicyKind kind : {PolicyKind::kCucb, PolicyKind::kEscbGreedy,
                            PolicyKind::kEscbLocalSearch}) {
      Policy p = Policy::Default(kind, 4);
      try {
        p.CheckCompatible(env.mode);
      } catch (const ConfigError&) {
        continue;
      }
      p.bonus.scale = {ScaleKind::kConstant, 0.0};
      CHECK(env.Gap(SelectAction(p, s, env.matroid, env.mode)) == 0.0);
    }
  }
}

TEST_CASE("escb greedy index within the greedy guarantee") {
  const Matroid u = Matroid::Uniform(3, 2);
  ArmStats s = ArmStats::Zero(3);
  s.t = 40;
  s.counts = {3, 20, 8};
  s.means = {0.4, 0.7, 0.5};
  Policy p = Policy::Default(PolicyKind::kEscbGreedy, 2);
  const ActionSet a = SelectAction(p, s, u, ConstraintMode::kBases);
  SplitObjective obj{s.means, 0.0,
                     [&](ActionSet x) { return ComputeBonus(p.bonus, s, x); }, true};
  const MaximizeResult best = BruteForceMax(u, obj, ConstraintMode::kBases);
  CHECK(u.IsBasis(a));
  CHECK(obj.Linear(a) + 2.0 * obj.Bonus(a).value >= best.value.value - 1e-12);
}

TEST_CASE("policy compatibility") {
  CHECK_THROWS_AS(Policy::Default(PolicyKind::kEscbGreedy, 4)
                      .CheckCompatible(ConstraintMode::kIndependentSets),
                  ConfigError);
  CHECK_THROWS_AS(Policy::Default(PolicyKind::kEscbLocalSearch, 4)
                      .CheckCompatible(ConstraintMode::kBases),
                  ConfigError);
  Policy cucb = Policy::Default(PolicyKind::kCucb, 4);
  cucb.bonus = BonusSpec::Escb(4);
  CHECK_THROWS_AS(cucb.CheckCompatible(ConstraintMode::kBases), ConfigError);
  CHECK(ParsePolicyKind("escb_localsearch") == PolicyKind::kEscbLocalSearch);
  CHECK(ToString(PolicyKind::kBudgetedRatio) == "budgeted_ratio");
  CHECK_THROWS_AS(ParsePolicyKind("thompson"), ConfigError);
}

TEST_CASE("simulation is deterministic and monotone") {
  const Environment env = BasesK5();
  const Policy p = Policy::Default(PolicyKind::kEscbGreedy, 4);
  const RegretTrace a = RunSimulation(env, p, 3000, 42);
  const RegretTrace b = RunSimulation(env, p, 3000, 42);
  CHECK(a.cum_regret == b.cum_regret);
  CHECK(a.checkpoints == DefaultCheckpoints(3000));
  CHECK(a.checkpoints.back() == 3000);
  for (std::size_t k = 0; k < a.cum_regret.size(); ++k) {
    CHECK(a.cum_regret[k] >= 0.0);
    if (k > 0) CHECK(a.cum_regret[k] >= a.cum_regret[k - 1]);
  }
}

TEST_CASE("zero gap environment has zero regret") {
  Environment env = BasesK5(0.0);
  const RegretTrace t =
      RunSimulation(env, Policy::Default(PolicyKind::kCucb, 4), 500, 1);
  CHECK(t.cum_regret.back() == 0.0);
}

TEST_CASE("default checkpoints") {
  const auto c = DefaultCheckpoints(100000);
  CHECK(c.front() == 10);
  CHECK(c.back() == 100000);
  CHECK(c.size() <= 31);
  CHECK(std::is_sorted(c.begin(), c.end()));
  CHECK(DefaultCheckpoints(5) == std::vector<std::int64_t>{5});
}

TEST_CASE("kl policy clips unbounded observations") {
  const Environment env = BasesK5();
  const RegretTrace t =
      RunSimulation(env, Policy::Default(PolicyKind::kEscbKlGreedy, 4), 200, 3);
  CHECK(t.clipped > 0);
  const RegretTrace u =
      RunSimulation(env, Policy::Default(PolicyKind::kEscbGreedy, 4), 200, 3);
  CHECK(u.clipped == 0);
}

TEST_CASE("regret per round shrinks with the horizon") {
  const Environment env = BasesK5();
  for (PolicyKind kind : {PolicyKind::kCucb, PolicyKind::kEscbGreedy}) {
    const Policy p = Policy::Default(kind, 4);
    const double early = MeanFinal(env, p, 2000, 20) / 2000.0;
    const double late = MeanFinal(env, p, 20000, 20) / 20000.0;
    INFO(ToString(kind));
    CHECK(late < early);
  }
}

Environment Deterministic(Matroid m, std::vector<double> reward,
                          std::vector<double> cost) {
  Environment env;
  const int n = m.n();
  env.matroid = std::move(m);
  env.mode = ConstraintMode::kBases;
  env.mu_star = std::move(reward);
  env.sigma.assign(n, 0.0);
  env.costs = CostModel{std::move(cost), std::vector<double>(n, 0.0)};
  return env;
}

TEST_CASE("budgeted loop stops before overdrawing") {
  const Policy p = Policy::Default(PolicyKind::kBudgetedRatio, 1);
  const Environment one = Deterministic(Matroid::Uniform(1, 1), {2.0}, {3.0});
  const BudgetedResult r = RunBudgeted(one, p, 10.0, 7);
  CHECK(r.rounds_played == 3);
  CHECK(r.total_reward == doctest::Approx(6.0));
  CHECK(r.total_cost == doctest::Approx(9.0));
  CHECK(RunBudgeted(one, p, 2.5, 7).rounds_played == 0);
  CHECK(RunBudgeted(one, p, 0.0, 7).rounds_played == 0);
  CHECK(RunBudgeted(one, p, -1.0, 7).rounds_played == 0);
}

TEST_CASE("budgeted loop converges to the cheapest ratio") {
  // Arm 0: ratio 1.0; arm 1: more reward but ratio 1.33.
  const Environment env =
      Deterministic(Matroid::Uniform(2, 1), {1.0, 1.5}, {1.0, 2.0});
  const Policy p = Policy::Default(PolicyKind::kBudgetedRatio, 1);
  const BudgetedResult r = RunBudgeted(env, p, 3000.0, 11);
  INFO("plays " << r.play_counts[0] << " / " << r.play_counts[1]);
  CHECK(r.play_counts[0] > 9 * r.play_counts[1]);
  CHECK(r.total_cost <= 3000.0);
}

TEST_CASE("budgeted loop needs costs and the right policy") {
  const Environment env = BasesK5();
  CHECK_THROWS_AS(RunBudgeted(env, Policy::Default(PolicyKind::kBudgetedRatio, 4),
                              10.0, 1),
                  ConfigError);
  Environment priced = BasesK5();
  priced.costs = CostModel{std::vector<double>(10, 1.0), std::vector<double>(10, 0.1)};
  CHECK_THROWS_AS(RunBudgeted(priced, Policy::Default(PolicyKind::kCucb, 4), 10.0, 1),
                  ConfigError);
  const BudgetedResult r =
      RunBudgeted(priced, Policy::Default(PolicyKind::kBudgetedRatio, 4), 200.0, 1);
  CHECK(r.rounds_played > 10);
  CHECK(r.total_cost <= 200.0);
}

TEST_CASE("environment validation") {
  Environment env = BasesK5();
  env.mu_star.pop_back();
  CHECK_THROWS_AS(env.Validate(), MalformedInputError);
  Environment neg = BasesK5();
  neg.sigma[0] = -1.0;
  CHECK_THROWS_AS(neg.Validate(), MalformedInputError);
}

}  // namespace
}  // namespace msb
