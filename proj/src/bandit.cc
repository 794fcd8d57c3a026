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

#include "msb/bandit.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "msb/budget.h"
#include "msb/errors.h"
#include "msb/maximize.h"
#include "msb/rng.h"

namespace msb {
namespace {

// F for the ESCB policies; bounded regions get the 1/N^2 positivity term.
SetFunction BonusFunction(const BonusSpec& spec, const ArmStats& stats) {
  const bool augment = !std::isinf(spec.r);
  return [&spec, &stats, augment](ActionSet a) {
    BonusValue f = ComputeBonus(spec, stats, a);
    if (augment) f.value += PositivityTerm(stats, a);
    return f;
  };
}

double RealBonus(const BonusSpec& spec, const ArmStats& stats, ActionSet a) {
  BonusValue f = ComputeBonus(spec, stats, a);
  if (!std::isinf(spec.r)) f.value += PositivityTerm(stats, a);
  return f.value;
}

ActionSet MostUnexplored(const ArmStats& stats, const Matroid& m,
                         ConstraintMode mode) {
  std::vector<double> w(m.n());
  for (int i = 0; i < m.n(); ++i) {
    w[i] = stats.counts[i] == 0 ? 1.0
                                : (mode == ConstraintMode::kBases ? 0.0 : -1.0);
  }
  return LinearMaxGreedy(m, w, mode);
}

ActionSet SelectBudgeted(const Policy& policy, const ArmStats& rewards,
                         const ArmStats& costs, const Matroid& m,
                         ConstraintMode mode) {
  const bool any_unexplored =
      std::any_of(rewards.counts.begin(), rewards.counts.end(),
                  [](std::int64_t c) { return c == 0; });
  if (any_unexplored) return MostUnexplored(rewards, m, mode);

  RatioOptions options;
  options.inner = mode == ConstraintMode::kBases ? InnerSolver::kGreedyBases
                                                 : InnerSolver::kLocalSearch;
  options.local_search.epsilon = policy.epsilon;

  RatioInstance inst;
  inst.cost = costs.means;
  inst.reward.resize(m.n());
  for (int i = 0; i < m.n(); ++i) {
    inst.reward[i] = std::max(0.0, rewards.means[i]);
  }
  const BonusSpec& spec = policy.bonus;
  inst.cost_bonus = [&spec, &costs](ActionSet a) {
    return RealBonus(spec, costs, a);
  };
  inst.reward_bonus = [&spec, &rewards](ActionSet a) {
    return RealBonus(spec, rewards, a);
  };
  inst.kappa = policy.kappa > 0.0
                   ? policy.kappa
                   : ApproximationFactor(options.inner, policy.epsilon);
  inst.eta = policy.eta;
  return RatioBinarySearch(m, inst, options).set;
}

void DrawGaussian(std::span<const double> mean, std::span<const double> sigma,
                  CounterRng& rng, std::normal_distribution<double>& normal,
                  std::span<double> out) {
  for (std::size_t i = 0; i < mean.size(); ++i) {
    out[i] = mean[i] + sigma[i] * normal(rng);
  }
}

}  // namespace

void Environment::Validate() const {
  const auto n = static_cast<std::size_t>(matroid.n());
  if (mu_star.size() != n) {
    throw MalformedInputError("mu_star has length " +
                              std::to_string(mu_star.size()) + ", expected " +
                              std::to_string(n));
  }
  if (sigma.size() != n) {
    throw MalformedInputError("noise sigma has length " +
                              std::to_string(sigma.size()) + ", expected " +
                              std::to_string(n));
  }
  for (double s : sigma) {
    if (!(s >= 0.0)) throw MalformedInputError("noise sigma must be >= 0");
  }
  if (costs) {
    if (costs->mean.size() != n || costs->sigma.size() != n) {
      throw MalformedInputError("cost model length must equal n");
    }
    for (double c : costs->mean) {
      if (!(c > 0.0)) throw MalformedInputError("mean costs must be > 0");
    }
  }
}

ActionSet Environment::OptimalAction() const {
  return LinearMaxGreedy(matroid, mu_star, mode);
}

double Environment::Gap(ActionSet a) const {
  return std::max(0.0, SumOver(mu_star, OptimalAction()) - SumOver(mu_star, a));
}

Matroid StarFirstK5() {
  std::vector<std::pair<int, int>> edges = {{0, 1}, {0, 2}, {0, 3}, {0, 4}};
  for (int u = 1; u < 5; ++u) {
    for (int v = u + 1; v < 5; ++v) edges.emplace_back(u, v);
  }
  return Matroid::Graphic(5, std::move(edges));
}

Environment BasesK5(double gap) {
  Environment env;
  env.matroid = StarFirstK5();
  env.mode = ConstraintMode::kBases;
  const int n = env.matroid.n();
  const int m = env.matroid.rank();
  env.mu_star.resize(n);
  for (int i = 0; i < n; ++i) env.mu_star[i] = 1.0 + (i < m ? gap : 0.0);
  env.sigma.assign(n, 1.0);
  return env;
}

Environment IndependentK5(double gap) {
  Environment env;
  env.matroid = StarFirstK5();
  env.mode = ConstraintMode::kIndependentSets;
  const int n = env.matroid.n();
  const int m = env.matroid.rank();
  env.mu_star.resize(n);
  for (int i = 0; i < n; ++i) env.mu_star[i] = gap * (i < m - 1 ? 1.0 : -1.0);
  env.sigma.assign(n, 1.0);
  return env;
}

std::string_view ToString(PolicyKind kind) {
  switch (kind) {
    case PolicyKind::kCucb:
      return "cucb";
    case PolicyKind::kEscbGreedy:
      return "escb_greedy";
    case PolicyKind::kEscbLocalSearch:
      return "escb_localsearch";
    case PolicyKind::kEscbKlGreedy:
      return "escb_kl_greedy";
    case PolicyKind::kBudgetedRatio:
      return "budgeted_ratio";
  }
  return "?";
}

PolicyKind ParsePolicyKind(std::string_view name) {
  for (PolicyKind k :
       {PolicyKind::kCucb, PolicyKind::kEscbGreedy, PolicyKind::kEscbLocalSearch,
        PolicyKind::kEscbKlGreedy, PolicyKind::kBudgetedRatio}) {
    if (name == ToString(k)) return k;
  }
  throw ConfigError("unknown algorithm '" + std::string(name) + "'");
}

Policy Policy::Default(PolicyKind kind, int m) {
  Policy p;
  p.kind = kind;
  switch (kind) {
    case PolicyKind::kCucb:
      p.bonus = BonusSpec::Cucb();
      break;
    case PolicyKind::kEscbKlGreedy:
      p.bonus = BonusSpec::EscbKl(m);
      break;
    default:
      p.bonus = BonusSpec::Escb(m);
      break;
  }
  return p;
}

void Policy::CheckCompatible(ConstraintMode mode) const {
  bonus.Validate();
  const std::string name(ToString(kind));
  switch (kind) {
    case PolicyKind::kCucb:
      if (bonus.p != Norm::kInfinity) {
        throw ConfigError("cucb needs a p = inf bonus");
      }
      return;
    case PolicyKind::kEscbGreedy:
    case PolicyKind::kEscbKlGreedy:
      if (mode != ConstraintMode::kBases) {
        throw ConfigError(name + " (Greedy) requires the bases constraint");
      }
      break;
    case PolicyKind::kEscbLocalSearch:
      if (mode != ConstraintMode::kIndependentSets) {
        throw ConfigError(name +
                          " (LocalSearch) requires the independent constraint");
      }
      if (!(epsilon > 0.0)) throw ConfigError("epsilon must be > 0");
      break;
    case PolicyKind::kBudgetedRatio:
      if (!(eta > 0.0)) throw ConfigError("eta must be > 0");
      if (!(epsilon > 0.0)) throw ConfigError("epsilon must be > 0");
      break;
  }
  if (bonus.p != Norm::kOne) {
    throw ConfigError(name + " needs a p = 1 bonus");
  }
  if (kind == PolicyKind::kEscbKlGreedy && bonus.family != Family::kKl) {
    throw ConfigError("escb_kl_greedy needs the escb_kl family");
  }
}

ActionSet SelectAction(const Policy& policy, const ArmStats& stats,
                       const Matroid& m, ConstraintMode mode,
                       const ArmStats* cost_stats) {
  policy.CheckCompatible(mode);
  if (stats.n() != m.n()) {
    throw MalformedInputError("stats track " + std::to_string(stats.n()) +
                              " arms, matroid has " + std::to_string(m.n()));
  }
  switch (policy.kind) {
    case PolicyKind::kCucb: {
      const std::vector<ExtendedValue> index = PerArmIndex(policy.bonus, stats);
      return LinearMaxGreedy(m, index, mode);
    }
    case PolicyKind::kEscbGreedy:
    case PolicyKind::kEscbKlGreedy: {
      SplitObjective obj{stats.means, 0.0, BonusFunction(policy.bonus, stats),
                         true};
      return GreedyBases(m, obj).set;
    }
    case PolicyKind::kEscbLocalSearch: {
      const double f = policy.bonus.scale.Evaluate(stats.CurrentRound(),
                                                   policy.bonus.m, stats.n());
      SplitObjective obj{stats.means, 0.0, BonusFunction(policy.bonus, stats),
                         f > 0.0};
      return LocalSearch(m, obj, {policy.epsilon, 0}).set;
    }
    case PolicyKind::kBudgetedRatio:
      if (cost_stats == nullptr) {
        throw ConfigError("budgeted_ratio needs cost statistics");
      }
      return SelectBudgeted(policy, stats, *cost_stats, m, mode);
  }
  return {};
}

std::vector<std::int64_t> DefaultCheckpoints(std::int64_t horizon, int count) {
  std::vector<std::int64_t> out;
  if (horizon >= 10 && count > 1) {
    const double lo = std::log(10.0);
    const double hi = std::log(static_cast<double>(horizon));
    for (int k = 0; k < count; ++k) {
      const double x = std::exp(lo + (hi - lo) * k / (count - 1));
      const auto round = std::clamp<std::int64_t>(std::llround(x), 1, horizon);
      if (out.empty() || round > out.back()) out.push_back(round);
    }
  }
  if (horizon >= 1 && (out.empty() || out.back() != horizon)) {
    out.push_back(horizon);
  }
  return out;
}

RegretTrace RunSimulation(const Environment& env, const Policy& policy,
                          std::int64_t horizon, std::uint64_t seed,
                          std::span<const std::int64_t> checkpoints) {
  env.Validate();
  policy.CheckCompatible(env.mode);
  if (horizon < 1) throw MalformedInputError("horizon must be >= 1");

  RegretTrace trace;
  trace.seed = seed;
  if (checkpoints.empty()) {
    trace.checkpoints = DefaultCheckpoints(horizon);
  } else {
    trace.checkpoints.assign(checkpoints.begin(), checkpoints.end());
    for (std::size_t k = 0; k < trace.checkpoints.size(); ++k) {
      const std::int64_t c = trace.checkpoints[k];
      if (c < 1 || c > horizon ||
          (k > 0 && c <= trace.checkpoints[k - 1])) {
        throw MalformedInputError(
            "checkpoints must be strictly increasing within [1, horizon]");
      }
    }
  }
  trace.cum_regret.reserve(trace.checkpoints.size());

  const int n = env.matroid.n();
  const bool clip = policy.bonus.family == Family::kKl;
  const double best = SumOver(env.mu_star, env.OptimalAction());
  CounterRng rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  ArmStats stats = ArmStats::Zero(n);
  std::vector<double> x(n);
  double regret = 0.0;
  std::size_t next = 0;

  for (std::int64_t t = 1; t <= horizon && next < trace.checkpoints.size();
       ++t) {
    const ActionSet a = SelectAction(policy, stats, env.matroid, env.mode);
    DrawGaussian(env.mu_star, env.sigma, rng, normal, x);
    if (clip) {
      a.ForEach([&](int i) {
        if (x[i] > 1.0 || x[i] < -1.0) {
          x[i] = std::clamp(x[i], -1.0, 1.0);
          ++trace.clipped;
        }
      });
    }
    stats.Observe(a, x);
    regret += std::max(0.0, best - SumOver(env.mu_star, a));
    if (t == trace.checkpoints[next]) {
      trace.cum_regret.push_back(regret);
      ++next;
    }
  }
  return trace;
}

BudgetedResult RunBudgeted(const Environment& env, const Policy& policy,
                           double budget, std::uint64_t seed,
                           std::int64_t max_rounds) {
  env.Validate();
  if (policy.kind != PolicyKind::kBudgetedRatio) {
    throw ConfigError("RunBudgeted needs the budgeted_ratio policy");
  }
  if (!env.costs) throw ConfigError("RunBudgeted needs an environment with costs");
  policy.CheckCompatible(env.mode);

  const int n = env.matroid.n();
  BudgetedResult result;
  result.play_counts.assign(n, 0);
  if (!(budget > 0.0)) return result;

  CounterRng rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  ArmStats rewards = ArmStats::Zero(n);
  ArmStats costs = ArmStats::Zero(n);
  std::vector<double> x(n);
  std::vector<double> c(n);
  double remaining = budget;

  while (result.rounds_played < max_rounds) {
    const ActionSet a =
        SelectAction(policy, rewards, env.matroid, env.mode, &costs);
    DrawGaussian(env.mu_star, env.sigma, rng, normal, x);
    DrawGaussian(env.costs->mean, env.costs->sigma, rng, normal, c);
    const double pay = SumOver(c, a);
    if (pay > remaining) break;
    remaining -= pay;
    result.total_cost += pay;
    result.total_reward += SumOver(x, a);
    ++result.rounds_played;
    a.ForEach([&](int i) { ++result.play_counts[i]; });
    rewards.Observe(a, x);
    costs.Observe(a, c);
  }
  return result;
}

}  // namespace msb
