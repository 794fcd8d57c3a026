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

// Confidence regions around empirical means and the exploration bonus they
// induce.
//
// The region for round t is
//
//   C_t = [-r, r]^n  ∩  ( mu_hat + { delta : || (g_i(delta_i))_i ||_p <= 1 } )
//
// where g_i vanishes for arms never played. The bonus of a set A is
// max_{delta in C_t^+ - mu_hat} sum_{i in A} delta_i. For p = inf this is a
// sum of per-arm widths; for p = 1 it is a normalized, nondecreasing,
// submodular set function computed by a one-dimensional bisection on the
// Lagrange multiplier of the budget constraint.

#ifndef MSB_BONUS_H_
#define MSB_BONUS_H_

#include <cstdint>
#include <limits>
#include <span>
#include <string_view>
#include <vector>

#include "msb/action_set.h"
#include "msb/extended_value.h"

namespace msb {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Per-arm play counts and empirical means after `t` completed rounds.
// Arms never played have mean 0.
struct ArmStats {
  std::int64_t t = 0;
  std::vector<std::int64_t> counts;
  std::vector<double> means;

  static ArmStats Zero(int n);

  int n() const { return static_cast<int>(counts.size()); }
  // The round about to be played.
  std::int64_t CurrentRound() const { return t + 1; }

  // Records one round of semi-bandit feedback; `rewards` is the full reward
  // vector and only the entries of `played` are read.
  void Observe(ActionSet played, std::span<const double> rewards);
};

struct Observation {
  int arm = 0;
  double value = 0.0;
};

// Returns `s` after one round in which `played` was selected. Exactly one
// observation per played arm is required; anything else throws
// MalformedInputError.
ArmStats UpdateStats(ArmStats s, ActionSet played,
                     std::span<const Observation> observations);

enum class Norm { kOne, kInfinity };

enum class Family {
  kQuadraticCucb,  // g(d) = d^2 N / f(t), used with p = inf.
  kQuadraticEscb,  // g(d) = 2 d^2 N / f(t), used with p = 1.
  kKl,             // g(d) = kl((1+mu)/2, (1+mu+d)/2) N / f(t), p = 1, r = 1.
};

enum class ScaleKind {
  kLogPlusM,        // c (log t + m)
  kCLog,            // c log t
  kLogPlusMLogLog,  // c (log t + m log log t)
  kLogPlusNLogLog,  // c (log t + n log log t)
  kConstant,        // c
};

struct ExplorationScale {
  ScaleKind kind = ScaleKind::kLogPlusM;
  double c = 1.0;

  // `m` is the maximum action size and `n` the number of arms.
  double Evaluate(std::int64_t round, int m, int n) const;
};

struct BonusSpec {
  Norm p = Norm::kOne;
  Family family = Family::kQuadraticEscb;
  double r = kInf;
  ExplorationScale scale;
  int m = 1;

  // Defaults: p = inf uses 1.5 log t, p = 1 uses log t + m.
  static BonusSpec Cucb(double r = kInf);
  static BonusSpec Escb(int m, double r = kInf);
  static BonusSpec EscbKl(int m);

  // Throws ConfigError on inconsistent combinations.
  void Validate() const;
};

std::string_view ToString(Family family);

// Bernoulli relative entropy with kl(0,0) = kl(1,1) = 0 and kl(x,1) = +inf for
// x < 1 (kl(x,0) = +inf for x > 0).
double BernoulliKl(double x, double y);

// The budget function g of one explored arm restricted to [0, cap].
class ArmRegion {
 public:
  // g(d) = alpha d^2.
  static ArmRegion Quadratic(double alpha, double cap);
  // g(d) = weight * kl(p, p + d/2) with p = (1 + mean)/2.
  static ArmRegion Kl(double mean, double weight, double cap);

  double cap() const { return cap_; }
  double G(double delta) const;
  double Derivative(double delta) const;
  // The maximizer f(lambda) of delta - lambda g(delta) over [0, cap]:
  // (g')^{-1}(1/lambda) when that lies inside the interval, else the
  // boundary point. lambda = 0 gives cap.
  double Response(double lambda) const;

 private:
  enum class Shape { kQuadratic, kKl };
  ArmRegion(Shape shape, double a, double b, double cap)
      : shape_(shape), a_(a), b_(b), cap_(cap) {}

  // Solves g'(delta) = y on [0, cap], clamped to the interval.
  double InverseDerivative(double y) const;

  Shape shape_;
  double a_;  // alpha, or the kl weight.
  double b_;  // unused, or p.
  double cap_;
};

struct LambdaSolution {
  double lambda = 0.0;
  // Length n; zero outside the queried set.
  std::vector<double> delta;
  double bonus = 0.0;
  // sum_i g_i(delta_i) at the returned point.
  double budget_used = 0.0;
  int steps = 0;
};

inline constexpr int kMaxBisectionSteps = 200;
inline constexpr double kLambdaRelativeTolerance = 1e-12;

// Smallest lambda with sum_i g_i(f_i(lambda)) <= 1 and the induced maximizer.
// `regions[i]` describes arm `arms[i]`; `n` sizes the returned delta vector.
// Throws NumericalError after kMaxBisectionSteps.
LambdaSolution SolveLambda(std::span<const ArmRegion> regions,
                           std::span<const int> arms, int n);

// Budget functions of the explored arms of `a` under `spec`.
std::vector<ArmRegion> RegionsFor(const BonusSpec& spec, const ArmStats& s,
                                  ActionSet a);

// As above for a p = 1 spec. Every arm of `a` must have been played
// (MalformedInputError otherwise).
LambdaSolution SolveLambda(const BonusSpec& spec, const ArmStats& s,
                           ActionSet a);

// min(sqrt(f(t)/N_i), r - mu_i) for played arms; r, or +inf when r = inf,
// for arms never played. Requires p = inf.
std::vector<double> PerArmWidth(const BonusSpec& spec, const ArmStats& s);

// sqrt((f(t)/2) * sum_{i in a, N_i >= 1} 1/N_i) with unexplored arms counted
// separately. Requires p = 1, the quadratic ESCB family and r = inf.
BonusValue EscbBonus(const BonusSpec& spec, const ArmStats& s, ActionSet a);

// The exploration bonus of `a` for any supported spec.
//
// Unexplored arms count toward `unexplored` when r = inf; with finite r each
// contributes its full width r - mu_i = r to `value` instead.
BonusValue ComputeBonus(const BonusSpec& spec, const ArmStats& s, ActionSet a);

// sum_{i in a} mu_i + bonus(a).
ExtendedValue IndexValue(const BonusSpec& spec, const ArmStats& s,
                         ActionSet a);

// Per-arm optimistic indices mu_i + width_i for p = inf; unexplored arms under
// r = inf land in the unbounded tier.
std::vector<ExtendedValue> PerArmIndex(const BonusSpec& spec,
                                       const ArmStats& s);

// sum_{i in a, N_i >= 1} 1/N_i^2. Added to the bonus when r is finite so that
// it stays positive on nonempty sets.
double PositivityTerm(const ArmStats& s, ActionSet a);

}  // namespace msb

#endif  // MSB_BONUS_H_
