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

#include <cmath>
#include <vector>

#include "checks.h"
#include "doctest.h"
#include "msb/bonus.h"
#include "msb/errors.h"
#include "oracles.h"

namespace msb {
namespace {

ActionSet Set(std::initializer_list<int> xs) {
  std::vector<int> v(xs);
  return ActionSet::FromIndices(v);
}

BonusSpec Constant(Norm p, Family family, double r, double c) {
  BonusSpec spec;
  spec.p = p;
  spec.family = family;
  spec.r = r;
  spec.scale = {ScaleKind::kConstant, c};
  return spec;
}

ArmStats Stats(std::vector<std::int64_t> counts, std::vector<double> means,
               std::int64_t t = 100) {
  ArmStats s;
  s.t = t;
  s.counts = std::move(counts);
  s.means = std::move(means);
  return s;
}

TEST_CASE("update stats keeps running means") {
  ArmStats s = ArmStats::Zero(2);
  const std::vector<Observation> first{{0, 0.5}};
  s = UpdateStats(s, Set({0}), first);
  CHECK(s.t == 1);
  CHECK(s.counts[0] == 1);
  CHECK(s.means[0] == 0.5);
  const std::vector<Observation> second{{0, 1.5}};
  s = UpdateStats(s, Set({0}), second);
  CHECK(s.counts[0] == 2);
  CHECK(s.means[0] == 1.0);
  CHECK(s.means[1] == 0.0);
  CHECK(s.counts[1] == 0);
}

TEST_CASE("update stats rejects mismatched observations") {
  const ArmStats s = ArmStats::Zero(3);
  const std::vector<Observation> stray{{1, 0.0}};
  CHECK_THROWS_AS(UpdateStats(s, Set({0}), stray), MalformedInputError);
  const std::vector<Observation> dup{{0, 0.0}, {0, 1.0}};
  CHECK_THROWS_AS(UpdateStats(s, Set({0}), dup), MalformedInputError);
  const std::vector<Observation> missing{};
  CHECK_THROWS_AS(UpdateStats(s, Set({0}), missing), MalformedInputError);
}

TEST_CASE("per-arm width examples") {
  const BonusSpec cucb = Constant(Norm::kInfinity, Family::kQuadraticCucb, kInf, 6.0);
  const auto w = PerArmWidth(cucb, Stats({4, 0}, {0.0, 0.0}));
  CHECK(w[0] == doctest::Approx(std::sqrt(6.0 / 4.0)).epsilon(1e-12));
  CHECK(std::abs(w[0] - 1.224745) < 1e-6);
  CHECK(std::isinf(w[1]));
  // Cross-check by 1-D grid: largest d with d^2 N / f <= 1.
  double best = 0.0;
  for (int k = 0; k <= 2'000'000; ++k) {
    const double d = 2.0 * k / 2'000'000;
    if (d * d * 4.0 / 6.0 <= 1.0) best = d;
  }
  CHECK(std::abs(best - w[0]) < 1e-5);

  const BonusSpec bounded = Constant(Norm::kInfinity, Family::kQuadraticCucb, 1.0, 6.0);
  const auto wb = PerArmWidth(bounded, Stats({0, 4}, {0.0, 0.5}));
  CHECK(wb[0] == 1.0);
  CHECK(wb[1] == doctest::Approx(0.5));  // r - mean binds

  // Zero scale at the first round: unexplored handling still applies.
  BonusSpec log_only = Constant(Norm::kInfinity, Family::kQuadraticCucb, kInf, 1.0);
  log_only.scale.kind = ScaleKind::kCLog;
  const auto w0 = PerArmWidth(log_only, ArmStats::Zero(2));
  CHECK(std::isinf(w0[0]));
}

TEST_CASE("escb bonus examples") {
  const BonusSpec spec = Constant(Norm::kOne, Family::kQuadraticEscb, kInf, 2.0);
  const ArmStats s = Stats({1, 4, 0}, {0.0, 0.0, 0.0});
  const BonusValue b = ComputeBonus(spec, s, Set({0, 1}));
  CHECK(b.unexplored == 0);
  CHECK(std::abs(b.value - 1.118034) < 1e-6);
  CHECK(b.value == doctest::Approx(std::sqrt(1.25)).epsilon(1e-12));
  CHECK(ComputeBonus(spec, s, ActionSet()) == BonusValue{});
  const BonusValue u = ComputeBonus(spec, s, Set({2}));
  CHECK(u.unexplored == 1);
  CHECK(u > BonusValue{0, 1e300});
  // Closed form agrees with the bisection path.
  CHECK(SolveLambda(spec, s, Set({0, 1})).bonus ==
        doctest::Approx(b.value).epsilon(1e-10));
}

TEST_CASE("solve lambda closed-form example") {
  const std::vector<ArmRegion> regions{ArmRegion::Quadratic(1.0, kInf),
                                       ArmRegion::Quadratic(4.0, kInf)};
  const std::vector<int> arms{0, 1};
  const LambdaSolution sol = SolveLambda(regions, arms, 2);
  CHECK(std::abs(sol.lambda - 0.5 * std::sqrt(1.25)) < 1e-9);
  CHECK(std::abs(sol.lambda - 0.559017) < 1e-6);
  CHECK(std::abs(sol.delta[0] - 0.894427) < 1e-6);
  CHECK(std::abs(sol.delta[1] - 0.223607) < 1e-6);
  CHECK(std::abs(sol.delta[0] * sol.delta[0] + 4 * sol.delta[1] * sol.delta[1] - 1.0) < 1e-8);
}

TEST_CASE("solve lambda with slack caps returns lambda zero") {
  const std::vector<ArmRegion> regions{ArmRegion::Quadratic(1.0, 0.3),
                                       ArmRegion::Quadratic(2.0, 0.4)};
  const std::vector<int> arms{0, 1};
  const LambdaSolution sol = SolveLambda(regions, arms, 2);
  CHECK(sol.lambda == 0.0);
  CHECK(sol.delta[0] == 0.3);
  CHECK(sol.delta[1] == 0.4);
}

TEST_CASE("kl bonus matches a fine grid") {
  const BonusSpec spec = Constant(Norm::kOne, Family::kKl, 1.0, 1.0);
  const ArmStats s = Stats({1}, {0.0});
  const double bonus = ComputeBonus(spec, s, Set({0})).value;
  // Step 1e-7 over [0, 1].
  double best = 0.0;
  for (int k = 0; k <= 10'000'000; ++k) {
    const double d = k * 1e-7;
    if (BernoulliKl(0.5, 0.5 + d / 2.0) <= 1.0) best = d;
  }
  CHECK(std::abs(bonus - best) < 1e-6);
  CHECK(std::abs(bonus - 0.92988) < 1e-4);
}

TEST_CASE("bernoulli kl conventions") {
  CHECK(BernoulliKl(0.0, 0.0) == 0.0);
  CHECK(BernoulliKl(1.0, 1.0) == 0.0);
  CHECK(std::isinf(BernoulliKl(0.5, 1.0)));
  CHECK(BernoulliKl(0.5, 0.75) ==
        doctest::Approx(0.5 * std::log(0.5 / 0.75) + 0.5 * std::log(0.5 / 0.25)));
}

TEST_CASE("index value examples") {
  const BonusSpec spec = Constant(Norm::kOne, Family::kQuadraticEscb, kInf, 2.0);
  const ArmStats s = Stats({4, 1}, {0.3, 0.0});
  CHECK(IndexValue(spec, s, Set({0})).value == doctest::Approx(0.8).epsilon(1e-12));
  CHECK(IndexValue(spec, s, ActionSet()) == ExtendedValue{});
  // p = inf is additive over arms.
  const BonusSpec inf = Constant(Norm::kInfinity, Family::kQuadraticCucb, kInf, 3.0);
  const auto width = PerArmWidth(inf, s);
  CHECK(IndexValue(inf, s, Set({0, 1})).value ==
        doctest::Approx(0.3 + width[0] + 0.0 + width[1]).epsilon(1e-14));
  CHECK(ComputeBonus(inf, s, Set({0, 1})).value == width[0] + width[1]);
}

TEST_CASE("signed region gives the same bonus") {
  // Two arms: maximize d0 + d1 over the signed region with grid on d0 in
  // [-1, cap]; the nonnegative bonus must match.
  const BonusSpec spec = Constant(Norm::kOne, Family::kKl, 1.0, 2.0);
  const ArmStats s = Stats({3, 7}, {0.2, -0.4});
  const double bonus = ComputeBonus(spec, s, Set({0, 1})).value;
  auto g = [&](int i, double d) {
    const double p = (1.0 + s.means[i]) / 2.0;
    return static_cast<double>(s.counts[i]) / 2.0 * BernoulliKl(p, p + d / 2.0);
  };
  double best = -10.0;
  for (int k = 0; k <= 20000; ++k) {
    const double d0 = -1.0 - s.means[0] + (2.0) * k / 20000;  // [-1-mu, 1-mu]
    const double rest = 1.0 - g(0, d0);
    if (rest < 0.0) continue;
    testing::GridArm arm{[&](double d) { return g(1, d); }, 1.0 - s.means[1]};
    best = std::max(best, d0 + testing::OracleInverse(arm, rest));
  }
  CHECK(std::abs(best - bonus) < 1e-3);
}

TEST_CASE("bonus spec validation") {
  BonusSpec kl = BonusSpec::EscbKl(3);
  CHECK_NOTHROW(kl.Validate());
  kl.r = kInf;
  CHECK_THROWS_AS(kl.Validate(), ConfigError);
  BonusSpec cucb = BonusSpec::Cucb();
  cucb.family = Family::kQuadraticEscb;
  CHECK_THROWS_AS(cucb.Validate(), ConfigError);
  BonusSpec neg = BonusSpec::Escb(2);
  neg.scale.c = -1.0;
  CHECK_THROWS_AS(neg.Validate(), ConfigError);
}

TEST_CASE("default scales") {
  const BonusSpec escb = BonusSpec::Escb(4);
  CHECK(escb.scale.Evaluate(100, 4, 10) == doctest::Approx(std::log(100.0) + 4));
  const BonusSpec cucb = BonusSpec::Cucb();
  CHECK(cucb.scale.Evaluate(100, 4, 10) == doctest::Approx(1.5 * std::log(100.0)));
  CHECK(cucb.scale.Evaluate(2, 4, 10) > 0.0);
}

TEST_CASE("bonus is normalized and nondecreasing") {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 30; ++k) {
    const int n = std::uniform_int_distribution<int>(1, 7)(rng);
    const ArmStats s = testing::RandomStats(rng, n, k % 2 == 0);
    for (int family = 0; family < 3; ++family) {
      const BonusSpec spec = testing::P1Spec(family, n, 3.0);
      for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) {
        const BonusValue fb = ComputeBonus(spec, s, ActionSet(b));
        for (std::uint64_t a = b;; a = (a - 1) & b) {
          REQUIRE(!(ComputeBonus(spec, s, ActionSet(a)) > fb));
          if (a == 0) break;
        }
      }
    }
  }
}

TEST_CASE("bonus is submodular") {
  const testing::Report rep = testing::CheckSubmodularity(17, 40);
  INFO(rep.detail);
  CHECK(rep.ok());
}

TEST_CASE("solve lambda matches grid and kkt") {
  double closed = 0.0;
  const testing::Report rep = testing::CheckLambda(23, 40, &closed);
  INFO(rep.detail);
  CHECK(rep.ok());
  CHECK(closed <= 1e-9);
}

}  // namespace
}  // namespace msb
