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

#include "msb/bonus.h"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "msb/errors.h"

namespace msb {
namespace {

double CapFor(double r, double mean) {
  if (std::isinf(r)) return kInf;
  return std::max(0.0, r - mean);
}

double ScaleAt(const BonusSpec& spec, const ArmStats& s) {
  return spec.scale.Evaluate(s.CurrentRound(), spec.m, s.n());
}

void CheckStatsShape(const ArmStats& s, ActionSet a) {
  if (s.means.size() != s.counts.size()) {
    throw MalformedInputError("ArmStats counts/means length mismatch");
  }
  if (a.Span() > s.n()) {
    throw MalformedInputError("action " + a.ToString() +
                              " indexes past the " + std::to_string(s.n()) +
                              " tracked arms");
  }
}

}  // namespace

ArmStats ArmStats::Zero(int n) {
  ArmStats s;
  s.counts.assign(n, 0);
  s.means.assign(n, 0.0);
  return s;
}

void ArmStats::Observe(ActionSet played, std::span<const double> rewards) {
  played.ForEach([&](int i) {
    const double count = static_cast<double>(++counts[i]);
    means[i] += (rewards[i] - means[i]) / count;
  });
  ++t;
}

ArmStats UpdateStats(ArmStats s, ActionSet played,
                     std::span<const Observation> observations) {
  CheckStatsShape(s, played);
  ActionSet seen;
  std::vector<double> rewards(s.n(), 0.0);
  for (const Observation& o : observations) {
    if (o.arm < 0 || o.arm >= s.n() || !played.Contains(o.arm)) {
      throw MalformedInputError("observation for arm " +
                                std::to_string(o.arm) +
                                " which is not in the played action " +
                                played.ToString());
    }
    if (seen.Contains(o.arm)) {
      throw MalformedInputError("duplicate observation for arm " +
                                std::to_string(o.arm));
    }
    seen = seen.With(o.arm);
    rewards[o.arm] = o.value;
  }
  if (seen != played) {
    throw MalformedInputError("missing observations for arms " +
                              (played - seen).ToString());
  }
  s.Observe(played, rewards);
  return s;
}

double ExplorationScale::Evaluate(std::int64_t round, int m, int n) const {
  const double log_t = std::log(static_cast<double>(std::max<std::int64_t>(round, 1)));
  const double log_log_t = log_t > 1.0 ? std::log(log_t) : 0.0;
  switch (kind) {
    case ScaleKind::kLogPlusM:
      return c * (log_t + m);
    case ScaleKind::kCLog:
      return c * log_t;
    case ScaleKind::kLogPlusMLogLog:
      return c * (log_t + m * log_log_t);
    case ScaleKind::kLogPlusNLogLog:
      return c * (log_t + n * log_log_t);
    case ScaleKind::kConstant:
      return c;
  }
  return c;
}

BonusSpec BonusSpec::Cucb(double r) {
  return BonusSpec{Norm::kInfinity, Family::kQuadraticCucb, r,
                   ExplorationScale{ScaleKind::kCLog, 1.5}, 1};
}

BonusSpec BonusSpec::Escb(int m, double r) {
  return BonusSpec{Norm::kOne, Family::kQuadraticEscb, r,
                   ExplorationScale{ScaleKind::kLogPlusM, 1.0}, m};
}

BonusSpec BonusSpec::EscbKl(int m) {
  return BonusSpec{Norm::kOne, Family::kKl, 1.0,
                   ExplorationScale{ScaleKind::kLogPlusM, 1.0}, m};
}

void BonusSpec::Validate() const {
  if (p == Norm::kInfinity && family != Family::kQuadraticCucb) {
    throw ConfigError("p = inf requires the cucb family");
  }
  if (p == Norm::kOne && family == Family::kQuadraticCucb) {
    throw ConfigError("the cucb family requires p = inf");
  }
  if (family == Family::kKl && r != 1.0) {
    throw ConfigError("the escb_kl family requires r = 1");
  }
  if (!(r > 0.0)) throw ConfigError("radius r must be positive");
  if (!(scale.c >= 0.0) || std::isinf(scale.c)) {
    throw ConfigError("scale coefficient c must be finite and >= 0");
  }
  if (m < 0) throw ConfigError("max action size m must be >= 0");
}

std::string_view ToString(Family family) {
  switch (family) {
    case Family::kQuadraticCucb:
      return "cucb";
    case Family::kQuadraticEscb:
      return "escb";
    case Family::kKl:
      return "escb_kl";
  }
  return "?";
}

double BernoulliKl(double x, double y) {
  auto term = [](double a, double b) -> double {
    if (a == 0.0) return 0.0;
    if (b == 0.0) return kInf;
    return a * std::log(a / b);
  };
  return term(x, y) + term(1.0 - x, 1.0 - y);
}

ArmRegion ArmRegion::Quadratic(double alpha, double cap) {
  return ArmRegion(Shape::kQuadratic, alpha, 0.0, cap);
}

ArmRegion ArmRegion::Kl(double mean, double weight, double cap) {
  const double p = std::clamp((1.0 + mean) / 2.0, 0.0, 1.0);
  return ArmRegion(Shape::kKl, weight, p, std::min(cap, 2.0 * (1.0 - p)));
}

double ArmRegion::G(double delta) const {
  if (delta <= 0.0) return 0.0;
  if (shape_ == Shape::kQuadratic) return a_ * delta * delta;
  const double q = std::min(1.0, b_ + delta / 2.0);
  return a_ * BernoulliKl(b_, q);
}

double ArmRegion::Derivative(double delta) const {
  if (shape_ == Shape::kQuadratic) return 2.0 * a_ * delta;
  const double q = b_ + delta / 2.0;
  if (q >= 1.0) return kInf;
  if (q <= 0.0) return a_ / 2.0;
  return a_ * (q - b_) / (2.0 * q * (1.0 - q));
}

double ArmRegion::InverseDerivative(double y) const {
  double delta;
  if (shape_ == Shape::kQuadratic) {
    delta = y / (2.0 * a_);
  } else if (y <= Derivative(0.0)) {
    delta = 0.0;
  } else if (b_ == 0.0) {
    delta = 2.0 * (1.0 - a_ / (2.0 * y));
  } else {
    // q - p solves k q^2 + (1 - k) q - p = 0 with k = 2y/weight; rationalized
    // to avoid cancellation when q is close to p.
    const double p = b_;
    const double k = 2.0 * y / a_;
    const double b = 1.0 - k;
    const double root = std::sqrt(b * b + 4.0 * k * p);
    const double gap = 4.0 * k * p * (1.0 - p) / ((b + root) * (1.0 + k + root));
    delta = 2.0 * gap;
  }
  return std::clamp(delta, 0.0, cap_);
}

double ArmRegion::Response(double lambda) const {
  if (cap_ <= 0.0) return 0.0;
  if (lambda <= 0.0) return cap_;
  const double y = 1.0 / lambda;
  if (y >= Derivative(cap_)) return cap_;
  return InverseDerivative(y);
}

LambdaSolution SolveLambda(std::span<const ArmRegion> regions,
                           std::span<const int> arms, int n) {
  LambdaSolution sol;
  sol.delta.assign(n, 0.0);
  auto budget = [&](double lambda) {
    double total = 0.0;
    for (const ArmRegion& r : regions) total += r.G(r.Response(lambda));
    return total;
  };
  auto finish = [&](double lambda) {
    sol.lambda = lambda;
    sol.bonus = 0.0;
    for (std::size_t j = 0; j < regions.size(); ++j) {
      const double d = regions[j].Response(lambda);
      sol.delta[arms[j]] = d;
      sol.bonus += d;
    }
    sol.budget_used = budget(lambda);
    return sol;
  };
  if (regions.empty() || budget(0.0) <= 1.0) return finish(0.0);

  double lo = 0.0;
  double hi = 1.0;
  while (budget(hi) > 1.0) {
    lo = hi;
    hi *= 2.0;
    if (++sol.steps > kMaxBisectionSteps || std::isinf(hi)) {
      throw NumericalError("lambda bracket search diverged at lambda=" +
                           std::to_string(hi));
    }
  }
  while (hi - lo > kLambdaRelativeTolerance * hi) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (budget(mid) <= 1.0) {
      hi = mid;
    } else {
      lo = mid;
    }
    if (++sol.steps > kMaxBisectionSteps) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "lambda bisection did not converge after " << kMaxBisectionSteps
          << " steps: bracket [" << lo << ", " << hi << "], budget(hi)="
          << budget(hi) << ", arms=" << regions.size();
      throw NumericalError(msg.str());
    }
  }
  return finish(hi);
}

std::vector<ArmRegion> RegionsFor(const BonusSpec& spec, const ArmStats& s,
                                  ActionSet a) {
  CheckStatsShape(s, a);
  const double f = ScaleAt(spec, s);
  std::vector<ArmRegion> regions;
  regions.reserve(a.size());
  a.ForEach([&](int i) {
    if (s.counts[i] == 0) return;
    const double cap = CapFor(spec.r, s.means[i]);
    const double count = static_cast<double>(s.counts[i]);
    if (!(f > 0.0)) {
      regions.push_back(ArmRegion::Quadratic(1.0, 0.0));
      return;
    }
    switch (spec.family) {
      case Family::kQuadraticCucb:
        regions.push_back(ArmRegion::Quadratic(count / f, cap));
        break;
      case Family::kQuadraticEscb:
        regions.push_back(ArmRegion::Quadratic(2.0 * count / f, cap));
        break;
      case Family::kKl:
        regions.push_back(ArmRegion::Kl(s.means[i], count / f, cap));
        break;
    }
  });
  return regions;
}

LambdaSolution SolveLambda(const BonusSpec& spec, const ArmStats& s,
                           ActionSet a) {
  if (spec.p != Norm::kOne) {
    throw ConfigError("SolveLambda requires p = 1");
  }
  CheckStatsShape(s, a);
  a.ForEach([&](int i) {
    if (s.counts[i] == 0) {
      throw MalformedInputError("arm " + std::to_string(i) +
                                " has never been played");
    }
  });
  const std::vector<ArmRegion> regions = RegionsFor(spec, s, a);
  const std::vector<int> arms = a.ToIndices();
  return SolveLambda(regions, arms, s.n());
}

std::vector<double> PerArmWidth(const BonusSpec& spec, const ArmStats& s) {
  if (spec.p != Norm::kInfinity) {
    throw ConfigError("per-arm widths require p = inf");
  }
  const double f = ScaleAt(spec, s);
  std::vector<double> width(s.n());
  for (int i = 0; i < s.n(); ++i) {
    if (s.counts[i] == 0) {
      width[i] = spec.r;
      continue;
    }
    const double w = f > 0.0 ? std::sqrt(f / static_cast<double>(s.counts[i]))
                             : 0.0;
    width[i] = std::min(w, CapFor(spec.r, s.means[i]));
  }
  return width;
}

BonusValue EscbBonus(const BonusSpec& spec, const ArmStats& s, ActionSet a) {
  if (spec.p != Norm::kOne || spec.family != Family::kQuadraticEscb ||
      !std::isinf(spec.r)) {
    throw ConfigError("closed-form ESCB bonus requires p = 1, escb, r = inf");
  }
  CheckStatsShape(s, a);
  BonusValue out;
  double inverse_counts = 0.0;
  a.ForEach([&](int i) {
    if (s.counts[i] == 0) {
      ++out.unexplored;
    } else {
      inverse_counts += 1.0 / static_cast<double>(s.counts[i]);
    }
  });
  const double f = ScaleAt(spec, s);
  out.value = f > 0.0 ? std::sqrt(0.5 * f * inverse_counts) : 0.0;
  return out;
}

BonusValue ComputeBonus(const BonusSpec& spec, const ArmStats& s,
                        ActionSet a) {
  CheckStatsShape(s, a);
  BonusValue out;
  if (a.empty()) return out;
  const bool unbounded = std::isinf(spec.r);

  if (spec.p == Norm::kInfinity) {
    const double f = ScaleAt(spec, s);
    a.ForEach([&](int i) {
      if (s.counts[i] == 0) {
        if (unbounded) {
          ++out.unexplored;
        } else {
          out.value += spec.r;
        }
        return;
      }
      const double w =
          f > 0.0 ? std::sqrt(f / static_cast<double>(s.counts[i])) : 0.0;
      out.value += std::min(w, CapFor(spec.r, s.means[i]));
    });
    return out;
  }

  if (spec.family == Family::kQuadraticEscb && unbounded) {
    return EscbBonus(spec, s, a);
  }
  ActionSet explored;
  a.ForEach([&](int i) {
    if (s.counts[i] == 0) {
      if (unbounded) {
        ++out.unexplored;
      } else {
        out.value += CapFor(spec.r, s.means[i]);
      }
    } else {
      explored = explored.With(i);
    }
  });
  if (!explored.empty()) {
    const std::vector<ArmRegion> regions = RegionsFor(spec, s, explored);
    const std::vector<int> arms = explored.ToIndices();
    out.value += SolveLambda(regions, arms, s.n()).bonus;
  }
  return out;
}

ExtendedValue IndexValue(const BonusSpec& spec, const ArmStats& s,
                         ActionSet a) {
  return ComputeBonus(spec, s, a) + SumOver(s.means, a);
}

std::vector<ExtendedValue> PerArmIndex(const BonusSpec& spec,
                                       const ArmStats& s) {
  const std::vector<double> width = PerArmWidth(spec, s);
  std::vector<ExtendedValue> index(s.n());
  for (int i = 0; i < s.n(); ++i) {
    if (std::isinf(width[i])) {
      index[i] = {1, s.means[i]};
    } else {
      index[i] = {0, s.means[i] + width[i]};
    }
  }
  return index;
}

double PositivityTerm(const ArmStats& s, ActionSet a) {
  double total = 0.0;
  a.ForEach([&](int i) {
    if (s.counts[i] > 0) {
      const double c = static_cast<double>(s.counts[i]);
      total += 1.0 / (c * c);
    }
  });
  return total;
}

}  // namespace msb
