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

#include "msb/maximize.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>

#include "msb/errors.h"

namespace msb {
namespace {

constexpr std::int64_t kFallbackIterationCap = std::int64_t{1} << 20;

void CheckWeights(const Matroid& m, const SplitObjective& obj) {
  if (static_cast<int>(obj.weights.size()) != m.n()) {
    throw MalformedInputError("objective has " +
                              std::to_string(obj.weights.size()) +
                              " weights for a ground set of " +
                              std::to_string(m.n()));
  }
}

// Strict improvement of `candidate` over `current` by more than `threshold`
// within the same unexplored tier; moving to a higher tier always counts.
bool Improves(const ExtendedValue& candidate, const ExtendedValue& current,
              double threshold) {
  if (candidate.unexplored != current.unexplored) {
    return candidate.unexplored > current.unexplored;
  }
  return candidate.value > current.value + threshold;
}

bool IsPositive(const BonusValue& f) { return f.unexplored > 0 || f.value > 0; }

}  // namespace

double SplitObjective::Linear(ActionSet a) const {
  return offset + SumOver(weights, a);
}

BonusValue SplitObjective::Bonus(ActionSet a) const {
  if (!bonus || a.empty()) return {};
  return bonus(a);
}

std::int64_t DefaultMaxIterations(const Matroid& m, const SplitObjective& obj,
                                  ActionSet start, double epsilon) {
  const int rank = std::max(1, m.rank());
  double smallest = std::numeric_limits<double>::infinity();
  double largest = 0.0;
  int unexplored = 0;
  for (int x = 0; x < m.n(); ++x) {
    const ActionSet single = ActionSet::Singleton(x);
    if (!m.IsIndependent(single)) continue;
    const BonusValue f = obj.Bonus(single);
    unexplored += f.unexplored > 0;
    if (f.value > 0.0) {
      smallest = std::min(smallest, f.value);
      largest = std::max(largest, f.value);
    }
  }
  const double start_value = obj.Bonus(start).value;
  const double floor_value = start_value > 0.0 ? start_value : smallest;
  if (!(largest > 0.0) || !(floor_value > 0.0) || std::isinf(floor_value)) {
    return kFallbackIterationCap;
  }
  const double ratio = std::max(1.0, rank * largest / floor_value);
  const double per_tier =
      std::ceil(rank * std::log(ratio) / std::log1p(epsilon / rank)) + 10.0;
  const double total = per_tier * (std::min(unexplored, rank) + 1);
  if (!(total < static_cast<double>(kFallbackIterationCap))) {
    return kFallbackIterationCap;
  }
  return static_cast<std::int64_t>(total);
}

MaximizeResult LocalSearch(const Matroid& m, const SplitObjective& obj,
                           const LocalSearchParams& params) {
  CheckWeights(m, obj);
  if (!(params.epsilon > 0.0)) {
    throw MalformedInputError("LocalSearch epsilon must be > 0");
  }
  if (params.max_iterations < 0) {
    throw MalformedInputError("LocalSearch max_iterations must be >= 1");
  }
  MaximizeResult result;
  result.value = obj.Value(ActionSet());
  const int rank = m.rank();
  if (rank == 0) return result;

  if (obj.positivity) {
    for (int x = 0; x < m.n(); ++x) {
      const ActionSet single = ActionSet::Singleton(x);
      if (m.IsIndependent(single) && !IsPositive(obj.Bonus(single))) {
        throw MalformedInputError(
            "objective claims a positive bonus but F({" + std::to_string(x) +
            "}) is not positive");
      }
    }
  }

  ActionSet s = LinearMaxGreedy(m, obj.weights, ConstraintMode::kIndependentSets);
  if (s.empty()) {
    std::optional<int> seed;
    for (int x = 0; x < m.n(); ++x) {
      const ActionSet single = ActionSet::Singleton(x);
      if (!m.IsIndependent(single)) continue;
      const BonusValue f = obj.Bonus(single);
      const ExtendedValue gain = f + obj.weights[x];
      if (!(gain > ExtendedValue{})) continue;
      if (!seed || obj.weights[x] > obj.weights[*seed]) seed = x;
    }
    if (!seed) return result;
    s = ActionSet::Singleton(*seed);
  }

  const std::int64_t cap = params.max_iterations > 0
                               ? params.max_iterations
                               : DefaultMaxIterations(m, obj, s, params.epsilon);
  const double step = params.epsilon / rank;
  const ActionSet ground = m.GroundSet();

  ExtendedValue current = obj.Value(s);
  result.trajectory.push_back(current);
  while (true) {
    const double threshold = step * obj.Bonus(s).value;
    std::optional<ActionSet> next;
    ExtendedValue next_value;
    auto consider = [&](ActionSet candidate) {
      const ExtendedValue v = obj.Value(candidate);
      if (Improves(v, current, threshold)) {
        next = candidate;
        next_value = v;
        return true;
      }
      return false;
    };

    const std::vector<int> inside = s.ToIndices();
    const std::vector<int> outside = (ground - s).ToIndices();
    for (int x : inside) {
      if (consider(s.Without(x))) break;
    }
    if (!next) {
      for (int y : outside) {
        const ActionSet candidate = s.With(y);
        if (m.IsIndependent(candidate) && consider(candidate)) break;
      }
    }
    if (!next) {
      for (int x : inside) {
        for (int y : outside) {
          const ActionSet candidate = s.Without(x).With(y);
          if (m.IsIndependent(candidate) && consider(candidate)) break;
        }
        if (next) break;
      }
    }
    if (!next) break;

    s = *next;
    current = next_value;
    result.trajectory.push_back(current);
    if (++result.iterations > cap) {
      throw IterationLimitError(
          "LocalSearch exceeded " + std::to_string(cap) +
          " improving moves (epsilon=" + std::to_string(params.epsilon) +
          "); the improvement threshold is likely misconfigured");
    }
  }
  result.set = s;
  result.value = current;
  return result;
}

MaximizeResult GreedyBases(const Matroid& m, const SplitObjective& obj) {
  CheckWeights(m, obj);
  MaximizeResult result;
  ActionSet s;
  for (int step = 0; step < m.rank(); ++step) {
    std::optional<int> best;
    ExtendedValue best_value;
    for (int x = 0; x < m.n(); ++x) {
      if (s.Contains(x)) continue;
      const ActionSet candidate = s.With(x);
      if (!m.IsIndependent(candidate)) continue;
      const ExtendedValue v = obj.Value(candidate);
      if (!best || v > best_value) {
        best = x;
        best_value = v;
      }
    }
    // Every independent set below the rank extends.
    s = s.With(*best);
    ++result.iterations;
  }
  result.set = s;
  result.value = obj.Value(s);
  return result;
}

MaximizeResult BruteForceMax(const Matroid& m, const SplitObjective& obj,
                             ConstraintMode mode) {
  CheckWeights(m, obj);
  MaximizeResult result;
  bool found = false;
  for (ActionSet a : EnumerateFeasible(m, mode)) {
    const ExtendedValue v = obj.Value(a);
    ++result.iterations;
    if (!found || v > result.value) {
      result.set = a;
      result.value = v;
      found = true;
    }
  }
  return result;
}

}  // namespace msb
