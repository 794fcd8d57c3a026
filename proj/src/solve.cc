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

#include "msb/solve.h"

#include <cmath>
#include <memory>

#include "msb/budget.h"
#include "msb/errors.h"
#include "msb/json_io.h"
#include "msb/maximize.h"

namespace msb {
namespace {

using json_io::Json;

// Spec and stats live on the heap so the returned closure owns them.
struct BonusSource {
  BonusSpec spec;
  ArmStats stats;
};

std::shared_ptr<BonusSource> ReadBonus(const Json& j, const std::string& path,
                                       const Matroid& m) {
  auto src = std::make_shared<BonusSource>();
  src->spec = json_io::ReadBonusSpec(j, path, BonusSpec::Escb(m.rank()),
                                     {"stats"});
  src->spec.m = m.rank();
  src->stats = json_io::ReadArmStats(json_io::Require(j, path, "stats"),
                                     path + "/stats", m.n());
  return src;
}

std::vector<double> ReadWeights(const Json& j, const std::string& path,
                                int n) {
  std::vector<double> w = json_io::ReadNumberArray(j, path);
  if (static_cast<int>(w.size()) != n) {
    throw ConfigError(path + ": expected " + std::to_string(n) + " entries");
  }
  return w;
}

Json SetJson(ActionSet a) { return Json(a.ToIndices()); }

Json Maximize(const Json& inst, const Matroid& m, ConstraintMode mode,
              const SolveOptions& options) {
  json_io::CheckKeys(inst, "",
                     {"matroid", "mode", "weights", "offset", "bonus",
                      "epsilon"});
  SplitObjective obj;
  obj.positivity = false;
  std::shared_ptr<BonusSource> bonus;
  if (inst.contains("bonus")) {
    bonus = ReadBonus(inst["bonus"], "/bonus", m);
    obj.bonus = [bonus](ActionSet a) {
      return ComputeBonus(bonus->spec, bonus->stats, a);
    };
    obj.positivity = bonus->spec.scale.Evaluate(bonus->stats.CurrentRound(),
                                                bonus->spec.m, m.n()) > 0.0;
  }
  if (inst.contains("weights")) {
    obj.weights = ReadWeights(inst["weights"], "/weights", m.n());
  } else if (bonus) {
    obj.weights = bonus->stats.means;
  } else {
    throw ConfigError("/weights: missing required field");
  }
  if (inst.contains("offset")) {
    obj.offset = json_io::ReadNumber(inst["offset"], "/offset");
  }
  double epsilon = 0.1;
  if (inst.contains("epsilon")) {
    epsilon = json_io::ReadNumber(inst["epsilon"], "/epsilon");
  }
  if (options.epsilon) epsilon = *options.epsilon;

  MaximizeResult result;
  if (options.algo == "greedy") {
    if (!obj.bonus) {
      result.set = LinearMaxGreedy(m, obj.weights, mode);
      result.value = obj.Value(result.set);
      result.iterations = result.set.size();
    } else {
      if (mode != ConstraintMode::kBases) {
        throw ConfigError("/mode: greedy with a bonus needs bases");
      }
      result = GreedyBases(m, obj);
    }
  } else if (options.algo == "localsearch") {
    if (mode != ConstraintMode::kIndependentSets) {
      throw ConfigError("/mode: localsearch needs independent");
    }
    if (!(epsilon > 0.0)) throw ConfigError("epsilon must be > 0");
    result = LocalSearch(m, obj, {epsilon, 0});
  } else {
    result = BruteForceMax(m, obj, mode);
  }
  Json out;
  out["set"] = SetJson(result.set);
  out["value"] = result.value.value;
  out["unexplored"] = result.value.unexplored;
  out["iterations"] = result.iterations;
  return out;
}

Json Ratio(const Json& inst, const Matroid& m, ConstraintMode mode,
           const SolveOptions& options) {
  json_io::CheckKeys(inst, "",
                     {"matroid", "mode", "cost", "entry_price", "reward",
                      "cost_bonus", "reward_bonus", "kappa", "eta",
                      "epsilon"});
  RatioInstance r;
  r.cost = ReadWeights(json_io::Require(inst, "", "cost"), "/cost", m.n());
  r.reward =
      ReadWeights(json_io::Require(inst, "", "reward"), "/reward", m.n());
  for (std::size_t i = 0; i < r.reward.size(); ++i) {
    if (r.reward[i] < 0.0) {
      throw ConfigError("/reward/" + std::to_string(i) + ": must be >= 0");
    }
  }
  if (inst.contains("entry_price")) {
    r.entry_price = json_io::ReadNumber(inst["entry_price"], "/entry_price");
  }
  auto cost_bonus = ReadBonus(json_io::Require(inst, "", "cost_bonus"),
                              "/cost_bonus", m);
  auto reward_bonus = ReadBonus(json_io::Require(inst, "", "reward_bonus"),
                                "/reward_bonus", m);
  r.cost_bonus = [cost_bonus](ActionSet a) {
    return ComputeBonus(cost_bonus->spec, cost_bonus->stats, a).ToDouble();
  };
  r.reward_bonus = [reward_bonus](ActionSet a) {
    return ComputeBonus(reward_bonus->spec, reward_bonus->stats, a).ToDouble();
  };

  RatioOptions ro;
  ro.inner = mode == ConstraintMode::kBases ? InnerSolver::kGreedyBases
                                            : InnerSolver::kLocalSearch;
  if (inst.contains("epsilon")) {
    ro.local_search.epsilon = json_io::ReadNumber(inst["epsilon"], "/epsilon");
  }
  if (options.epsilon) ro.local_search.epsilon = *options.epsilon;
  if (!(ro.local_search.epsilon > 0.0)) {
    throw ConfigError("epsilon must be > 0");
  }
  r.kappa = ApproximationFactor(ro.inner, ro.local_search.epsilon);
  if (inst.contains("kappa")) {
    r.kappa = json_io::ReadNumber(inst["kappa"], "/kappa");
  }
  if (inst.contains("eta")) r.eta = json_io::ReadNumber(inst["eta"], "/eta");
  if (options.eta) r.eta = *options.eta;
  if (!(r.eta > 0.0)) throw ConfigError("eta must be > 0");
  if (!(r.kappa >= 1.0)) throw ConfigError("/kappa: must be >= 1");

  const RatioResult result = RatioBinarySearch(m, r, ro);
  Json out;
  out["set"] = SetJson(result.set);
  out["lambda_upper"] = result.lambda_upper;
  out["lambda_lower"] = result.lambda_lower;
  out["iterations"] = result.iterations;
  return out;
}

}  // namespace

nlohmann::json Solve(const nlohmann::json& instance,
                     const SolveOptions& options) {
  if (options.algo != "greedy" && options.algo != "localsearch" &&
      options.algo != "brute" && options.algo != "ratio") {
    throw ConfigError("unknown algo '" + options.algo + "'");
  }
  const Matroid m = json_io::ReadMatroid(
      json_io::Require(instance, "", "matroid"), "/matroid");
  ConstraintMode mode;
  try {
    mode = ParseConstraintMode(json_io::ReadString(
        json_io::Require(instance, "", "mode"), "/mode"));
  } catch (const ConfigError& e) {
    throw ConfigError(std::string("/mode: ") + e.what());
  }
  if (options.algo == "ratio") return Ratio(instance, m, mode, options);
  return Maximize(instance, m, mode, options);
}

}  // namespace msb
