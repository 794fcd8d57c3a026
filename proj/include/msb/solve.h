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

// Offline solvers driven by an instance document.
//
// Maximization instance:
//   {"matroid": {...}, "mode": "bases"|"independent",
//    "weights": [..], "offset": x,
//    "bonus": {"p": .., "family": .., "r": .., "scale": {..},
//              "stats": {"t": .., "counts": [..], "means": [..]}}}
// "weights" defaults to the bonus stats means; without "bonus" F is zero.
//
// Ratio instance:
//   {"matroid": {...}, "mode": ..., "cost": [..], "entry_price": x,
//    "reward": [..], "cost_bonus": {..}, "reward_bonus": {..},
//    "kappa": x, "eta": x}

#ifndef MSB_SOLVE_H_
#define MSB_SOLVE_H_

#include <optional>
#include <string>

#include "json.hpp"

namespace msb {

struct SolveOptions {
  // greedy | localsearch | brute | ratio
  std::string algo;
  std::optional<double> epsilon;
  std::optional<double> eta;
};

// Returns {set, value, unexplored, iterations} for the maximizers and
// {set, lambda_upper, lambda_lower, iterations} for ratio. Throws ConfigError
// on schema problems.
nlohmann::json Solve(const nlohmann::json& instance, const SolveOptions& options);

}  // namespace msb

#endif  // MSB_SOLVE_H_
