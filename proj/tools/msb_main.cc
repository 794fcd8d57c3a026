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

// msb: simulate regret experiments or solve single instances.
//   exit 0 ok, 2 config error, 3 runtime or numerical error.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "msb/errors.h"
#include "msb/experiment.h"
#include "msb/json_io.h"
#include "msb/solve.h"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitRuntime = 3;

int Simulate(const std::string& config, const std::string& out,
             std::optional<std::uint64_t> seed, std::optional<int> runs) {
  msb::ExperimentConfig cfg = msb::ParseConfig(config);
  if (seed) cfg.seed = *seed;
  if (runs) {
    if (*runs < 1) throw msb::ConfigError("--runs must be >= 1");
    cfg.runs = *runs;
  }
  msb::WriteCsv(msb::RunExperiment(cfg), out);
  return 0;
}

int Solve(const std::string& instance, const msb::SolveOptions& options) {
  const auto doc = msb::json_io::ReadFile(instance);
  std::cout << msb::Solve(doc, options).dump() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Combinatorial semi-bandits on matroids"};
  app.require_subcommand(1);

  std::string config;
  std::string out;
  std::optional<std::uint64_t> seed;
  std::optional<int> runs;
  auto* simulate = app.add_subcommand("simulate", "Run a regret experiment");
  simulate->add_option("--config", config, "Experiment JSON")->required();
  simulate->add_option("--out", out, "Output CSV")->required();
  simulate->add_option("--seed", seed, "Master seed (overrides config)");
  simulate->add_option("--runs", runs, "Runs per algorithm (overrides config)");

  std::string instance;
  msb::SolveOptions options;
  std::optional<double> epsilon;
  std::optional<double> eta;
  auto* solve = app.add_subcommand("solve", "Solve one offline instance");
  solve->add_option("--instance", instance, "Instance JSON")->required();
  solve->add_option("--algo", options.algo, "Solver")
      ->required()
      ->check(CLI::IsMember({"greedy", "localsearch", "brute", "ratio"}));
  solve->add_option("--epsilon", epsilon, "LocalSearch threshold");
  solve->add_option("--eta", eta, "Ratio search precision");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (*simulate) return Simulate(config, out, seed, runs);
    options.epsilon = epsilon;
    options.eta = eta;
    return Solve(instance, options);
  } catch (const msb::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
}
