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

// Serial reference vs the OpenMP run pool on the K5 bases experiment.

#include <benchmark/benchmark.h>

#include "msb/experiment.h"

namespace {

msb::ExperimentConfig K5Config(std::int64_t horizon, int runs) {
  msb::ExperimentConfig cfg;
  cfg.env = msb::BasesK5();
  cfg.horizon = horizon;
  cfg.runs = runs;
  cfg.seed = 2026;
  const int m = cfg.env.matroid.rank();
  cfg.algorithms = {
      {"cucb", msb::Policy::Default(msb::PolicyKind::kCucb, m)},
      {"escb_greedy", msb::Policy::Default(msb::PolicyKind::kEscbGreedy, m)},
  };
  cfg.checkpoints = msb::DefaultCheckpoints(horizon);
  return cfg;
}

void BM_Serial(benchmark::State& state) {
  const auto cfg = K5Config(state.range(0), 8);
  for (auto _ : state) {
    benchmark::DoNotOptimize(msb::RunExperimentSerial(cfg));
  }
  state.SetItemsProcessed(state.iterations() * cfg.runs * 2 * cfg.horizon);
}

void BM_Parallel(benchmark::State& state) {
  const auto cfg = K5Config(state.range(0), 8);
  const int threads = static_cast<int>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(msb::RunExperiment(cfg, threads));
  }
  state.SetItemsProcessed(state.iterations() * cfg.runs * 2 * cfg.horizon);
}

}  // namespace

BENCHMARK(BM_Serial)->Arg(2000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Parallel)
    ->Args({2000, 2})
    ->Args({2000, 4})
    ->Args({2000, 8})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

BENCHMARK_MAIN();
