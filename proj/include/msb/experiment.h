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

// Experiment configs, the run pool and CSV output.

#ifndef MSB_EXPERIMENT_H_
#define MSB_EXPERIMENT_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "msb/bandit.h"

namespace msb {

struct AlgorithmConfig {
  // CSV label; defaults to the policy name.
  std::string label;
  Policy policy;
};

struct ExperimentConfig {
  Environment env;
  std::int64_t horizon = 0;
  int runs = 1;
  std::uint64_t seed = 0;
  std::vector<AlgorithmConfig> algorithms;
  // Always ends at `horizon`.
  std::vector<std::int64_t> checkpoints;
};

// Throws ConfigError naming the offending JSON pointer.
ExperimentConfig ParseConfigText(std::string_view text,
                                 std::string_view source = "<config>");
ExperimentConfig ParseConfig(const std::string& path);

struct ResultRow {
  std::string algorithm;
  std::int64_t round = 0;
  double mean_regret = 0.0;
  double std_regret = 0.0;
  int runs = 0;

  bool operator==(const ResultRow&) const = default;
};

// Per checkpoint, the mean and sample standard deviation across traces
// (std 0 for a single trace). Traces must share their checkpoints.
std::vector<ResultRow> Aggregate(std::string_view label,
                                 std::span<const RegretTrace> traces);

// Worker count: MSB_THREADS when set to a positive integer, otherwise the
// OpenMP default.
int DefaultThreadCount();

// Runs every (algorithm, run) pair on up to `threads` workers (0 means
// DefaultThreadCount). Run k of every algorithm uses DeriveSeed(seed, k), so
// the output does not depend on the thread count.
std::vector<ResultRow> RunExperiment(const ExperimentConfig& cfg,
                                     int threads = 0);
// Single-threaded reference with the same output.
std::vector<ResultRow> RunExperimentSerial(const ExperimentConfig& cfg);

inline constexpr std::string_view kCsvHeader =
    "algorithm,round,mean_regret,std_regret,runs";

// Sorts by (algorithm, round) and renders shortest round-trip decimals.
std::string FormatCsv(std::vector<ResultRow> rows);
void WriteCsv(const std::vector<ResultRow>& rows, const std::string& path);
// Inverse of FormatCsv. Throws MalformedInputError.
std::vector<ResultRow> ParseCsv(std::string_view text);

}  // namespace msb

#endif  // MSB_EXPERIMENT_H_
