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

#include "msb/experiment.h"

#include <omp.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <set>
#include <sstream>
#include <system_error>

#include "msb/errors.h"
#include "msb/json_io.h"
#include "msb/rng.h"

namespace msb {
namespace {

using json_io::Json;

std::string Child(const std::string& path, std::string_view key) {
  return path + "/" + std::string(key);
}

[[noreturn]] void Fail(const std::string& path, const std::string& what) {
  throw ConfigError(path + ": " + what);
}

std::vector<double> ReadPerArm(const Json& j, const std::string& path, int n) {
  if (j.is_number()) {
    return std::vector<double>(n, json_io::ReadNumber(j, path));
  }
  std::vector<double> v = json_io::ReadNumberArray(j, path);
  if (static_cast<int>(v.size()) != n) {
    Fail(path, "expected " + std::to_string(n) + " entries, got " +
                   std::to_string(v.size()));
  }
  return v;
}

AlgorithmConfig ReadAlgorithm(const Json& j, const std::string& path, int m,
                              ConstraintMode mode) {
  AlgorithmConfig out;
  if (j.is_string()) {
    try {
      out.policy = Policy::Default(ParsePolicyKind(j.get<std::string>()), m);
    } catch (const ConfigError& e) {
      Fail(path, e.what());
    }
  } else {
    json_io::CheckKeys(j, path,
                       {"name", "label", "bonus", "epsilon", "kappa", "eta"});
    const std::string name =
        json_io::ReadString(json_io::Require(j, path, "name"), Child(path, "name"));
    try {
      out.policy = Policy::Default(ParsePolicyKind(name), m);
    } catch (const ConfigError& e) {
      Fail(Child(path, "name"), e.what());
    }
    if (j.contains("label")) {
      out.label = json_io::ReadString(j["label"], Child(path, "label"));
    }
    if (j.contains("bonus")) {
      out.policy.bonus = json_io::ReadBonusSpec(j["bonus"], Child(path, "bonus"),
                                                out.policy.bonus);
    }
    if (j.contains("epsilon")) {
      out.policy.epsilon = json_io::ReadNumber(j["epsilon"], Child(path, "epsilon"));
    }
    if (j.contains("kappa")) {
      out.policy.kappa = json_io::ReadNumber(j["kappa"], Child(path, "kappa"));
    }
    if (j.contains("eta")) {
      out.policy.eta = json_io::ReadNumber(j["eta"], Child(path, "eta"));
    }
  }
  if (out.label.empty()) out.label = std::string(ToString(out.policy.kind));
  if (out.policy.kind == PolicyKind::kBudgetedRatio) {
    Fail(path, "budgeted_ratio has no regret experiment; use the budgeted API");
  }
  try {
    out.policy.CheckCompatible(mode);
  } catch (const ConfigError& e) {
    Fail(path, e.what());
  }
  return out;
}

ExperimentConfig FromJson(const Json& root) {
  const std::string top;
  json_io::CheckKeys(root, top,
                     {"matroid", "mode", "means", "gap", "sigma", "horizon",
                      "runs", "seed", "algorithms", "checkpoints"});
  ExperimentConfig cfg;
  const Json& means = json_io::Require(root, top, "means");
  if (means.is_string()) {
    const std::string preset = means.get<std::string>();
    double gap = 0.1;
    if (root.contains("gap")) gap = json_io::ReadNumber(root["gap"], "/gap");
    if (preset == "bases_k5") {
      cfg.env = BasesK5(gap);
    } else if (preset == "independent_k5") {
      cfg.env = IndependentK5(gap);
    } else {
      Fail("/means", "unknown preset '" + preset + "'");
    }
    if (root.contains("matroid")) {
      Fail("/matroid", "a preset fixes the matroid");
    }
    if (root.contains("mode") &&
        json_io::ReadString(root["mode"], "/mode") != ToString(cfg.env.mode)) {
      Fail("/mode", "preset " + preset + " uses mode " +
                        std::string(ToString(cfg.env.mode)));
    }
  } else {
    if (root.contains("gap")) Fail("/gap", "only valid with a preset");
    cfg.env.matroid =
        json_io::ReadMatroid(json_io::Require(root, top, "matroid"), "/matroid");
    try {
      cfg.env.mode = ParseConstraintMode(
          json_io::ReadString(json_io::Require(root, top, "mode"), "/mode"));
    } catch (const ConfigError& e) {
      Fail("/mode", e.what());
    }
    cfg.env.mu_star = ReadPerArm(means, "/means", cfg.env.matroid.n());
    if (means.is_number()) Fail("/means", "expected an array or a preset name");
    cfg.env.sigma.assign(cfg.env.matroid.n(), 1.0);
  }
  if (root.contains("sigma")) {
    cfg.env.sigma = ReadPerArm(root["sigma"], "/sigma", cfg.env.matroid.n());
  }
  try {
    cfg.env.Validate();
  } catch (const MalformedInputError& e) {
    Fail("/", e.what());
  }

  cfg.horizon = json_io::ReadInt(json_io::Require(root, top, "horizon"), "/horizon");
  if (cfg.horizon < 1) Fail("/horizon", "must be >= 1");
  if (root.contains("runs")) {
    cfg.runs = static_cast<int>(json_io::ReadInt(root["runs"], "/runs"));
    if (cfg.runs < 1) Fail("/runs", "must be >= 1");
  }
  if (root.contains("seed")) cfg.seed = json_io::ReadUint64(root["seed"], "/seed");

  const Json& algs = json_io::Require(root, top, "algorithms");
  if (!algs.is_array() || algs.empty()) {
    Fail("/algorithms", "expected a nonempty array");
  }
  std::set<std::string> labels;
  for (std::size_t i = 0; i < algs.size(); ++i) {
    const std::string path = "/algorithms/" + std::to_string(i);
    AlgorithmConfig a =
        ReadAlgorithm(algs[i], path, cfg.env.matroid.rank(), cfg.env.mode);
    if (!labels.insert(a.label).second) {
      Fail(path, "duplicate label '" + a.label + "'");
    }
    if (a.label.find_first_of(",\"\n\r") != std::string::npos) {
      Fail(path, "label must not contain commas, quotes or newlines");
    }
    cfg.algorithms.push_back(std::move(a));
  }

  if (root.contains("checkpoints")) {
    const Json& cp = root["checkpoints"];
    if (cp.is_object()) {
      json_io::CheckKeys(cp, "/checkpoints", {"count"});
      const auto count = json_io::ReadInt(
          json_io::Require(cp, "/checkpoints", "count"), "/checkpoints/count");
      if (count < 1) Fail("/checkpoints/count", "must be >= 1");
      cfg.checkpoints = DefaultCheckpoints(cfg.horizon, static_cast<int>(count));
    } else {
      if (!cp.is_array()) Fail("/checkpoints", "expected an array or {count}");
      for (std::size_t i = 0; i < cp.size(); ++i) {
        const std::string path = "/checkpoints/" + std::to_string(i);
        const std::int64_t r = json_io::ReadInt(cp[i], path);
        if (r < 1 || r > cfg.horizon) Fail(path, "must lie in [1, horizon]");
        if (!cfg.checkpoints.empty() && r <= cfg.checkpoints.back()) {
          Fail(path, "checkpoints must increase");
        }
        cfg.checkpoints.push_back(r);
      }
      if (cfg.checkpoints.empty() || cfg.checkpoints.back() != cfg.horizon) {
        cfg.checkpoints.push_back(cfg.horizon);
      }
    }
  } else {
    cfg.checkpoints = DefaultCheckpoints(cfg.horizon);
  }
  return cfg;
}

RegretTrace RunOne(const ExperimentConfig& cfg, std::size_t alg, int run) {
  return RunSimulation(cfg.env, cfg.algorithms[alg].policy, cfg.horizon,
                       DeriveSeed(cfg.seed, static_cast<std::uint64_t>(run)),
                       cfg.checkpoints);
}

// Fold traces[alg * runs + k] into rows.
std::vector<ResultRow> Collect(const ExperimentConfig& cfg,
                               const std::vector<RegretTrace>& traces) {
  std::vector<ResultRow> rows;
  const auto runs = static_cast<std::size_t>(cfg.runs);
  for (std::size_t a = 0; a < cfg.algorithms.size(); ++a) {
    std::span<const RegretTrace> slice(traces.data() + a * runs, runs);
    std::vector<ResultRow> part = Aggregate(cfg.algorithms[a].label, slice);
    rows.insert(rows.end(), part.begin(), part.end());
  }
  std::stable_sort(rows.begin(), rows.end(), [](const auto& x, const auto& y) {
    if (x.algorithm != y.algorithm) return x.algorithm < y.algorithm;
    return x.round < y.round;
  });
  return rows;
}

[[noreturn]] void RethrowWithRun(const ExperimentConfig& cfg, std::size_t task,
                                 std::exception_ptr error) {
  const std::size_t runs = static_cast<std::size_t>(cfg.runs);
  const std::string where = "algorithm '" + cfg.algorithms[task / runs].label +
                            "' run " + std::to_string(task % runs) + ": ";
  try {
    std::rethrow_exception(error);
  } catch (const ConfigError& e) {
    throw ConfigError(where + e.what());
  } catch (const NumericalError& e) {
    throw NumericalError(where + e.what());
  } catch (const std::exception& e) {
    throw Error(where + e.what());
  }
}

void AppendDouble(std::string& out, double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  out.append(buf, res.ptr);
}

}  // namespace

ExperimentConfig ParseConfigText(std::string_view text,
                                 std::string_view source) {
  return FromJson(json_io::ParseText(text, source));
}

ExperimentConfig ParseConfig(const std::string& path) {
  return FromJson(json_io::ReadFile(path));
}

std::vector<ResultRow> Aggregate(std::string_view label,
                                 std::span<const RegretTrace> traces) {
  std::vector<ResultRow> rows;
  if (traces.empty()) return rows;
  const auto& checkpoints = traces.front().checkpoints;
  for (const auto& t : traces) {
    if (t.checkpoints != checkpoints) {
      throw MalformedInputError("traces disagree on checkpoints");
    }
  }
  for (std::size_t c = 0; c < checkpoints.size(); ++c) {
    // Welford.
    double mean = 0.0;
    double m2 = 0.0;
    std::int64_t k = 0;
    for (const auto& t : traces) {
      ++k;
      const double x = t.cum_regret[c];
      const double d = x - mean;
      mean += d / static_cast<double>(k);
      m2 += d * (x - mean);
    }
    ResultRow row;
    row.algorithm = std::string(label);
    row.round = checkpoints[c];
    row.mean_regret = mean;
    row.std_regret =
        k > 1 ? std::sqrt(std::max(0.0, m2 / static_cast<double>(k - 1))) : 0.0;
    row.runs = static_cast<int>(k);
    rows.push_back(std::move(row));
  }
  return rows;
}

int DefaultThreadCount() {
  if (const char* env = std::getenv("MSB_THREADS")) {
    int v = 0;
    const std::string_view s(env);
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec == std::errc() && res.ptr == s.data() + s.size() && v > 0) {
      return v;
    }
  }
  return std::max(1, omp_get_max_threads());
}

std::vector<ResultRow> RunExperiment(const ExperimentConfig& cfg,
                                     int threads) {
  if (threads <= 0) threads = DefaultThreadCount();
  const std::size_t tasks = cfg.algorithms.size() * cfg.runs;
  std::vector<RegretTrace> traces(tasks);
  std::vector<std::exception_ptr> errors(tasks);
  const auto count = static_cast<std::int64_t>(tasks);
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (std::int64_t i = 0; i < count; ++i) {
    const auto task = static_cast<std::size_t>(i);
    try {
      traces[task] = RunOne(cfg, task / cfg.runs,
                            static_cast<int>(task % cfg.runs));
    } catch (...) {
      errors[task] = std::current_exception();
    }
  }
  // Lowest failing task wins, as in the serial path.
  for (std::size_t task = 0; task < tasks; ++task) {
    if (errors[task]) RethrowWithRun(cfg, task, errors[task]);
  }
  return Collect(cfg, traces);
}

std::vector<ResultRow> RunExperimentSerial(const ExperimentConfig& cfg) {
  const std::size_t tasks = cfg.algorithms.size() * cfg.runs;
  std::vector<RegretTrace> traces(tasks);
  for (std::size_t task = 0; task < tasks; ++task) {
    try {
      traces[task] = RunOne(cfg, task / cfg.runs,
                            static_cast<int>(task % cfg.runs));
    } catch (...) {
      RethrowWithRun(cfg, task, std::current_exception());
    }
  }
  return Collect(cfg, traces);
}

std::string FormatCsv(std::vector<ResultRow> rows) {
  std::stable_sort(rows.begin(), rows.end(), [](const auto& x, const auto& y) {
    if (x.algorithm != y.algorithm) return x.algorithm < y.algorithm;
    return x.round < y.round;
  });
  std::string out(kCsvHeader);
  out += '\n';
  for (const auto& r : rows) {
    out += r.algorithm;
    out += ',';
    out += std::to_string(r.round);
    out += ',';
    AppendDouble(out, r.mean_regret);
    out += ',';
    AppendDouble(out, r.std_regret);
    out += ',';
    out += std::to_string(r.runs);
    out += '\n';
  }
  return out;
}

void WriteCsv(const std::vector<ResultRow>& rows, const std::string& path) {
  const std::string text = FormatCsv(rows);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(path + ": cannot open for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  out.close();
  if (!out) throw Error(path + ": write failed");
}

std::vector<ResultRow> ParseCsv(std::string_view text) {
  std::vector<ResultRow> rows;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const std::size_t nl = text.find('\n');
    if (nl == std::string_view::npos) {
      throw MalformedInputError("csv: missing final newline");
    }
    const std::string_view line = text.substr(0, nl);
    text.remove_prefix(nl + 1);
    ++line_no;
    if (line_no == 1) {
      if (line != kCsvHeader) throw MalformedInputError("csv: bad header");
      continue;
    }
    std::vector<std::string_view> cells;
    std::size_t start = 0;
    for (;;) {
      const std::size_t comma = line.find(',', start);
      cells.push_back(line.substr(start, comma - start));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    const std::string where = "csv line " + std::to_string(line_no);
    if (cells.size() != 5) throw MalformedInputError(where + ": expected 5 cells");
    auto parse = [&where](std::string_view s, auto& value) {
      const auto res = std::from_chars(s.data(), s.data() + s.size(), value);
      if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
        throw MalformedInputError(where + ": bad number '" + std::string(s) + "'");
      }
    };
    ResultRow row;
    row.algorithm = std::string(cells[0]);
    parse(cells[1], row.round);
    parse(cells[2], row.mean_regret);
    parse(cells[3], row.std_regret);
    parse(cells[4], row.runs);
    rows.push_back(std::move(row));
  }
  if (line_no == 0) throw MalformedInputError("csv: empty input");
  return rows;
}

}  // namespace msb
