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

#include "msb/json_io.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "msb/errors.h"

namespace msb::json_io {
namespace {

[[noreturn]] void Fail(const std::string& path, const std::string& what) {
  throw ConfigError((path.empty() ? std::string("/") : path) + ": " + what);
}

std::string Child(const std::string& path, std::string_view key) {
  return path + "/" + std::string(key);
}

std::string Child(const std::string& path, std::size_t index) {
  return path + "/" + std::to_string(index);
}

ScaleKind ParseScaleKind(const std::string& name, const std::string& path) {
  if (name == "log_plus_m") return ScaleKind::kLogPlusM;
  if (name == "c_log") return ScaleKind::kCLog;
  if (name == "log_plus_m_loglog") return ScaleKind::kLogPlusMLogLog;
  if (name == "log_plus_n_loglog") return ScaleKind::kLogPlusNLogLog;
  if (name == "constant") return ScaleKind::kConstant;
  Fail(path, "unknown scale kind '" + name + "'");
}

}  // namespace

Json ParseText(std::string_view text, std::string_view source) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    // Map the byte offset to a line/column pair.
    const std::size_t at = std::min<std::size_t>(e.byte, text.size());
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i + 1 < at; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::ostringstream msg;
    msg << source << ":" << line << ":" << column << ": invalid JSON ("
        << e.what() << ")";
    throw ConfigError(msg.str());
  }
}

Json ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError(path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return ParseText(buf.str(), path);
}

void CheckKeys(const Json& j, const std::string& path,
               std::initializer_list<std::string_view> allowed) {
  if (!j.is_object()) Fail(path, "expected an object");
  for (const auto& item : j.items()) {
    if (std::find(allowed.begin(), allowed.end(), item.key()) ==
        allowed.end()) {
      Fail(Child(path, item.key()), "unknown key");
    }
  }
}

const Json& Require(const Json& j, const std::string& path,
                    std::string_view key) {
  if (!j.is_object()) Fail(path, "expected an object");
  const auto it = j.find(std::string(key));
  if (it == j.end()) Fail(Child(path, key), "missing required field");
  return *it;
}

double ReadNumber(const Json& j, const std::string& path) {
  if (!j.is_number()) Fail(path, "expected a number");
  return j.get<double>();
}

double ReadExtendedNumber(const Json& j, const std::string& path) {
  if (j.is_string() && j.get<std::string>() == "inf") {
    return std::numeric_limits<double>::infinity();
  }
  if (!j.is_number()) Fail(path, "expected a number or \"inf\"");
  return j.get<double>();
}

std::int64_t ReadInt(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) Fail(path, "expected an integer");
  return j.get<std::int64_t>();
}

std::uint64_t ReadUint64(const Json& j, const std::string& path) {
  if (!j.is_number_unsigned()) Fail(path, "expected an unsigned integer");
  return j.get<std::uint64_t>();
}

std::string ReadString(const Json& j, const std::string& path) {
  if (!j.is_string()) Fail(path, "expected a string");
  return j.get<std::string>();
}

std::vector<double> ReadNumberArray(const Json& j, const std::string& path) {
  if (!j.is_array()) Fail(path, "expected an array of numbers");
  std::vector<double> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(ReadNumber(j[i], Child(path, i)));
  }
  return out;
}

std::vector<int> ReadIntArray(const Json& j, const std::string& path) {
  if (!j.is_array()) Fail(path, "expected an array of integers");
  std::vector<int> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(static_cast<int>(ReadInt(j[i], Child(path, i))));
  }
  return out;
}

Matroid ReadMatroid(const Json& j, const std::string& path) {
  const std::string type = ReadString(Require(j, path, "type"), Child(path, "type"));
  try {
    if (type == "uniform") {
      CheckKeys(j, path, {"type", "n", "k"});
      return Matroid::Uniform(
          static_cast<int>(ReadInt(Require(j, path, "n"), Child(path, "n"))),
          static_cast<int>(ReadInt(Require(j, path, "k"), Child(path, "k"))));
    }
    if (type == "partition") {
      CheckKeys(j, path, {"type", "blocks", "caps"});
      const Json& blocks = Require(j, path, "blocks");
      if (!blocks.is_array()) Fail(Child(path, "blocks"), "expected an array");
      std::vector<std::vector<int>> parsed;
      for (std::size_t b = 0; b < blocks.size(); ++b) {
        parsed.push_back(ReadIntArray(blocks[b], Child(Child(path, "blocks"), b)));
      }
      return Matroid::Partition(
          std::move(parsed),
          ReadIntArray(Require(j, path, "caps"), Child(path, "caps")));
    }
    if (type == "graphic") {
      CheckKeys(j, path, {"type", "vertices", "edges"});
      const Json& edges = Require(j, path, "edges");
      if (!edges.is_array()) Fail(Child(path, "edges"), "expected an array");
      std::vector<std::pair<int, int>> parsed;
      for (std::size_t e = 0; e < edges.size(); ++e) {
        const std::vector<int> uv =
            ReadIntArray(edges[e], Child(Child(path, "edges"), e));
        if (uv.size() != 2) {
          Fail(Child(Child(path, "edges"), e), "expected [u, v]");
        }
        parsed.emplace_back(uv[0], uv[1]);
      }
      return Matroid::Graphic(
          static_cast<int>(
              ReadInt(Require(j, path, "vertices"), Child(path, "vertices"))),
          std::move(parsed));
    }
  } catch (const MalformedInputError& e) {
    Fail(path, e.what());
  }
  Fail(Child(path, "type"), "unknown matroid type '" + type + "'");
}

BonusSpec ReadBonusSpec(const Json& j, const std::string& path,
                        BonusSpec defaults,
                        std::initializer_list<std::string_view> extra) {
  if (!j.is_object()) Fail(path, "expected an object");
  for (const auto& item : j.items()) {
    static constexpr std::string_view kKeys[] = {"p", "family", "r", "scale"};
    const bool known =
        std::find(std::begin(kKeys), std::end(kKeys), item.key()) !=
            std::end(kKeys) ||
        std::find(extra.begin(), extra.end(), item.key()) != extra.end();
    if (!known) Fail(Child(path, item.key()), "unknown key");
  }
  BonusSpec spec = defaults;
  if (j.contains("p")) {
    const std::string p = ReadString(j["p"], Child(path, "p"));
    if (p == "one") {
      spec.p = Norm::kOne;
    } else if (p == "inf") {
      spec.p = Norm::kInfinity;
    } else {
      Fail(Child(path, "p"), "expected \"one\" or \"inf\"");
    }
  }
  if (j.contains("family")) {
    const std::string f = ReadString(j["family"], Child(path, "family"));
    if (f == "cucb") {
      spec.family = Family::kQuadraticCucb;
    } else if (f == "escb") {
      spec.family = Family::kQuadraticEscb;
    } else if (f == "escb_kl") {
      spec.family = Family::kKl;
    } else {
      Fail(Child(path, "family"), "unknown family '" + f + "'");
    }
  }
  if (j.contains("r")) spec.r = ReadExtendedNumber(j["r"], Child(path, "r"));
  if (j.contains("scale")) {
    const std::string sp = Child(path, "scale");
    const Json& s = j["scale"];
    CheckKeys(s, sp, {"kind", "c"});
    if (s.contains("kind")) {
      spec.scale.kind =
          ParseScaleKind(ReadString(s["kind"], Child(sp, "kind")), Child(sp, "kind"));
    }
    if (s.contains("c")) spec.scale.c = ReadNumber(s["c"], Child(sp, "c"));
  }
  try {
    spec.Validate();
  } catch (const ConfigError& e) {
    Fail(path, e.what());
  }
  return spec;
}

ArmStats ReadArmStats(const Json& j, const std::string& path, int n) {
  CheckKeys(j, path, {"t", "counts", "means"});
  ArmStats s = ArmStats::Zero(n);
  s.t = ReadInt(Require(j, path, "t"), Child(path, "t"));
  const Json& counts = Require(j, path, "counts");
  if (!counts.is_array() || static_cast<int>(counts.size()) != n) {
    Fail(Child(path, "counts"), "expected " + std::to_string(n) + " counts");
  }
  for (int i = 0; i < n; ++i) {
    s.counts[i] = ReadInt(counts[i], Child(Child(path, "counts"), i));
    if (s.counts[i] < 0 || s.counts[i] > std::max<std::int64_t>(s.t, 0)) {
      Fail(Child(Child(path, "counts"), i), "count must lie in [0, t]");
    }
  }
  if (s.t < 0) Fail(Child(path, "t"), "must be >= 0");
  if (j.contains("means")) {
    s.means = ReadNumberArray(j["means"], Child(path, "means"));
    if (static_cast<int>(s.means.size()) != n) {
      Fail(Child(path, "means"), "expected " + std::to_string(n) + " means");
    }
    for (int i = 0; i < n; ++i) {
      if (s.counts[i] == 0 && s.means[i] != 0.0) {
        Fail(Child(Child(path, "means"), i),
             "mean of an unplayed arm must be 0");
      }
    }
  }
  return s;
}

}  // namespace msb::json_io
