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

// JSON readers shared by experiment configs and solve instances. Every reader
// takes the JSON pointer of the value it parses and throws ConfigError naming
// that pointer on schema violations, including unknown keys.

#ifndef MSB_JSON_IO_H_
#define MSB_JSON_IO_H_

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "msb/bonus.h"
#include "msb/matroid.h"

namespace msb::json_io {

using Json = nlohmann::json;

// Parses text, reporting syntax errors with line and column.
Json ParseText(std::string_view text, std::string_view source);
Json ReadFile(const std::string& path);

// Rejects keys outside `allowed`.
void CheckKeys(const Json& j, const std::string& path,
               std::initializer_list<std::string_view> allowed);
const Json& Require(const Json& j, const std::string& path,
                    std::string_view key);

double ReadNumber(const Json& j, const std::string& path);
// Accepts a number or the string "inf".
double ReadExtendedNumber(const Json& j, const std::string& path);
std::int64_t ReadInt(const Json& j, const std::string& path);
std::uint64_t ReadUint64(const Json& j, const std::string& path);
std::string ReadString(const Json& j, const std::string& path);
std::vector<double> ReadNumberArray(const Json& j, const std::string& path);
std::vector<int> ReadIntArray(const Json& j, const std::string& path);

// {"type":"uniform","n":..,"k":..} | {"type":"partition","blocks":..,"caps":..}
// | {"type":"graphic","vertices":..,"edges":[[u,v],..]}
Matroid ReadMatroid(const Json& j, const std::string& path);

// {"p":"one"|"inf","family":"cucb"|"escb"|"escb_kl","r":x|"inf",
//  "scale":{"kind":...,"c":x}}. Missing fields keep `defaults`.
// Extra keys listed in `extra` are ignored here.
BonusSpec ReadBonusSpec(const Json& j, const std::string& path,
                        BonusSpec defaults,
                        std::initializer_list<std::string_view> extra = {});

// {"t":int,"counts":[..],"means":[..]} with means optional (zeros).
ArmStats ReadArmStats(const Json& j, const std::string& path, int n);

}  // namespace msb::json_io

#endif  // MSB_JSON_IO_H_
