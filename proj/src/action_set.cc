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

#include "msb/action_set.h"

#include "msb/errors.h"

namespace msb {

ActionSet ActionSet::FromIndices(std::span<const int> indices) {
  ActionSet a;
  for (int i : indices) {
    if (i < 0 || i >= kMaxArms) {
      throw MalformedInputError("arm index " + std::to_string(i) +
                                " outside [0, 64)");
    }
    a = a.With(i);
  }
  return a;
}

ActionSet ActionSet::Singleton(int i) {
  const int idx[] = {i};
  return FromIndices(idx);
}

std::vector<int> ActionSet::ToIndices() const {
  std::vector<int> out;
  out.reserve(size());
  ForEach([&](int i) { out.push_back(i); });
  return out;
}

std::string ActionSet::ToString() const {
  std::string s = "{";
  bool first = true;
  ForEach([&](int i) {
    if (!first) s += ",";
    s += std::to_string(i);
    first = false;
  });
  return s + "}";
}

double SumOver(std::span<const double> weights, ActionSet a) {
  double total = 0.0;
  a.ForEach([&](int i) { total += weights[i]; });
  return total;
}

}  // namespace msb
