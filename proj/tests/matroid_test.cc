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

#include <random>

#include "doctest.h"
#include "msb/errors.h"
#include "msb/matroid.h"
#include "oracles.h"

namespace msb {
namespace {

ActionSet Set(std::initializer_list<int> xs) {
  std::vector<int> v(xs);
  return ActionSet::FromIndices(v);
}

TEST_CASE("action set basics") {
  const ActionSet a = Set({0, 2});
  CHECK(a.size() == 2);
  CHECK(a.ToString() == "{0,2}");
  CHECK(a.Span() == 3);
  CHECK((a | Set({1})) == Set({0, 1, 2}));
  CHECK((a - Set({0})) == Set({2}));
  CHECK(ActionSet().ToString() == "{}");
  std::vector<int> bad{64};
  CHECK_THROWS_AS(ActionSet::FromIndices(bad), MalformedInputError);
}

TEST_CASE("uniform matroid examples") {
  const Matroid u = Matroid::Uniform(4, 2);
  CHECK(u.rank() == 2);
  CHECK(u.IsIndependent(Set({0, 3})));
  CHECK_FALSE(u.IsIndependent(Set({0, 1, 3})));
  CHECK(u.IsIndependent(ActionSet()));
  CHECK(u.IsBasis(Set({1, 2})));
  CHECK_FALSE(u.IsBasis(Set({1})));
  CHECK_THROWS_AS(Matroid::Uniform(2, 3), MalformedInputError);
  CHECK_THROWS_AS(u.IsIndependent(Set({4})), MalformedInputError);
}

TEST_CASE("partition matroid examples") {
  const Matroid p = Matroid::Partition({{0, 1}, {2, 3, 4}}, {1, 2});
  CHECK(p.rank() == 3);
  CHECK(p.IsIndependent(Set({0, 2, 4})));
  CHECK_FALSE(p.IsIndependent(Set({0, 1})));
  CHECK_THROWS_AS(Matroid::Partition({{0, 1}, {1}}, {1, 1}),
                  MalformedInputError);
  CHECK_THROWS_AS(Matroid::Partition({{0}}, {1, 1}), MalformedInputError);
}

TEST_CASE("graphic matroid on K4") {
  const Matroid k4 = Matroid::CompleteGraph(4);
  CHECK(k4.n() == 6);
  CHECK(k4.rank() == 3);
  // Edges: 0=(0,1) 1=(0,2) 2=(0,3) 3=(1,2) 4=(1,3) 5=(2,3).
  CHECK(k4.IsBasis(Set({0, 1, 2})));
  CHECK_FALSE(k4.IsIndependent(Set({0, 1, 3})));  // triangle 0-1-2
  CHECK_THROWS_AS(Matroid::Graphic(3, {{1, 1}}), MalformedInputError);
}

TEST_CASE("graphic rank counts components") {
  // Two disjoint edges on 5 vertices plus an isolated vertex.
  const Matroid g = Matroid::Graphic(5, {{0, 1}, {2, 3}, {0, 1}});
  CHECK(g.rank() == 2);
  CHECK(g.IsIndependent(Set({0, 1})));
  CHECK_FALSE(g.IsIndependent(Set({0, 2})));  // parallel pair
}

TEST_CASE("linear greedy examples") {
  const Matroid u = Matroid::Uniform(3, 2);
  const std::vector<double> w{3, 1, 2};
  CHECK(LinearMaxGreedy(u, w, ConstraintMode::kBases) == Set({0, 2}));
  const std::vector<double> neg{3, -1, -2};
  CHECK(LinearMaxGreedy(u, neg, ConstraintMode::kIndependentSets) ==
        Set({0}));
  CHECK(LinearMaxGreedy(u, neg, ConstraintMode::kBases) == Set({0, 1}));
  // Ties go to the lowest index.
  const std::vector<double> tie{1, 1, 1};
  CHECK(LinearMaxGreedy(u, tie, ConstraintMode::kBases) == Set({0, 1}));
  const std::vector<double> short_w{1};
  CHECK_THROWS_AS(LinearMaxGreedy(u, short_w, ConstraintMode::kBases),
                  MalformedInputError);
}

TEST_CASE("extended value greedy prefers unexplored arms") {
  const Matroid u = Matroid::Uniform(3, 1);
  const std::vector<ExtendedValue> w{{0, 5.0}, {1, -1.0}, {0, 7.0}};
  CHECK(LinearMaxGreedy(u, w, ConstraintMode::kBases) == Set({1}));
}

TEST_CASE("enumeration matches the oracle and caps n") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const Matroid m = testing::RandomMatroid(rng, trial % 3, 8);
    CHECK(m.rank() == testing::OracleRank(m));
    for (auto mode : {ConstraintMode::kIndependentSets, ConstraintMode::kBases}) {
      std::vector<std::uint64_t> got;
      for (ActionSet a : EnumerateFeasible(m, mode)) got.push_back(a.bits());
      CHECK(got == testing::OracleFeasible(m, mode));
    }
  }
  CHECK_THROWS_AS(EnumerateFeasible(Matroid::Uniform(21, 2),
                                    ConstraintMode::kBases),
                  CapacityError);
}

TEST_CASE("independence agrees with the DFS oracle") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 90; ++trial) {
    const Matroid m = testing::RandomMatroid(rng, trial % 3, 10);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m.n()); ++mask) {
      REQUIRE(m.IsIndependent(ActionSet(mask)) ==
              testing::OracleIndependent(m, mask));
    }
  }
}

TEST_CASE("parse constraint mode") {
  CHECK(ParseConstraintMode("bases") == ConstraintMode::kBases);
  CHECK(ParseConstraintMode("independent") == ConstraintMode::kIndependentSets);
  CHECK_THROWS_AS(ParseConstraintMode("spanning"), ConfigError);
}

}  // namespace
}  // namespace msb
