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

#include "msb/matroid.h"

#include <algorithm>
#include <numeric>
#include <string>

#include "msb/errors.h"

namespace msb {
namespace {

class UnionFind {
 public:
  explicit UnionFind(int size) : parent_(size) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int Find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // False when u and v were already connected.
  bool Union(int u, int v) {
    const int ru = Find(u);
    const int rv = Find(v);
    if (ru == rv) return false;
    parent_[ru] = rv;
    return true;
  }

 private:
  std::vector<int> parent_;
};

void CheckArmCount(int n) {
  if (n < 0 || n > kMaxArms) {
    throw MalformedInputError("ground set size " + std::to_string(n) +
                              " outside [0, 64]");
  }
}

// Incremental independence test used by the greedy scan: remembers the
// current set and answers "can x be added?" in amortized near-constant time.
class IncrementalOracle {
 public:
  explicit IncrementalOracle(const Matroid& m) : m_(m) {
    if (const auto* g = std::get_if<GraphicKind>(&m.kind())) {
      uf_.emplace_back(g->vertices);
    } else if (const auto* p = std::get_if<PartitionKind>(&m.kind())) {
      used_.assign(p->caps.size(), 0);
      block_of_.assign(m.n(), -1);
      for (std::size_t b = 0; b < p->blocks.size(); ++b) {
        for (int i : p->blocks[b]) block_of_[i] = static_cast<int>(b);
      }
    }
  }

  bool TryAdd(int x) {
    return std::visit(
        [&](const auto& kind) -> bool {
          using K = std::decay_t<decltype(kind)>;
          if constexpr (std::is_same_v<K, UniformKind>) {
            if (size_ >= kind.k) return false;
          } else if constexpr (std::is_same_v<K, PartitionKind>) {
            const int b = block_of_[x];
            if (used_[b] >= kind.caps[b]) return false;
            ++used_[b];
          } else {
            const auto [u, v] = kind.edges[x];
            if (!uf_.front().Union(u, v)) return false;
          }
          ++size_;
          return true;
        },
        m_.kind());
  }

 private:
  const Matroid& m_;
  int size_ = 0;
  std::vector<int> used_;
  std::vector<int> block_of_;
  std::vector<UnionFind> uf_;
};

template <typename W, typename Positive>
ActionSet GreedyScan(const Matroid& m, std::span<const W> weights,
                     ConstraintMode mode, Positive nonnegative) {
  if (static_cast<int>(weights.size()) != m.n()) {
    throw MalformedInputError("weight vector has length " +
                              std::to_string(weights.size()) + ", expected " +
                              std::to_string(m.n()));
  }
  std::vector<int> order(m.n());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return weights[a] > weights[b]; });

  ActionSet s;
  if (m.rank() == 0) return s;
  IncrementalOracle oracle(m);
  for (int x : order) {
    if (mode == ConstraintMode::kIndependentSets && !nonnegative(weights[x])) {
      break;
    }
    if (oracle.TryAdd(x)) {
      s = s.With(x);
      if (s.size() == m.rank()) break;
    }
  }
  return s;
}

}  // namespace

std::string_view ToString(ConstraintMode mode) {
  return mode == ConstraintMode::kBases ? "bases" : "independent";
}

ConstraintMode ParseConstraintMode(std::string_view name) {
  if (name == "bases") return ConstraintMode::kBases;
  if (name == "independent") return ConstraintMode::kIndependentSets;
  throw ConfigError("unknown constraint mode '" + std::string(name) +
                    "' (expected \"bases\" or \"independent\")");
}

Matroid::Matroid(int n, Kind kind) : n_(n), kind_(std::move(kind)) {
  rank_ = ComputeRank();
}

Matroid Matroid::Uniform(int n, int k) {
  CheckArmCount(n);
  if (k < 0 || k > n) {
    throw MalformedInputError("uniform matroid needs 0 <= k <= n, got k=" +
                              std::to_string(k) + " n=" + std::to_string(n));
  }
  return Matroid(n, UniformKind{k});
}

Matroid Matroid::Partition(std::vector<std::vector<int>> blocks,
                           std::vector<int> caps) {
  if (blocks.size() != caps.size()) {
    throw MalformedInputError("partition matroid has " +
                              std::to_string(blocks.size()) + " blocks but " +
                              std::to_string(caps.size()) + " caps");
  }
  int n = 0;
  for (const auto& b : blocks) n += static_cast<int>(b.size());
  CheckArmCount(n);
  std::vector<int> seen(n, 0);
  for (const auto& b : blocks) {
    for (int i : b) {
      if (i < 0 || i >= n || seen[i]++ > 0) {
        throw MalformedInputError(
            "partition blocks must cover 0..n-1 exactly once (bad index " +
            std::to_string(i) + ")");
      }
    }
  }
  for (int c : caps) {
    if (c < 0) throw MalformedInputError("partition caps must be >= 0");
  }
  return Matroid(n, PartitionKind{std::move(blocks), std::move(caps)});
}

Matroid Matroid::Graphic(int vertices, std::vector<std::pair<int, int>> edges) {
  if (vertices < 0) throw MalformedInputError("vertex count must be >= 0");
  const int n = static_cast<int>(edges.size());
  CheckArmCount(n);
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= vertices || v >= vertices || u == v) {
      throw MalformedInputError("bad edge (" + std::to_string(u) + "," +
                                std::to_string(v) + ") for " +
                                std::to_string(vertices) + " vertices");
    }
  }
  return Matroid(n, GraphicKind{vertices, std::move(edges)});
}

Matroid Matroid::CompleteGraph(int vertices) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < vertices; ++u) {
    for (int v = u + 1; v < vertices; ++v) edges.emplace_back(u, v);
  }
  return Graphic(vertices, std::move(edges));
}

int Matroid::ComputeRank() const {
  return std::visit(
      [&](const auto& kind) -> int {
        using K = std::decay_t<decltype(kind)>;
        if constexpr (std::is_same_v<K, UniformKind>) {
          return kind.k;
        } else if constexpr (std::is_same_v<K, PartitionKind>) {
          int r = 0;
          for (std::size_t b = 0; b < kind.blocks.size(); ++b) {
            r += std::min<int>(kind.caps[b], kind.blocks[b].size());
          }
          return r;
        } else {
          UnionFind uf(kind.vertices);
          int merged = 0;
          for (const auto& [u, v] : kind.edges) merged += uf.Union(u, v);
          // V minus the number of connected components.
          return merged;
        }
      },
      kind_);
}

bool Matroid::IsIndependent(ActionSet a) const {
  if (a.Span() > n_) {
    throw MalformedInputError("action " + a.ToString() +
                              " has an index outside [0, " +
                              std::to_string(n_) + ")");
  }
  return std::visit(
      [&](const auto& kind) -> bool {
        using K = std::decay_t<decltype(kind)>;
        if constexpr (std::is_same_v<K, UniformKind>) {
          return a.size() <= kind.k;
        } else if constexpr (std::is_same_v<K, PartitionKind>) {
          for (std::size_t b = 0; b < kind.blocks.size(); ++b) {
            int count = 0;
            for (int i : kind.blocks[b]) count += a.Contains(i);
            if (count > kind.caps[b]) return false;
          }
          return true;
        } else {
          UnionFind uf(kind.vertices);
          bool acyclic = true;
          a.ForEach([&](int e) {
            if (acyclic && !uf.Union(kind.edges[e].first, kind.edges[e].second)) {
              acyclic = false;
            }
          });
          return acyclic;
        }
      },
      kind_);
}

bool Matroid::IsBasis(ActionSet a) const {
  return a.size() == rank_ && IsIndependent(a);
}

bool Matroid::IsFeasible(ActionSet a, ConstraintMode mode) const {
  return mode == ConstraintMode::kBases ? IsBasis(a) : IsIndependent(a);
}

ActionSet Matroid::GroundSet() const {
  return ActionSet(n_ == 64 ? ~std::uint64_t{0}
                            : (std::uint64_t{1} << n_) - 1);
}

ActionSet LinearMaxGreedy(const Matroid& m, std::span<const double> weights,
                          ConstraintMode mode) {
  return GreedyScan(m, weights, mode, [](double w) { return w >= 0.0; });
}

ActionSet LinearMaxGreedy(const Matroid& m,
                          std::span<const ExtendedValue> weights,
                          ConstraintMode mode) {
  return GreedyScan(m, weights, mode,
                    [](const ExtendedValue& w) { return w >= ExtendedValue{}; });
}

std::vector<ActionSet> EnumerateFeasible(const Matroid& m,
                                         ConstraintMode mode) {
  if (m.n() > kMaxEnumerationArms) {
    throw CapacityError("enumeration limited to n <= 20, got n=" +
                        std::to_string(m.n()));
  }
  std::vector<ActionSet> out;
  const std::uint64_t limit = std::uint64_t{1} << m.n();
  for (std::uint64_t bits = 0; bits < limit; ++bits) {
    const ActionSet a(bits);
    if (mode == ConstraintMode::kBases && a.size() != m.rank()) continue;
    if (m.IsIndependent(a)) out.push_back(a);
  }
  return out;
}

}  // namespace msb
