// Copyright 2026 The wmstream Authors
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

#include "wmstream/oracle.h"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <string>
#include <tuple>

#include "wmstream/errors.h"

namespace wmstream::oracle {
namespace {

class MatchingSearch {
 public:
  explicit MatchingSearch(std::vector<Edge> edges) : edges_(std::move(edges)) {
    std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
      return std::tie(a.u, a.v) < std::tie(b.u, b.v);
    });
    suffix_.assign(edges_.size() + 1, 0.0);
    for (std::size_t i = edges_.size(); i-- > 0;) {
      suffix_[i] = suffix_[i + 1] + edges_[i].w;
    }
    for (const Edge& e : edges_) {
      used_.resize(std::max<std::size_t>(used_.size(), e.v + 1), false);
    }
  }

  OracleResult Solve() {
    Visit(0, 0.0);
    OracleResult result;
    result.value = best_value_;
    for (std::size_t idx : best_) result.witness.push_back(edges_[idx]);
    return result;
  }

 private:
  // Include-before-exclude over the sorted edges; only strict improvements
  // replace the incumbent, so the first optimum found is the lexicographically
  // smallest one. Weights are >= 1, so no optimum is a strict prefix of
  // another.
  void Visit(std::size_t i, double value) {
    if (found_ && value + suffix_[i] <= best_value_) return;
    if (i == edges_.size()) {
      if (!found_ || value > best_value_) {
        found_ = true;
        best_value_ = value;
        best_ = current_;
      }
      return;
    }
    const Edge& e = edges_[i];
    if (!used_[e.u] && !used_[e.v]) {
      used_[e.u] = used_[e.v] = true;
      current_.push_back(i);
      Visit(i + 1, value + e.w);
      current_.pop_back();
      used_[e.u] = used_[e.v] = false;
    }
    Visit(i + 1, value);
  }

  std::vector<Edge> edges_;
  std::vector<double> suffix_;
  std::vector<bool> used_;
  std::vector<std::size_t> current_;
  std::vector<std::size_t> best_;
  double best_value_ = 0.0;
  bool found_ = false;
};

void CheckEdgeCap(const GraphSnapshot& snapshot) {
  if (snapshot.edges.size() > kMaxEdges) {
    throw Error(ErrorKind::kCapacity,
                "oracle supports at most " + std::to_string(kMaxEdges) +
                    " edges, got " + std::to_string(snapshot.edges.size()));
  }
}

}  // namespace

OracleResult ExactMwm(const GraphSnapshot& snapshot) {
  CheckEdgeCap(snapshot);
  return MatchingSearch(snapshot.edges).Solve();
}

OracleResult ExactMcm(const GraphSnapshot& snapshot) {
  CheckEdgeCap(snapshot);
  std::vector<Edge> unit = snapshot.edges;
  for (Edge& e : unit) e.w = 1.0;
  return MatchingSearch(std::move(unit)).Solve();
}

int Arboricity(const GraphSnapshot& snapshot) {
  if (snapshot.n > kMaxArboricityVertices) {
    throw Error(ErrorKind::kCapacity,
                "arboricity check supports at most " +
                    std::to_string(kMaxArboricityVertices) + " vertices, got " +
                    std::to_string(snapshot.n));
  }
  if (snapshot.edges.empty()) return 0;

  // adjacency[v] has bit (u-1) set for every neighbour u of vertex v.
  std::vector<std::uint32_t> adjacency(snapshot.n, 0);
  for (const Edge& e : snapshot.edges) {
    adjacency[e.u - 1] |= 1u << (e.v - 1);
    adjacency[e.v - 1] |= 1u << (e.u - 1);
  }

  int best = 0;
  const std::uint32_t limit = 1u << snapshot.n;
  for (std::uint32_t subset = 1; subset < limit; ++subset) {
    const int size = std::popcount(subset);
    if (size < 2) continue;
    int twice_edges = 0;
    for (std::uint32_t rest = subset; rest != 0; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      twice_edges += std::popcount(adjacency[v] & subset);
    }
    const int edges = twice_edges / 2;
    const int density = (edges + size - 2) / (size - 1);
    best = std::max(best, density);
  }
  return best;
}

bool IsMatching(const std::vector<Edge>& edges) {
  std::set<VertexId> seen;
  for (const Edge& e : edges) {
    if (e.u == e.v) return false;
    if (!seen.insert(e.u).second || !seen.insert(e.v).second) return false;
  }
  return true;
}

}  // namespace wmstream::oracle
