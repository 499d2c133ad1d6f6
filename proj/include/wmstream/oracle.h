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

#ifndef WMSTREAM_ORACLE_H_
#define WMSTREAM_ORACLE_H_

#include <cstddef>
#include <vector>

#include "wmstream/stream.h"

namespace wmstream::oracle {

inline constexpr std::size_t kMaxEdges = 24;
inline constexpr VertexId kMaxArboricityVertices = 12;

struct OracleResult {
  double value = 0.0;
  // Vertex-disjoint edges sorted by (u, v).
  std::vector<Edge> witness;
};

// Maximum weighted matching by exhaustive branch-and-bound. Among optimal
// matchings the witness is the lexicographically smallest sorted edge list.
// Throws kCapacity above kMaxEdges edges.
OracleResult ExactMwm(const GraphSnapshot& snapshot);

// ExactMwm on the unit-weighted graph.
OracleResult ExactMcm(const GraphSnapshot& snapshot);

// max over vertex subsets U, |U| >= 2, of ceil(|E(U)| / (|U| - 1)); 0 for an
// edgeless graph. Throws kCapacity when n exceeds kMaxArboricityVertices.
int Arboricity(const GraphSnapshot& snapshot);

bool IsMatching(const std::vector<Edge>& edges);

}  // namespace wmstream::oracle

#endif  // WMSTREAM_ORACLE_H_
