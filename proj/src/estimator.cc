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

#include "wmstream/estimator.h"

#include <algorithm>
#include <string>

#include "wmstream/errors.h"
#include "wmstream/oracle.h"

namespace wmstream {
namespace {

void CheckVertices(VertexId n, VertexId u, VertexId v) {
  if (u < 1 || u > n || v < 1 || v > n || u == v) {
    throw Error(ErrorKind::kStream, "invalid edge (" + std::to_string(u) + ", " +
                                        std::to_string(v) + ") for n = " +
                                        std::to_string(n));
  }
}

}  // namespace

std::string_view ToString(EstimatorKind kind) {
  return kind == EstimatorKind::kExactOffline ? "exact" : "greedy";
}

std::optional<EstimatorKind> ParseEstimatorKind(std::string_view name) {
  if (name == "exact" || name == "exact-offline") return EstimatorKind::kExactOffline;
  if (name == "greedy") return EstimatorKind::kGreedy;
  return std::nullopt;
}

EstimatorSpec SpecFor(EstimatorKind kind, double delta_prime) {
  if (kind == EstimatorKind::kGreedy) return {2.0, delta_prime, false};
  return {1.0, delta_prime, true};
}

GreedyEstimator::GreedyEstimator(VertexId n, double delta_prime)
    : spec_(SpecFor(EstimatorKind::kGreedy, delta_prime)), matched_(n + 1, false) {}

void GreedyEstimator::Update(UpdateOp op, VertexId u, VertexId v) {
  if (op == UpdateOp::kDelete) {
    throw Error(ErrorKind::kCapability, "greedy estimator cannot process deletes");
  }
  CheckVertices(static_cast<VertexId>(matched_.size() - 1), u, v);
  if (matched_[u] || matched_[v]) return;
  matched_[u] = matched_[v] = true;
  matching_.emplace_back(u, v);
}

McmEstimate GreedyEstimator::Finalize() {
  return McmEstimate{static_cast<double>(matching_.size()), matching_.size(), spec_};
}

ExactOfflineEstimator::ExactOfflineEstimator(VertexId n, double delta_prime)
    : spec_(SpecFor(EstimatorKind::kExactOffline, delta_prime)), n_(n) {}

void ExactOfflineEstimator::Update(UpdateOp op, VertexId u, VertexId v) {
  CheckVertices(n_, u, v);
  const auto key = u < v ? std::pair{u, v} : std::pair{v, u};
  if (op == UpdateOp::kInsert) {
    ++multiplicity_[key];
    peak_ = std::max<std::uint64_t>(peak_, multiplicity_.size());
    return;
  }
  auto it = multiplicity_.find(key);
  if (it == multiplicity_.end()) {
    throw Error(ErrorKind::kStream, "multiplicity of edge (" +
                                        std::to_string(key.first) + ", " +
                                        std::to_string(key.second) +
                                        ") would drop below zero");
  }
  if (--it->second == 0) multiplicity_.erase(it);
}

McmEstimate ExactOfflineEstimator::Finalize() {
  GraphSnapshot snapshot{n_, {}};
  for (const auto& [key, count] : multiplicity_) {
    snapshot.edges.push_back(Edge{key.first, key.second, 1.0});
  }
  const oracle::OracleResult mcm = oracle::ExactMcm(snapshot);
  return McmEstimate{mcm.value, peak_, spec_};
}

std::unique_ptr<McmEstimator> MakeEstimator(EstimatorKind kind, VertexId n,
                                            double delta_prime,
                                            StreamModel model) {
  if (n < 1) throw Error(ErrorKind::kParameter, "estimator needs n >= 1");
  if (!(delta_prime > 0.0 && delta_prime < 1.0)) {
    throw Error(ErrorKind::kParameter, "delta' must lie in (0, 1)");
  }
  if (kind == EstimatorKind::kGreedy) {
    if (model == StreamModel::kDynamic) {
      throw Error(ErrorKind::kCapability,
                  "greedy estimator does not support dynamic streams");
    }
    return std::make_unique<GreedyEstimator>(n, delta_prime);
  }
  return std::make_unique<ExactOfflineEstimator>(n, delta_prime);
}

}  // namespace wmstream
