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

#ifndef WMSTREAM_ESTIMATOR_H_
#define WMSTREAM_ESTIMATOR_H_

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "wmstream/stream.h"

namespace wmstream {

enum class EstimatorKind { kExactOffline, kGreedy };

std::string_view ToString(EstimatorKind kind);
// Accepts "exact", "exact-offline" and "greedy".
std::optional<EstimatorKind> ParseEstimatorKind(std::string_view name);

// Guarantee of an MCM estimator: with probability at least 1 - delta_prime
// its value v satisfies v <= MCM <= lambda * v.
struct EstimatorSpec {
  double lambda = 1.0;
  double delta_prime = 0.5;
  bool supports_deletes = false;
};

struct McmEstimate {
  double value = 0.0;
  // Peak number of edge slots retained.
  std::uint64_t words_stored = 0;
  EstimatorSpec spec;
};

// Streaming estimator of the maximum cardinality matching size of an
// unweighted graph. One instance per substream; updates arrive in stream
// order from a single writer, and Finalize is called once.
class McmEstimator {
 public:
  virtual ~McmEstimator() = default;

  virtual void Update(UpdateOp op, VertexId u, VertexId v) = 0;
  virtual McmEstimate Finalize() = 0;
  virtual const EstimatorSpec& spec() const = 0;
};

// Keeps a maximal matching: an edge is taken iff both endpoints are free
// when it arrives. lambda = 2, insert-only.
class GreedyEstimator final : public McmEstimator {
 public:
  GreedyEstimator(VertexId n, double delta_prime);

  void Update(UpdateOp op, VertexId u, VertexId v) override;
  McmEstimate Finalize() override;
  const EstimatorSpec& spec() const override { return spec_; }

  const std::vector<std::pair<VertexId, VertexId>>& matching() const {
    return matching_;
  }

 private:
  EstimatorSpec spec_;
  std::vector<bool> matched_;
  std::vector<std::pair<VertexId, VertexId>> matching_;
};

// Retains every surviving edge and solves MCM exactly with the oracle at
// finalize. lambda = 1, supports deletes. Not sublinear: its words_stored
// counter reports the retained edge count.
class ExactOfflineEstimator final : public McmEstimator {
 public:
  ExactOfflineEstimator(VertexId n, double delta_prime);

  void Update(UpdateOp op, VertexId u, VertexId v) override;
  McmEstimate Finalize() override;
  const EstimatorSpec& spec() const override { return spec_; }

 private:
  EstimatorSpec spec_;
  VertexId n_;
  std::map<std::pair<VertexId, VertexId>, std::int64_t> multiplicity_;
  std::uint64_t peak_ = 0;
};

// Throws kCapability when the estimator cannot process `model` streams and
// kParameter for n < 1 or delta_prime outside (0, 1).
std::unique_ptr<McmEstimator> MakeEstimator(EstimatorKind kind, VertexId n,
                                            double delta_prime,
                                            StreamModel model);

EstimatorSpec SpecFor(EstimatorKind kind, double delta_prime);

}  // namespace wmstream

#endif  // WMSTREAM_ESTIMATOR_H_
