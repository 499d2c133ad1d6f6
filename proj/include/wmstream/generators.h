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

#ifndef WMSTREAM_GENERATORS_H_
#define WMSTREAM_GENERATORS_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wmstream/stream.h"

namespace wmstream::gen {

enum class Family { kForestUnion, kGrid, kErdosRenyi };
enum class WeightDist { kUniformInt, kPowerLaw, kConstant };
enum class Order { kAsGenerated, kShuffled, kHeavyFirst, kLightFirst };

std::string_view ToString(Family family);
std::string_view ToString(WeightDist dist);
std::string_view ToString(Order order);
std::optional<Family> ParseFamily(std::string_view name);
std::optional<WeightDist> ParseWeightDist(std::string_view name);
std::optional<Order> ParseOrder(std::string_view name);

struct GenConfig {
  Family family = Family::kForestUnion;
  VertexId n = 8;            // forest-union and erdos-renyi
  VertexId rows = 3;         // grid
  VertexId cols = 3;         // grid
  int nu = 1;                // forest-union: number of spanning forests
  double p = 0.5;            // erdos-renyi edge probability
  WeightDist weights = WeightDist::kConstant;
  double wmax = 1.0;         // W for uniform-int and power-law
  double alpha = 2.0;        // power-law tail exponent
  Order order = Order::kAsGenerated;
  double churn = 0.0;        // > 0 produces a dynamic stream via Dynamify
  std::uint64_t seed = 1;
};

// Throws kParameter on out-of-range fields.
void ValidateConfig(const GenConfig& config);

// Deterministic in `config` (including the seed). The header wmax is the
// weight distribution's largest support value.
Stream Generate(const GenConfig& config);

// Gives a `churn` fraction of the edges an extra delete and re-insert after
// their insert, at random positions. The replayed final graph is unchanged.
std::vector<StreamUpdate> Dynamify(std::span<const StreamUpdate> updates,
                                   double churn, std::uint64_t seed);

}  // namespace wmstream::gen

#endif  // WMSTREAM_GENERATORS_H_
