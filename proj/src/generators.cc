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

#include "wmstream/generators.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <utility>

#include "wmstream/errors.h"

namespace wmstream::gen {
namespace {

// std::mt19937_64 output is fixed by the standard; the distributions in
// <random> are not, so sampling goes through these helpers to keep streams
// identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, bound).
  std::uint64_t Below(std::uint64_t bound) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

  // Uniform in [0, 1).
  double Unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  template <typename T>
  void Shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::swap(items[i - 1], items[Below(i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t Find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool Union(std::size_t a, std::size_t b) {
    a = Find(a);
    b = Find(b);
    if (a == b) return false;
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

using Pair = std::pair<VertexId, VertexId>;

std::vector<Pair> AllPairs(VertexId n) {
  std::vector<Pair> pairs;
  for (VertexId u = 1; u <= n; ++u) {
    for (VertexId v = u + 1; v <= n; ++v) pairs.emplace_back(u, v);
  }
  return pairs;
}

// Union of `nu` random spanning trees, each built by Kruskal over a random
// ordering of the complete graph's edges.
std::vector<Pair> ForestUnion(VertexId n, int nu, Rng& rng) {
  std::vector<Pair> out;
  std::set<Pair> seen;
  for (int f = 0; f < nu; ++f) {
    std::vector<Pair> pairs = AllPairs(n);
    rng.Shuffle(pairs);
    DisjointSets sets(n + 1);
    for (const Pair& p : pairs) {
      if (sets.Union(p.first, p.second) && seen.insert(p).second) {
        out.push_back(p);
      }
    }
  }
  return out;
}

std::vector<Pair> Grid(VertexId rows, VertexId cols) {
  std::vector<Pair> out;
  auto id = [cols](VertexId r, VertexId c) { return r * cols + c + 1; };
  for (VertexId r = 0; r < rows; ++r) {
    for (VertexId c = 0; c < cols; ++c) {
      if (c + 1 < cols) out.emplace_back(id(r, c), id(r, c + 1));
      if (r + 1 < rows) out.emplace_back(id(r, c), id(r + 1, c));
    }
  }
  return out;
}

std::vector<Pair> ErdosRenyi(VertexId n, double p, Rng& rng) {
  std::vector<Pair> out;
  for (const Pair& pair : AllPairs(n)) {
    if (rng.Unit() < p) out.push_back(pair);
  }
  return out;
}

double DrawWeight(const GenConfig& config, Rng& rng) {
  switch (config.weights) {
    case WeightDist::kConstant:
      return 1.0;
    case WeightDist::kUniformInt:
      return static_cast<double>(
          1 + rng.Below(static_cast<std::uint64_t>(config.wmax)));
    case WeightDist::kPowerLaw: {
      // Pareto with minimum 1, clamped into [1, W].
      const double u = rng.Unit();
      const double x = std::pow(1.0 - u, -1.0 / config.alpha);
      return std::clamp(x, 1.0, config.wmax);
    }
  }
  return 1.0;
}

double HeaderWmax(const GenConfig& config) {
  return config.weights == WeightDist::kConstant ? 1.0 : config.wmax;
}

[[noreturn]] void Bad(const std::string& what) {
  throw Error(ErrorKind::kParameter, what);
}

}  // namespace

std::string_view ToString(Family family) {
  switch (family) {
    case Family::kForestUnion: return "forest-union";
    case Family::kGrid: return "grid";
    case Family::kErdosRenyi: return "erdos-renyi";
  }
  return "";
}

std::string_view ToString(WeightDist dist) {
  switch (dist) {
    case WeightDist::kUniformInt: return "uniform-int";
    case WeightDist::kPowerLaw: return "powerlaw";
    case WeightDist::kConstant: return "constant";
  }
  return "";
}

std::string_view ToString(Order order) {
  switch (order) {
    case Order::kAsGenerated: return "as-generated";
    case Order::kShuffled: return "shuffled";
    case Order::kHeavyFirst: return "heavy-first";
    case Order::kLightFirst: return "light-first";
  }
  return "";
}

std::optional<Family> ParseFamily(std::string_view name) {
  for (Family f : {Family::kForestUnion, Family::kGrid, Family::kErdosRenyi}) {
    if (ToString(f) == name) return f;
  }
  return std::nullopt;
}

std::optional<WeightDist> ParseWeightDist(std::string_view name) {
  for (WeightDist d :
       {WeightDist::kUniformInt, WeightDist::kPowerLaw, WeightDist::kConstant}) {
    if (ToString(d) == name) return d;
  }
  return std::nullopt;
}

std::optional<Order> ParseOrder(std::string_view name) {
  for (Order o : {Order::kAsGenerated, Order::kShuffled, Order::kHeavyFirst,
                  Order::kLightFirst}) {
    if (ToString(o) == name) return o;
  }
  return std::nullopt;
}

void ValidateConfig(const GenConfig& config) {
  switch (config.family) {
    case Family::kForestUnion:
      if (config.n < 1) Bad("forest-union needs n >= 1");
      if (config.nu < 1) Bad("forest-union needs nu >= 1");
      break;
    case Family::kGrid:
      if (config.rows < 1 || config.cols < 1) Bad("grid needs rows, cols >= 1");
      break;
    case Family::kErdosRenyi:
      if (config.n < 1) Bad("erdos-renyi needs n >= 1");
      if (!(config.p >= 0.0 && config.p <= 1.0)) Bad("p must lie in [0, 1]");
      break;
  }
  if (config.weights != WeightDist::kConstant) {
    if (!std::isfinite(config.wmax) || config.wmax < 1.0) Bad("wmax must be >= 1");
    if (config.weights == WeightDist::kUniformInt && config.wmax != std::floor(config.wmax)) {
      Bad("uniform-int weights need an integer wmax");
    }
    if (config.weights == WeightDist::kPowerLaw && !(config.alpha > 0.0)) {
      Bad("power-law alpha must be positive");
    }
  }
  if (!(config.churn >= 0.0 && config.churn <= 1.0)) Bad("churn must lie in [0, 1]");
}

Stream Generate(const GenConfig& config) {
  ValidateConfig(config);
  Rng rng(config.seed);

  std::vector<Pair> pairs;
  VertexId n = config.n;
  switch (config.family) {
    case Family::kForestUnion:
      pairs = ForestUnion(config.n, config.nu, rng);
      break;
    case Family::kGrid:
      n = config.rows * config.cols;
      pairs = Grid(config.rows, config.cols);
      break;
    case Family::kErdosRenyi:
      pairs = ErdosRenyi(config.n, config.p, rng);
      break;
  }

  Stream stream;
  stream.header = StreamHeader{n, HeaderWmax(config), StreamModel::kInsertOnly};
  stream.updates.reserve(pairs.size());
  for (const Pair& p : pairs) {
    stream.updates.push_back(
        StreamUpdate{UpdateOp::kInsert, p.first, p.second, DrawWeight(config, rng)});
  }

  switch (config.order) {
    case Order::kAsGenerated:
      break;
    case Order::kShuffled:
      rng.Shuffle(stream.updates);
      break;
    case Order::kHeavyFirst:
      std::stable_sort(stream.updates.begin(), stream.updates.end(),
                       [](const auto& a, const auto& b) { return a.w > b.w; });
      break;
    case Order::kLightFirst:
      std::stable_sort(stream.updates.begin(), stream.updates.end(),
                       [](const auto& a, const auto& b) { return a.w < b.w; });
      break;
  }

  if (config.churn > 0.0) {
    stream.updates = Dynamify(stream.updates, config.churn, rng.Below(1ull << 62));
    stream.header.model = StreamModel::kDynamic;
  }
  return stream;
}

std::vector<StreamUpdate> Dynamify(std::span<const StreamUpdate> updates,
                                   double churn, std::uint64_t seed) {
  if (!(churn >= 0.0 && churn <= 1.0)) Bad("churn must lie in [0, 1]");
  for (const StreamUpdate& u : updates) {
    if (u.op != UpdateOp::kInsert) Bad("dynamify expects an insert-only stream");
  }
  const std::size_t m = updates.size();
  const auto churned = static_cast<std::size_t>(std::llround(churn * static_cast<double>(m)));
  if (churned == 0) return {updates.begin(), updates.end()};

  Rng rng(seed);
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), std::size_t{0});
  rng.Shuffle(order);
  std::vector<bool> chosen(m, false);
  for (std::size_t k = 0; k < churned; ++k) chosen[order[k]] = true;

  // Untouched inserts keep evenly spaced keys in their original order; each
  // churned edge gets three sorted random keys for insert, delete, re-insert.
  struct Keyed {
    double key;
    std::size_t seq;
    StreamUpdate update;
  };
  std::vector<Keyed> events;
  events.reserve(m + 2 * churned);
  for (std::size_t i = 0; i < m; ++i) {
    if (!chosen[i]) {
      events.push_back({(static_cast<double>(i) + 0.5) / static_cast<double>(m),
                        events.size(), updates[i]});
      continue;
    }
    double keys[3] = {rng.Unit(), rng.Unit(), rng.Unit()};
    std::sort(std::begin(keys), std::end(keys));
    StreamUpdate del = updates[i];
    del.op = UpdateOp::kDelete;
    events.push_back({keys[0], events.size(), updates[i]});
    events.push_back({keys[1], events.size(), del});
    events.push_back({keys[2], events.size(), updates[i]});
  }
  std::sort(events.begin(), events.end(), [](const Keyed& a, const Keyed& b) {
    return a.key != b.key ? a.key < b.key : a.seq < b.seq;
  });

  std::vector<StreamUpdate> out;
  out.reserve(events.size());
  for (const Keyed& e : events) out.push_back(e.update);
  return out;
}

}  // namespace wmstream::gen
