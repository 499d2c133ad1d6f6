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

#include <cmath>

#include "gtest/gtest.h"
#include "wmstream/errors.h"
#include "wmstream/oracle.h"

namespace wmstream::gen {
namespace {

GraphSnapshot Final(const Stream& s) { return Replay(s.header, s.updates); }

TEST(GenerateTest, SingleForestIsAForest) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    GenConfig c;
    c.family = Family::kForestUnion;
    c.n = 8;
    c.nu = 1;
    c.seed = seed;
    const Stream s = Generate(c);
    EXPECT_EQ(s.header.wmax, 1.0);
    EXPECT_EQ(s.updates.size(), 7u);  // spanning tree of K_8
    EXPECT_LE(oracle::Arboricity(Final(s)), 1);
  }
}

TEST(GenerateTest, GridThreeByThree) {
  GenConfig c;
  c.family = Family::kGrid;
  c.rows = 3;
  c.cols = 3;
  const Stream s = Generate(c);
  EXPECT_EQ(s.header.n, 9u);
  EXPECT_EQ(s.updates.size(), 12u);
  EXPECT_EQ(oracle::Arboricity(Final(s)), 2);
}

TEST(GenerateTest, EmptyErdosRenyi) {
  GenConfig c;
  c.family = Family::kErdosRenyi;
  c.n = 5;
  c.p = 0.0;
  const Stream s = Generate(c);
  EXPECT_TRUE(s.updates.empty());
  EXPECT_EQ(SerializeStream(s), "n 5 wmax 1 model insert-only\n");
}

TEST(GenerateTest, CompleteErdosRenyi) {
  GenConfig c;
  c.family = Family::kErdosRenyi;
  c.n = 6;
  c.p = 1.0;
  EXPECT_EQ(Generate(c).updates.size(), 15u);
}

TEST(GenerateTest, WeightDistributionsRespectRange) {
  for (WeightDist dist : {WeightDist::kUniformInt, WeightDist::kPowerLaw}) {
    GenConfig c;
    c.family = Family::kErdosRenyi;
    c.n = 12;
    c.p = 0.8;
    c.weights = dist;
    c.wmax = 64;
    c.alpha = 1.5;
    c.seed = 3;
    const Stream s = Generate(c);
    EXPECT_EQ(s.header.wmax, 64.0);
    bool saw_above_one = false;
    for (const auto& u : s.updates) {
      EXPECT_GE(u.w, 1.0);
      EXPECT_LE(u.w, 64.0);
      if (dist == WeightDist::kUniformInt) EXPECT_EQ(u.w, std::floor(u.w));
      saw_above_one |= u.w > 1.0;
    }
    EXPECT_TRUE(saw_above_one);
  }
}

TEST(GenerateTest, Orderings) {
  GenConfig c;
  c.family = Family::kErdosRenyi;
  c.n = 9;
  c.p = 0.7;
  c.weights = WeightDist::kUniformInt;
  c.wmax = 20;
  c.order = Order::kHeavyFirst;
  const Stream heavy = Generate(c);
  EXPECT_TRUE(std::is_sorted(heavy.updates.begin(), heavy.updates.end(),
                             [](const auto& a, const auto& b) { return a.w > b.w; }));
  c.order = Order::kLightFirst;
  const Stream light = Generate(c);
  EXPECT_TRUE(std::is_sorted(light.updates.begin(), light.updates.end(),
                             [](const auto& a, const auto& b) { return a.w < b.w; }));
  c.order = Order::kShuffled;
  const Stream shuffled = Generate(c);
  EXPECT_EQ(Final(shuffled), Final(light));
  EXPECT_EQ(Final(heavy), Final(light));
}

TEST(GenerateTest, RejectsBadConfig) {
  GenConfig c;
  c.nu = 0;
  EXPECT_THROW(Generate(c), Error);
  c = GenConfig{};
  c.family = Family::kErdosRenyi;
  c.p = 1.5;
  EXPECT_THROW(Generate(c), Error);
  c = GenConfig{};
  c.weights = WeightDist::kUniformInt;
  c.wmax = 0.5;
  EXPECT_THROW(Generate(c), Error);
  c = GenConfig{};
  c.churn = 1.5;
  EXPECT_THROW(Generate(c), Error);
}

TEST(GenerateTest, PureFunctionOfConfig) {
  GenConfig c;
  c.family = Family::kForestUnion;
  c.n = 10;
  c.nu = 3;
  c.weights = WeightDist::kPowerLaw;
  c.wmax = 100;
  c.order = Order::kShuffled;
  c.churn = 0.5;
  c.seed = 12345;
  EXPECT_EQ(SerializeStream(Generate(c)), SerializeStream(Generate(c)));
  GenConfig other = c;
  other.seed = 12346;
  EXPECT_NE(SerializeStream(Generate(c)), SerializeStream(Generate(other)));
}

TEST(GenerateTest, ForestUnionArboricityBound) {
  for (int nu = 1; nu <= 4; ++nu) {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
      GenConfig c;
      c.family = Family::kForestUnion;
      c.n = 4 + static_cast<VertexId>(seed % 9);
      c.nu = nu;
      c.seed = seed;
      EXPECT_LE(oracle::Arboricity(Final(Generate(c))), nu);
    }
  }
}

TEST(DynamifyTest, ZeroChurnIsIdentity) {
  const std::vector<StreamUpdate> in{{UpdateOp::kInsert, 1, 2, 1},
                                     {UpdateOp::kInsert, 3, 4, 2}};
  EXPECT_EQ(Dynamify(in, 0.0, 5), in);
}

TEST(DynamifyTest, FullChurnOnTwoEdges) {
  const StreamHeader h{4, 2.0, StreamModel::kDynamic};
  const std::vector<StreamUpdate> in{{UpdateOp::kInsert, 1, 2, 1},
                                     {UpdateOp::kInsert, 3, 4, 2}};
  const auto out = Dynamify(in, 1.0, 5);
  EXPECT_EQ(out.size(), 6u);
  EXPECT_EQ(Replay(h, out), Replay(h, in));
}

TEST(DynamifyTest, RejectsDeletesInInput) {
  const std::vector<StreamUpdate> in{{UpdateOp::kInsert, 1, 2, 1},
                                     {UpdateOp::kDelete, 1, 2, 1}};
  EXPECT_THROW(Dynamify(in, 0.5, 1), Error);
}

TEST(DynamifyTest, PreservesFinalSnapshot) {
  for (double churn : {0.1, 0.25, 0.5, 0.75, 1.0}) {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      GenConfig c;
      c.family = Family::kErdosRenyi;
      c.n = 10;
      c.p = 0.4;
      c.weights = WeightDist::kUniformInt;
      c.wmax = 9;
      c.seed = seed;
      const Stream s = Generate(c);
      const auto dyn = Dynamify(s.updates, churn, seed * 7 + 1);
      StreamHeader h = s.header;
      h.model = StreamModel::kDynamic;
      EXPECT_EQ(Replay(h, dyn), Replay(s.header, s.updates));
      const std::size_t churned = static_cast<std::size_t>(
          std::llround(churn * static_cast<double>(s.updates.size())));
      EXPECT_EQ(dyn.size(), s.updates.size() + 2 * churned);
    }
  }
}

TEST(GenerateTest, ChurnProducesDynamicHeader) {
  GenConfig c;
  c.family = Family::kGrid;
  c.rows = 2;
  c.cols = 3;
  c.churn = 1.0;
  const Stream s = Generate(c);
  EXPECT_EQ(s.header.model, StreamModel::kDynamic);
  EXPECT_EQ(s.updates.size(), 21u);
  EXPECT_EQ(Final(s).edges.size(), 7u);
  EXPECT_NO_THROW(ParseStream(SerializeStream(s)));
}

}  // namespace
}  // namespace wmstream::gen
