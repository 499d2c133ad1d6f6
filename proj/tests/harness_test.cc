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

#include "wmstream/harness.h"

#include <sstream>

#include "gtest/gtest.h"

namespace wmstream::harness {
namespace {

constexpr std::string_view kForestSuite = R"(# 100 forest-union instances
[run]
name=forests
family=forest-union
n=10
nu=2
weights=uniform-int
wmax=64
order=shuffled
epsilon=0.5
estimator=exact
repetitions=100
seed=1000
)";

TEST(ParseSuiteTest, ExpandsBlocksInDeclaredOrder) {
  const auto runs = ParseSuite(R"(
[run]
name=a
family=grid
rows=2
cols=3
epsilon=0.1, 1.0
estimator=exact,greedy
repetitions=2
seed=7
[run]
name=b
family=erdos-renyi
n=6
p=0.3
)");
  ASSERT_EQ(runs.size(), 9u);
  EXPECT_EQ(runs[0].block, "a");
  EXPECT_EQ(runs[0].epsilon, 0.1);
  EXPECT_EQ(runs[0].estimator, EstimatorKind::kExactOffline);
  EXPECT_EQ(runs[1].estimator, EstimatorKind::kGreedy);
  EXPECT_EQ(runs[2].epsilon, 1.0);
  EXPECT_EQ(runs[3].config.seed, 7u);
  EXPECT_EQ(runs[4].config.seed, 8u);
  EXPECT_EQ(runs[8].block, "b");
  EXPECT_EQ(runs[8].config.family, gen::Family::kErdosRenyi);
}

TEST(ParseSuiteTest, Errors) {
  EXPECT_THROW(ParseSuite("family=grid\n"), Error);
  EXPECT_THROW(ParseSuite("[run]\nfamily=tree\n"), Error);
  EXPECT_THROW(ParseSuite("[run]\nbogus=1\n"), Error);
  EXPECT_THROW(ParseSuite("[run]\nn=abc\n"), Error);
  EXPECT_THROW(ParseSuite("[run]\nno equals sign\n"), Error);
  EXPECT_TRUE(ParseSuite("# nothing\n").empty());
}

TEST(EvaluateTest, ForestSuiteWithinGuarantee) {
  const auto rows = EvaluateSuite(ParseSuite(kForestSuite), 2);
  ASSERT_EQ(rows.size(), 100u);
  for (const EvalRow& row : rows) {
    ASSERT_FALSE(row.error) << row.error_message;
    EXPECT_GE(row.ratio, 1.0);
    EXPECT_LE(row.ratio, 3.0 * (1 + 1e-9));
    EXPECT_EQ(row.bound, 3.0);
    EXPECT_TRUE(row.lemma1_ok);
    EXPECT_TRUE(row.obs_ok);
    EXPECT_TRUE(row.sandwich_ok);
    EXPECT_TRUE(row.contract_ok);
  }
}

TEST(EvaluateTest, EmptySuite) {
  const auto rows = EvaluateSuite({}, 4);
  EXPECT_TRUE(rows.empty());
  const std::string csv = RowsToCsv(rows);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 1);
  EXPECT_EQ(csv.rfind("run,block,family", 0), 0u);
  EXPECT_EQ(SuiteExitCode(rows), kExitOk);
}

TEST(EvaluateTest, GreedyOnDynamicIsCapabilityError) {
  const auto runs = ParseSuite(R"([run]
family=grid
rows=2
cols=2
churn=0.5
estimator=exact,greedy
)");
  const auto rows = EvaluateSuite(runs, 1);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_FALSE(rows[0].error);
  ASSERT_TRUE(rows[1].error);
  EXPECT_EQ(*rows[1].error, ErrorKind::kCapability);
  EXPECT_EQ(SuiteExitCode(rows), kExitCapability);
  const std::string csv = RowsToCsv(rows);
  EXPECT_NE(csv.find(",capability\n"), std::string::npos) << csv;
}

TEST(EvaluateTest, OversizedGraphIsCapacityError) {
  const auto rows = EvaluateSuite(ParseSuite("[run]\nfamily=erdos-renyi\nn=12\np=1\n"), 1);
  ASSERT_TRUE(rows[0].error);
  EXPECT_EQ(*rows[0].error, ErrorKind::kCapacity);
  EXPECT_EQ(SuiteExitCode(rows), kExitCapacity);
}

TEST(CsvTest, ColumnsFooterAndReproducibility) {
  const auto runs = ParseSuite(R"([run]
name=g
family=grid
rows=3
cols=3
weights=uniform-int
wmax=32
epsilon=0.5,1
estimator=exact,greedy
repetitions=3
seed=4
)");
  const std::string a = RowsToCsv(EvaluateSuite(runs, 1));
  const std::string b = RowsToCsv(EvaluateSuite(runs, 4));
  EXPECT_EQ(a, b);

  std::istringstream in(a);
  std::string header;
  std::getline(in, header);
  std::size_t fields = std::count(header.begin(), header.end(), ',') + 1;
  EXPECT_EQ(fields, kCsvColumns.size());
  std::string line;
  int rows = 0, footers = 0;
  while (std::getline(in, line)) {
    if (line.starts_with("#")) {
      ++footers;
      EXPECT_NE(line.find("max_ratio"), std::string::npos);
      continue;
    }
    ++rows;
    EXPECT_EQ(static_cast<std::size_t>(std::count(line.begin(), line.end(), ',')) + 1,
              fields)
        << line;
  }
  EXPECT_EQ(rows, 12);
  EXPECT_EQ(footers, 4);

  const std::string timed = RowsToCsv(EvaluateSuite(runs, 1), {.timing = true});
  EXPECT_NE(timed.find(",elapsed_ms\n"), std::string::npos);
}

}  // namespace
}  // namespace wmstream::harness
