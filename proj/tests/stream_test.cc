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

#include "wmstream/stream.h"

#include <random>

#include "gtest/gtest.h"
#include "wmstream/errors.h"

namespace wmstream {
namespace {

ErrorKind ParseErrorKind(std::string_view text) {
  try {
    ParseStream(text);
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "parsed without error:\n" << text;
  return ErrorKind::kIo;
}

TEST(ParseStreamTest, InsertOnly) {
  const Stream s = ParseStream("n 4 wmax 4 model insert-only\n+ 1 2 1\n+ 3 4 4\n");
  EXPECT_EQ(s.header, (StreamHeader{4, 4.0, StreamModel::kInsertOnly}));
  ASSERT_EQ(s.updates.size(), 2u);
  EXPECT_EQ(s.updates[1], (StreamUpdate{UpdateOp::kInsert, 3, 4, 4.0}));
}

TEST(ParseStreamTest, DynamicCancellation) {
  const Stream s = ParseStream("n 2 wmax 1 model dynamic\n+ 1 2 1\n- 1 2 1\n");
  EXPECT_EQ(s.header.model, StreamModel::kDynamic);
  ASSERT_EQ(s.updates.size(), 2u);
  EXPECT_TRUE(Replay(s.header, s.updates).edges.empty());
}

TEST(ParseStreamTest, CommentsBlankLinesAndCrlf) {
  const Stream s = ParseStream(
      "# leading comment\n\nn 3 wmax 2.5 model insert-only\r\n# x\n+ 3 1 2.5\r\n\n");
  ASSERT_EQ(s.updates.size(), 1u);
  EXPECT_EQ(s.updates[0].w, 2.5);
}

TEST(ParseStreamTest, DeleteInInsertOnlyStream) {
  EXPECT_EQ(ParseErrorKind("n 2 wmax 1 model insert-only\n- 1 2 1\n"),
            ErrorKind::kParse);
}

TEST(ParseStreamTest, ReportsLineNumber) {
  try {
    ParseStream("n 4 wmax 4 model insert-only\n+ 1 2 1\n# c\n+ 1 2 x\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("line 4"), std::string::npos) << e.what();
  }
}

TEST(ParseStreamTest, RejectsMalformedInput) {
  EXPECT_EQ(ParseErrorKind(""), ErrorKind::kParse);
  EXPECT_EQ(ParseErrorKind("n 0 wmax 1 model dynamic\n"), ErrorKind::kParse);
  EXPECT_EQ(ParseErrorKind("n 3 wmax 0.5 model dynamic\n"), ErrorKind::kParse);
  EXPECT_EQ(ParseErrorKind("n 3 wmax 1 model both\n"), ErrorKind::kParse);
  EXPECT_EQ(ParseErrorKind("n 3 wmax 1 model dynamic extra\n"), ErrorKind::kParse);
  EXPECT_EQ(ParseErrorKind("n 3 wmax 2 model dynamic\n* 1 2 1\n"), ErrorKind::kParse);
  EXPECT_EQ(ParseErrorKind("n 3 wmax 2 model dynamic\n+ 1 2\n"), ErrorKind::kParse);
  EXPECT_EQ(ParseErrorKind("n 3 wmax 2 model dynamic\n+ 1 1 1\n"), ErrorKind::kParse);
  EXPECT_EQ(ParseErrorKind("n 3 wmax 2 model dynamic\n+ 1 4 1\n"), ErrorKind::kParse);
  EXPECT_EQ(ParseErrorKind("n 3 wmax 2 model dynamic\n+ 0 2 1\n"), ErrorKind::kParse);
  EXPECT_EQ(ParseErrorKind("n 3 wmax 2 model dynamic\n+ 1 2 2.5\n"), ErrorKind::kParse);
  EXPECT_EQ(ParseErrorKind("n 3 wmax 2 model dynamic\n+ 1 2 0.5\n"), ErrorKind::kParse);
  EXPECT_EQ(ParseErrorKind("n 3 wmax 2 model dynamic\n+ 1 2 nan\n"), ErrorKind::kParse);
  EXPECT_EQ(ParseErrorKind("n 3 wmax 2 model dynamic\n+ -1 2 1\n"), ErrorKind::kParse);
}

TEST(ParseStreamTest, StrictModeMultisetViolations) {
  EXPECT_EQ(ParseErrorKind("n 3 wmax 2 model dynamic\n+ 1 2 1\n+ 2 1 1\n"),
            ErrorKind::kStream);
  EXPECT_EQ(ParseErrorKind("n 3 wmax 2 model dynamic\n- 1 2 1\n"), ErrorKind::kStream);
  EXPECT_EQ(ParseErrorKind("n 3 wmax 2 model dynamic\n+ 1 2 1\n- 1 2 2\n"),
            ErrorKind::kStream);
  // Non-strict parsing accepts the same text.
  EXPECT_NO_THROW(ParseStream("n 3 wmax 2 model dynamic\n+ 1 2 1\n+ 2 1 1\n",
                              ParseOptions{.strict = false}));
}

TEST(ReplayTest, Examples) {
  const StreamHeader h{3, 5.0, StreamModel::kDynamic};
  const std::vector<StreamUpdate> two{{UpdateOp::kInsert, 1, 2, 3},
                                      {UpdateOp::kInsert, 2, 3, 5}};
  EXPECT_EQ(Replay(h, two).edges.size(), 2u);

  const std::vector<StreamUpdate> cycle{{UpdateOp::kInsert, 1, 2, 3},
                                        {UpdateOp::kDelete, 1, 2, 3},
                                        {UpdateOp::kInsert, 1, 2, 3}};
  EXPECT_EQ(Replay(h, cycle).edges, (std::vector<Edge>{{1, 2, 3.0}}));

  const std::vector<StreamUpdate> mismatch{{UpdateOp::kInsert, 1, 2, 3},
                                           {UpdateOp::kDelete, 1, 2, 4}};
  EXPECT_THROW(Replay(h, mismatch), Error);
}

TEST(ReplayTest, NormalizesEndpointsAndSorts) {
  const StreamHeader h{4, 9.0, StreamModel::kInsertOnly};
  const std::vector<StreamUpdate> ups{{UpdateOp::kInsert, 4, 3, 2},
                                      {UpdateOp::kInsert, 2, 1, 9}};
  const auto snap = Replay(h, ups);
  EXPECT_EQ(snap.edges, (std::vector<Edge>{{1, 2, 9.0}, {3, 4, 2.0}}));
  EXPECT_EQ(SerializeSnapshot(snap, 9.0),
            "n 4 wmax 9 model insert-only\n+ 1 2 9\n+ 3 4 2\n");
}

Stream RandomStream(std::mt19937_64& rng) {
  std::uniform_int_distribution<VertexId> nd(2, 9);
  const VertexId n = nd(rng);
  const double wmax = std::uniform_real_distribution<double>(1.0, 100.0)(rng);
  Stream s{{n, wmax, StreamModel::kDynamic}, {}};
  std::map<std::pair<VertexId, VertexId>, double> live;
  std::uniform_int_distribution<VertexId> vd(1, n);
  std::uniform_real_distribution<double> wd(1.0, wmax);
  for (int k = 0; k < 30; ++k) {
    VertexId u = vd(rng), v = vd(rng);
    if (u == v) continue;
    auto key = std::minmax(u, v);
    auto it = live.find(key);
    if (it == live.end()) {
      const double w = wd(rng);
      live.emplace(key, w);
      s.updates.push_back({UpdateOp::kInsert, u, v, w});
    } else {
      s.updates.push_back({UpdateOp::kDelete, v, u, it->second});
      live.erase(it);
    }
  }
  return s;
}

TEST(StreamPropertyTest, SerializeParseRoundTrip) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const Stream s = RandomStream(rng);
    EXPECT_EQ(ParseStream(SerializeStream(s)), s);
  }
}

TEST(StreamPropertyTest, ReplayIgnoresOrderOfIndependentUpdates) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const Stream s = RandomStream(rng);
    const GraphSnapshot snap = Replay(s.header, s.updates);
    // Re-emitting the final edge set in shuffled order replays identically.
    Stream other = SnapshotToStream(snap, s.header.wmax);
    std::shuffle(other.updates.begin(), other.updates.end(), rng);
    EXPECT_EQ(Replay(other.header, other.updates), snap);
  }
}

}  // namespace
}  // namespace wmstream
