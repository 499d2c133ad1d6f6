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

#ifndef WMSTREAM_STREAM_H_
#define WMSTREAM_STREAM_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace wmstream {

// Vertices are numbered 1..n.
using VertexId = std::uint32_t;

enum class StreamModel { kInsertOnly, kDynamic };
enum class UpdateOp { kInsert, kDelete };

std::string_view ToString(StreamModel model);

struct StreamHeader {
  VertexId n = 1;
  double wmax = 1.0;
  StreamModel model = StreamModel::kInsertOnly;

  friend bool operator==(const StreamHeader&, const StreamHeader&) = default;
};

struct StreamUpdate {
  UpdateOp op = UpdateOp::kInsert;
  VertexId u = 0;
  VertexId v = 0;
  double w = 1.0;

  friend bool operator==(const StreamUpdate&, const StreamUpdate&) = default;
};

// Undirected weighted edge with u < v.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  double w = 1.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Simple graph on vertices 1..n, edges sorted by (u, v).
struct GraphSnapshot {
  VertexId n = 0;
  std::vector<Edge> edges;

  friend bool operator==(const GraphSnapshot&, const GraphSnapshot&) = default;
};

struct Stream {
  StreamHeader header;
  std::vector<StreamUpdate> updates;

  friend bool operator==(const Stream&, const Stream&) = default;
};

struct ParseOptions {
  // Replays the stream while parsing and rejects duplicate inserts, deletes
  // of absent edges and deletes whose weight differs from the insert.
  bool strict = true;
};

// Text format:
//   n <int> wmax <decimal> model <insert-only|dynamic>
//   + <u> <v> <w>
//   - <u> <v> <w>
// Blank lines and lines starting with '#' are ignored. Errors carry the
// 1-based line number.
Stream ParseStream(std::string_view text, ParseOptions options = {});

// Shortest round-trip decimal form for every weight.
std::string SerializeStream(const Stream& stream);

// Applies the updates in order. Throws kStream on any strict violation.
GraphSnapshot Replay(const StreamHeader& header,
                     std::span<const StreamUpdate> updates);

// Header plus '+' lines sorted by (u, v); the header model is insert-only.
std::string SerializeSnapshot(const GraphSnapshot& snapshot, double wmax);

// Insertion-only stream whose replay is `snapshot`.
Stream SnapshotToStream(const GraphSnapshot& snapshot, double wmax);

// Checks one update against the header: vertex range, no self-loop, weight in
// [1, wmax] and no deletes in an insert-only stream.
void ValidateUpdate(const StreamHeader& header, const StreamUpdate& update);

std::string FormatWeight(double w);

}  // namespace wmstream

#endif  // WMSTREAM_STREAM_H_
