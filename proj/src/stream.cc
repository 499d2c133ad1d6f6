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

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <optional>
#include <sstream>
#include <utility>

#include "wmstream/errors.h"

namespace wmstream {
namespace {

using PairKey = std::pair<VertexId, VertexId>;

PairKey Normalize(VertexId u, VertexId v) {
  return u < v ? PairKey{u, v} : PairKey{v, u};
}

[[noreturn]] void FailAt(ErrorKind kind, std::size_t line,
                         const std::string& what) {
  std::ostringstream msg;
  msg << "line " << line << ": " << what;
  throw Error(kind, msg.str());
}

std::vector<std::string_view> SplitFields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    std::size_t end = pos;
    while (end < line.size() && line[end] != ' ' && line[end] != '\t') ++end;
    if (end > pos) fields.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return fields;
}

template <typename T>
bool ParseNumber(std::string_view token, T& out) {
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if constexpr (std::is_floating_point_v<T>) {
    auto [ptr, ec] = std::from_chars(first, last, out, std::chars_format::general);
    return ec == std::errc() && ptr == last && std::isfinite(out);
  } else {
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && ptr == last;
  }
}

StreamHeader ParseHeader(const std::vector<std::string_view>& fields,
                         std::size_t line) {
  if (fields.size() != 6 || fields[0] != "n" || fields[2] != "wmax" ||
      fields[4] != "model") {
    FailAt(ErrorKind::kParse, line,
           "expected header 'n <int> wmax <decimal> model <insert-only|dynamic>'");
  }
  StreamHeader header;
  if (!ParseNumber(fields[1], header.n) || header.n < 1) {
    FailAt(ErrorKind::kParse, line, "vertex count must be a positive integer");
  }
  if (!ParseNumber(fields[3], header.wmax) || header.wmax < 1.0) {
    FailAt(ErrorKind::kParse, line, "wmax must be a finite decimal >= 1");
  }
  if (fields[5] == "insert-only") {
    header.model = StreamModel::kInsertOnly;
  } else if (fields[5] == "dynamic") {
    header.model = StreamModel::kDynamic;
  } else {
    FailAt(ErrorKind::kParse, line, "unknown model '" + std::string(fields[5]) + "'");
  }
  return header;
}

// Multiset replay shared by Replay and strict parsing.
class Replayer {
 public:
  // Returns an empty string on success, otherwise the violation.
  std::string Apply(const StreamUpdate& update) {
    const PairKey key = Normalize(update.u, update.v);
    auto it = live_.find(key);
    if (update.op == UpdateOp::kInsert) {
      if (it != live_.end()) return "duplicate insert of edge " + Describe(key);
      live_.emplace(key, update.w);
      return {};
    }
    if (it == live_.end()) return "delete of absent edge " + Describe(key);
    if (it->second != update.w) {
      return "delete weight " + FormatWeight(update.w) + " differs from inserted weight " +
             FormatWeight(it->second) + " for edge " + Describe(key);
    }
    live_.erase(it);
    return {};
  }

  GraphSnapshot Snapshot(VertexId n) const {
    GraphSnapshot snapshot{n, {}};
    snapshot.edges.reserve(live_.size());
    for (const auto& [key, w] : live_) {
      snapshot.edges.push_back(Edge{key.first, key.second, w});
    }
    return snapshot;
  }

 private:
  static std::string Describe(const PairKey& key) {
    return "(" + std::to_string(key.first) + ", " + std::to_string(key.second) + ")";
  }

  std::map<PairKey, double> live_;
};

struct Violation {
  ErrorKind kind;
  std::string what;
};

std::optional<Violation> Validate(const StreamHeader& header,
                                  const StreamUpdate& update) {
  if (update.u < 1 || update.u > header.n || update.v < 1 || update.v > header.n) {
    return Violation{ErrorKind::kStream,
                     "vertex id outside 1.." + std::to_string(header.n)};
  }
  if (update.u == update.v) {
    return Violation{ErrorKind::kStream,
                     "self-loop on vertex " + std::to_string(update.u)};
  }
  if (!(update.w >= 1.0) || !(update.w <= header.wmax)) {
    return Violation{ErrorKind::kWeightRange,
                     "weight " + FormatWeight(update.w) + " outside [1, " +
                         FormatWeight(header.wmax) + "]"};
  }
  if (update.op == UpdateOp::kDelete && header.model == StreamModel::kInsertOnly) {
    return Violation{ErrorKind::kStream, "delete in insert-only stream"};
  }
  return std::nullopt;
}

}  // namespace

std::string_view ToString(StreamModel model) {
  return model == StreamModel::kInsertOnly ? "insert-only" : "dynamic";
}

std::string FormatWeight(double w) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), w);
  return std::string(buf, ptr);
}

void ValidateUpdate(const StreamHeader& header, const StreamUpdate& update) {
  if (auto violation = Validate(header, update)) {
    throw Error(violation->kind, violation->what);
  }
}

Stream ParseStream(std::string_view text, ParseOptions options) {
  Stream stream;
  bool have_header = false;
  Replayer replayer;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    auto fields = SplitFields(line);
    if (fields.empty() || fields[0].front() == '#') continue;

    if (!have_header) {
      stream.header = ParseHeader(fields, line_no);
      have_header = true;
      continue;
    }

    StreamUpdate update;
    if (fields.size() != 4 || (fields[0] != "+" && fields[0] != "-")) {
      FailAt(ErrorKind::kParse, line_no, "expected '+|- <u> <v> <w>'");
    }
    update.op = fields[0] == "+" ? UpdateOp::kInsert : UpdateOp::kDelete;
    if (!ParseNumber(fields[1], update.u) || !ParseNumber(fields[2], update.v)) {
      FailAt(ErrorKind::kParse, line_no, "vertex ids must be unsigned integers");
    }
    if (!ParseNumber(fields[3], update.w)) {
      FailAt(ErrorKind::kParse, line_no, "weight must be a finite decimal");
    }
    if (auto violation = Validate(stream.header, update)) {
      FailAt(ErrorKind::kParse, line_no, violation->what);
    }
    if (options.strict) {
      if (std::string what = replayer.Apply(update); !what.empty()) {
        FailAt(ErrorKind::kStream, line_no, what);
      }
    }
    stream.updates.push_back(update);
  }
  if (!have_header) throw Error(ErrorKind::kParse, "missing stream header");
  return stream;
}

std::string SerializeStream(const Stream& stream) {
  std::string out = "n " + std::to_string(stream.header.n) + " wmax " +
                    FormatWeight(stream.header.wmax) + " model " +
                    std::string(ToString(stream.header.model)) + "\n";
  for (const StreamUpdate& update : stream.updates) {
    out += update.op == UpdateOp::kInsert ? "+ " : "- ";
    out += std::to_string(update.u);
    out += ' ';
    out += std::to_string(update.v);
    out += ' ';
    out += FormatWeight(update.w);
    out += '\n';
  }
  return out;
}

GraphSnapshot Replay(const StreamHeader& header,
                     std::span<const StreamUpdate> updates) {
  Replayer replayer;
  for (std::size_t i = 0; i < updates.size(); ++i) {
    std::string what;
    if (auto violation = Validate(header, updates[i])) {
      what = violation->what;
    } else {
      what = replayer.Apply(updates[i]);
    }
    if (!what.empty()) {
      throw Error(ErrorKind::kStream,
                  "update " + std::to_string(i + 1) + ": " + what);
    }
  }
  return replayer.Snapshot(header.n);
}

Stream SnapshotToStream(const GraphSnapshot& snapshot, double wmax) {
  Stream stream;
  stream.header = StreamHeader{snapshot.n, wmax, StreamModel::kInsertOnly};
  stream.updates.reserve(snapshot.edges.size());
  for (const Edge& e : snapshot.edges) {
    stream.updates.push_back(StreamUpdate{UpdateOp::kInsert, e.u, e.v, e.w});
  }
  return stream;
}

std::string SerializeSnapshot(const GraphSnapshot& snapshot, double wmax) {
  Stream stream = SnapshotToStream(snapshot, wmax);
  std::sort(stream.updates.begin(), stream.updates.end(),
            [](const StreamUpdate& a, const StreamUpdate& b) {
              return std::tie(a.u, a.v) < std::tie(b.u, b.v);
            });
  return SerializeStream(stream);
}

}  // namespace wmstream
