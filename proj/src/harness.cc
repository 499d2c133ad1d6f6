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

#include <atomic>
#include <chrono>
#include <charconv>
#include <cmath>
#include <map>
#include <sstream>
#include <thread>
#include <utility>

#include "wmstream/oracle.h"
#include "wmstream/reduction.h"

namespace wmstream::harness {
namespace {

[[noreturn]] void SuiteError(std::size_t line, const std::string& what) {
  throw Error(ErrorKind::kParse, "suite line " + std::to_string(line) + ": " + what);
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string_view> SplitList(std::string_view s) {
  std::vector<std::string_view> out;
  while (true) {
    const std::size_t comma = s.find(',');
    out.push_back(Trim(s.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return out;
}

template <typename T>
T Number(std::string_view token, std::size_t line, std::string_view key) {
  T value{};
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    SuiteError(line, "bad value '" + std::string(token) + "' for " + std::string(key));
  }
  return value;
}

struct Block {
  std::string name;
  gen::GenConfig config;
  std::vector<double> epsilons{0.5};
  std::vector<EstimatorKind> estimators{EstimatorKind::kExactOffline};
  double delta = 0.1;
  int repetitions = 1;
};

void ApplyKey(Block& block, std::string_view key, std::string_view value,
              std::size_t line) {
  gen::GenConfig& c = block.config;
  if (key == "name") {
    block.name = value;
  } else if (key == "family") {
    auto family = gen::ParseFamily(value);
    if (!family) SuiteError(line, "unknown family '" + std::string(value) + "'");
    c.family = *family;
  } else if (key == "n") {
    c.n = Number<VertexId>(value, line, key);
  } else if (key == "rows") {
    c.rows = Number<VertexId>(value, line, key);
  } else if (key == "cols") {
    c.cols = Number<VertexId>(value, line, key);
  } else if (key == "nu") {
    c.nu = Number<int>(value, line, key);
  } else if (key == "p") {
    c.p = Number<double>(value, line, key);
  } else if (key == "weights") {
    auto dist = gen::ParseWeightDist(value);
    if (!dist) SuiteError(line, "unknown weights '" + std::string(value) + "'");
    c.weights = *dist;
  } else if (key == "wmax") {
    c.wmax = Number<double>(value, line, key);
  } else if (key == "alpha") {
    c.alpha = Number<double>(value, line, key);
  } else if (key == "order") {
    auto order = gen::ParseOrder(value);
    if (!order) SuiteError(line, "unknown order '" + std::string(value) + "'");
    c.order = *order;
  } else if (key == "churn") {
    c.churn = Number<double>(value, line, key);
  } else if (key == "seed") {
    c.seed = Number<std::uint64_t>(value, line, key);
  } else if (key == "repetitions") {
    block.repetitions = Number<int>(value, line, key);
    if (block.repetitions < 0) SuiteError(line, "repetitions must be >= 0");
  } else if (key == "delta") {
    block.delta = Number<double>(value, line, key);
  } else if (key == "epsilon") {
    block.epsilons.clear();
    for (auto item : SplitList(value)) {
      block.epsilons.push_back(Number<double>(item, line, key));
    }
  } else if (key == "estimator") {
    block.estimators.clear();
    for (auto item : SplitList(value)) {
      auto kind = ParseEstimatorKind(item);
      if (!kind) SuiteError(line, "unknown estimator '" + std::string(item) + "'");
      block.estimators.push_back(*kind);
    }
  } else {
    SuiteError(line, "unknown key '" + std::string(key) + "'");
  }
}

void Expand(const Block& block, std::vector<RunSpec>& out) {
  for (int r = 0; r < block.repetitions; ++r) {
    gen::GenConfig config = block.config;
    config.seed = block.config.seed + static_cast<std::uint64_t>(r);
    for (double epsilon : block.epsilons) {
      for (EstimatorKind kind : block.estimators) {
        out.push_back(RunSpec{block.name, config, epsilon, block.delta, kind});
      }
    }
  }
}

std::string Fmt(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (std::isnan(x)) return "nan";
  return FormatWeight(x);
}

// Exact MCM of the substream of `snapshot` at or above `threshold`.
double SubstreamMcm(const GraphSnapshot& snapshot, double threshold) {
  GraphSnapshot sub{snapshot.n, {}};
  for (const Edge& e : snapshot.edges) {
    if (e.w >= threshold) sub.edges.push_back(e);
  }
  return oracle::ExactMcm(sub).value;
}

}  // namespace

const std::vector<std::string_view> kCsvColumns = {
    "run",      "block",       "family",    "n",         "edges",
    "nu",       "p",           "weights",   "wmax",      "order",
    "churn",    "seed",        "epsilon",   "estimator", "lambda",
    "estimate", "oracle",      "ratio",     "bound",     "lemma1_ok",
    "obs_ok",   "lemma2_ok",   "sandwich_ok", "contract_ok", "total_words",
    "error"};

int ExitCodeFor(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kParse:
    case ErrorKind::kStream:
    case ErrorKind::kWeightRange:
      return kExitParse;
    case ErrorKind::kCapability:
      return kExitCapability;
    case ErrorKind::kCapacity:
      return kExitCapacity;
    case ErrorKind::kContract:
      return kExitInvariant;
    case ErrorKind::kIo:
      return kExitIo;
    case ErrorKind::kParameter:
      return kExitUsage;
  }
  return kExitUsage;
}

std::vector<RunSpec> ParseSuite(std::string_view text) {
  std::vector<RunSpec> runs;
  std::optional<Block> block;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = Trim(raw);
    if (line.empty() || line.front() == '#') continue;
    if (line == "[run]") {
      if (block) Expand(*block, runs);
      block.emplace();
      continue;
    }
    if (!block) SuiteError(line_no, "key before the first [run] block");
    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) SuiteError(line_no, "expected key=value");
    ApplyKey(*block, Trim(line.substr(0, eq)), Trim(line.substr(eq + 1)), line_no);
  }
  if (block) Expand(*block, runs);
  return runs;
}

EvalRow EvaluateStream(const RunSpec& spec, const Stream& stream,
                       std::size_t run_index) {
  EvalRow row;
  row.run = run_index;
  row.spec = spec;
  row.lambda = SpecFor(spec.estimator, 0.5).lambda;
  row.bound = 2.0 * row.lambda * (1.0 + spec.epsilon);
  const auto start = std::chrono::steady_clock::now();
  try {
    const GraphSnapshot snapshot = Replay(stream.header, stream.updates);
    row.edges = snapshot.edges.size();

    const RunReport report =
        Run(stream, RunOptions{spec.epsilon, spec.delta, spec.estimator});
    const oracle::OracleResult optimum = oracle::ExactMwm(snapshot);

    row.estimate = report.estimate;
    row.optimum = optimum.value;
    row.total_words = report.total_words;
    if (row.estimate > 0.0) {
      row.ratio = row.optimum / row.estimate;
    } else {
      row.ratio = row.optimum == 0.0 ? 1.0 : std::numeric_limits<double>::infinity();
    }
    row.lemma1_ok = CheckLemma1(report);
    row.obs_ok = CheckObservations(report);
    row.lemma2_ok = Lemma2Holds(CheckLemma2(report, optimum.witness, row.lambda));
    row.sandwich_ok =
        SandwichHolds(row.estimate, row.optimum, row.lambda, spec.epsilon);

    row.contract_ok = true;
    for (const LevelState& state : report.levels) {
      const double mcm =
          SubstreamMcm(snapshot, report.schedule.threshold(state.level));
      if (!(state.s_hat <= mcm && mcm <= row.lambda * state.s_hat)) {
        row.contract_ok = false;
      }
    }
  } catch (const Error& e) {
    row.error = e.kind();
    row.error_message = e.what();
  }
  row.elapsed_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return row;
}

EvalRow Evaluate(const RunSpec& spec, std::size_t run_index) {
  try {
    return EvaluateStream(spec, gen::Generate(spec.config), run_index);
  } catch (const Error& e) {
    EvalRow row;
    row.run = run_index;
    row.spec = spec;
    row.error = e.kind();
    row.error_message = e.what();
    return row;
  }
}

std::vector<EvalRow> EvaluateSuite(const std::vector<RunSpec>& runs, int jobs) {
  std::vector<EvalRow> rows(runs.size());
  const int workers =
      std::max(1, std::min<int>(jobs, static_cast<int>(runs.size())));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < runs.size(); i = next++) {
      rows[i] = Evaluate(runs[i], i);
    }
  };
  if (workers == 1) {
    work();
    return rows;
  }
  std::vector<std::jthread> pool;
  for (int w = 0; w < workers; ++w) pool.emplace_back(work);
  pool.clear();
  return rows;
}

std::string RowsToCsv(const std::vector<EvalRow>& rows, CsvOptions options) {
  std::ostringstream out;
  for (std::size_t c = 0; c < kCsvColumns.size(); ++c) {
    out << (c ? "," : "") << kCsvColumns[c];
  }
  if (options.timing) out << ",elapsed_ms";
  out << '\n';

  auto flag = [](bool b) { return b ? "true" : "false"; };
  std::map<std::pair<std::string, double>, double> max_ratio;
  for (const EvalRow& row : rows) {
    const gen::GenConfig& c = row.spec.config;
    const VertexId n = c.family == gen::Family::kGrid ? c.rows * c.cols : c.n;
    out << row.run << ',' << row.spec.block << ',' << gen::ToString(c.family) << ','
        << n << ',' << row.edges << ',' << c.nu << ',' << Fmt(c.p) << ','
        << gen::ToString(c.weights) << ',' << Fmt(c.wmax) << ','
        << gen::ToString(c.order) << ',' << Fmt(c.churn) << ',' << c.seed << ','
        << Fmt(row.spec.epsilon) << ',' << ToString(row.spec.estimator) << ','
        << Fmt(row.lambda) << ',';
    if (row.error) {
      out << ",,,," << ",,,,,,";
      out << ToString(*row.error);
    } else {
      out << Fmt(row.estimate) << ',' << Fmt(row.optimum) << ',' << Fmt(row.ratio)
          << ',' << Fmt(row.bound) << ',' << flag(row.lemma1_ok) << ','
          << flag(row.obs_ok) << ',' << flag(row.lemma2_ok) << ','
          << flag(row.sandwich_ok) << ',' << flag(row.contract_ok) << ','
          << row.total_words << ',';
      auto key = std::pair{std::string(ToString(row.spec.estimator)), row.spec.epsilon};
      auto [it, inserted] = max_ratio.emplace(key, row.ratio);
      if (!inserted) it->second = std::max(it->second, row.ratio);
    }
    if (options.timing) out << ',' << Fmt(row.elapsed_ms);
    out << '\n';
  }
  for (const auto& [key, ratio] : max_ratio) {
    out << "# max_ratio estimator=" << key.first << " epsilon=" << Fmt(key.second)
        << " ratio=" << Fmt(ratio) << '\n';
  }
  return out.str();
}

int SuiteExitCode(const std::vector<EvalRow>& rows) {
  bool failed_check = false;
  for (const EvalRow& row : rows) {
    if (row.error) return ExitCodeFor(*row.error);
    if (!row.ok()) failed_check = true;
  }
  return failed_check ? kExitInvariant : kExitOk;
}

}  // namespace wmstream::harness
