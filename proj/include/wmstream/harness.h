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

#ifndef WMSTREAM_HARNESS_H_
#define WMSTREAM_HARNESS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wmstream/errors.h"
#include "wmstream/estimator.h"
#include "wmstream/generators.h"
#include "wmstream/stream.h"

namespace wmstream::harness {

// Process exit codes shared by the CLI subcommands.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitParse = 2,
  kExitCapability = 3,
  kExitCapacity = 4,
  kExitInvariant = 5,
  kExitIo = 6,
};

int ExitCodeFor(ErrorKind kind);

// One run of the suite: a generated instance evaluated at one epsilon with
// one estimator.
struct RunSpec {
  std::string block;
  gen::GenConfig config;
  double epsilon = 0.5;
  double delta = 0.1;
  EstimatorKind estimator = EstimatorKind::kExactOffline;
};

struct EvalRow {
  std::size_t run = 0;
  RunSpec spec;
  std::size_t edges = 0;  // final graph
  double lambda = 1.0;
  double estimate = 0.0;
  double optimum = 0.0;   // oracle w(M*)
  double ratio = 0.0;     // optimum / estimate, 1 when both are 0
  double bound = 0.0;     // 2 lambda (1 + epsilon)
  bool lemma1_ok = false;
  bool obs_ok = false;
  bool lemma2_ok = false;
  bool sandwich_ok = false;
  // Every level estimate v satisfies v <= MCM(level) <= lambda * v.
  bool contract_ok = false;
  std::uint64_t total_words = 0;
  double elapsed_ms = 0.0;
  std::optional<ErrorKind> error;
  std::string error_message;

  bool ok() const {
    return !error && lemma1_ok && obs_ok && lemma2_ok && sandwich_ok &&
           contract_ok;
  }
};

// Suite text: blocks opened by a "[run]" line followed by key=value lines.
// Keys: name, family, n, rows, cols, nu, p, weights, wmax, alpha, order,
// churn, seed, repetitions, epsilon (comma list), estimator (comma list),
// delta. Repetition r uses seed + r. Runs expand block by block, then
// repetition, epsilon, estimator.
std::vector<RunSpec> ParseSuite(std::string_view text);

// Generates, runs, and checks one instance against the oracle. Errors are
// captured in the row, never thrown.
EvalRow Evaluate(const RunSpec& spec, std::size_t run_index);
EvalRow EvaluateStream(const RunSpec& spec, const Stream& stream,
                       std::size_t run_index);

// Rows in suite order regardless of worker count.
std::vector<EvalRow> EvaluateSuite(const std::vector<RunSpec>& runs, int jobs);

struct CsvOptions {
  // Adds an elapsed_ms column; timing makes the file non-reproducible.
  bool timing = false;
};

// Fixed column order (see kCsvColumns) followed by '#'-prefixed footer lines
// with the max observed ratio per (estimator, epsilon).
std::string RowsToCsv(const std::vector<EvalRow>& rows, CsvOptions options = {});

extern const std::vector<std::string_view> kCsvColumns;

// kExitOk when every row passed; otherwise the exit code of the first row
// error, or kExitInvariant when only checks failed.
int SuiteExitCode(const std::vector<EvalRow>& rows);

}  // namespace wmstream::harness

#endif  // WMSTREAM_HARNESS_H_
