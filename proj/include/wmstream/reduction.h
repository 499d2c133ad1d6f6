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

#ifndef WMSTREAM_REDUCTION_H_
#define WMSTREAM_REDUCTION_H_

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "wmstream/estimator.h"
#include "wmstream/schedule.h"
#include "wmstream/stream.h"

namespace wmstream {

// One row of the descending combine.
struct LevelState {
  int level = 0;
  double s_hat = 0.0;          // estimator output for substream `level`
  double m_hat = 0.0;          // running max of s_hat over levels >= `level`
  std::int64_t delta_count = 0;
  std::int64_t b = 0;          // running matched-edge count
  double a = 0.0;              // running weight estimate
  std::uint64_t words = 0;     // estimator peak space; not serialized

  friend bool operator==(const LevelState&, const LevelState&) = default;
};

struct RunReport {
  LevelSchedule schedule;
  // Ordered from level T down to level 0.
  std::vector<LevelState> levels;
  double estimate = 0.0;
  std::uint64_t total_words = 0;
  EstimatorKind estimator = EstimatorKind::kExactOffline;
  double delta = 0.0;
  double delta_prime = 0.0;

  const LevelState& at_level(int i) const {
    return levels.at(levels.size() - 1 - static_cast<std::size_t>(i));
  }
};

// Forwards the unweighted update to estimators 0..TopLevel(w).
void RouteUpdate(const LevelSchedule& schedule,
                 std::span<const std::unique_ptr<McmEstimator>> estimators,
                 const StreamUpdate& update);

// Runs the descending greedy over per-level estimates indexed 0..T. The
// returned report carries no estimator metadata (delta, kind, words).
// Throws kContract for a negative or non-finite estimate, kParameter when the
// vector length is not T+1.
RunReport Combine(const LevelSchedule& schedule, std::span<const double> s_hats);

struct RunOptions {
  double epsilon = 0.5;
  double delta = 0.1;
  EstimatorKind estimator = EstimatorKind::kExactOffline;
};

// Full single pass: schedule from (epsilon, header.wmax), T+1 estimators with
// delta' = delta / (T+1), routing, finalize, combine.
RunReport Run(const Stream& stream, const RunOptions& options);

// B_i <= ceil(M_i) and M_i <= 2 B_i at every level.
bool CheckLemma1(const RunReport& report);

// B_j equals the suffix sum of delta counts exactly and A_j the
// threshold-weighted suffix sum within relative 1e-9, for every j.
bool CheckObservations(const RunReport& report);

struct Lemma2Level {
  int level = 0;
  std::int64_t b = 0;
  std::int64_t matched_heavy = 0;  // |{e in M* : w(e) >= threshold[level]}|
  bool lower_ok = false;           // b <= matched_heavy
  bool upper_ok = false;           // matched_heavy <= 2 * lambda * b
};

// Per-level comparison of B_j with the heavy part of a maximum weighted
// matching `optimum`.
std::vector<Lemma2Level> CheckLemma2(const RunReport& report,
                                     std::span<const Edge> optimum,
                                     double lambda);
bool Lemma2Holds(const std::vector<Lemma2Level>& levels);

// estimate <= optimum <= 2 lambda (1+eps) estimate, relative slack 1e-9.
bool SandwichHolds(double estimate, double optimum, double lambda, double epsilon);

// JSON object with keys epsilon, wmax, T, estimate, delta, delta_prime,
// estimator, total_words, levels[{i, threshold, s_hat, m_hat, delta_i, b, a}].
std::string ReportToJson(const RunReport& report);

}  // namespace wmstream

#endif  // WMSTREAM_REDUCTION_H_
