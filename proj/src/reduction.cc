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

#include "wmstream/reduction.h"

#include <algorithm>
#include <cmath>
#include <string>

#include <nlohmann/json.hpp>

#include "wmstream/errors.h"

namespace wmstream {
namespace {

constexpr double kRelTol = 1e-9;

bool RelativelyClose(double a, double b) {
  return std::abs(a - b) <= kRelTol * std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace

void RouteUpdate(const LevelSchedule& schedule,
                 std::span<const std::unique_ptr<McmEstimator>> estimators,
                 const StreamUpdate& update) {
  const int top = schedule.TopLevel(update.w);
  for (int i = 0; i <= top; ++i) {
    estimators[static_cast<std::size_t>(i)]->Update(update.op, update.u, update.v);
  }
}

RunReport Combine(const LevelSchedule& schedule, std::span<const double> s_hats) {
  if (s_hats.size() != static_cast<std::size_t>(schedule.level_count())) {
    throw Error(ErrorKind::kParameter,
                "expected " + std::to_string(schedule.level_count()) +
                    " level estimates, got " + std::to_string(s_hats.size()));
  }
  RunReport report{schedule, {}};
  report.levels.reserve(s_hats.size());

  double m_next = 0.0;
  std::int64_t b_next = 0;
  double a_next = 0.0;
  for (int i = schedule.top(); i >= 0; --i) {
    const double s_hat = s_hats[static_cast<std::size_t>(i)];
    if (!std::isfinite(s_hat) || s_hat < 0.0) {
      throw Error(ErrorKind::kContract,
                  "estimate for level " + std::to_string(i) + " is negative");
    }
    LevelState state;
    state.level = i;
    state.s_hat = s_hat;
    state.m_hat = std::max(m_next, s_hat);
    const double gap = std::ceil(state.m_hat - 2.0 * static_cast<double>(b_next));
    state.delta_count = gap > 0.0 ? static_cast<std::int64_t>(gap) : 0;
    state.b = b_next + state.delta_count;
    state.a = a_next + schedule.threshold(i) * static_cast<double>(state.delta_count);
    report.levels.push_back(state);

    m_next = state.m_hat;
    b_next = state.b;
    a_next = state.a;
  }
  report.estimate = a_next;
  return report;
}

RunReport Run(const Stream& stream, const RunOptions& options) {
  if (!(options.delta > 0.0 && options.delta < 1.0)) {
    throw Error(ErrorKind::kParameter, "delta must lie in (0, 1)");
  }
  const LevelSchedule schedule =
      LevelSchedule::Build(options.epsilon, stream.header.wmax);
  // One estimator per level 0..T, so the union bound runs over T+1 instances.
  const double delta_prime = options.delta / schedule.level_count();

  std::vector<std::unique_ptr<McmEstimator>> estimators;
  estimators.reserve(static_cast<std::size_t>(schedule.level_count()));
  for (int i = 0; i < schedule.level_count(); ++i) {
    estimators.push_back(MakeEstimator(options.estimator, stream.header.n,
                                       delta_prime, stream.header.model));
  }

  for (const StreamUpdate& update : stream.updates) {
    ValidateUpdate(stream.header, update);
    RouteUpdate(schedule, estimators, update);
  }

  std::vector<double> s_hats;
  std::vector<std::uint64_t> words;
  for (auto& estimator : estimators) {
    const McmEstimate estimate = estimator->Finalize();
    s_hats.push_back(estimate.value);
    words.push_back(estimate.words_stored);
  }

  RunReport report = Combine(schedule, s_hats);
  for (LevelState& state : report.levels) {
    state.words = words[static_cast<std::size_t>(state.level)];
    report.total_words += state.words;
  }
  report.estimator = options.estimator;
  report.delta = options.delta;
  report.delta_prime = delta_prime;
  return report;
}

bool CheckLemma1(const RunReport& report) {
  for (const LevelState& state : report.levels) {
    const double b = static_cast<double>(state.b);
    if (!(b <= std::ceil(state.m_hat))) return false;
    if (!(state.m_hat <= 2.0 * b)) return false;
  }
  return true;
}

bool CheckObservations(const RunReport& report) {
  std::int64_t b_sum = 0;
  double a_sum = 0.0;
  int expected_level = report.schedule.top();
  for (const LevelState& state : report.levels) {
    if (state.level != expected_level--) return false;
    b_sum += state.delta_count;
    a_sum += report.schedule.threshold(state.level) *
             static_cast<double>(state.delta_count);
    if (state.b != b_sum) return false;
    if (!RelativelyClose(state.a, a_sum)) return false;
  }
  return expected_level == -1 &&
         (report.levels.empty() || report.estimate == report.levels.back().a);
}

std::vector<Lemma2Level> CheckLemma2(const RunReport& report,
                                     std::span<const Edge> optimum,
                                     double lambda) {
  std::vector<Lemma2Level> out;
  out.reserve(report.levels.size());
  for (const LevelState& state : report.levels) {
    Lemma2Level row;
    row.level = state.level;
    row.b = state.b;
    const double threshold = report.schedule.threshold(state.level);
    for (const Edge& e : optimum) {
      if (e.w >= threshold) ++row.matched_heavy;
    }
    row.lower_ok = row.b <= row.matched_heavy;
    row.upper_ok = static_cast<double>(row.matched_heavy) <=
                   2.0 * lambda * static_cast<double>(row.b);
    out.push_back(row);
  }
  return out;
}

bool Lemma2Holds(const std::vector<Lemma2Level>& levels) {
  for (const Lemma2Level& row : levels) {
    if (!row.lower_ok || !row.upper_ok) return false;
  }
  return true;
}

bool SandwichHolds(double estimate, double optimum, double lambda, double epsilon) {
  const double slack = 1.0 + kRelTol;
  const double upper = 2.0 * lambda * (1.0 + epsilon) * estimate;
  return estimate <= optimum * slack && optimum <= upper * slack;
}

std::string ReportToJson(const RunReport& report) {
  nlohmann::ordered_json json;
  json["epsilon"] = report.schedule.epsilon();
  json["wmax"] = report.schedule.wmax();
  json["T"] = report.schedule.top();
  json["estimate"] = report.estimate;
  json["delta"] = report.delta;
  json["delta_prime"] = report.delta_prime;
  json["estimator"] = std::string(ToString(report.estimator));
  json["total_words"] = report.total_words;
  auto& levels = json["levels"] = nlohmann::ordered_json::array();
  for (const LevelState& state : report.levels) {
    levels.push_back({{"i", state.level},
                      {"threshold", report.schedule.threshold(state.level)},
                      {"s_hat", state.s_hat},
                      {"m_hat", state.m_hat},
                      {"delta_i", state.delta_count},
                      {"b", state.b},
                      {"a", state.a}});
  }
  return json.dump(2);
}

}  // namespace wmstream
