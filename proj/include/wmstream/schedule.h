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

#ifndef WMSTREAM_SCHEDULE_H_
#define WMSTREAM_SCHEDULE_H_

#include <span>
#include <vector>

namespace wmstream {

// Geometric weight buckets. Level i holds every edge with weight at least
// (1+epsilon)^i, so the substreams are nested: level i+1 is a subset of
// level i. Immutable after construction.
class LevelSchedule {
 public:
  // Requires 0 < epsilon <= 1 and a finite wmax >= 1. Thresholds are the
  // running products 1, (1+e), (1+e)*(1+e), ... in double precision, and the
  // level count T is the smallest index whose threshold reaches wmax.
  static LevelSchedule Build(double epsilon, double wmax);

  double epsilon() const { return epsilon_; }
  double wmax() const { return wmax_; }
  // T; there are T+1 levels numbered 0..T.
  int top() const { return static_cast<int>(thresholds_.size()) - 1; }
  int level_count() const { return static_cast<int>(thresholds_.size()); }
  std::span<const double> thresholds() const { return thresholds_; }
  double threshold(int level) const { return thresholds_.at(level); }

  // Largest level whose threshold is <= w, by direct comparison against the
  // stored thresholds. Throws kWeightRange unless 1 <= w <= wmax.
  int TopLevel(double w) const;

 private:
  LevelSchedule(double epsilon, double wmax, std::vector<double> thresholds)
      : epsilon_(epsilon), wmax_(wmax), thresholds_(std::move(thresholds)) {}

  double epsilon_;
  double wmax_;
  std::vector<double> thresholds_;
};

}  // namespace wmstream

#endif  // WMSTREAM_SCHEDULE_H_
