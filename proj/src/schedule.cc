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

#include "wmstream/schedule.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "wmstream/errors.h"

namespace wmstream {

std::string_view ToString(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kParameter: return "parameter";
    case ErrorKind::kWeightRange: return "weight-range";
    case ErrorKind::kParse: return "parse";
    case ErrorKind::kStream: return "stream";
    case ErrorKind::kCapability: return "capability";
    case ErrorKind::kCapacity: return "capacity";
    case ErrorKind::kContract: return "contract";
    case ErrorKind::kIo: return "io";
  }
  return "unknown";
}

LevelSchedule LevelSchedule::Build(double epsilon, double wmax) {
  if (!std::isfinite(epsilon) || epsilon <= 0.0 || epsilon > 1.0) {
    std::ostringstream msg;
    msg << "epsilon must lie in (0, 1], got " << epsilon;
    throw Error(ErrorKind::kParameter, msg.str());
  }
  if (!std::isfinite(wmax) || wmax < 1.0) {
    std::ostringstream msg;
    msg << "wmax must be finite and >= 1, got " << wmax;
    throw Error(ErrorKind::kParameter, msg.str());
  }

  // T = ceil(log_{1+e} W), taken as the first running product that reaches W
  // so the stored thresholds and the level count can never disagree.
  const double ratio = 1.0 + epsilon;
  std::vector<double> thresholds{1.0};
  while (thresholds.back() < wmax) {
    thresholds.push_back(thresholds.back() * ratio);
  }
  return LevelSchedule(epsilon, wmax, std::move(thresholds));
}

int LevelSchedule::TopLevel(double w) const {
  if (!(w >= 1.0) || !(w <= wmax_)) {
    std::ostringstream msg;
    msg << "weight " << w << " outside [1, " << wmax_ << "]";
    throw Error(ErrorKind::kWeightRange, msg.str());
  }
  auto it = std::upper_bound(thresholds_.begin(), thresholds_.end(), w);
  return static_cast<int>(it - thresholds_.begin()) - 1;
}

}  // namespace wmstream
