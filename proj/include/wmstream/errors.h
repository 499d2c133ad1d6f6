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

#ifndef WMSTREAM_ERRORS_H_
#define WMSTREAM_ERRORS_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace wmstream {

enum class ErrorKind {
  kParameter,    // out-of-range numeric parameter or config value
  kWeightRange,  // edge weight outside [1, wmax]
  kParse,        // malformed stream, suite or header text
  kStream,       // strict-replay violation (duplicate insert, absent delete)
  kCapability,   // estimator cannot handle the requested stream model
  kCapacity,     // oracle size cap exceeded
  kContract,     // estimator output violates the combine preconditions
  kIo,
};

std::string_view ToString(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace wmstream

#endif  // WMSTREAM_ERRORS_H_
