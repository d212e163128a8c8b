//
// Copyright 2026 The qdpkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace qdpkit {

// Base of all qdpkit errors. `kind()` is a stable machine-readable tag
// (e.g. "NonHermitian", "NotLDP") used by the CLI for stderr JSON.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

// Malformed or out-of-range inputs: bad matrices, mismatched dimensions,
// parameters outside their stated ranges. CLI exit code 2.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// A mathematical premise of the requested operation fails for otherwise
// valid inputs: a pair is not DP, a kernel is not LDP, supports do not
// nest, a bound's assumption is violated. CLI exit code 3.
class AssumptionError : public Error {
 public:
  using Error::Error;
};

}  // namespace qdpkit
