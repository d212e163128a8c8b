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

#include <limits>

namespace qdpkit {

// Absolute tolerances on unit-trace-normalized operators, sized for
// double-precision eigensolver accuracy with headroom.
inline constexpr double kTolHerm = 1e-9;    // Hermiticity check
inline constexpr double kTolPsd = 1e-9;     // eigenvalue floor; [-kTolPsd, 0) clips to 0
inline constexpr double kTolTrace = 1e-10;  // trace-one / row-sum check
inline constexpr double kTolSupp = 1e-10;   // support membership threshold
inline constexpr double kTolRecon = 1e-8;   // eigendecomposition residual

// Quadrature absolute tolerance, applied per smooth segment.
inline constexpr double kTolInt = 1e-8;

// Slack for dominance comparisons (quadrature + eigensolver noise floor).
inline constexpr double kTolDominance = 1e-8;

// Headroom added to a DP/LDP delta verdict so that exactly-private pairs
// are not rejected on eigensolver round-off.
inline constexpr double kCertifySlack = 1e-12;

// Type-II errors below this are treated as exact zeros; the divergence
// becomes the in-band +infinity sentinel.
inline constexpr double kBetaFloor = 1e-13;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace qdpkit
