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

#include <functional>
#include <vector>

namespace qdpkit {

using ScalarFn = std::function<double(double)>;

// Adaptive Simpson quadrature on [a, b] with absolute tolerance `abs_tol`.
// The integrand must be continuous on the closed interval.
double adaptive_simpson(const ScalarFn& f, double a, double b, double abs_tol,
                        int max_depth = 40);

// Integrates f over [a, b] forcing subdivision at the given breakpoints
// (values outside (a, b) are ignored; each smooth segment gets `abs_tol`).
// Intended for piecewise-smooth integrands with known kink locations.
double integrate_with_breakpoints(const ScalarFn& f, double a, double b,
                                  std::vector<double> breakpoints,
                                  double abs_tol);

struct GoldenMax {
  double x = 0.0;
  double value = 0.0;
};

// Maximizes a concave (hence unimodal) function on [lo, hi] by
// golden-section search. Runs at most `max_iters` shrink steps, stopping
// early once the bracket is below machine scale. Endpoints are candidates.
GoldenMax golden_section_max(const ScalarFn& f, double lo, double hi,
                             int max_iters = 200);

}  // namespace qdpkit
