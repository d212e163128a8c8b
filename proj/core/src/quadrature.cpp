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

#include "qdpkit/quadrature.hpp"

#include <algorithm>
#include <cmath>

#include "qdpkit/errors.hpp"

namespace qdpkit {

namespace {

double simpson_recurse(const ScalarFn& f, double a, double b, double fa,
                       double fm, double fb, double whole, double tol,
                       int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
    return left + right + delta / 15.0;
  }
  return simpson_recurse(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         simpson_recurse(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace

double adaptive_simpson(const ScalarFn& f, double a, double b, double abs_tol,
                        int max_depth) {
  if (!(a <= b)) throw ValidationError("RangeError", "integration bounds out of order");
  if (a == b) return 0.0;
  const double fa = f(a);
  const double fb = f(b);
  const double m = 0.5 * (a + b);
  const double fm = f(m);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return simpson_recurse(f, a, b, fa, fm, fb, whole, abs_tol, max_depth);
}

double integrate_with_breakpoints(const ScalarFn& f, double a, double b,
                                  std::vector<double> breakpoints,
                                  double abs_tol) {
  if (!(a <= b)) throw ValidationError("RangeError", "integration bounds out of order");
  breakpoints.push_back(a);
  breakpoints.push_back(b);
  std::sort(breakpoints.begin(), breakpoints.end());
  double total = 0.0;
  double lo = a;
  for (double p : breakpoints) {
    if (p <= lo || p > b) continue;
    // Skip degenerate slivers; Simpson handles them but they add nothing.
    if (p - lo > 1e-15 * std::max(1.0, std::abs(b - a))) {
      total += adaptive_simpson(f, lo, p, abs_tol);
    }
    lo = p;
  }
  if (lo < b) total += adaptive_simpson(f, lo, b, abs_tol);
  return total;
}

GoldenMax golden_section_max(const ScalarFn& f, double lo, double hi,
                             int max_iters) {
  if (!(lo <= hi)) throw ValidationError("RangeError", "search bounds out of order");
  constexpr double kInvPhi = 0.6180339887498948482;
  double a = lo, b = hi;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = f(c);
  double fd = f(d);
  for (int i = 0; i < max_iters; ++i) {
    if (b - a < 1e-15 * std::max(1.0, std::abs(a) + std::abs(b))) break;
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
    }
  }
  GoldenMax best{c, fc};
  if (fd > best.value) best = {d, fd};
  // The maximum can sit on the boundary of the search interval.
  const double flo = f(lo);
  const double fhi = f(hi);
  if (flo > best.value) best = {lo, flo};
  if (fhi > best.value) best = {hi, fhi};
  return best;
}

}  // namespace qdpkit
