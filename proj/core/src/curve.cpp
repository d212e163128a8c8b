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

#include "qdpkit/curve.hpp"

#include <cmath>
#include <cstdio>

namespace qdpkit {

std::string format_float(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (std::isnan(x)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

void TradeoffCurve::analyze() {
  nonincreasing = true;
  convex = true;
  const double tol = 1e-9;
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (points[i][1] > points[i - 1][1] + tol) nonincreasing = false;
  }
  for (std::size_t i = 1; i + 1 < points.size(); ++i) {
    const auto& a = points[i - 1];
    const auto& b = points[i];
    const auto& c = points[i + 1];
    const double span = c[0] - a[0];
    if (span <= 0.0) continue;
    const double t = (b[0] - a[0]) / span;
    const double chord = (1.0 - t) * a[1] + t * c[1];
    if (b[1] > chord + tol) convex = false;
  }
}

void TradeoffCurve::write_csv(std::ostream& os) const {
  os << x_label << "," << y_label << "\n";
  for (const auto& pt : points) {
    os << format_float(pt[0]) << "," << format_float(pt[1]) << "\n";
  }
}

}  // namespace qdpkit
