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

#include <array>
#include <ostream>
#include <string>
#include <vector>

namespace qdpkit {

// Formats a double with 12 significant digits, '.' decimal separator:
// the diff-stable float format used by every CSV/JSON artifact.
std::string format_float(double x);

// Sampled (x, y) curve with monotonicity/convexity metadata, exportable
// as CSV with a header row and '\n' line endings.
struct TradeoffCurve {
  std::string x_label;
  std::string y_label;
  std::vector<std::array<double, 2>> points;
  bool nonincreasing = false;
  bool convex = false;

  TradeoffCurve(std::string x, std::string y) : x_label(std::move(x)), y_label(std::move(y)) {}

  void push(double x, double y) { points.push_back({x, y}); }
  // Recomputes the metadata flags from the samples.
  void analyze();
  void write_csv(std::ostream& os) const;
};

}  // namespace qdpkit
