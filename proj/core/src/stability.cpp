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

#include "qdpkit/stability.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qdpkit/errors.hpp"
#include "qdpkit/tolerances.hpp"

namespace qdpkit {

Dataset::Dataset(std::vector<int> symbols_in, int alphabet_size_in)
    : symbols(std::move(symbols_in)), alphabet_size(alphabet_size_in) {
  if (symbols.empty()) throw ValidationError("RangeError", "dataset must be nonempty");
  if (alphabet_size < 1) throw ValidationError("RangeError", "alphabet must be nonempty");
  for (int s : symbols) {
    if (s < 0 || s >= alphabet_size) {
      throw ValidationError("RangeError", "symbol outside the alphabet");
    }
  }
}

std::vector<int> Dataset::frequencies() const {
  std::vector<int> freq(alphabet_size, 0);
  for (int s : symbols) ++freq[s];
  return freq;
}

int neighbor_distance(const Dataset& a, const Dataset& b) {
  if (a.length() != b.length()) {
    throw ValidationError("LengthMismatch", "sequences have different lengths");
  }
  if (a.alphabet_size != b.alphabet_size) {
    throw ValidationError("AlphabetMismatch", "sequences use different alphabets");
  }
  const std::vector<int> fa = a.frequencies();
  const std::vector<int> fb = b.frequencies();
  int total = 0;
  for (int i = 0; i < a.alphabet_size; ++i) total += std::abs(fa[i] - fb[i]);
  return total / 2;
}

GroupPrivacyFactor g_k(int k, const PrivacyParams& p) {
  if (k < 0) throw ValidationError("RangeError", "k must be >= 0");
  GroupPrivacyFactor out;
  if (p.eps == 0.0) {
    out.value = static_cast<double>(k) * p.delta;  // limit of the geometric sum
  } else {
    out.value = p.delta * std::expm1(k * p.eps) / std::expm1(p.eps);
  }
  out.exceeds_one = out.value >= 1.0;
  return out;
}

StabilityReport stability_bound(int n, int alphabet_size, const PrivacyParams& p, double m) {
  if (n < 1) throw ValidationError("RangeError", "n must be >= 1");
  if (alphabet_size < 1) throw ValidationError("RangeError", "alphabet must be nonempty");
  if (!(m > 0.0 && m <= 1.0)) throw ValidationError("RangeError", "m must lie in (0, 1]");

  const double z1 = alphabet_size - 1.0;
  const double inv_n = 1.0 / n;
  const bool sub_linear_applies = p.eps <= inv_n;
  const bool logarithmic_applies = p.eps >= inv_n && p.eps <= 1.0;
  const bool type_counting_applies = p.eps >= 1.0;

  StabilityReport type_counting{"type_counting", 0.0, 0.0, z1 * std::log(n + 1.0)};
  if (type_counting_applies && !sub_linear_applies && !logarithmic_applies) {
    return type_counting;
  }

  const GroupPrivacyFactor g = g_k(n * (alphabet_size - 1), p);
  if (g.exceeds_one) {
    if (type_counting_applies) return type_counting;  // no privacy premise needed there
    throw AssumptionError("AssumptionViolated",
                          "group-privacy factor reaches " + std::to_string(g.value) +
                              "; the h-dependent bound needs it below 1");
  }
  const double h = std::log(1.0 / (1.0 - g.value)) + 2.0 * g.value / m;

  StabilityReport best{"", g.value, h, kInf};
  if (sub_linear_applies) {
    const double bound = z1 * p.eps * n + h;
    if (bound < best.bound) best = {"sub_linear", g.value, h, bound};
  }
  if (logarithmic_applies) {
    const double bound = z1 * std::log(n * std::exp(1.0) * p.eps) + h;
    if (bound < best.bound) best = {"logarithmic", g.value, h, bound};
  }
  if (type_counting_applies && type_counting.bound < best.bound) best = type_counting;
  return best;
}

CQEnsemble::CQEnsemble(std::vector<std::pair<double, DensityOperator>> entries)
    : entries_(std::move(entries)) {
  if (entries_.empty()) throw ValidationError("InvalidParams", "ensemble needs entries");
  double total = 0.0;
  const int d = entries_.front().second.dim();
  for (auto& [w, state] : entries_) {
    if (w < -kTolTrace) throw ValidationError("InvalidParams", "negative ensemble weight");
    if (w < 0.0) w = 0.0;
    if (state.dim() != d) throw ValidationError("DimMismatch", "ensemble dimensions differ");
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-9) {
    throw ValidationError("InvalidParams", "ensemble weights must sum to 1");
  }
}

int CQEnsemble::dim() const { return entries_.front().second.dim(); }

double holevo(const CQEnsemble& ensemble) {
  const int d = ensemble.dim();
  Matrix average = Matrix::Zero(d, d);
  double conditional = 0.0;
  for (const auto& [w, state] : ensemble.entries()) {
    if (w <= 0.0) continue;
    average += w * state.matrix();
    conditional += w * von_neumann_entropy(state);
  }
  const double value = von_neumann_entropy(DensityOperator(average)) - conditional;
  return std::max(value, 0.0);
}

std::uint64_t type_census(int n, int d) {
  if (n < 1 || d < 1) throw ValidationError("RangeError", "need n >= 1 and d >= 1");
  std::uint64_t count = 1;
  for (int i = 1; i <= d - 1; ++i) {
    const std::uint64_t factor = static_cast<std::uint64_t>(n) + i;
    if (count > std::numeric_limits<std::uint64_t>::max() / factor) {
      throw ValidationError("Overflow", "type count exceeds 64 bits");
    }
    count = count * factor / i;  // exact: C(n+i, i) is integral
  }
  if (std::log(static_cast<double>(count)) > (d - 1) * std::log(n + 1.0) + 1e-9) {
    throw Error("Internal", "type count exceeded its cardinality bound");
  }
  return count;
}

ToyLearner make_toy_learner(int n, const PrivacyParams& p, double smoothing) {
  if (n < 1) throw ValidationError("RangeError", "n must be >= 1");
  if (!(smoothing > 0.0 && smoothing < 1.0)) {
    throw ValidationError("RangeError", "smoothing must lie in (0, 1)");
  }
  const StatePair base = weakest_pair(p);
  const Matrix mixer = Matrix::Identity(4, 4) / 4.0;
  const Matrix tau0 = (1.0 - smoothing) * base.rho().matrix() + smoothing * mixer;
  const Matrix tau1 = (1.0 - smoothing) * base.sigma().matrix() + smoothing * mixer;

  ToyLearner out;
  out.mass_floor = kInf;
  for (int k = 0; k <= n; ++k) {
    const double w = static_cast<double>(k) / n;
    out.outputs.emplace_back(Matrix((1.0 - w) * tau0 + w * tau1));
    out.mass_floor = std::min(out.mass_floor, out.outputs.back().min_positive_eigenvalue());
  }
  const double gamma = std::exp(p.eps);
  for (int k = 0; k < n; ++k) {
    const StatePair step(out.outputs[k], out.outputs[k + 1]);
    out.step_delta = std::max({out.step_delta, step.hockey_stick(gamma, Order::kRhoSigma),
                               step.hockey_stick(gamma, Order::kSigmaRho)});
  }
  return out;
}

double toy_learner_holevo(const ToyLearner& learner, double bias) {
  if (!(bias >= 0.0 && bias <= 1.0)) {
    throw ValidationError("RangeError", "bias must lie in [0, 1]");
  }
  const int n = static_cast<int>(learner.outputs.size()) - 1;
  std::vector<std::pair<double, DensityOperator>> entries;
  double binom = 1.0;  // C(n, k), updated iteratively
  for (int k = 0; k <= n; ++k) {
    const double w = binom * std::pow(bias, k) * std::pow(1.0 - bias, n - k);
    entries.emplace_back(w, learner.outputs[k]);
    binom = binom * (n - k) / (k + 1.0);
  }
  double total = 0.0;
  for (auto& [w, state] : entries) total += w;
  for (auto& [w, state] : entries) w /= total;  // exact binomial mass, re-normalized
  return holevo(CQEnsemble(std::move(entries)));
}

}  // namespace qdpkit
