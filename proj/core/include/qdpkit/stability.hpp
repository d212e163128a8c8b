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

#include <cstdint>
#include <string>
#include <vector>

#include "qdpkit/dpcert.hpp"
#include "qdpkit/linop.hpp"

namespace qdpkit {

// Classical training sequence over the alphabet {0, ..., alphabet_size-1}.
struct Dataset {
  std::vector<int> symbols;
  int alphabet_size = 0;

  Dataset(std::vector<int> symbols_in, int alphabet_size_in);
  int length() const { return static_cast<int>(symbols.size()); }
  std::vector<int> frequencies() const;
};

// Type distance: half the L1 distance between symbol-frequency vectors.
// Zero exactly for permutations of each other.
int neighbor_distance(const Dataset& a, const Dataset& b);

struct GroupPrivacyFactor {
  double value = 0.0;
  bool exceeds_one = false;  // the group-privacy reasoning assumes value < 1
};

// delta degradation over k neighbor hops:
//   g_k(eps, delta) = delta (e^{k eps} - 1)/(e^eps - 1), with the eps -> 0
// limit k delta.
GroupPrivacyFactor g_k(int k, const PrivacyParams& p);

struct StabilityReport {
  std::string regime;  // "sub_linear", "logarithmic", or "type_counting"
  double g = 0.0;      // g_{n(|Z|-1)}(eps, delta); 0 in the type_counting regime
  double h = 0.0;      // log 1/(1-g) + (2/m) g;      0 in the type_counting regime
  double bound = 0.0;  // nats
};

// Upper bound on the Holevo information between an n-sample training
// sequence and the output of a 1-neighbor (eps, delta)-DP
// support-consistent learner, by eps regime:
//   eps <  1/n : (|Z|-1) eps n            + h
//   eps in [1/n, 1) : (|Z|-1) log(n e eps) + h
//   eps >  1   : (|Z|-1) log(n + 1)
// with h = log 1/(1-g) + (2/m) g and g = g_{n(|Z|-1)}(eps, delta). At the
// exact regime boundaries the smaller bound is returned. Throws
// AssumptionViolated when g >= 1 in an h-dependent regime. m in (0, 1] is
// caller-supplied (for audited learners: the minimum eigenvalue floor
// across outputs).
StabilityReport stability_bound(int n, int alphabet_size, const PrivacyParams& p, double m);

// Classical-quantum ensemble {(weight, state)} with a common dimension.
class CQEnsemble {
 public:
  explicit CQEnsemble(std::vector<std::pair<double, DensityOperator>> entries);
  const std::vector<std::pair<double, DensityOperator>>& entries() const { return entries_; }
  int dim() const;

 private:
  std::vector<std::pair<double, DensityOperator>> entries_;
};

// Holevo information S(sum_s w_s rho_s) - sum_s w_s S(rho_s), in nats.
// Always in [0, log dim].
double holevo(const CQEnsemble& ensemble);

// Number of frequency types of n-sample sequences over d symbols:
// C(n+d-1, d-1), always <= (n+1)^(d-1). Overflow guarded.
std::uint64_t type_census(int n, int d);

// Toy 1-neighbor DP learner over |Z| = 2 used by the stability audits:
// per-type outputs walk the segment between a fixed full-support
// certified pair, so consecutive types inherit its privacy level scaled
// by the step. `smoothing` mixes the endpoints toward the maximally mixed
// state to keep every output full rank (support consistency).
struct ToyLearner {
  std::vector<DensityOperator> outputs;  // indexed by type k = 0..n
  double step_delta = 0.0;               // certified delta between consecutive types
  double mass_floor = 0.0;               // min eigenvalue across outputs (the audit's m)
};

ToyLearner make_toy_learner(int n, const PrivacyParams& p, double smoothing = 0.05);

// Holevo information of a toy learner under an i.i.d. prior with
// P(symbol 1) = bias: weights are the binomial type-class masses.
double toy_learner_holevo(const ToyLearner& learner, double bias);

}  // namespace qdpkit
