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
#include <vector>

#include "qdpkit/divergence.hpp"
#include "qdpkit/dpcert.hpp"
#include "qdpkit/linop.hpp"

namespace qdpkit {

// Completely positive trace-preserving map in Kraus form. Trace
// preservation (sum K^dagger K = I within kTolRecon) is validated;
// complete positivity holds by construction.
class QuantumChannel {
 public:
  explicit QuantumChannel(std::vector<Matrix> kraus);

  int in_dim() const { return in_dim_; }
  int out_dim() const { return out_dim_; }
  const std::vector<Matrix>& kraus() const { return kraus_; }

  static QuantumChannel identity(int dim);
  static QuantumChannel depolarizing(int dim, double lambda);
  // Measures in the computational basis and reprepares the given state
  // for each outcome.
  static QuantumChannel measure_and_prepare(const std::vector<DensityOperator>& prepared);

 private:
  std::vector<Matrix> kraus_;
  int in_dim_ = 0;
  int out_dim_ = 0;
};

DensityOperator apply(const QuantumChannel& ch, const DensityOperator& rho);
StatePair apply(const QuantumChannel& ch, const StatePair& pair);

struct LdpCertificate {
  bool certified_up_to_sampling = false;
  double worst_delta = 0.0;
};

// Sampling-based local-DP check: sweeps computational-basis pairs, random
// orthogonal pure pairs (the extremal family for hockey-stick contraction)
// and random mixed pairs, recording the worst output hockey-stick value at
// e^eps. The verdict is a sampled estimate, never a proof.
LdpCertificate certify_ldp(const QuantumChannel& ch, const PrivacyParams& p, int trials,
                           std::uint64_t seed = 0);

// Hockey-stick value of the weakest (eps, delta)-DP pair in closed form:
//   (e^eps - gamma + delta(gamma + 1)) / (e^eps + 1)  for gamma in [1, e^eps],
//   delta                                             for gamma > e^eps.
// Continuous at gamma = e^eps and equal to the trace-distance contraction
// coefficient (e^eps - 1 + 2 delta)/(e^eps + 1) at gamma = 1.
double eta_weakest_closed_form(const PrivacyParams& p, double gamma);

struct EtaBounds {
  double lower = 0.0;
  double upper = 0.0;
};

// Sandwich on the hockey-stick contraction coefficient of (eps, delta)-LDP
// channels:
//   eta_E1 + (2 - delta)(1 - gamma)/(e^eps + 1) <= eta <= closed form above.
// The gap is exactly (gamma - 1)/(e^eps + 1) for gamma <= e^eps; the lower
// bound is reported as stated and may be vacuously negative.
EtaBounds eta_bounds(const PrivacyParams& p, double gamma);

// Largest sampled ratio E_gamma(N(rho)||N(sigma)) / E_gamma(rho||sigma)
// over random input pairs seeded with orthogonal pure pairs. A lower
// estimate of the true coefficient, never a certificate.
double empirical_contraction(const QuantumChannel& ch, double gamma, int trials,
                             std::uint64_t seed = 0);

}  // namespace qdpkit
