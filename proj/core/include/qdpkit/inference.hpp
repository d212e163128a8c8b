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

#include <vector>

#include "qdpkit/curve.hpp"
#include "qdpkit/divergence.hpp"
#include "qdpkit/dpcert.hpp"

namespace qdpkit {

// Binomial-encoding mixture rho_theta = theta rho + (1-theta) sigma.
DensityOperator mix(const StatePair& pair, double theta);

// SLD Fisher information of the mixture family at theta, from the
// eigenbasis formula J = sum_{i,j} 2 |(rho-sigma)_{ij}|^2 / (lam_i+lam_j)
// restricted to lam_i + lam_j above the support floor. Throws
// SupportDegeneracy when a nonzero derivative element sits on a null
// eigenvalue sum.
double sld_fisher(const StatePair& pair, double theta);

// Closed-form maximum SLD Fisher information over all (eps, delta)-DP
// encodings:
//   delta/(theta(1-theta))
//     + (1-delta)(1-e^eps)^2 / (e^eps + (1-e^eps)^2 theta(1-theta)).
// Attained by the weakest pair. theta must be interior (the first term
// diverges at the endpoints when delta > 0).
double fisher_max(const PrivacyParams& p, double theta);

struct PrivatizedCurve {
  TradeoffCurve curve;          // (alpha, beta^c) samples for the given pair
  TradeoffCurve weakest_curve;  // same grid, weakest-pair mixtures
  double min_slack = 0.0;       // min over the grid of weakest - pair
};

// Detection-power curve beta^c(alpha) = 1 - beta(alpha) for testing
// rho_theta1 against rho_theta0, compared pointwise against the uniformly
// optimal weakest-pair encoding. The pair must certify at p (NotDP).
PrivatizedCurve privatized_beta_curve(const StatePair& pair, const PrivacyParams& p,
                                      double theta0, double theta1,
                                      const std::vector<double>& alpha_grid);

}  // namespace qdpkit
