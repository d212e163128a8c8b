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

#include "qdpkit/inference.hpp"

#include <cmath>

#include "qdpkit/errors.hpp"
#include "qdpkit/tolerances.hpp"

namespace qdpkit {

DensityOperator mix(const StatePair& pair, double theta) {
  if (!(theta >= 0.0 && theta <= 1.0)) {
    throw ValidationError("RangeError", "theta must lie in [0, 1]");
  }
  return DensityOperator(
      Matrix(theta * pair.rho().matrix() + (1.0 - theta) * pair.sigma().matrix()));
}

double sld_fisher(const StatePair& pair, double theta) {
  if (!(theta > 0.0 && theta < 1.0)) {
    throw ValidationError("RangeError", "theta must lie in (0, 1)");
  }
  const DensityOperator rho_theta = mix(pair, theta);
  const Matrix derivative = pair.rho().matrix() - pair.sigma().matrix();
  // Work in the eigenbasis of rho_theta.
  const Matrix d_in_basis =
      rho_theta.eigenvectors().adjoint() * derivative * rho_theta.eigenvectors();
  const int dim = pair.dim();
  double fisher = 0.0;
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      const double denom = rho_theta.eigenvalues()(i) + rho_theta.eigenvalues()(j);
      const double magnitude = std::abs(d_in_basis(i, j));
      if (denom > kTolSupp) {
        fisher += 2.0 * magnitude * magnitude / denom;
      } else if (magnitude > 1e-9) {
        throw AssumptionError("SupportDegeneracy",
                              "derivative has weight on a null eigenvalue pair");
      }
    }
  }
  return fisher;
}

double fisher_max(const PrivacyParams& p, double theta) {
  if (!(theta > 0.0 && theta < 1.0)) {
    throw ValidationError("RangeError", "theta must lie in (0, 1)");
  }
  const double e = std::exp(p.eps);
  const double spread = theta * (1.0 - theta);
  const double gap = 1.0 - e;
  return p.delta / spread + (1.0 - p.delta) * gap * gap / (e + gap * gap * spread);
}

PrivatizedCurve privatized_beta_curve(const StatePair& pair, const PrivacyParams& p,
                                      double theta0, double theta1,
                                      const std::vector<double>& alpha_grid) {
  if (!(theta0 <= theta1 && theta0 >= 0.0 && theta1 <= 1.0)) {
    throw ValidationError("RangeError", "need 0 <= theta0 <= theta1 <= 1");
  }
  const CertifyResult cert = certify_dp(pair, p);
  if (!cert.is_dp) {
    throw AssumptionError("NotDP", "pair reaches delta = " + std::to_string(cert.delta_star) +
                                       " at this eps");
  }
  const StatePair weakest = weakest_pair(p);
  const StatePair mixture(mix(pair, theta1), mix(pair, theta0));
  const StatePair weakest_mixture(mix(weakest, theta1), mix(weakest, theta0));

  PrivatizedCurve out{TradeoffCurve("alpha", "beta_c"), TradeoffCurve("alpha", "beta_c"), kInf};
  for (double alpha : alpha_grid) {
    const double pair_power = 1.0 - np_beta_q(mixture, alpha);
    const double weakest_power = 1.0 - np_beta_q(weakest_mixture, alpha);
    out.curve.push(alpha, pair_power);
    out.weakest_curve.push(alpha, weakest_power);
    out.min_slack = std::min(out.min_slack, weakest_power - pair_power);
  }
  out.curve.analyze();
  out.weakest_curve.analyze();
  return out;
}

}  // namespace qdpkit
