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
#include <optional>
#include <vector>

#include "qdpkit/divergence.hpp"
#include "qdpkit/linop.hpp"
#include "qdpkit/rng.hpp"

namespace qdpkit {

// (eps, delta) privacy level. delta is restricted to [0, 1): several of
// the derived formulas divide by 1 - delta.
struct PrivacyParams {
  double eps = 0.0;
  double delta = 0.0;

  PrivacyParams(double eps_in, double delta_in);
};

struct CertifyResult {
  bool is_dp = false;
  double delta_star = 0.0;  // max{E_{e^eps}(rho||sigma), E_{e^eps}(sigma||rho)}
};

// A pair is (eps, delta)-DP iff the hockey-stick divergence of order
// e^eps stays below delta in both argument orders. delta_star is the
// tight delta at this eps; the verdict allows kCertifySlack headroom.
CertifyResult certify_dp(const StatePair& pair, const PrivacyParams& p);

// Trade-off function f_{eps,delta}(alpha) =
//   max{1 - delta - e^eps alpha, e^-eps (1 - delta - alpha), 0}:
// the smallest type-II error any (eps, delta)-DP pair allows at type-I
// level alpha. Piecewise linear, convex, nonincreasing.
double f_tradeoff(const PrivacyParams& p, double alpha);

// The weakest (most informative) (eps, delta)-DP pair: the 4-dimensional
// diagonal pair whose hypothesis-testing divergence meets
// -log f_{eps,delta} with equality at every alpha, dominating every
// (eps, delta)-DP pair in each f-divergence.
StatePair weakest_pair(const PrivacyParams& p);

// The 2-dimensional pure-DP analogue diag(e^eps, 1)/(1+e^eps) vs swapped.
StatePair weakest_pure_pair(double eps);

// The alternative corner-achieving pair. It meets all corner points of
// the trade-off region yet is NOT (eps, delta)-DP for delta > 0: its
// tight hockey-stick level at e^eps is delta(2 + e^eps), and it
// certifies at eps* = log((e^eps + delta)/(1 - delta(2 + e^eps))).
// Requires 1 - delta(2 + e^eps) >= 0 (InvalidParams otherwise).
StatePair alt_pair(const PrivacyParams& p);

// The eps at which alt_pair(p) certifies with the same delta.
double alt_pair_certified_eps(const PrivacyParams& p);

// Achievable (type-I, type-II) error region of (eps, delta)-DP pairs:
// the polygon cut out of [0,1]^2 by
//   beta >= e^-eps (1 - delta - alpha),   beta >= 1 - delta - e^eps alpha,
//   beta <= 1 - e^-eps (alpha - delta),   beta <= e^eps (1 - alpha) + delta.
struct Region {
  PrivacyParams params;
  std::vector<std::array<double, 2>> vertices;  // counterclockwise, deduplicated
  std::array<double, 2> worst_fixed_point{};    // ((1-delta)/(1+e^eps), same)
  std::array<double, 2> best_fixed_point{};     // ((e^eps+delta)/(1+e^eps), same)
};

Region region(const PrivacyParams& p);
bool region_contains(const Region& r, double alpha, double beta);

// Information-ordering test: pair A dominates pair B when A's hockey-stick
// curve dominates B's at every order, in both argument orders, on a
// breakpoint-aware grid over [0, gamma_max] (with the asymptotic constants
// compared as well). Hypothesis-testing dominance is spot-checked on a
// small alpha grid as an implementation guard.
bool dominates(const StatePair& pair_a, const StatePair& pair_b, int grid);

struct SlackSample {
  double at = 0.0;     // grid coordinate (alpha or gamma)
  double slack = 0.0;  // weakest-pair value minus this pair's value
};

struct DominanceAudit {
  std::vector<SlackSample> hyp_test_slack;   // -log f - D_H^alpha, per alpha
  std::vector<SlackSample> hockey_slack;     // E_gamma(weakest) - E_gamma(pair)
  double min_slack = 0.0;
  // Pure-DP specializations, present when delta == 0:
  // D(rho||sigma) <= eps tanh(eps/2) and ||rho-sigma||_1 <= 2 tanh(eps/2).
  std::optional<double> kl_slack;
  std::optional<double> l1_slack;
};

// Audits the dominance theorems for a certified pair (NotDP otherwise):
// every slack must be >= -kTolDominance.
DominanceAudit dominance_audit(const StatePair& pair, const PrivacyParams& p,
                               const std::vector<double>& alpha_grid,
                               const std::vector<double>& gamma_grid);

// Documented audit-pair procedure: draws a random pair and mixes both
// states toward their average until certify_dp passes, so the audit
// premise always holds. Pure eps-DP pairs (delta = 0) get a small extra
// mixing margin to clear the eigensolver noise floor.
StatePair random_dp_pair(Rng& rng, int dim, const PrivacyParams& p);

}  // namespace qdpkit
