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

#include <string>
#include <vector>

namespace qdpkit {

// Finite probability distribution over a labeled alphabet. Entries must be
// nonnegative (values in [-kTolPsd, 0) clip to 0) and sum to 1 within
// kTolTrace. Divergences on distributions return the in-band +infinity
// sentinel rather than throwing.
class ClassicalDist {
 public:
  ClassicalDist(std::vector<std::string> alphabet, std::vector<double> probs);
  // Labels "0", "1", ... are generated when only probabilities are given.
  explicit ClassicalDist(std::vector<double> probs);

  int size() const { return static_cast<int>(probs_.size()); }
  const std::vector<std::string>& alphabet() const { return alphabet_; }
  const std::vector<double>& probs() const { return probs_; }
  double operator[](int i) const { return probs_[i]; }

 private:
  std::vector<std::string> alphabet_;
  std::vector<double> probs_;
};

// Throws AlphabetMismatch unless both distributions share the alphabet.
void require_same_alphabet(const ClassicalDist& p, const ClassicalDist& q);

double l1_distance(const ClassicalDist& p, const ClassicalDist& q);

// Hockey-stick divergence E_gamma(P||Q) = sum_x (P(x) - gamma Q(x))_+ for
// gamma >= 0. Zero iff P <= gamma Q pointwise.
double hockey_stick_c(const ClassicalDist& p, const ClassicalDist& q, double gamma);

// Minimum type-II error at type-I level alpha over randomized tests,
// computed exactly by likelihood-ratio ordering. Nonincreasing and convex
// in alpha.
double np_beta_c(const ClassicalDist& p, const ClassicalDist& q, double alpha);

// Relative entropy in nats; +infinity when supp(P) is not inside supp(Q).
double kl_c(const ClassicalDist& p, const ClassicalDist& q);

// Same value through the hockey-stick integral representation
//   D(P||Q) = int_1^inf (E_gamma(P||Q)/gamma + E_gamma(Q||P)/gamma^2) dgamma,
// integrated numerically to gamma_max = exp(max log-ratio) + 1 with the
// exact constant tail of the second term added in closed form.
double kl_via_integral_c(const ClassicalDist& p, const ClassicalDist& q);

// Renyi divergence of order alpha in nats; alpha = 1 falls back to kl_c.
double renyi_c(const ClassicalDist& p, const ClassicalDist& q, double alpha);

struct TruncatedPair {
  ClassicalDist p_tilde;
  ClassicalDist q_tilde;
  double delta_eff = 0.0;  // max{E_{e^eps}(P||Q), E_{e^eps}(Q||P)}
  double pure_eps = 0.0;   // eps + log(1/(1 - delta_eff))
};

// Pointwise-min-and-renormalize truncation that distills a pure
// (eps + log 1/(1-delta_eff))-DP pair from an (eps, delta)-DP pair:
//   P'(x) = min{P(x), e^eps Q(x)},  Q'(x) = min{Q(x), e^eps P(x)},
// each renormalized. delta_eff is computed from the pair itself (the
// tightest DP level at this eps). Throws DegenerateTruncation when a
// normalizer falls to the support floor.
TruncatedPair truncate_pair(const ClassicalDist& p, const ClassicalDist& q, double eps);

// The minimum-mass constant used by the truncation continuity bound:
// min over supp(P~) of {min(P~, P), min(Q~, Q)}.
double truncation_mass_floor(const TruncatedPair& t, const ClassicalDist& p,
                             const ClassicalDist& q);

// Row-stochastic kernel; each row is a distribution over out_alphabet.
class MarkovKernel {
 public:
  MarkovKernel(std::vector<std::string> in_alphabet, std::vector<std::string> out_alphabet,
               std::vector<std::vector<double>> rows);
  explicit MarkovKernel(std::vector<std::vector<double>> rows);

  int in_size() const { return static_cast<int>(rows_.size()); }
  int out_size() const { return static_cast<int>(out_alphabet_.size()); }
  const std::vector<std::string>& in_alphabet() const { return in_alphabet_; }
  const std::vector<std::string>& out_alphabet() const { return out_alphabet_; }
  ClassicalDist row(int x) const;

  ClassicalDist apply(const ClassicalDist& p) const;

 private:
  void validate_rows();

  std::vector<std::string> in_alphabet_;
  std::vector<std::string> out_alphabet_;
  std::vector<std::vector<double>> rows_;
};

// Tightest delta such that every ordered row pair satisfies the
// (eps, delta) privacy inequality; 0 for pure eps-LDP kernels.
double ldp_delta(const MarkovKernel& k, double eps);

struct LdpKlBounds {
  double bound_main = 0.0;  // integral-representation bound
  double bound_alt = 0.0;   // pure-DP reduction bound at eps' = eps + log 1/(1-delta)
  double actual = 0.0;      // D(K(P) || K(Q))
  double mass_floor = 0.0;  // m from the truncated output pair
};

// Evaluates both relative-entropy upper bounds for the outputs of an
// (eps, delta)-LDP kernel, together with the actual value. Requires the
// kernel to certify at (eps, delta) (NotLDP otherwise) and
// supp K(P) inside supp K(Q) (SupportViolation otherwise). When the mass
// floor m degenerates, the bounds are reported as +infinity.
LdpKlBounds kl_bound_ldp(const MarkovKernel& k, const ClassicalDist& p_x,
                         const ClassicalDist& q_x, double eps, double delta);

}  // namespace qdpkit
