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

#include <functional>
#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "qdpkit/linop.hpp"

namespace qdpkit {

enum class Order { kRhoSigma, kSigmaRho };

// Ordered pair of density operators under privacy analysis. Hockey-stick
// values are memoized per (gamma, order); the cache is mutex-guarded so a
// pair can be shared across grid workers.
class StatePair {
 public:
  StatePair(DensityOperator rho, DensityOperator sigma);
  StatePair(const StatePair& other);
  StatePair& operator=(const StatePair&) = delete;

  int dim() const { return rho_.dim(); }
  const DensityOperator& rho() const { return rho_; }
  const DensityOperator& sigma() const { return sigma_; }
  StatePair swapped() const { return StatePair(sigma_, rho_); }

  // E_gamma = Tr|rho - gamma sigma|_+ (order swaps the roles).
  double hockey_stick(double gamma, Order order = Order::kRhoSigma) const;

 private:
  DensityOperator rho_;
  DensityOperator sigma_;
  mutable std::map<std::pair<double, int>, double> cache_;
  mutable std::mutex cache_mutex_;
};

// Quantum hockey-stick divergence E_gamma(rho||sigma), gamma >= 0. Equals
// the maximum of Tr[Lambda (rho - gamma sigma)] over effects 0<=Lambda<=I.
double hockey_stick_q(const StatePair& pair, double gamma);

// Max-relative entropy D_max(a||b) = log min{t : a <= t b} in nats;
// +infinity when supp(a) escapes supp(b).
double d_max(const DensityOperator& a, const DensityOperator& b);

// gamma values where an eigenvalue of (a - gamma b) crosses zero; used as
// quadrature breakpoints and dominance-grid refinements.
std::vector<double> pencil_crossings(const DensityOperator& a, const DensityOperator& b);

// Minimum type-II error at type-I level alpha, via the concave Lagrangian
// dual beta(alpha) = max_{t>=0} [1 - t alpha - Tr|sigma - t rho|_+], a 1-D
// golden-section maximization (strong duality holds for this program).
double np_beta_q(const StatePair& pair, double alpha);

// Hypothesis-testing divergence -log beta(alpha); +infinity sentinel when
// beta underflows to zero.
double hyp_test_div(const StatePair& pair, double alpha);

// Quantum relative entropy Tr[rho(log rho - log sigma)] in nats;
// +infinity when supp(rho) escapes supp(sigma).
double relative_entropy(const StatePair& pair);

// Same value through the hockey-stick integral representation
//   D = int_1^inf (E_gamma(rho||sigma)/gamma + E_gamma(sigma||rho)/gamma^2) dgamma,
// evaluated by adaptive quadrature with exact spectral cutoffs.
double relative_entropy_via_integral(const StatePair& pair);

struct SmoothTruncation {
  DensityOperator rho_tilde;
  double dmax_value = 0.0;      // D_max(rho_tilde || sigma)
  double trace_distance = 0.0;  // (1/2) || rho - rho_tilde ||_1
  double delta = 0.0;           // E_{e^eps}(rho || sigma) used for the bounds
};

// Gentle-measurement smoothing: conjugates rho by
//   G = (e^eps sigma)^{1/2} (e^eps sigma + |rho - e^eps sigma|_+)^{-1/2}
// and renormalizes, yielding rho_tilde with
//   D_max(rho_tilde||sigma) <= eps - log(1 - delta)  and
//   (1/2)||rho - rho_tilde||_1 <= sqrt(delta(2 - delta)).
// Throws SingularG when the inverse square root is ill-conditioned or the
// conjugated state loses all mass.
SmoothTruncation smooth_truncate(const StatePair& pair, double eps);

// Renyi divergence of order alpha in [0,1) u (1,inf) computed from the
// hockey-stick integral
//   H_alpha = alpha int_1^inf (gamma^(alpha-2) E_gamma(rho||sigma)
//                              + gamma^(-alpha-1) E_gamma(sigma||rho)) dgamma,
//   D_alpha = log(1 + (alpha-1) H_alpha) / (alpha-1).
// Valid when (alpha < 1 and rho not orthogonal to sigma) or rho << sigma;
// DomainViolation otherwise. The order-0 value is the alpha -> 0 limit.
double renyi_hockey(const StatePair& pair, double alpha);

// The coefficient convention for the measured Renyi-1/2 closed form. The
// standard reading -2 log||sqrt(rho) sqrt(sigma)||_1 reproduces the
// classical order-1/2 divergence on commuting pairs and is the default;
// the half-log reading -(1/2) log||.||_1 is exposed for comparison and
// does not satisfy the commuting-case equality (it is smaller by a factor
// of 4). The discrepancy is documented, not silently resolved.
enum class MeasuredHalfReading { kStandard, kHalfLog };

// Measured Renyi divergence of order 1/2 from the trace norm of
// sqrt(rho) sqrt(sigma). Throws OrthogonalStates on orthogonal inputs.
double measured_renyi_half(const StatePair& pair,
                           MeasuredHalfReading reading = MeasuredHalfReading::kStandard);

// Convex weight f for the f-divergence integral representation; carries
// the second derivative f'' (must be >= 0 on (0, inf), checked on a
// sampled grid) and a display label.
struct FWeight {
  std::function<double(double)> second_derivative;
  std::string description;

  FWeight(std::function<double(double)> f2, std::string label);

  static FWeight kl();           // f(x) = x log x, f''(x) = 1/x
  static FWeight chi_squared();  // f(x) = (x-1)^2, f''(x) = 2
};

// f-divergence via
//   D_f = int_1^inf (f''(gamma) E_gamma(rho||sigma)
//                    + gamma^(-3) f''(1/gamma) E_gamma(sigma||rho)) dgamma.
// Returns the +infinity sentinel when support conditions make the
// integral diverge. With the KL weight this reproduces relative_entropy.
double f_divergence(const StatePair& pair, const FWeight& f);

struct MixtureKlBounds {
  double bound_simple = 0.0;  // min_b { D(rho||sigma_b) - log w_b }
  double bound_tight = 0.0;   // -log sum_b w_b exp(-D(rho||sigma_b))
};

// Upper bounds on D(rho || sum_b w_b sigma_b) that avoid forming the
// mixture. Requires rho << sigma_b for every component (SupportViolation),
// and weights summing to one. bound_tight <= bound_simple always.
MixtureKlBounds mixture_kl_bound(const DensityOperator& rho,
                                 const std::vector<std::pair<double, DensityOperator>>& components);

struct ReversedPinsker {
  double lhs = 0.0;  // D(rho||sigma)
  double rhs = 0.0;  // (2 / lambda_min(sigma)) E_1(rho||sigma)^2
};

// Both sides of the reversed Pinsker inequality lhs <= rhs, with
// lambda_min the smallest nonzero eigenvalue of sigma. Requires
// supp(rho) inside supp(sigma).
ReversedPinsker reversed_pinsker_check(const StatePair& pair);

}  // namespace qdpkit
