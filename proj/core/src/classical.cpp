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

#include "qdpkit/classical.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qdpkit/errors.hpp"
#include "qdpkit/quadrature.hpp"
#include "qdpkit/tolerances.hpp"

namespace qdpkit {

namespace {

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = std::to_string(i);
  return labels;
}

std::vector<double> validate_probs(std::vector<double> probs) {
  if (probs.empty()) throw ValidationError("RangeError", "distribution must be nonempty");
  double total = 0.0;
  for (double& x : probs) {
    if (x < -kTolPsd) {
      throw ValidationError("NotDistribution", "negative probability " + std::to_string(x));
    }
    if (x < 0.0) x = 0.0;
    total += x;
  }
  if (!(std::abs(total - 1.0) <= kTolTrace)) {
    throw ValidationError("NotDistribution", "probabilities sum to " + std::to_string(total));
  }
  return probs;
}

}  // namespace

ClassicalDist::ClassicalDist(std::vector<std::string> alphabet, std::vector<double> probs)
    : alphabet_(std::move(alphabet)), probs_(validate_probs(std::move(probs))) {
  if (alphabet_.size() != probs_.size()) {
    throw ValidationError("AlphabetMismatch", "alphabet and probability sizes differ");
  }
}

// Members initialize in declaration order, so the label count is read
// before the probability vector is moved from.
ClassicalDist::ClassicalDist(std::vector<double> probs)
    : alphabet_(default_labels(probs.size())), probs_(validate_probs(std::move(probs))) {}

void require_same_alphabet(const ClassicalDist& p, const ClassicalDist& q) {
  if (p.alphabet() != q.alphabet()) {
    throw ValidationError("AlphabetMismatch", "distributions live on different alphabets");
  }
}

double l1_distance(const ClassicalDist& p, const ClassicalDist& q) {
  require_same_alphabet(p, q);
  double total = 0.0;
  for (int i = 0; i < p.size(); ++i) total += std::abs(p[i] - q[i]);
  return total;
}

double hockey_stick_c(const ClassicalDist& p, const ClassicalDist& q, double gamma) {
  require_same_alphabet(p, q);
  if (!(gamma >= 0.0)) throw ValidationError("RangeError", "gamma must be >= 0");
  double total = 0.0;
  for (int i = 0; i < p.size(); ++i) total += std::max(p[i] - gamma * q[i], 0.0);
  return total;
}

double np_beta_c(const ClassicalDist& p, const ClassicalDist& q, double alpha) {
  require_same_alphabet(p, q);
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw ValidationError("RangeError", "alpha must lie in [0, 1]");
  }
  // Maximize sum q(x) phi(x) subject to sum p(x) phi(x) <= alpha.
  // Optimal randomized tests fill symbols in decreasing q/p order; symbols
  // with p = 0 contribute q-mass for free.
  const int n = p.size();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const bool a_free = p[a] <= 0.0;
    const bool b_free = p[b] <= 0.0;
    if (a_free != b_free) return a_free;
    if (a_free && b_free) return q[a] > q[b];
    return q[a] * p[b] > q[b] * p[a];
  });
  double budget = alpha;
  double gain = 0.0;
  for (int idx : order) {
    if (p[idx] <= 0.0) {
      gain += q[idx];
      continue;
    }
    if (budget <= 0.0) break;
    const double take = std::min(1.0, budget / p[idx]);
    gain += take * q[idx];
    budget -= take * p[idx];
  }
  return std::clamp(1.0 - gain, 0.0, 1.0);
}

double kl_c(const ClassicalDist& p, const ClassicalDist& q) {
  require_same_alphabet(p, q);
  double total = 0.0;
  for (int i = 0; i < p.size(); ++i) {
    if (p[i] <= 0.0) continue;
    if (q[i] <= 0.0) return kInf;
    total += p[i] * std::log(p[i] / q[i]);
  }
  return total;
}

double kl_via_integral_c(const ClassicalDist& p, const ClassicalDist& q) {
  require_same_alphabet(p, q);
  double max_ratio = 1.0;   // max p/q over supp(p)
  double max_ratio_r = 1.0; // max q/p over supp(q) cap supp(p)
  double off_support_q = 0.0;
  for (int i = 0; i < p.size(); ++i) {
    if (p[i] > 0.0 && q[i] <= 0.0) return kInf;
    if (p[i] > 0.0 && q[i] > 0.0) {
      max_ratio = std::max(max_ratio, p[i] / q[i]);
      max_ratio_r = std::max(max_ratio_r, q[i] / p[i]);
    }
    if (p[i] <= 0.0) off_support_q += q[i];
  }
  const double gamma_max = std::max(max_ratio, max_ratio_r) + 1.0;

  std::vector<double> kinks;
  for (int i = 0; i < p.size(); ++i) {
    if (p[i] > 0.0 && q[i] > 0.0) {
      kinks.push_back(p[i] / q[i]);
      kinks.push_back(q[i] / p[i]);
    }
  }

  const auto forward = [&](double g) { return hockey_stick_c(p, q, g) / g; };
  const auto reverse = [&](double g) { return hockey_stick_c(q, p, g) / (g * g); };
  double total = integrate_with_breakpoints(forward, 1.0, gamma_max, kinks, kTolInt);
  total += integrate_with_breakpoints(reverse, 1.0, gamma_max, kinks, kTolInt);
  // Beyond gamma_max the reverse curve equals the q-mass off supp(p); its
  // tail integrates to that constant over gamma_max exactly.
  total += off_support_q / gamma_max;
  return total;
}

double renyi_c(const ClassicalDist& p, const ClassicalDist& q, double alpha) {
  require_same_alphabet(p, q);
  if (!(alpha >= 0.0)) throw ValidationError("RangeError", "alpha must be >= 0");
  if (alpha == 1.0) return kl_c(p, q);
  if (alpha > 1.0) {
    double s = 0.0;
    for (int i = 0; i < p.size(); ++i) {
      if (p[i] <= 0.0) continue;
      if (q[i] <= 0.0) return kInf;
      s += std::pow(p[i], alpha) * std::pow(q[i], 1.0 - alpha);
    }
    return std::log(s) / (alpha - 1.0);
  }
  double s = 0.0;
  for (int i = 0; i < p.size(); ++i) {
    if (p[i] > 0.0 && q[i] > 0.0) s += std::pow(p[i], alpha) * std::pow(q[i], 1.0 - alpha);
  }
  if (s <= 0.0) return kInf;
  return std::log(s) / (alpha - 1.0);
}

TruncatedPair truncate_pair(const ClassicalDist& p, const ClassicalDist& q, double eps) {
  require_same_alphabet(p, q);
  if (!(eps >= 0.0)) throw ValidationError("RangeError", "eps must be >= 0");
  const double ratio = std::exp(eps);
  const double delta_eff =
      std::max(hockey_stick_c(p, q, ratio), hockey_stick_c(q, p, ratio));
  if (!(delta_eff < 1.0 - kTolSupp)) {
    throw AssumptionError("DegenerateTruncation",
                          "delta_eff = " + std::to_string(delta_eff) + " leaves no mass");
  }
  std::vector<double> p_cut(p.size()), q_cut(p.size());
  double p_norm = 0.0, q_norm = 0.0;
  for (int i = 0; i < p.size(); ++i) {
    p_cut[i] = std::min(p[i], ratio * q[i]);
    q_cut[i] = std::min(q[i], ratio * p[i]);
    p_norm += p_cut[i];
    q_norm += q_cut[i];
  }
  if (p_norm <= kTolSupp || q_norm <= kTolSupp) {
    throw AssumptionError("DegenerateTruncation", "truncation normalizer vanished");
  }
  for (int i = 0; i < p.size(); ++i) {
    p_cut[i] /= p_norm;
    q_cut[i] /= q_norm;
  }
  TruncatedPair out{ClassicalDist(p.alphabet(), std::move(p_cut)),
                    ClassicalDist(q.alphabet(), std::move(q_cut)), delta_eff,
                    eps + std::log(1.0 / (1.0 - delta_eff))};
  return out;
}

double truncation_mass_floor(const TruncatedPair& t, const ClassicalDist& p,
                             const ClassicalDist& q) {
  double m = kInf;
  for (int i = 0; i < p.size(); ++i) {
    if (t.p_tilde[i] <= kTolSupp) continue;
    m = std::min({m, std::min(t.p_tilde[i], p[i]), std::min(t.q_tilde[i], q[i])});
  }
  return m;
}

MarkovKernel::MarkovKernel(std::vector<std::string> in_alphabet,
                           std::vector<std::string> out_alphabet,
                           std::vector<std::vector<double>> rows)
    : in_alphabet_(std::move(in_alphabet)),
      out_alphabet_(std::move(out_alphabet)),
      rows_(std::move(rows)) {
  validate_rows();
}

MarkovKernel::MarkovKernel(std::vector<std::vector<double>> rows)
    : in_alphabet_(default_labels(rows.size())),
      out_alphabet_(default_labels(rows.empty() ? 0 : rows.front().size())),
      rows_(std::move(rows)) {
  validate_rows();
}

void MarkovKernel::validate_rows() {
  if (rows_.empty()) throw ValidationError("RangeError", "kernel must have rows");
  if (in_alphabet_.size() != rows_.size()) {
    throw ValidationError("AlphabetMismatch", "input alphabet size differs from row count");
  }
  for (auto& r : rows_) {
    if (r.size() != out_alphabet_.size()) {
      throw ValidationError("AlphabetMismatch", "row width differs from output alphabet");
    }
    r = ClassicalDist(out_alphabet_, r).probs();  // validates and clips
  }
}

ClassicalDist MarkovKernel::row(int x) const {
  if (x < 0 || x >= in_size()) throw ValidationError("RangeError", "row index out of range");
  return ClassicalDist(out_alphabet_, rows_[x]);
}

ClassicalDist MarkovKernel::apply(const ClassicalDist& p) const {
  if (p.size() != in_size()) {
    throw ValidationError("AlphabetMismatch", "input distribution size differs from kernel");
  }
  std::vector<double> out(out_alphabet_.size(), 0.0);
  for (int x = 0; x < in_size(); ++x) {
    for (std::size_t y = 0; y < out.size(); ++y) out[y] += p[x] * rows_[x][y];
  }
  return ClassicalDist(out_alphabet_, std::move(out));
}

double ldp_delta(const MarkovKernel& k, double eps) {
  if (!(eps >= 0.0)) throw ValidationError("RangeError", "eps must be >= 0");
  const double ratio = std::exp(eps);
  double worst = 0.0;
  for (int x = 0; x < k.in_size(); ++x) {
    const ClassicalDist rx = k.row(x);
    for (int y = 0; y < k.in_size(); ++y) {
      if (x == y) continue;
      worst = std::max(worst, hockey_stick_c(rx, k.row(y), ratio));
    }
  }
  return worst;
}

LdpKlBounds kl_bound_ldp(const MarkovKernel& k, const ClassicalDist& p_x,
                         const ClassicalDist& q_x, double eps, double delta) {
  if (!(eps >= 0.0) || !(delta >= 0.0 && delta < 1.0)) {
    throw ValidationError("InvalidParams", "need eps >= 0 and delta in [0, 1)");
  }
  const double worst = ldp_delta(k, eps);
  if (worst > delta + kCertifySlack) {
    throw AssumptionError("NotLDP", "kernel rows reach delta = " + std::to_string(worst) +
                                        " at this eps");
  }
  const ClassicalDist p_y = k.apply(p_x);
  const ClassicalDist q_y = k.apply(q_x);
  for (int i = 0; i < p_y.size(); ++i) {
    if (p_y[i] > kTolSupp && q_y[i] <= kTolSupp) {
      throw AssumptionError("SupportViolation",
                            "output support of P escapes the support of Q");
    }
  }

  LdpKlBounds out;
  out.actual = kl_c(p_y, q_y);

  const TruncatedPair trunc = truncate_pair(p_y, q_y, eps);
  out.mass_floor = truncation_mass_floor(trunc, p_y, q_y);
  if (!(out.mass_floor > kTolSupp)) {
    out.bound_main = kInf;
    out.bound_alt = kInf;
    return out;
  }

  const double m = out.mass_floor;
  const double e = std::exp(eps);
  const double log_shift = std::log(1.0 / (1.0 - delta));
  const double half_l1_in = 0.5 * l1_distance(p_x, q_x);

  out.bound_main =
      half_l1_in * (eps * std::tanh(eps / 2.0) +
                    delta * (2.0 * eps / (e + 1.0) + (e - 1.0) / e + log_shift + delta / e)) +
      delta * (e / (1.0 - delta) + 2.0 * std::log(e / (1.0 - delta)) - (1.0 - delta) / e +
               2.0 * (eps + log_shift + 2.0 / m));

  const double eps_prime = eps + log_shift;
  out.bound_alt = eps_prime * std::tanh(eps_prime / 2.0) + 2.0 * delta * (eps_prime + 2.0 / m);
  return out;
}

}  // namespace qdpkit
