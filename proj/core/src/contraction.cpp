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

#include "qdpkit/contraction.hpp"

#include <cmath>

#include "qdpkit/errors.hpp"
#include "qdpkit/tolerances.hpp"

namespace qdpkit {

QuantumChannel::QuantumChannel(std::vector<Matrix> kraus) : kraus_(std::move(kraus)) {
  if (kraus_.empty()) throw ValidationError("InvalidParams", "channel needs Kraus operators");
  in_dim_ = static_cast<int>(kraus_.front().cols());
  out_dim_ = static_cast<int>(kraus_.front().rows());
  Matrix completeness = Matrix::Zero(in_dim_, in_dim_);
  for (const Matrix& k : kraus_) {
    if (k.cols() != in_dim_ || k.rows() != out_dim_) {
      throw ValidationError("DimMismatch", "Kraus operators have inconsistent shapes");
    }
    completeness += k.adjoint() * k;
  }
  const double dev =
      (completeness - Matrix::Identity(in_dim_, in_dim_)).cwiseAbs().maxCoeff();
  if (!(dev <= kTolRecon)) {
    throw ValidationError("NotTracePreserving",
                          "sum K^dagger K deviates from identity by " + std::to_string(dev));
  }
}

QuantumChannel QuantumChannel::identity(int dim) {
  return QuantumChannel({Matrix::Identity(dim, dim)});
}

QuantumChannel QuantumChannel::depolarizing(int dim, double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw ValidationError("RangeError", "mixing parameter must lie in [0, 1]");
  }
  std::vector<Matrix> kraus;
  kraus.push_back(std::sqrt(1.0 - lambda) * Matrix::Identity(dim, dim));
  // sum_{ij} |i><j| rho |j><i| = Tr[rho] I, so these complete the mix.
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      Matrix k = Matrix::Zero(dim, dim);
      k(i, j) = std::sqrt(lambda / dim);
      kraus.push_back(std::move(k));
    }
  }
  return QuantumChannel(std::move(kraus));
}

QuantumChannel QuantumChannel::measure_and_prepare(const std::vector<DensityOperator>& prepared) {
  if (prepared.empty()) throw ValidationError("InvalidParams", "need one state per outcome");
  const int in_dim = static_cast<int>(prepared.size());
  const int out_dim = prepared.front().dim();
  std::vector<Matrix> kraus;
  for (int outcome = 0; outcome < in_dim; ++outcome) {
    const DensityOperator& target = prepared[outcome];
    if (target.dim() != out_dim) {
      throw ValidationError("DimMismatch", "prepared states have mixed dimensions");
    }
    for (int k = 0; k < target.dim(); ++k) {
      const double weight = target.eigenvalues()(k);
      if (weight <= kTolSupp) continue;
      Matrix op = Matrix::Zero(out_dim, in_dim);
      op.col(outcome) = std::sqrt(weight) * target.eigenvectors().col(k);
      kraus.push_back(std::move(op));
    }
  }
  return QuantumChannel(std::move(kraus));
}

DensityOperator apply(const QuantumChannel& ch, const DensityOperator& rho) {
  if (rho.dim() != ch.in_dim()) {
    throw ValidationError("DimMismatch", "state dimension differs from channel input");
  }
  Matrix out = Matrix::Zero(ch.out_dim(), ch.out_dim());
  for (const Matrix& k : ch.kraus()) out += k * rho.matrix() * k.adjoint();
  out = 0.5 * (out + Matrix(out.adjoint()));
  return DensityOperator(out);
}

StatePair apply(const QuantumChannel& ch, const StatePair& pair) {
  return StatePair(apply(ch, pair.rho()), apply(ch, pair.sigma()));
}

namespace {

// Shared input schedule for the sampling routines: all computational-basis
// pairs first, then alternating random orthogonal-pure / mixed pairs.
std::vector<StatePair> sample_input_pairs(int dim, int trials, std::uint64_t seed) {
  std::vector<StatePair> pairs;
  for (int i = 0; i < dim; ++i) {
    for (int j = i + 1; j < dim; ++j) {
      Matrix a = Matrix::Zero(dim, dim);
      Matrix b = Matrix::Zero(dim, dim);
      a(i, i) = 1.0;
      b(j, j) = 1.0;
      pairs.emplace_back(DensityOperator(a), DensityOperator(b));
    }
  }
  for (int t = 0; t < trials; ++t) {
    Rng rng(seed, static_cast<std::uint64_t>(t) + 1);
    if (t % 2 == 0) {
      auto [u, v] = random_orthogonal_pair(rng, dim);
      pairs.emplace_back(DensityOperator(Matrix(u * u.adjoint())),
                         DensityOperator(Matrix(v * v.adjoint())));
    } else {
      pairs.emplace_back(DensityOperator(random_density_matrix(rng, dim, dim)),
                         DensityOperator(random_density_matrix(rng, dim, dim)));
    }
  }
  return pairs;
}

}  // namespace

LdpCertificate certify_ldp(const QuantumChannel& ch, const PrivacyParams& p, int trials,
                           std::uint64_t seed) {
  if (trials < 1) throw ValidationError("RangeError", "trials must be >= 1");
  const double gamma = std::exp(p.eps);
  LdpCertificate out;
  for (const StatePair& inputs : sample_input_pairs(ch.in_dim(), trials, seed)) {
    const StatePair outputs = apply(ch, inputs);
    out.worst_delta = std::max({out.worst_delta, outputs.hockey_stick(gamma, Order::kRhoSigma),
                                outputs.hockey_stick(gamma, Order::kSigmaRho)});
  }
  out.certified_up_to_sampling = out.worst_delta <= p.delta + kCertifySlack;
  return out;
}

double eta_weakest_closed_form(const PrivacyParams& p, double gamma) {
  if (!(gamma >= 1.0)) throw ValidationError("RangeError", "gamma must be >= 1");
  const double e = std::exp(p.eps);
  if (gamma > e) return p.delta;
  return (e - gamma + p.delta * (gamma + 1.0)) / (e + 1.0);
}

EtaBounds eta_bounds(const PrivacyParams& p, double gamma) {
  if (!(gamma >= 1.0)) throw ValidationError("RangeError", "gamma must be >= 1");
  const double e = std::exp(p.eps);
  const double eta_e1 = (e - 1.0 + 2.0 * p.delta) / (e + 1.0);
  EtaBounds out;
  out.lower = eta_e1 + (2.0 - p.delta) * (1.0 - gamma) / (e + 1.0);
  out.upper = eta_weakest_closed_form(p, gamma);
  return out;
}

double empirical_contraction(const QuantumChannel& ch, double gamma, int trials,
                             std::uint64_t seed) {
  if (trials < 1) throw ValidationError("RangeError", "trials must be >= 1");
  if (!(gamma >= 0.0)) throw ValidationError("RangeError", "gamma must be >= 0");
  double best = 0.0;
  for (const StatePair& inputs : sample_input_pairs(ch.in_dim(), trials, seed)) {
    const double denom = inputs.hockey_stick(gamma);
    if (denom <= kTolSupp) continue;
    const double numer = hockey_stick_q(apply(ch, inputs), gamma);
    best = std::max(best, numer / denom);
  }
  return best;
}

}  // namespace qdpkit
