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

#include "qdpkit/rng.hpp"

#include <cmath>

#include "qdpkit/errors.hpp"

namespace qdpkit {

std::uint64_t Rng::mix(std::uint64_t seed, std::uint64_t stream) {
  // splitmix64 finalizer over the (seed, stream) pair.
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t Rng::integer(std::uint64_t bound) {
  if (bound == 0) throw ValidationError("RangeError", "integer bound must be positive");
  std::uniform_int_distribution<std::uint64_t> dist(0, bound - 1);
  return dist(engine_);
}

Eigen::VectorXcd random_pure_state(Rng& rng, int dim) {
  Eigen::VectorXcd v(dim);
  for (int i = 0; i < dim; ++i) v(i) = {rng.gaussian(), rng.gaussian()};
  v /= v.norm();
  return v;
}

std::pair<Eigen::VectorXcd, Eigen::VectorXcd> random_orthogonal_pair(Rng& rng,
                                                                     int dim) {
  if (dim < 2) throw ValidationError("RangeError", "need dim >= 2 for an orthogonal pair");
  Eigen::VectorXcd a = random_pure_state(rng, dim);
  Eigen::VectorXcd b = random_pure_state(rng, dim);
  b -= a.dot(b) * a;
  while (b.norm() < 1e-8) {
    b = random_pure_state(rng, dim);
    b -= a.dot(b) * a;
  }
  b /= b.norm();
  return {a, b};
}

Eigen::MatrixXcd random_density_matrix(Rng& rng, int dim, int ancilla) {
  if (dim < 1 || ancilla < 1) throw ValidationError("RangeError", "dimensions must be positive");
  Eigen::MatrixXcd g(dim, ancilla);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < ancilla; ++j) g(i, j) = {rng.gaussian(), rng.gaussian()};
  Eigen::MatrixXcd rho = g * g.adjoint();
  rho /= rho.trace().real();
  // Symmetrize away round-off.
  return 0.5 * (rho + Eigen::MatrixXcd(rho.adjoint()));
}

Eigen::MatrixXcd random_unitary(Rng& rng, int dim) {
  Eigen::MatrixXcd g(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) g(i, j) = {rng.gaussian(), rng.gaussian()};
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ();
  // Fix the phase convention so Q is unique given G.
  Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < dim; ++j) {
    const std::complex<double> d = r(j, j);
    const double mag = std::abs(d);
    if (mag > 1e-14) q.col(j) *= d / mag;
  }
  return q;
}

Eigen::MatrixXcd random_effect(Rng& rng, int dim) {
  Eigen::MatrixXcd u = random_unitary(rng, dim);
  Eigen::VectorXd d(dim);
  for (int i = 0; i < dim; ++i) d(i) = rng.uniform();
  return u * d.asDiagonal() * u.adjoint();
}

std::vector<double> random_simplex(Rng& rng, int n) {
  if (n < 1) throw ValidationError("RangeError", "simplex dimension must be positive");
  std::vector<double> w(n);
  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    w[i] = -std::log(std::max(rng.uniform(), 1e-300));
    total += w[i];
  }
  for (double& x : w) x /= total;
  return w;
}

}  // namespace qdpkit
