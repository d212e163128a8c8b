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

#include <Eigen/Dense>
#include <cstdint>
#include <random>
#include <vector>

namespace qdpkit {

// Deterministic generator. Sampling trials that may run in parallel derive
// a fresh stream per trial index (`Rng(seed, trial)`), so results are
// reproducible regardless of scheduling.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0)
      : engine_(mix(seed, stream)) {}

  double uniform() { return unit_(engine_); }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  double gaussian() { return normal_(engine_); }
  std::uint64_t integer(std::uint64_t bound);  // uniform over [0, bound)

  std::mt19937_64& engine() { return engine_; }

 private:
  static std::uint64_t mix(std::uint64_t seed, std::uint64_t stream);

  std::mt19937_64 engine_;
  std::uniform_real_distribution<double> unit_{0.0, 1.0};
  std::normal_distribution<double> normal_{0.0, 1.0};
};

// Haar-ish random pure state: normalized complex Gaussian vector.
Eigen::VectorXcd random_pure_state(Rng& rng, int dim);

// Two orthonormal random vectors (Gram-Schmidt on complex Gaussians).
std::pair<Eigen::VectorXcd, Eigen::VectorXcd> random_orthogonal_pair(Rng& rng,
                                                                     int dim);

// Full-support mixed state: partial trace of a random bipartite pure state
// on dim x ancilla. ancilla >= dim gives generic full rank.
Eigen::MatrixXcd random_density_matrix(Rng& rng, int dim, int ancilla);

// Random unitary via QR of a complex Gaussian matrix.
Eigen::MatrixXcd random_unitary(Rng& rng, int dim);

// Random measurement effect 0 <= M <= I: random unitary conjugating a
// uniform[0,1] diagonal.
Eigen::MatrixXcd random_effect(Rng& rng, int dim);

// Random probability vector (flat Dirichlet).
std::vector<double> random_simplex(Rng& rng, int n);

}  // namespace qdpkit
