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
#include <utility>

namespace qdpkit {

using Matrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

// Dense Hermitian operator. Construction checks squareness and that the
// matrix equals its conjugate transpose within kTolHerm, then symmetrizes
// the stored copy so downstream eigensolves see an exactly Hermitian input.
class HermitianOperator {
 public:
  explicit HermitianOperator(Matrix entries);

  int dim() const { return static_cast<int>(entries_.rows()); }
  const Matrix& matrix() const { return entries_; }

 private:
  Matrix entries_;
};

struct EigResult {
  RealVector eigenvalues;  // sorted descending
  Matrix eigenvectors;     // columns matched to eigenvalues
};

// Eigendecomposition A = V diag(lambda) V^dagger with eigenvalues sorted
// descending. Throws NonHermitian via the HermitianOperator constructor
// when called on a raw matrix.
EigResult eig_hermitian(const HermitianOperator& a);
EigResult eig_hermitian(const Matrix& a);

// Eigenvalues only, ascending as produced by the solver. Cheaper inner
// loop for positive-part traces.
RealVector eigenvalues_hermitian(const Matrix& a);

// Tr|A|_+ = sum of positive eigenvalues. Nonnegative.
double positive_part_trace(const HermitianOperator& a);
double positive_part_trace(const Matrix& a);

// Sum of |eigenvalues| = trace norm of a Hermitian matrix.
double trace_norm_hermitian(const Matrix& a);

// Finite-dimensional density operator: PSD within kTolPsd, unit trace
// within kTolTrace. Eigenvalues in [-kTolPsd, 0) are clipped to 0 at
// construction; anything more negative is rejected. Carries its
// eigendecomposition and support data.
class DensityOperator {
 public:
  explicit DensityOperator(const HermitianOperator& op);
  explicit DensityOperator(const Matrix& entries);

  int dim() const { return static_cast<int>(matrix_.rows()); }
  const Matrix& matrix() const { return matrix_; }
  const RealVector& eigenvalues() const { return eigenvalues_; }  // descending, clipped
  const Matrix& eigenvectors() const { return eigenvectors_; }
  int support_rank() const { return support_rank_; }

  // Projector onto span of eigenvectors with eigenvalue > kTolSupp.
  Matrix support_projector() const;
  // Projector onto the orthogonal complement of the support.
  Matrix kernel_projector() const;
  // Smallest eigenvalue above kTolSupp.
  double min_positive_eigenvalue() const;

 private:
  void init();

  Matrix matrix_;
  RealVector eigenvalues_;
  Matrix eigenvectors_;
  int support_rank_ = 0;
};

// log applied to eigenvalues above kTolSupp; zero eigenvalues map to 0 on
// the orthogonal complement. Support inclusion is the caller's contract.
HermitianOperator matrix_log_on_support(const DensityOperator& a);

// Pseudo square root / inverse square root on the support (eigenvalues
// below `floor` are treated as zero).
Matrix sqrt_psd(const Matrix& a, double floor);
Matrix inv_sqrt_psd(const Matrix& a, double floor);

// von Neumann entropy -sum lambda log lambda in nats.
double von_neumann_entropy(const DensityOperator& a);

}  // namespace qdpkit
