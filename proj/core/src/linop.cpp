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

#include "qdpkit/linop.hpp"

#include <cmath>

#include "qdpkit/errors.hpp"
#include "qdpkit/tolerances.hpp"

namespace qdpkit {

namespace {

void check_square(const Matrix& m) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw ValidationError("DimMismatch", "operator must be a nonempty square matrix");
  }
}

void check_hermitian(const Matrix& m) {
  check_square(m);
  const double dev = (m - Matrix(m.adjoint())).cwiseAbs().maxCoeff();
  if (!(dev <= kTolHerm)) {
    throw ValidationError("NonHermitian",
                          "matrix deviates from its conjugate transpose by " + std::to_string(dev));
  }
}

}  // namespace

HermitianOperator::HermitianOperator(Matrix entries) {
  check_hermitian(entries);
  entries_ = 0.5 * (entries + Matrix(entries.adjoint()));
}

EigResult eig_hermitian(const HermitianOperator& a) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(a.matrix());
  if (solver.info() != Eigen::Success) {
    throw ValidationError("EigFailure", "eigensolver did not converge");
  }
  const int d = a.dim();
  EigResult out;
  out.eigenvalues.resize(d);
  out.eigenvectors.resize(d, d);
  // Solver returns ascending order; flip to descending.
  for (int i = 0; i < d; ++i) {
    out.eigenvalues(i) = solver.eigenvalues()(d - 1 - i);
    out.eigenvectors.col(i) = solver.eigenvectors().col(d - 1 - i);
  }
  return out;
}

EigResult eig_hermitian(const Matrix& a) { return eig_hermitian(HermitianOperator(a)); }

RealVector eigenvalues_hermitian(const Matrix& a) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(a, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw ValidationError("EigFailure", "eigensolver did not converge");
  }
  return solver.eigenvalues();
}

double positive_part_trace(const HermitianOperator& a) {
  return positive_part_trace(a.matrix());
}

double positive_part_trace(const Matrix& a) {
  check_hermitian(a);
  const RealVector lam = eigenvalues_hermitian(0.5 * (a + Matrix(a.adjoint())));
  double total = 0.0;
  for (int i = 0; i < lam.size(); ++i) total += std::max(lam(i), 0.0);
  return total;
}

double trace_norm_hermitian(const Matrix& a) {
  check_hermitian(a);
  const RealVector lam = eigenvalues_hermitian(0.5 * (a + Matrix(a.adjoint())));
  return lam.cwiseAbs().sum();
}

DensityOperator::DensityOperator(const HermitianOperator& op) : matrix_(op.matrix()) { init(); }

DensityOperator::DensityOperator(const Matrix& entries) {
  check_hermitian(entries);
  matrix_ = 0.5 * (entries + Matrix(entries.adjoint()));
  init();
}

void DensityOperator::init() {
  const double tr = matrix_.trace().real();
  if (!(std::abs(tr - 1.0) <= kTolTrace)) {
    throw ValidationError("NotDensity", "trace is " + std::to_string(tr) + ", expected 1");
  }
  EigResult eig = eig_hermitian(HermitianOperator(matrix_));
  eigenvalues_ = std::move(eig.eigenvalues);
  eigenvectors_ = std::move(eig.eigenvectors);
  support_rank_ = 0;
  for (int i = 0; i < eigenvalues_.size(); ++i) {
    if (eigenvalues_(i) < -kTolPsd) {
      throw ValidationError("NotDensity",
                            "negative eigenvalue " + std::to_string(eigenvalues_(i)));
    }
    if (eigenvalues_(i) < 0.0) eigenvalues_(i) = 0.0;
    if (eigenvalues_(i) > kTolSupp) ++support_rank_;
  }
}

Matrix DensityOperator::support_projector() const {
  Matrix p = Matrix::Zero(dim(), dim());
  for (int i = 0; i < support_rank_; ++i) {
    p += eigenvectors_.col(i) * eigenvectors_.col(i).adjoint();
  }
  return p;
}

Matrix DensityOperator::kernel_projector() const {
  return Matrix::Identity(dim(), dim()) - support_projector();
}

double DensityOperator::min_positive_eigenvalue() const {
  if (support_rank_ == 0) return 0.0;
  return eigenvalues_(support_rank_ - 1);
}

HermitianOperator matrix_log_on_support(const DensityOperator& a) {
  Matrix out = Matrix::Zero(a.dim(), a.dim());
  for (int i = 0; i < a.support_rank(); ++i) {
    out += std::log(a.eigenvalues()(i)) * a.eigenvectors().col(i) *
           a.eigenvectors().col(i).adjoint();
  }
  return HermitianOperator(out);
}

Matrix sqrt_psd(const Matrix& a, double floor) {
  EigResult eig = eig_hermitian(a);
  Matrix out = Matrix::Zero(a.rows(), a.cols());
  for (int i = 0; i < eig.eigenvalues.size(); ++i) {
    if (eig.eigenvalues(i) > floor) {
      out += std::sqrt(eig.eigenvalues(i)) * eig.eigenvectors.col(i) *
             eig.eigenvectors.col(i).adjoint();
    }
  }
  return out;
}

Matrix inv_sqrt_psd(const Matrix& a, double floor) {
  EigResult eig = eig_hermitian(a);
  Matrix out = Matrix::Zero(a.rows(), a.cols());
  for (int i = 0; i < eig.eigenvalues.size(); ++i) {
    if (eig.eigenvalues(i) > floor) {
      out += (1.0 / std::sqrt(eig.eigenvalues(i))) * eig.eigenvectors.col(i) *
             eig.eigenvectors.col(i).adjoint();
    }
  }
  return out;
}

double von_neumann_entropy(const DensityOperator& a) {
  double s = 0.0;
  for (int i = 0; i < a.support_rank(); ++i) {
    const double lam = a.eigenvalues()(i);
    s -= lam * std::log(lam);
  }
  return s;
}

}  // namespace qdpkit
