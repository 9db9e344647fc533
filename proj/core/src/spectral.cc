//
// Copyright 2026 The dppca Authors
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

#include "dppca/spectral.h"

#include <cmath>
#include <string>

#include "dppca/error.h"

namespace dppca {
namespace {

void CheckRank(Eigen::Index p, int k) {
  if (k < 1 || k >= p) {
    throw Error(ErrorCode::kRankOutOfRange,
                "need 1 <= k < p, got k=" + std::to_string(k) +
                    " p=" + std::to_string(p));
  }
}

void CheckPole(const SpectralSummary& summary, double lambda) {
  if (!(lambda > summary.bulk_edge() + kPoleMargin)) {
    throw Error(ErrorCode::kPoleViolation,
                "evaluation point " + std::to_string(lambda) +
                    " is not above the bulk edge " +
                    std::to_string(summary.bulk_edge()));
  }
}

// Largest-magnitude entry positive; the first index within rounding of the
// maximum wins ties.
void FixSign(Eigen::Ref<Eigen::VectorXd> v) {
  const double max_abs = v.cwiseAbs().maxCoeff();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v(i)) >= max_abs * (1.0 - 1e-12)) {
      if (v(i) < 0) v = -v;
      return;
    }
  }
}

}  // namespace

SpectralSummary::SpectralSummary(Unchecked, Eigen::VectorXd eigenvalues,
                                 Eigen::MatrixXd eigenvectors, int k,
                                 std::optional<double> sample_count)
    : eigenvalues_(std::move(eigenvalues)),
      eigenvectors_(std::move(eigenvectors)),
      k_(k),
      sample_count_(sample_count) {
  const Eigen::Index p = eigenvalues_.size();
  CheckRank(p, k_);
  if (eigenvectors_.rows() != p || eigenvectors_.cols() != p) {
    throw Error(ErrorCode::kDimensionMismatch,
                "eigenvector matrix must be p x p");
  }
  if (!eigenvalues_.allFinite()) {
    throw Error(ErrorCode::kInvalidData, "non-finite eigenvalue");
  }
  for (Eigen::Index i = 1; i < p; ++i) {
    if (eigenvalues_(i) > eigenvalues_(i - 1)) {
      throw Error(ErrorCode::kInvalidData,
                  "eigenvalues must be non-increasing");
    }
  }
  if (sample_count_ && !(*sample_count_ > 0.0)) {
    throw Error(ErrorCode::kInvalidData, "sample count must be positive");
  }
}

SpectralSummary::SpectralSummary(Eigen::VectorXd eigenvalues,
                                 Eigen::MatrixXd eigenvectors, int k,
                                 std::optional<double> sample_count)
    : SpectralSummary(Unchecked{}, std::move(eigenvalues),
                      std::move(eigenvectors), k, sample_count) {
  const Eigen::Index p = dim();
  const double deviation = (eigenvectors_.transpose() * eigenvectors_ -
                            Eigen::MatrixXd::Identity(p, p))
                               .cwiseAbs()
                               .maxCoeff();
  if (deviation > kOrthonormalityTolerance) {
    throw Error(ErrorCode::kInvalidData,
                "eigenvectors are not orthonormal (max deviation " +
                    std::to_string(deviation) + ")");
  }
}

SpectralSummary SpectralSummary::Diagonal(Eigen::VectorXd eigenvalues, int k,
                                          std::optional<double> sample_count) {
  const Eigen::Index p = eigenvalues.size();
  return SpectralSummary(Unchecked{}, std::move(eigenvalues),
                         Eigen::MatrixXd::Identity(p, p), k, sample_count);
}

void SpectralSummary::RequireGap() const {
  if (gap_degenerate()) {
    throw Error(ErrorCode::kDegenerateGap,
                "lambda_k - lambda_{k+1} = " + std::to_string(gap()));
  }
}

double SpectralSummary::RequireSampleCount() const {
  if (!sample_count_) {
    throw Error(ErrorCode::kMissingSampleCount,
                "summary has no originating sample count");
  }
  return *sample_count_;
}

double SpectralSummary::theta() const {
  const double p = static_cast<double>(dim());
  return RequireSampleCount() / std::pow(p, 1.5);
}

SpectralSummary SpectralSummary::WithSampleCount(double n) const {
  return SpectralSummary(Unchecked{}, eigenvalues_, eigenvectors_, k_, n);
}

SpectralSummary EigSym(const Eigen::MatrixXd& matrix, int k,
                       std::optional<double> sample_count) {
  if (matrix.rows() != matrix.cols()) {
    throw Error(ErrorCode::kDimensionMismatch, "matrix must be square");
  }
  const Eigen::Index p = matrix.rows();
  CheckRank(p, k);
  if ((matrix - matrix.transpose()).cwiseAbs().maxCoeff() >
      kSymmetryTolerance) {
    throw Error(ErrorCode::kNotSymmetric, "matrix is not symmetric");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(matrix);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::kInvalidData, "eigendecomposition did not converge");
  }
  // Eigen returns ascending order.
  Eigen::VectorXd values = solver.eigenvalues().reverse();
  Eigen::MatrixXd vectors = solver.eigenvectors().rowwise().reverse();
  for (Eigen::Index j = 0; j < p; ++j) FixSign(vectors.col(j));
  return SpectralSummary(std::move(values), std::move(vectors), k,
                         sample_count);
}

SpectralSummary Summarize(const Dataset& dataset, int k) {
  return EigSym(Covariance(dataset), k,
                static_cast<double>(dataset.num_samples()));
}

Eigen::MatrixXd Reconstruct(const SpectralSummary& summary) {
  const Eigen::MatrixXd& u = summary.eigenvectors();
  return u * summary.eigenvalues().asDiagonal() * u.transpose();
}

double Hilbert(const SpectralSummary& summary, double lambda, int order) {
  if (order < 0 || order > 2) {
    throw Error(ErrorCode::kDomainError,
                "Hilbert derivative order must be 0, 1 or 2");
  }
  CheckPole(summary, lambda);
  const auto bulk = summary.bulk_eigenvalues();
  double sum = 0.0;
  for (Eigen::Index i = 0; i < bulk.size(); ++i) {
    const double r = 1.0 / (lambda - bulk(i));
    switch (order) {
      case 0:
        sum += r;
        break;
      case 1:
        sum += r * r;
        break;
      default:
        sum += r * r * r;
    }
  }
  const double p = static_cast<double>(summary.dim());
  switch (order) {
    case 0:
      return sum / p;
    case 1:
      return -sum / p;
    default:
      return 2.0 * sum / p;
  }
}

double KKernel(const SpectralSummary& summary, double lambda,
               double lambda_prime) {
  CheckPole(summary, lambda);
  CheckPole(summary, lambda_prime);
  const auto bulk = summary.bulk_eigenvalues();
  double sum = 0.0;
  for (Eigen::Index i = 0; i < bulk.size(); ++i) {
    sum += 1.0 / ((lambda - bulk(i)) * (lambda_prime - bulk(i)));
  }
  return sum / static_cast<double>(summary.dim());
}

}  // namespace dppca
