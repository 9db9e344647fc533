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

#ifndef DPPCA_SPECTRAL_H_
#define DPPCA_SPECTRAL_H_

#include <Eigen/Dense>
#include <optional>

#include "dppca/dataset.h"

namespace dppca {

// Gaps at or below this value are treated as degenerate.
inline constexpr double kDegenerateGapTolerance = 1e-12;
// Minimum distance from the bulk edge lambda_{k+1} for the resolvent sums.
inline constexpr double kPoleMargin = 1e-12;
inline constexpr double kSymmetryTolerance = 1e-8;
inline constexpr double kOrthonormalityTolerance = 1e-8;

// Descending eigendecomposition of a p x p covariance matrix together with
// the target rank k. Index conventions are zero-based: eigenvalue(0) is the
// largest eigenvalue, eigenvalue(k - 1) is lambda_k and eigenvalue(k) is the
// bulk edge lambda_{k+1}.
class SpectralSummary {
 public:
  // Validates descending order, 1 <= k < p, and U^T U = I (max entry
  // deviation 1e-8). The orthonormality check costs O(p^3).
  SpectralSummary(Eigen::VectorXd eigenvalues, Eigen::MatrixXd eigenvectors,
                  int k, std::optional<double> sample_count = std::nullopt);

  // Synthetic summary with U = I; skips the O(p^3) orthonormality check.
  static SpectralSummary Diagonal(
      Eigen::VectorXd eigenvalues, int k,
      std::optional<double> sample_count = std::nullopt);

  Eigen::Index dim() const { return eigenvalues_.size(); }
  int rank() const { return k_; }

  const Eigen::VectorXd& eigenvalues() const { return eigenvalues_; }
  const Eigen::MatrixXd& eigenvectors() const { return eigenvectors_; }
  double eigenvalue(Eigen::Index i) const { return eigenvalues_(i); }

  // lambda_k and lambda_{k+1}.
  double top_edge() const { return eigenvalues_(k_ - 1); }
  double bulk_edge() const { return eigenvalues_(k_); }
  auto bulk_eigenvalues() const { return eigenvalues_.tail(dim() - k_); }
  auto top_eigenvectors() const { return eigenvectors_.leftCols(k_); }
  auto bulk_eigenvectors() const { return eigenvectors_.rightCols(dim() - k_); }

  double gap() const { return top_edge() - bulk_edge(); }
  bool gap_degenerate() const { return gap() <= kDegenerateGapTolerance; }
  // Throws kDegenerateGap.
  void RequireGap() const;

  const std::optional<double>& sample_count() const { return sample_count_; }
  // n / p^{3/2}; throws kMissingSampleCount.
  double theta() const;
  // Throws kMissingSampleCount.
  double RequireSampleCount() const;

  SpectralSummary WithSampleCount(double n) const;

 private:
  struct Unchecked {};
  SpectralSummary(Unchecked, Eigen::VectorXd eigenvalues,
                  Eigen::MatrixXd eigenvectors, int k,
                  std::optional<double> sample_count);

  Eigen::VectorXd eigenvalues_;
  Eigen::MatrixXd eigenvectors_;
  int k_;
  std::optional<double> sample_count_;
};

// Full descending eigendecomposition of a symmetric matrix. Each eigenvector
// is signed so that its largest-magnitude entry is positive (ties go to the
// lowest index). Throws kNotSymmetric and kRankOutOfRange.
SpectralSummary EigSym(const Eigen::MatrixXd& matrix, int k,
                       std::optional<double> sample_count = std::nullopt);

// Covariance + EigSym, recording n.
SpectralSummary Summarize(const Dataset& dataset, int k);

Eigen::MatrixXd Reconstruct(const SpectralSummary& summary);

// Empirical Hilbert transform of the bulk spectrum and its derivatives:
//   order 0: (1/p) sum_i 1 / (lambda - lambda_{k+i})
//   order 1: -(1/p) sum_i 1 / (lambda - lambda_{k+i})^2
//   order 2: (2/p) sum_i 1 / (lambda - lambda_{k+i})^3
// Normalized by p, not p - k. Throws kPoleViolation unless
// lambda > lambda_{k+1} + kPoleMargin, and kDomainError for other orders.
double Hilbert(const SpectralSummary& summary, double lambda, int order = 0);

// (1/p) sum_i 1 / ((lambda - lambda_{k+i}) (lambda' - lambda_{k+i})).
double KKernel(const SpectralSummary& summary, double lambda,
               double lambda_prime);

}  // namespace dppca

#endif  // DPPCA_SPECTRAL_H_
