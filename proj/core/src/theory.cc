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

#include "dppca/theory.h"

#include <algorithm>
#include <boost/math/distributions/normal.hpp>
#include <cmath>
#include <iostream>
#include <limits>
#include <string>

#include "dppca/error.h"
#include "dppca/io.h"

namespace dppca {
namespace {

void CheckBeta(double beta) {
  if (!std::isfinite(beta) || beta < 0.0) {
    throw Error(ErrorCode::kDomainError, "beta must be finite and >= 0");
  }
}

void RequireRegime(double beta, double h) {
  if (!(beta > h)) {
    throw Error(ErrorCode::kOutOfRegime,
                "beta = " + std::to_string(beta) +
                    " must exceed H(lambda_k) = " + std::to_string(h));
  }
}

// H(lambda_j) for j = 1..k.
Eigen::VectorXd TopHilbert(const SpectralSummary& summary) {
  Eigen::VectorXd h(summary.rank());
  for (int j = 0; j < summary.rank(); ++j) {
    h(j) = Hilbert(summary, summary.eigenvalue(j), 0);
  }
  return h;
}

// K(lambda_j, lambda_l) for j, l = 1..k.
Eigen::MatrixXd TopKernel(const SpectralSummary& summary) {
  const int k = summary.rank();
  Eigen::MatrixXd kernel(k, k);
  for (int j = 0; j < k; ++j) {
    for (int l = 0; l <= j; ++l) {
      kernel(j, l) =
          KKernel(summary, summary.eigenvalue(j), summary.eigenvalue(l));
      kernel(l, j) = kernel(j, l);
    }
  }
  return kernel;
}

// Evaluates the functional from the k x k block B = U_*^T E U_* and the
// (p-k) x k block C = U_perp^T E U_*.
template <typename TopBlock, typename BulkBlock>
double AssembleVariance(const SpectralSummary& summary, const TopBlock& top,
                        const BulkBlock& bulk, double beta) {
  const int k = summary.rank();
  const Eigen::MatrixXd kernel = TopKernel(summary);
  const Eigen::VectorXd h = TopHilbert(summary);
  const auto bulk_values = summary.bulk_eigenvalues();
  double first = 0.0;
  for (int j = 0; j < k; ++j) {
    for (int l = 0; l < k; ++l) first += kernel(j, l) * top(j, l) * top(j, l);
  }
  double second = 0.0;
  for (int j = 0; j < k; ++j) {
    const double lambda = summary.eigenvalue(j);
    double column = 0.0;
    for (Eigen::Index i = 0; i < bulk_values.size(); ++i) {
      column += bulk(i, j) * bulk(i, j) / (lambda - bulk_values(i));
    }
    second += (beta - h(j)) * column;
  }
  return 0.5 * first + second;
}

}  // namespace

PrivacyProfile ComputePrivacyProfile(const SpectralSummary& summary) {
  summary.RequireGap();
  PrivacyProfile profile;
  profile.theta = summary.theta();
  profile.delta = summary.gap();
  const double top = summary.top_edge();
  profile.h = Hilbert(summary, top, 0);
  profile.hprime = Hilbert(summary, top, 1);
  profile.hsecond = Hilbert(summary, top, 2);
  profile.sigma_min_sq =
      -profile.hprime / (2.0 * profile.theta * profile.theta);
  profile.beta_crit = profile.h - profile.delta * profile.hprime;
  return profile;
}

UtilityPrediction PredictUtility(const SpectralSummary& summary, double beta) {
  CheckBeta(beta);
  const int k = summary.rank();
  UtilityPrediction prediction;
  prediction.overlap_diag = Eigen::VectorXd::Zero(k);
  if (beta == 0.0) {
    prediction.spec_err_sq = 1.0;
    prediction.fro_err_sq = 2.0 * k;
    return prediction;
  }
  summary.RequireGap();
  const Eigen::VectorXd h = TopHilbert(summary);
  double fro = 0.0;
  for (int j = 0; j < k; ++j) {
    prediction.overlap_diag(j) = std::max(1.0 - h(j) / beta, 0.0);
    fro += std::min(1.0, h(j) / beta);
  }
  prediction.spec_err_sq = std::min(1.0, h(k - 1) / beta);
  prediction.fro_err_sq = 2.0 * fro;
  return prediction;
}

double SigmaBetaSq(const PrivacyProfile& profile, double beta) {
  RequireRegime(beta, profile.h);
  if (beta <= profile.beta_crit) return profile.sigma_min_sq;
  const double excess = beta - profile.h;
  return excess * excess /
         (2.0 * profile.delta * profile.theta * profile.theta *
          (2.0 * excess + profile.delta * profile.hprime));
}

double BetaForTarget(const PrivacyProfile& profile, double w_sq) {
  if (!std::isfinite(w_sq)) {
    throw Error(ErrorCode::kDomainError, "w^2 must be finite");
  }
  if (w_sq < profile.sigma_min_sq) {
    throw Error(ErrorCode::kInfeasibleTarget,
                "w^2 = " + std::to_string(w_sq) +
                    " is below the privacy floor sigma_min^2 = " +
                    std::to_string(profile.sigma_min_sq));
  }
  const double root =
      std::sqrt(std::max(w_sq * (w_sq - profile.sigma_min_sq), 0.0));
  return 2.0 * profile.theta * profile.theta * profile.delta * (w_sq + root) +
         profile.h;
}

WorstCaseNeighbor ComputeWorstCaseNeighbor(const SpectralSummary& summary,
                                           double beta) {
  summary.RequireGap();
  const double top = summary.top_edge();
  const double h = Hilbert(summary, top, 0);
  RequireRegime(beta, h);
  const double excess = beta - h;
  const double denominator =
      2.0 * excess + summary.gap() * Hilbert(summary, top, 1);
  WorstCaseNeighbor result;
  result.t_star = denominator > 0.0 ? std::min(excess / denominator, 1.0) : 1.0;
  const int k = summary.rank();
  const double scale = std::sqrt(static_cast<double>(summary.dim()));
  result.x_star =
      scale * (std::sqrt(result.t_star) * summary.eigenvectors().col(k - 1) +
               std::sqrt(1.0 - result.t_star) * summary.eigenvectors().col(k));
  return result;
}

double VarianceFunction(const SpectralSummary& summary,
                        const Eigen::MatrixXd& e, double beta) {
  CheckBeta(beta);
  const Eigen::Index p = summary.dim();
  if (e.rows() != p || e.cols() != p) {
    throw Error(ErrorCode::kDimensionMismatch, "E must be p x p");
  }
  if ((e - e.transpose()).cwiseAbs().maxCoeff() > kSymmetryTolerance) {
    throw Error(ErrorCode::kNotSymmetric, "E must be symmetric");
  }
  summary.RequireGap();
  const int k = summary.rank();
  const Eigen::MatrixXd a =
      summary.eigenvectors().transpose() * (e * summary.top_eigenvectors());
  return AssembleVariance(summary, a.topRows(k), a.bottomRows(p - k), beta);
}

double VarianceFunctionCoords(const SpectralSummary& summary,
                              const Eigen::VectorXd& coords, double n,
                              double beta) {
  CheckBeta(beta);
  const Eigen::Index p = summary.dim();
  if (coords.size() != p) {
    throw Error(ErrorCode::kDimensionMismatch,
                "coordinates must have length p");
  }
  if (!(n > 0.0)) throw Error(ErrorCode::kDomainError, "n must be positive");
  summary.RequireGap();
  const int k = summary.rank();
  // u_a^T E u_b = (sqrt(p) / n) c_a c_b.
  const double scale = std::sqrt(static_cast<double>(p)) / n;
  const Eigen::VectorXd top = coords.head(k);
  const Eigen::VectorXd bulk = coords.tail(p - k);
  const Eigen::MatrixXd top_block = scale * top * top.transpose();
  const Eigen::MatrixXd bulk_block = (scale * bulk) * top.transpose();
  return AssembleVariance(summary, top_block, bulk_block, beta);
}

double VarianceFunctionDatapoint(const SpectralSummary& summary,
                                 const Eigen::VectorXd& x, double n,
                                 double beta) {
  const Eigen::Index p = summary.dim();
  if (x.size() != p) {
    throw Error(ErrorCode::kDimensionMismatch, "x must have length p");
  }
  const double norm_sq = x.squaredNorm();
  if (norm_sq > static_cast<double>(p) * (1.0 + kNormSlack)) {
    std::clog << "warning: " << ErrorCodeName(ErrorCode::kNormViolation)
              << ": ||x||^2 = " << norm_sq << " exceeds p = " << p << "\n";
  }
  const Eigen::VectorXd coords = summary.eigenvectors().transpose() * x;
  return VarianceFunctionCoords(summary, coords, n, beta);
}

GuaranteeStatement DescribeGuarantee(const SpectralSummary& summary,
                                     double beta) {
  CheckBeta(beta);
  GuaranteeStatement statement;
  if (beta == 0.0) {
    statement.label = "no utility, perfect privacy";
    return statement;
  }
  const PrivacyProfile profile = ComputePrivacyProfile(summary);
  if (!(beta > profile.h)) {
    statement.label =
        "beta <= H(lambda_k): outside the regime of the sigma_beta guarantee";
    return statement;
  }
  statement.sigma_beta = std::sqrt(SigmaBetaSq(profile, beta));
  statement.label = FormatDouble(*statement.sigma_beta) +
                    "-AGDP (asymptotic plug-in estimate)";
  return statement;
}

double NormalCdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

double NormalQuantile(double probability) {
  if (!(probability > 0.0 && probability < 1.0)) {
    if (probability == 0.0) return -std::numeric_limits<double>::infinity();
    if (probability == 1.0) return std::numeric_limits<double>::infinity();
    throw Error(ErrorCode::kDomainError, "probability must lie in [0, 1]");
  }
  return boost::math::quantile(boost::math::normal_distribution<double>(),
                               probability);
}

double GdpTradeoff(double mu, double alpha) {
  if (!(mu >= 0.0) || !(alpha >= 0.0 && alpha <= 1.0)) {
    throw Error(ErrorCode::kDomainError, "need mu >= 0 and alpha in [0, 1]");
  }
  if (alpha == 0.0) return std::isinf(mu) ? 0.0 : 1.0;
  if (alpha == 1.0) return 0.0;
  // Phi^{-1}(1 - alpha) taken from the upper tail to keep small alpha exact.
  const double upper = boost::math::quantile(boost::math::complement(
      boost::math::normal_distribution<double>(), alpha));
  return NormalCdf(upper - mu);
}

double RenyiGauss(double mu, double order) {
  if (!(order > 1.0) || !std::isfinite(mu)) {
    throw Error(ErrorCode::kDomainError, "Renyi order must exceed 1");
  }
  return order * mu * mu / 2.0;
}

}  // namespace dppca
