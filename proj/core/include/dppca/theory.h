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

#ifndef DPPCA_THEORY_H_
#define DPPCA_THEORY_H_

#include <Eigen/Dense>
#include <optional>
#include <string>

#include "dppca/spectral.h"

namespace dppca {

// Plug-in quantities behind every closed-form privacy curve. All are
// evaluated at the top edge lambda_k of a summary that records n.
struct PrivacyProfile {
  double theta = 0.0;         // n / p^{3/2}
  double delta = 0.0;         // lambda_k - lambda_{k+1}
  double h = 0.0;             // H(lambda_k)
  double hprime = 0.0;        // H'(lambda_k), negative
  double hsecond = 0.0;       // H''(lambda_k), positive
  double sigma_min_sq = 0.0;  // -H' / (2 theta^2)
  double beta_crit = 0.0;     // H - delta H'
};

// Throws kDegenerateGap and kMissingSampleCount.
PrivacyProfile ComputePrivacyProfile(const SpectralSummary& summary);

// Predicted utility of the Gibbs sampler at noise level beta.
struct UtilityPrediction {
  Eigen::VectorXd overlap_diag;  // (1 - H(lambda_i) / beta)_+, i = 1..k
  double spec_err_sq = 1.0;      // min(1, H(lambda_k) / beta)
  double fro_err_sq = 0.0;       // 2 sum_i min(1, H(lambda_i) / beta)
};

// beta = 0 gives zero overlaps and maximal errors. Throws kDomainError for
// negative or non-finite beta, kDegenerateGap when beta > 0 and the gap is
// degenerate.
UtilityPrediction PredictUtility(const SpectralSummary& summary, double beta);

// sigma_beta^2. Constant at sigma_min_sq (bitwise) for beta in (h, beta_crit];
// (beta - h)^2 / (2 delta theta^2 (2 (beta - h) + delta h')) above it.
// Throws kOutOfRegime when beta <= h.
double SigmaBetaSq(const PrivacyProfile& profile, double beta);

// Generalized inverse of SigmaBetaSq:
//   2 theta^2 delta (w^2 + sqrt((w^4 - sigma_min^2 w^2)_+)) + h.
// Throws kInfeasibleTarget when w_sq < sigma_min_sq.
double BetaForTarget(const PrivacyProfile& profile, double w_sq);

struct WorstCaseNeighbor {
  Eigen::VectorXd x_star;  // ||x_star||^2 = p
  double t_star = 1.0;     // weight on u_k, in (0, 1]
};

// x* = sqrt(p) (sqrt(t*) u_k + sqrt(1 - t*) u_{k+1}) with
// t* = min((beta - h) / (2 (beta - h) + delta h'), 1), and t* = 1 whenever
// beta <= beta_crit. Throws kOutOfRegime when beta <= h, kDegenerateGap.
WorstCaseNeighbor ComputeWorstCaseNeighbor(const SpectralSummary& summary,
                                           double beta);

// Variance functional of a symmetric perturbation E:
//   1/2 sum_{j,l<=k} K(lambda_j, lambda_l) (u_j^T E u_l)^2
//   + sum_{j<=k} sum_i (beta - H(lambda_j)) / (lambda_j - lambda_{k+i})
//                      (u_{k+i}^T E u_j)^2.
// Costs O(p^2 k). Throws kDimensionMismatch, kNotSymmetric, kDomainError
// (beta < 0) and kDegenerateGap.
double VarianceFunction(const SpectralSummary& summary,
                        const Eigen::MatrixXd& e, double beta);

// Same functional for E = sqrt(p) x x^T / n, given the eigen-coordinates
// c = U^T x. Costs O(p k).
double VarianceFunctionCoords(const SpectralSummary& summary,
                              const Eigen::VectorXd& coords, double n,
                              double beta);

// Datapoint form: rotates x into eigen-coordinates (O(p^2)) and calls
// VarianceFunctionCoords. Points above the norm bound ||x||^2 <= p are
// still evaluated, with a warning on stderr. Throws kDimensionMismatch.
double VarianceFunctionDatapoint(const SpectralSummary& summary,
                                 const Eigen::VectorXd& x, double n,
                                 double beta);

// Privacy statement attached to a fixed-beta release.
struct GuaranteeStatement {
  // Plug-in sigma_beta; empty when beta = 0 or outside the regime beta > H.
  std::optional<double> sigma_beta;
  std::string label;
};

// beta = 0 is labeled as perfectly private; beta <= H(lambda_k) carries no
// sigma_beta statement. Requires a recorded sample count when beta > 0.
GuaranteeStatement DescribeGuarantee(const SpectralSummary& summary,
                                     double beta);

// Standard normal CDF and quantile.
double NormalCdf(double x);
double NormalQuantile(double probability);

// Gaussian trade-off curve Phi(Phi^{-1}(1 - alpha) - mu), with the
// endpoints alpha = 0 -> 1 and alpha = 1 -> 0. Throws kDomainError unless
// mu >= 0 and alpha in [0, 1].
double GdpTradeoff(double mu, double alpha);

// Renyi divergence of order `order` between N(mu, 1) and N(0, 1):
// order mu^2 / 2. Throws kDomainError unless order > 1.
double RenyiGauss(double mu, double order);

}  // namespace dppca

#endif  // DPPCA_THEORY_H_
