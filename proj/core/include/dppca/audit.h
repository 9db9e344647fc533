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

#ifndef DPPCA_AUDIT_H_
#define DPPCA_AUDIT_H_

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <nlohmann/json.hpp>
#include <string>
#include <string_view>
#include <vector>

#include "dppca/mechanism.h"
#include "dppca/spectral.h"
#include "dppca/theory.h"

namespace dppca {

inline constexpr std::string_view kAuditSchema = "audit/v1";
inline constexpr int kDefaultMonteCarloDraws = 5000;
inline constexpr int kMinTradeoffDraws = 100;

// Applies `statistic` to `count` independent draws; draw i uses the same
// per-index seed as SampleBatch, so values are independent of the worker
// count. Results are returned in index order.
std::vector<double> BatchStatistic(
    const GibbsTarget& target, int count, const SamplerConfig& config,
    const std::function<double(const OrthoFrame&)>& statistic);

// Per-frame error metrics against the top-k eigenvectors U_*, computed from
// the k x k overlap U_*^T V V^T U_*.
struct FrameErrors {
  double spec_err_sq = 0.0;  // ||U_* U_*^T - V V^T||_2^2
  double fro_err_sq = 0.0;   // ||U_* U_*^T - V V^T||_F^2
};
FrameErrors ComputeFrameErrors(const SpectralSummary& summary,
                               const Eigen::MatrixXd& v);

struct UtilityEstimate {
  double spec_err_sq_hat = 0.0;
  double fro_err_sq_hat = 0.0;
  double spec_err_sq_stderr = 0.0;
  int n_mc = 0;
  std::uint64_t seed = 0;
  UtilityPrediction theoretical;

  nlohmann::json ToJson() const;
};

// Monte-Carlo means over n_mc draws at noise level beta. Throws
// kDomainError unless n_mc >= 1.
UtilityEstimate EstimateUtility(const SpectralSummary& summary, double beta,
                                int n_mc, const SamplerConfig& config);

enum class TradeoffAlternative {
  // Alternative law uses the covariance with the worst-case point added.
  kWorstCaseNeighbor,
  // Alternative is a second independent batch from the null law.
  kIndependentNull,
};

std::string_view TradeoffAlternativeName(TradeoffAlternative alternative);

struct TradeoffEstimate {
  std::vector<double> alpha_grid;
  std::vector<double> beta_hat;           // raw estimates
  std::vector<double> beta_hat_monotone;  // non-increasing in alpha
  std::vector<double> theoretical_overlay;
  double sigma_hat = 0.0;  // plug-in sigma_beta
  double t_star = 1.0;
  int n_mc = 0;
  std::uint64_t seed = 0;
  TradeoffAlternative alternative = TradeoffAlternative::kWorstCaseNeighbor;

  double MaxDeviation() const;  // max |beta_hat - overlay|
  nlohmann::json ToJson() const;
};

// Nearest-rank empirical quantile of an ascending sample: element
// ceil(q m) (one-based), clamped to [1, m].
double NearestRankQuantile(const std::vector<double>& sorted, double q);

// Fraction of `values` strictly below `threshold`.
double FractionBelow(const std::vector<double>& sorted, double threshold);

// Type-II error estimates for testing the Gibbs law of the summary against
// the law after adding the worst-case point x*. The test statistic is
// ||V^T x*||^2 and the level-alpha threshold is the nearest-rank
// (1 - alpha) quantile of the null statistics. The overlay is the Gaussian
// trade-off curve at the plug-in sigma_beta (mu = 0 for kIndependentNull).
// Throws kOutOfRegime, kMissingSampleCount, and kDomainError
// (n_mc < kMinTradeoffDraws or alpha outside [0, 1]).
TradeoffEstimate EstimateTradeoff(
    const SpectralSummary& summary, double beta, int n_mc,
    const std::vector<double>& alpha_grid, const SamplerConfig& config,
    TradeoffAlternative alternative = TradeoffAlternative::kWorstCaseNeighbor);

// Covariance spectrum after appending x to a dataset of n samples:
// (n Sigma + x x^T) / (n + 1), recorded with sample count n + 1.
SpectralSummary AddPointSummary(const SpectralSummary& summary,
                                const Eigen::VectorXd& x);

enum class SphereMoment { kSecond, kFourth };

// E[(v^T e_1)^m] under density exp((p beta / 2) v^T diag(sigma_diag) v) on
// the unit sphere in R^p, p in {2, 3}, by tensor-product midpoint
// quadrature. The grid is doubled until two successive resolutions agree to
// 1e-4; at least 2048 points per angle. Throws kUnsupportedDimension.
double SphereQuadratureMoments(const Eigen::VectorXd& sigma_diag, double beta,
                               SphereMoment moment);

// V R with R = argmin_{R in O(k)} ||V R - U_ref||_F, from the SVD of
// V^T U_ref. Throws kDimensionMismatch.
OrthoFrame ProcrustesAlign(const OrthoFrame& v, const OrthoFrame& u_ref);

// Two-sample Kolmogorov-Smirnov distance sup_x |F_a(x) - F_b(x)|.
double KsDistance(std::vector<double> a, std::vector<double> b);

// One estimate-vs-theory comparison within an audit report.
struct ComparisonSection {
  std::string name;
  std::vector<double> x;
  std::vector<double> estimate;
  std::vector<double> overlay;
  int n_mc = 0;
  std::uint64_t seed = 0;
};

// {"schema": "audit/v1", "metadata": ..., "sections": [{name, x, estimate,
// overlay, max_abs_deviation, n_mc, seed}, ...]}.
nlohmann::json CompareReport(
    const std::vector<ComparisonSection>& sections,
    const nlohmann::json& metadata = nlohmann::json::object());

}  // namespace dppca

#endif  // DPPCA_AUDIT_H_
