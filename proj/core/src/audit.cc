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

#include "dppca/audit.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "dppca/error.h"
#include "dppca/rng.h"

namespace dppca {
namespace {

constexpr std::uint64_t kAuditStream = 0xA0D1;
constexpr double kQuadratureAgreement = 1e-4;
constexpr int kMinQuadraturePoints = 2048;

double Mean(const std::vector<double>& values) {
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum / static_cast<double>(values.size());
}

double StdErr(const std::vector<double>& values, double mean) {
  if (values.size() < 2) return 0.0;
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  const double m = static_cast<double>(values.size());
  return std::sqrt(ss / (m - 1.0) / m);
}

// Midpoint rule for E[(v_1)^power] on a grid with `points` nodes per angle.
double MidpointMoment(const Eigen::VectorXd& sigma, double beta, int power,
                      int points) {
  const Eigen::Index p = sigma.size();
  const double scale = static_cast<double>(p) * beta / 2.0;
  const double shift = sigma.maxCoeff();
  const double step_phi = 2.0 * std::numbers::pi / points;
  double numerator = 0.0;
  double denominator = 0.0;
  if (p == 2) {
    for (int a = 0; a < points; ++a) {
      const double phi = (a + 0.5) * step_phi;
      const double c = std::cos(phi);
      const double s = std::sin(phi);
      const double w =
          std::exp(scale * (sigma(0) * c * c + sigma(1) * s * s - shift));
      numerator += w * std::pow(c * c, power / 2);
      denominator += w;
    }
    return numerator / denominator;
  }
  const double step_theta = std::numbers::pi / points;
  std::vector<double> cos_phi_sq(static_cast<std::size_t>(points));
  for (int b = 0; b < points; ++b) {
    const double c = std::cos((b + 0.5) * step_phi);
    cos_phi_sq[static_cast<std::size_t>(b)] = c * c;
  }
  for (int a = 0; a < points; ++a) {
    const double theta = (a + 0.5) * step_theta;
    const double ct = std::cos(theta);
    const double st = std::sin(theta);
    const double base = sigma(0) * ct * ct - shift;
    double ring = 0.0;
    for (int b = 0; b < points; ++b) {
      const double cp = cos_phi_sq[static_cast<std::size_t>(b)];
      ring += std::exp(
          scale * (base + st * st * (sigma(1) * cp + sigma(2) * (1.0 - cp))));
    }
    ring *= st;
    numerator += ring * std::pow(ct * ct, power / 2);
    denominator += ring;
  }
  return numerator / denominator;
}

}  // namespace

std::vector<double> BatchStatistic(
    const GibbsTarget& target, int count, const SamplerConfig& config,
    const std::function<double(const OrthoFrame&)>& statistic) {
  if (count < 1) throw Error(ErrorCode::kDomainError, "count must be >= 1");
  std::vector<double> values(static_cast<std::size_t>(count));
  ParallelFor(count, config.workers, [&](int i) {
    Rng rng =
        MakeRng(BatchDrawSeed(config.seed, static_cast<std::uint64_t>(i)));
    values[static_cast<std::size_t>(i)] =
        statistic(Sample(target, config, rng));
  });
  return values;
}

FrameErrors ComputeFrameErrors(const SpectralSummary& summary,
                               const Eigen::MatrixXd& v) {
  const int k = summary.rank();
  if (v.rows() != summary.dim() || v.cols() != k) {
    throw Error(ErrorCode::kDimensionMismatch, "frame must be p x k");
  }
  const Eigen::MatrixXd m = summary.top_eigenvectors().transpose() * v;
  const Eigen::MatrixXd overlap = m * m.transpose();
  FrameErrors errors;
  const double min_eig = k == 1
                             ? overlap(0, 0)
                             : Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(
                                   overlap, Eigen::EigenvaluesOnly)
                                   .eigenvalues()
                                   .minCoeff();
  errors.spec_err_sq = std::clamp(1.0 - min_eig, 0.0, 1.0);
  errors.fro_err_sq = std::max(2.0 * k - 2.0 * overlap.trace(), 0.0);
  return errors;
}

nlohmann::json UtilityEstimate::ToJson() const {
  return {{"kind", "utility"},
          {"spec_err_sq_hat", spec_err_sq_hat},
          {"spec_err_sq_stderr", spec_err_sq_stderr},
          {"fro_err_sq_hat", fro_err_sq_hat},
          {"n_mc", n_mc},
          {"seed", seed},
          {"theoretical",
           {{"overlap_diag",
             std::vector<double>(theoretical.overlap_diag.data(),
                                 theoretical.overlap_diag.data() +
                                     theoretical.overlap_diag.size())},
            {"spec_err_sq", theoretical.spec_err_sq},
            {"fro_err_sq", theoretical.fro_err_sq},
            {"label", "asymptotic plug-in estimate"}}}};
}

UtilityEstimate EstimateUtility(const SpectralSummary& summary, double beta,
                                int n_mc, const SamplerConfig& config) {
  if (n_mc < 1) throw Error(ErrorCode::kDomainError, "n_mc must be >= 1");
  const GibbsTarget target(summary, beta);
  std::vector<FrameErrors> errors(static_cast<std::size_t>(n_mc));
  ParallelFor(n_mc, config.workers, [&](int i) {
    Rng rng =
        MakeRng(BatchDrawSeed(config.seed, static_cast<std::uint64_t>(i)));
    errors[static_cast<std::size_t>(i)] =
        ComputeFrameErrors(summary, Sample(target, config, rng).matrix());
  });
  std::vector<double> spec(errors.size());
  std::vector<double> fro(errors.size());
  for (std::size_t i = 0; i < errors.size(); ++i) {
    spec[i] = errors[i].spec_err_sq;
    fro[i] = errors[i].fro_err_sq;
  }
  UtilityEstimate estimate;
  estimate.spec_err_sq_hat = Mean(spec);
  estimate.spec_err_sq_stderr = StdErr(spec, estimate.spec_err_sq_hat);
  estimate.fro_err_sq_hat = Mean(fro);
  estimate.n_mc = n_mc;
  estimate.seed = config.seed;
  estimate.theoretical = PredictUtility(summary, beta);
  return estimate;
}

std::string_view TradeoffAlternativeName(TradeoffAlternative alternative) {
  return alternative == TradeoffAlternative::kWorstCaseNeighbor
             ? "worst_case_neighbor"
             : "independent_null";
}

double TradeoffEstimate::MaxDeviation() const {
  double deviation = 0.0;
  for (std::size_t i = 0; i < beta_hat.size(); ++i) {
    deviation =
        std::max(deviation, std::abs(beta_hat[i] - theoretical_overlay[i]));
  }
  return deviation;
}

nlohmann::json TradeoffEstimate::ToJson() const {
  return {{"kind", "tradeoff"},
          {"alternative", TradeoffAlternativeName(alternative)},
          {"alpha_grid", alpha_grid},
          {"beta_hat", beta_hat},
          {"beta_hat_monotone", beta_hat_monotone},
          {"theoretical_overlay", theoretical_overlay},
          {"max_abs_deviation", MaxDeviation()},
          {"sigma_hat", sigma_hat},
          {"t_star", t_star},
          {"n_mc", n_mc},
          {"seed", seed},
          {"label",
           "single worst-case neighbor estimate against an asymptotic plug-in "
           "overlay; not a certified audit"}};
}

double NearestRankQuantile(const std::vector<double>& sorted, double q) {
  if (sorted.empty()) throw Error(ErrorCode::kDomainError, "empty sample");
  const double m = static_cast<double>(sorted.size());
  // The 1e-9 guard keeps q m = integer from rounding up a rank.
  const double rank = std::ceil(q * m - 1e-9);
  const auto index = static_cast<std::size_t>(std::clamp(rank, 1.0, m)) - 1;
  return sorted[index];
}

double FractionBelow(const std::vector<double>& sorted, double threshold) {
  const auto it = std::lower_bound(sorted.begin(), sorted.end(), threshold);
  return static_cast<double>(it - sorted.begin()) /
         static_cast<double>(sorted.size());
}

SpectralSummary AddPointSummary(const SpectralSummary& summary,
                                const Eigen::VectorXd& x) {
  if (x.size() != summary.dim()) {
    throw Error(ErrorCode::kDimensionMismatch, "x must have length p");
  }
  const double n = summary.RequireSampleCount();
  Eigen::MatrixXd cov =
      (n * Reconstruct(summary) + x * x.transpose()) / (n + 1.0);
  cov = 0.5 * (cov + cov.transpose()).eval();
  return EigSym(cov, summary.rank(), n + 1.0);
}

TradeoffEstimate EstimateTradeoff(const SpectralSummary& summary, double beta,
                                  int n_mc,
                                  const std::vector<double>& alpha_grid,
                                  const SamplerConfig& config,
                                  TradeoffAlternative alternative) {
  if (n_mc < kMinTradeoffDraws) {
    throw Error(ErrorCode::kDomainError,
                "n_mc must be >= " + std::to_string(kMinTradeoffDraws));
  }
  for (double alpha : alpha_grid) {
    if (!(alpha >= 0.0 && alpha <= 1.0)) {
      throw Error(ErrorCode::kDomainError, "alpha grid must lie in [0, 1]");
    }
  }
  const PrivacyProfile profile = ComputePrivacyProfile(summary);
  const WorstCaseNeighbor neighbor = ComputeWorstCaseNeighbor(summary, beta);
  const Eigen::VectorXd& x = neighbor.x_star;
  const auto statistic = [&x](const OrthoFrame& v) {
    return (v.matrix().transpose() * x).squaredNorm();
  };

  SamplerConfig null_config = config;
  null_config.seed = DeriveSeed(config.seed, kAuditStream, 0);
  SamplerConfig alt_config = config;
  alt_config.seed = DeriveSeed(config.seed, kAuditStream, 1);

  const GibbsTarget null_target(summary, beta);
  std::vector<double> null_stats =
      BatchStatistic(null_target, n_mc, null_config, statistic);
  std::vector<double> alt_stats;
  if (alternative == TradeoffAlternative::kWorstCaseNeighbor) {
    const GibbsTarget alt_target(AddPointSummary(summary, x), beta);
    alt_stats = BatchStatistic(alt_target, n_mc, alt_config, statistic);
  } else {
    alt_stats = BatchStatistic(null_target, n_mc, alt_config, statistic);
  }
  std::sort(null_stats.begin(), null_stats.end());
  std::sort(alt_stats.begin(), alt_stats.end());

  TradeoffEstimate estimate;
  estimate.alpha_grid = alpha_grid;
  estimate.sigma_hat = std::sqrt(SigmaBetaSq(profile, beta));
  estimate.t_star = neighbor.t_star;
  estimate.n_mc = n_mc;
  estimate.seed = config.seed;
  estimate.alternative = alternative;
  const double mu = alternative == TradeoffAlternative::kWorstCaseNeighbor
                        ? estimate.sigma_hat
                        : 0.0;
  for (double alpha : alpha_grid) {
    const double threshold = NearestRankQuantile(null_stats, 1.0 - alpha);
    estimate.beta_hat.push_back(FractionBelow(alt_stats, threshold));
    estimate.theoretical_overlay.push_back(GdpTradeoff(mu, alpha));
  }
  // Running minimum in increasing alpha.
  std::vector<std::size_t> order(alpha_grid.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return alpha_grid[a] < alpha_grid[b];
                   });
  estimate.beta_hat_monotone = estimate.beta_hat;
  double running = 1.0;
  for (std::size_t i : order) {
    running = std::min(running, estimate.beta_hat[i]);
    estimate.beta_hat_monotone[i] = running;
  }
  return estimate;
}

double SphereQuadratureMoments(const Eigen::VectorXd& sigma_diag, double beta,
                               SphereMoment moment) {
  const Eigen::Index p = sigma_diag.size();
  if (p != 2 && p != 3) {
    throw Error(ErrorCode::kUnsupportedDimension,
                "sphere quadrature supports p = 2 or 3 only");
  }
  if (!std::isfinite(beta) || beta < 0.0 || !sigma_diag.allFinite()) {
    throw Error(ErrorCode::kDomainError,
                "beta and sigma must be finite, beta >= 0");
  }
  const int power = moment == SphereMoment::kSecond ? 2 : 4;
  const int max_points = p == 2 ? (1 << 20) : 16384;
  int points = kMinQuadraturePoints;
  double previous = MidpointMoment(sigma_diag, beta, power, points);
  while (points < max_points) {
    points *= 2;
    const double current = MidpointMoment(sigma_diag, beta, power, points);
    if (std::abs(current - previous) < kQuadratureAgreement) return current;
    previous = current;
  }
  throw Error(ErrorCode::kDomainError, "sphere quadrature did not converge");
}

OrthoFrame ProcrustesAlign(const OrthoFrame& v, const OrthoFrame& u_ref) {
  if (v.dim() != u_ref.dim() || v.rank() != u_ref.rank()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "frames must have matching shape");
  }
  const Eigen::MatrixXd cross = v.matrix().transpose() * u_ref.matrix();
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(
      cross, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Eigen::MatrixXd rotation = svd.matrixU() * svd.matrixV().transpose();
  return OrthoFrame(v.matrix() * rotation);
}

double KsDistance(std::vector<double> a, std::vector<double> b) {
  if (a.empty() || b.empty())
    throw Error(ErrorCode::kDomainError, "empty sample");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  double distance = 0.0;
  while (i < a.size() && j < b.size()) {
    const double x = std::min(a[i], b[j]);
    while (i < a.size() && a[i] == x) ++i;
    while (j < b.size() && b[j] == x) ++j;
    distance = std::max(distance, std::abs(static_cast<double>(i) / na -
                                           static_cast<double>(j) / nb));
  }
  return distance;
}

nlohmann::json CompareReport(const std::vector<ComparisonSection>& sections,
                             const nlohmann::json& metadata) {
  nlohmann::json report;
  report["schema"] = kAuditSchema;
  report["metadata"] = metadata;
  report["sections"] = nlohmann::json::array();
  for (const ComparisonSection& section : sections) {
    const std::size_t common =
        std::min(section.estimate.size(), section.overlay.size());
    nlohmann::json deviation;
    if (common > 0) {
      double max_dev = 0.0;
      for (std::size_t i = 0; i < common; ++i) {
        max_dev = std::max(max_dev,
                           std::abs(section.estimate[i] - section.overlay[i]));
      }
      deviation = max_dev;
    }
    report["sections"].push_back({{"name", section.name},
                                  {"x", section.x},
                                  {"estimate", section.estimate},
                                  {"overlay", section.overlay},
                                  {"max_abs_deviation", deviation},
                                  {"n_mc", section.n_mc},
                                  {"seed", section.seed}});
  }
  return report;
}

}  // namespace dppca
