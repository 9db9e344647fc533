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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "dppca/theory.h"
#include "test_util.h"

namespace dppca {
namespace {

using testing::CodeOf;

// E[v_1^2] on the 2-sphere: v_1 is uniform on [-1, 1] under the Haar law,
// and the azimuthal integral is a modified Bessel function.
double BesselSphereOracle(double l1, double l2, double l3, double beta) {
  const double c = 1.5 * beta;
  constexpr int kNodes = 400000;
  double num = 0.0, den = 0.0;
  for (int i = 0; i < kNodes; ++i) {
    const double t = -1.0 + (i + 0.5) * 2.0 / kNodes;
    const double r = 1.0 - t * t;
    const double w = std::exp(c * (l1 * t * t + r * (l2 + l3) / 2.0 - l1)) *
                     std::cyl_bessel_i(0.0, c * r * (l2 - l3) / 2.0);
    num += t * t * w;
    den += w;
  }
  return num / den;
}

TEST(FrameErrorsTest, Extremes) {
  const SpectralSummary s = testing::SpikedSummary(6, {3.0, 2.0}, 1.0, 1.0);
  const FrameErrors aligned =
      ComputeFrameErrors(s, Eigen::MatrixXd::Identity(6, 2));
  EXPECT_NEAR(aligned.spec_err_sq, 0.0, 1e-15);
  EXPECT_NEAR(aligned.fro_err_sq, 0.0, 1e-15);
  Eigen::MatrixXd orthogonal = Eigen::MatrixXd::Zero(6, 2);
  orthogonal(4, 0) = 1.0;
  orthogonal(5, 1) = 1.0;
  const FrameErrors far = ComputeFrameErrors(s, orthogonal);
  EXPECT_DOUBLE_EQ(far.spec_err_sq, 1.0);
  EXPECT_DOUBLE_EQ(far.fro_err_sq, 4.0);
}

TEST(FrameErrorsTest, MatchesDenseProjectionNorms) {
  std::mt19937_64 aux(61);
  const SpectralSummary s = testing::RandomSummary(9, 3, aux);
  Rng rng = MakeRng(62);
  for (int i = 0; i < 20; ++i) {
    const Eigen::MatrixXd v = SampleHaarFrame(9, 3, rng).matrix();
    const Eigen::MatrixXd diff =
        s.top_eigenvectors() * s.top_eigenvectors().transpose() -
        v * v.transpose();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(diff);
    const double op = eig.eigenvalues().cwiseAbs().maxCoeff();
    const FrameErrors e = ComputeFrameErrors(s, v);
    EXPECT_NEAR(e.spec_err_sq, op * op, 1e-12);
    EXPECT_NEAR(e.fro_err_sq, diff.squaredNorm(), 1e-12);
  }
}

TEST(EstimateUtilityTest, HaarLimit) {
  const SpectralSummary s = testing::SpikedSummary(200, {2.0}, 1.0, 1.0);
  SamplerConfig config;
  const UtilityEstimate u = EstimateUtility(s, 0.0, 5000, config);
  EXPECT_NEAR(u.spec_err_sq_hat, 1.0, 0.01);
  EXPECT_EQ(u.n_mc, 5000);
  EXPECT_EQ(u.theoretical.spec_err_sq, 1.0);
}

TEST(EstimateUtilityTest, UtilityRegime) {
  // Spike chosen so that H(lambda_1) = 0.8 at p = 300.
  const double spike = 1.0 + (299.0 / 300.0) / 0.8;
  const SpectralSummary s = testing::SpikedSummary(300, {spike}, 1.0, 1.0);
  SamplerConfig config;
  const UtilityEstimate u = EstimateUtility(s, 2.0, 2000, config);
  EXPECT_NEAR(u.theoretical.spec_err_sq, 0.4, 1e-12);
  EXPECT_NEAR(u.spec_err_sq_hat, 0.4, 0.05);
  const UtilityEstimate one = EstimateUtility(s, 2.0, 1, config);
  EXPECT_GE(one.spec_err_sq_hat, 0.0);
  EXPECT_LE(one.spec_err_sq_hat, 1.0);
  EXPECT_EQ(CodeOf([&] { EstimateUtility(s, 2.0, 0, config); }),
            ErrorCode::kDomainError);
}

TEST(QuantileTest, NearestRank) {
  const std::vector<double> v = {1, 2, 3, 4};
  EXPECT_EQ(NearestRankQuantile(v, 0.0), 1);
  EXPECT_EQ(NearestRankQuantile(v, 0.25), 1);
  EXPECT_EQ(NearestRankQuantile(v, 0.5), 2);
  EXPECT_EQ(NearestRankQuantile(v, 0.51), 3);
  EXPECT_EQ(NearestRankQuantile(v, 1.0), 4);
  std::vector<double> big(5000);
  for (std::size_t i = 0; i < big.size(); ++i) big[i] = static_cast<double>(i);
  EXPECT_EQ(NearestRankQuantile(big, 1.0 - 0.01), 4949);
  EXPECT_EQ(FractionBelow(v, 3), 0.5);
  EXPECT_EQ(FractionBelow(v, 3.5), 0.75);
  EXPECT_EQ(FractionBelow(v, 0.5), 0.0);
}

TEST(AddPointTest, MatchesAppendedDataset) {
  std::mt19937_64 aux(63);
  Eigen::MatrixXd x = testing::GaussianMatrix(20, 5, aux);
  const SpectralSummary s = Summarize(Dataset(x), 2);
  const Eigen::VectorXd point = testing::GaussianMatrix(5, 1, aux).col(0);
  Eigen::MatrixXd appended(21, 5);
  appended << x, point.transpose();
  const SpectralSummary expected = Summarize(Dataset(appended), 2);
  const SpectralSummary got = AddPointSummary(s, point);
  EXPECT_LE((got.eigenvalues() - expected.eigenvalues()).cwiseAbs().maxCoeff(),
            1e-12);
  EXPECT_EQ(*got.sample_count(), 21.0);
}

TEST(EstimateTradeoffTest, IndependentNullIsExchangeable) {
  const SpectralSummary s = testing::SpikedSummary(50, {2.0}, 1.0, 1.0);
  const double beta = BetaForTarget(ComputePrivacyProfile(s), 1.0);
  std::vector<double> grid;
  for (int i = 1; i <= 19; ++i) grid.push_back(i / 20.0);
  grid.push_back(1.0);
  SamplerConfig config;
  const int n_mc = 2000;
  const TradeoffEstimate t = EstimateTradeoff(
      s, beta, n_mc, grid, config, TradeoffAlternative::kIndependentNull);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    EXPECT_NEAR(t.beta_hat[i], 1.0 - grid[i], 2.0 / std::sqrt(n_mc)) << grid[i];
    EXPECT_EQ(t.theoretical_overlay[i], GdpTradeoff(0.0, grid[i]));
    if (i > 0) {
      EXPECT_LE(t.beta_hat[i], t.beta_hat[i - 1] + 2.0 / std::sqrt(n_mc));
      EXPECT_LE(t.beta_hat_monotone[i], t.beta_hat_monotone[i - 1]);
    }
  }
  EXPECT_LE(t.beta_hat.back(), 2.0 / std::sqrt(n_mc));
}

TEST(EstimateTradeoffTest, WorstCaseNeighborShape) {
  const SpectralSummary s = testing::SpikedSummary(60, {2.0}, 1.0, 1.0);
  const double beta = BetaForTarget(ComputePrivacyProfile(s), 1.0);
  SamplerConfig config;
  const TradeoffEstimate t =
      EstimateTradeoff(s, beta, 500, {0.05, 0.5, 1.0}, config);
  EXPECT_NEAR(t.sigma_hat, 1.0, 1e-10);
  for (double b : t.beta_hat) {
    EXPECT_GE(b, 0.0);
    EXPECT_LE(b, 1.0);
  }
  const nlohmann::json j = t.ToJson();
  EXPECT_EQ(j["alternative"], "worst_case_neighbor");
  EXPECT_EQ(j["max_abs_deviation"].get<double>(), t.MaxDeviation());
  EXPECT_EQ(CodeOf([&] { EstimateTradeoff(s, beta, 99, {0.5}, config); }),
            ErrorCode::kDomainError);
  EXPECT_EQ(CodeOf([&] { EstimateTradeoff(s, beta, 100, {1.5}, config); }),
            ErrorCode::kDomainError);
  EXPECT_EQ(CodeOf([&] { EstimateTradeoff(s, 0.5, 100, {0.5}, config); }),
            ErrorCode::kOutOfRegime);
}

TEST(NullStatisticTest, HaarProjectionMean) {
  const SpectralSummary s = testing::SpikedSummary(50, {3.0, 2.0}, 1.0, 1.0);
  const GibbsTarget target(s, 0.0);
  Eigen::VectorXd x = Eigen::VectorXd::Ones(50);  // ||x||^2 = p
  SamplerConfig config;
  const std::vector<double> stats =
      BatchStatistic(target, 10000, config, [&](const OrthoFrame& v) {
        return (v.matrix().transpose() * x).squaredNorm();
      });
  double mean = 0.0;
  for (double v : stats) mean += v;
  EXPECT_NEAR(mean / 10000.0, 2.0, 0.05);
}

TEST(SphereQuadratureTest, IsotropicCases) {
  EXPECT_NEAR(SphereQuadratureMoments(Eigen::Vector2d(2, 1), 0.0,
                                      SphereMoment::kSecond),
              0.5, 1e-12);
  EXPECT_NEAR(SphereQuadratureMoments(Eigen::Vector3d(2, 1, 0.5), 0.0,
                                      SphereMoment::kSecond),
              1.0 / 3.0, 1e-6);
  EXPECT_NEAR(SphereQuadratureMoments(Eigen::Vector3d(1, 1, 1), 7.0,
                                      SphereMoment::kSecond),
              1.0 / 3.0, 1e-6);
  EXPECT_NEAR(SphereQuadratureMoments(Eigen::Vector2d(1, 1), 7.0,
                                      SphereMoment::kFourth),
              3.0 / 8.0, 1e-12);
  EXPECT_NEAR(SphereQuadratureMoments(Eigen::Vector3d(1, 1, 1), 0.0,
                                      SphereMoment::kFourth),
              0.2, 1e-6);
  EXPECT_EQ(CodeOf([] {
              SphereQuadratureMoments(Eigen::Vector4d(1, 1, 1, 1), 1.0,
                                      SphereMoment::kSecond);
            }),
            ErrorCode::kUnsupportedDimension);
}

TEST(SphereQuadratureTest, MatchesBesselOracle) {
  const double got = SphereQuadratureMoments(Eigen::Vector3d(2, 1, 0.5), 3.0,
                                             SphereMoment::kSecond);
  EXPECT_NEAR(got, BesselSphereOracle(2, 1, 0.5, 3.0), 1e-6);
  EXPECT_NEAR(got, 0.7831, 1e-4);
}

TEST(ProcrustesTest, AlignmentProperties) {
  std::mt19937_64 aux(64);
  Rng rng = MakeRng(65);
  const OrthoFrame u = SampleHaarFrame(10, 3, rng);
  const OrthoFrame same = ProcrustesAlign(u, u);
  EXPECT_LE((same.matrix() - u.matrix()).cwiseAbs().maxCoeff(), 1e-12);
  const Eigen::MatrixXd q = testing::RandomOrthogonal(3, aux);
  const OrthoFrame rotated(u.matrix() * q);
  EXPECT_LE(
      (ProcrustesAlign(rotated, u).matrix() - u.matrix()).cwiseAbs().maxCoeff(),
      1e-10);
  for (int i = 0; i < 20; ++i) {
    const OrthoFrame v = SampleHaarFrame(10, 3, rng);
    const OrthoFrame aligned = ProcrustesAlign(v, u);
    EXPECT_LE((aligned.matrix() - u.matrix()).norm(),
              (v.matrix() - u.matrix()).norm() + 1e-12);
    // Same subspace.
    EXPECT_LE((aligned.matrix() * aligned.matrix().transpose() -
               v.matrix() * v.matrix().transpose())
                  .cwiseAbs()
                  .maxCoeff(),
              1e-12);
  }
  EXPECT_EQ(CodeOf([&] { ProcrustesAlign(u, SampleHaarFrame(10, 2, rng)); }),
            ErrorCode::kDimensionMismatch);
}

TEST(KsDistanceTest, Extremes) {
  EXPECT_EQ(KsDistance({1, 2, 3}, {1, 2, 3}), 0.0);
  EXPECT_EQ(KsDistance({1, 2}, {3, 4}), 1.0);
  EXPECT_DOUBLE_EQ(KsDistance({1, 2, 3, 4}, {3, 4, 5, 6}), 0.5);
}

TEST(CompareReportTest, EmptyDeviationAndRoundTrip) {
  const nlohmann::json empty = CompareReport({});
  EXPECT_EQ(empty["schema"], "audit/v1");
  EXPECT_TRUE(empty["sections"].empty());
  ComparisonSection section{"tradeoff",  {0.1, 0.5}, {0.7, 0.31},
                            {0.72, 0.3}, 100,        9};
  const nlohmann::json report = CompareReport({section}, {{"note", "unit"}});
  EXPECT_DOUBLE_EQ(report["sections"][0]["max_abs_deviation"].get<double>(),
                   std::max(std::abs(0.7 - 0.72), std::abs(0.31 - 0.3)));
  const std::string text = report.dump();
  EXPECT_EQ(nlohmann::json::parse(text).dump(), text);
  EXPECT_EQ(nlohmann::json::parse(text), report);
}

}  // namespace
}  // namespace dppca
