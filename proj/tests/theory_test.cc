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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "test_util.h"

namespace dppca {
namespace {

using testing::CodeOf;

// Phi(x) from the Maclaurin series of erf; converges fast for |x| < 3.
double SeriesNormalCdf(double x) {
  const double z = x / std::sqrt(2.0);
  double term = z;
  double sum = z;
  for (int n = 1; n < 200; ++n) {
    term *= -z * z / n;
    sum += term / (2 * n + 1);
  }
  return 0.5 + sum / std::sqrt(M_PI);
}

// Direct double-loop evaluation of the variance functional.
double DenseVarianceOracle(const SpectralSummary& s, const Eigen::MatrixXd& e,
                           double beta) {
  const int k = s.rank();
  const Eigen::Index p = s.dim();
  const Eigen::MatrixXd& u = s.eigenvectors();
  double first = 0.0;
  for (int j = 0; j < k; ++j) {
    for (int l = 0; l < k; ++l) {
      double kernel = 0.0;
      for (Eigen::Index i = k; i < p; ++i) {
        kernel += 1.0 / ((s.eigenvalue(j) - s.eigenvalue(i)) *
                         (s.eigenvalue(l) - s.eigenvalue(i)));
      }
      kernel /= static_cast<double>(p);
      const double entry = u.col(j).dot(e * u.col(l));
      first += kernel * entry * entry;
    }
  }
  double second = 0.0;
  for (int j = 0; j < k; ++j) {
    double h = 0.0;
    for (Eigen::Index i = k; i < p; ++i)
      h += 1.0 / (s.eigenvalue(j) - s.eigenvalue(i));
    h /= static_cast<double>(p);
    for (Eigen::Index i = k; i < p; ++i) {
      const double entry = u.col(i).dot(e * u.col(j));
      second +=
          (beta - h) / (s.eigenvalue(j) - s.eigenvalue(i)) * entry * entry;
    }
  }
  return 0.5 * first + second;
}

PrivacyProfile ReferenceProfile() {
  return ComputePrivacyProfile(testing::ReferenceSummary());
}

TEST(PrivacyProfileTest, ReferenceValues) {
  const PrivacyProfile p = ReferenceProfile();
  EXPECT_NEAR(p.theta, 1.0, 1e-15);
  EXPECT_DOUBLE_EQ(p.delta, 1.0);
  EXPECT_DOUBLE_EQ(p.h, 0.8);
  EXPECT_DOUBLE_EQ(p.hprime, -0.8);
  EXPECT_DOUBLE_EQ(p.hsecond, 1.6);
  EXPECT_NEAR(p.sigma_min_sq, 0.4, 1e-15);
  EXPECT_DOUBLE_EQ(p.beta_crit, 1.6);
}

TEST(PrivacyProfileTest, ThetaScaling) {
  const SpectralSummary s = testing::ReferenceSummary();
  const PrivacyProfile a = ComputePrivacyProfile(s);
  const PrivacyProfile b =
      ComputePrivacyProfile(s.WithSampleCount(2.0 * *s.sample_count()));
  EXPECT_NEAR(b.theta, 2.0 * a.theta, 1e-15);
  EXPECT_NEAR(b.sigma_min_sq, a.sigma_min_sq / 4.0, 1e-15);
  EXPECT_EQ(b.h, a.h);
  EXPECT_EQ(b.hprime, a.hprime);
}

TEST(PrivacyProfileTest, GenomicsScaleTheta) {
  Eigen::VectorXd values = Eigen::VectorXd::Ones(200);
  values(0) = 3.0;
  const PrivacyProfile p =
      ComputePrivacyProfile(SpectralSummary::Diagonal(values, 1, 2504.0));
  EXPECT_NEAR(p.theta, 0.8853, 5e-5);
  EXPECT_DOUBLE_EQ(p.theta, 2504.0 / std::pow(200.0, 1.5));
}

TEST(PrivacyProfileTest, Errors) {
  const SpectralSummary flat =
      SpectralSummary::Diagonal(Eigen::VectorXd::Ones(4), 1, 8.0);
  EXPECT_EQ(CodeOf([&] { ComputePrivacyProfile(flat); }),
            ErrorCode::kDegenerateGap);
  const SpectralSummary no_n =
      SpectralSummary::Diagonal(Eigen::Vector3d(2, 1, 1), 1);
  EXPECT_EQ(CodeOf([&] { ComputePrivacyProfile(no_n); }),
            ErrorCode::kMissingSampleCount);
}

TEST(PrivacyProfileTest, InvariantsOnRandomSpectra) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const PrivacyProfile p =
        ComputePrivacyProfile(testing::RandomSummary(30, 2, rng));
    EXPECT_GT(p.theta, 0.0);
    EXPECT_GT(p.delta, 0.0);
    EXPECT_GT(p.h, 0.0);
    EXPECT_LT(p.hprime, 0.0);
    EXPECT_GT(p.hsecond, 0.0);
    EXPECT_GT(p.sigma_min_sq, 0.0);
    EXPECT_GT(p.beta_crit, p.h);
  }
}

TEST(UtilityPredictionTest, ReferenceValues) {
  const SpectralSummary s = testing::ReferenceSummary();
  const UtilityPrediction zero = PredictUtility(s, 0.0);
  EXPECT_EQ(zero.spec_err_sq, 1.0);
  EXPECT_EQ(zero.overlap_diag(0), 0.0);
  EXPECT_EQ(zero.fro_err_sq, 2.0);
  const UtilityPrediction two = PredictUtility(s, 2.0);
  EXPECT_DOUBLE_EQ(two.overlap_diag(0), 0.6);
  EXPECT_DOUBLE_EQ(two.spec_err_sq, 0.4);
  EXPECT_DOUBLE_EQ(two.fro_err_sq, 0.8);
  const UtilityPrediction edge = PredictUtility(s, 0.8);
  EXPECT_EQ(edge.overlap_diag(0), 0.0);
  EXPECT_EQ(edge.spec_err_sq, 1.0);
  EXPECT_EQ(CodeOf([&] { PredictUtility(s, -1.0); }), ErrorCode::kDomainError);
}

TEST(UtilityPredictionTest, OverlapNonIncreasingAndBounded) {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 20; ++trial) {
    const SpectralSummary s = testing::RandomSummary(25, 4, rng);
    for (double beta : {0.1, 1.0, 3.0, 30.0}) {
      const UtilityPrediction u = PredictUtility(s, beta);
      for (int i = 0; i < 4; ++i) {
        EXPECT_GE(u.overlap_diag(i), 0.0);
        EXPECT_LE(u.overlap_diag(i), 1.0);
        if (i > 0) EXPECT_LE(u.overlap_diag(i), u.overlap_diag(i - 1));
      }
      EXPECT_GE(u.fro_err_sq, 0.0);
      EXPECT_LE(u.fro_err_sq, 8.0);
    }
  }
}

TEST(SigmaBetaTest, ReferenceValues) {
  const PrivacyProfile p = ReferenceProfile();
  EXPECT_EQ(SigmaBetaSq(p, 1.0), p.sigma_min_sq);
  EXPECT_NEAR(SigmaBetaSq(p, 1.0), 0.4, 1e-15);
  EXPECT_NEAR(SigmaBetaSq(p, 2.6), 0.5 * 1.8 * 1.8 / 2.8, 1e-14);
  EXPECT_NEAR(SigmaBetaSq(p, 2.6), 0.5785714285714286, 1e-14);
  EXPECT_EQ(SigmaBetaSq(p, p.beta_crit), p.sigma_min_sq);
  // Upper branch meets the plateau at beta_crit.
  EXPECT_NEAR(SigmaBetaSq(p, p.beta_crit * (1 + 1e-12)), p.sigma_min_sq, 1e-10);
  EXPECT_EQ(CodeOf([&] { SigmaBetaSq(p, 0.8); }), ErrorCode::kOutOfRegime);
  EXPECT_EQ(CodeOf([&] { SigmaBetaSq(p, 0.1); }), ErrorCode::kOutOfRegime);
}

TEST(SigmaBetaTest, PlateauAndMonotonicity) {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 10; ++trial) {
    const PrivacyProfile p =
        ComputePrivacyProfile(testing::RandomSummary(40, 2, rng));
    for (int i = 1; i <= 100; ++i) {
      const double beta = p.h + (p.beta_crit - p.h) * i / 100.0;
      EXPECT_EQ(SigmaBetaSq(p, beta), p.sigma_min_sq);
    }
    double previous = p.sigma_min_sq;
    for (int i = 1; i <= 200; ++i) {
      const double beta = p.beta_crit * (1.0 + 3.0 * i / 200.0);
      const double value = SigmaBetaSq(p, beta);
      EXPECT_GT(value, previous);
      previous = value;
    }
  }
}

TEST(BetaForTargetTest, ReferenceValues) {
  const PrivacyProfile p = ReferenceProfile();
  EXPECT_NEAR(BetaForTarget(p, p.sigma_min_sq), p.beta_crit, 1e-14);
  EXPECT_NEAR(BetaForTarget(p, 1.0), 2.0 * (1.0 + std::sqrt(0.6)) + 0.8, 1e-14);
  EXPECT_NEAR(BetaForTarget(p, 1.0), 4.349193338482967, 1e-12);
  EXPECT_EQ(CodeOf([&] { BetaForTarget(p, 0.39); }),
            ErrorCode::kInfeasibleTarget);
}

TEST(BetaForTargetTest, InverseIdentity) {
  std::mt19937_64 rng(34);
  for (int trial = 0; trial < 5; ++trial) {
    const PrivacyProfile p =
        ComputePrivacyProfile(testing::RandomSummary(40, 2, rng));
    for (int j = -20; j <= 10; ++j) {
      const double w_sq = p.sigma_min_sq * (1.0 + std::pow(2.0, j));
      EXPECT_NEAR(SigmaBetaSq(p, BetaForTarget(p, w_sq)) / w_sq, 1.0, 1e-10)
          << j;
    }
  }
}

TEST(WorstCaseNeighborTest, ReferenceValues) {
  const SpectralSummary s = testing::ReferenceSummary();
  const WorstCaseNeighbor plateau = ComputeWorstCaseNeighbor(s, 1.2);
  EXPECT_EQ(plateau.t_star, 1.0);
  EXPECT_NEAR(
      (plateau.x_star - std::sqrt(5.0) * Eigen::VectorXd::Unit(5, 0)).norm(),
      0.0, 1e-15);
  const WorstCaseNeighbor upper = ComputeWorstCaseNeighbor(s, 2.6);
  EXPECT_NEAR(upper.t_star, 1.8 / 2.8, 1e-15);
  EXPECT_NEAR(upper.t_star, 0.6428571428571429, 1e-15);
  EXPECT_NEAR(upper.x_star.squaredNorm(), 5.0, 1e-13);
  EXPECT_EQ(CodeOf([&] { ComputeWorstCaseNeighbor(s, 0.8); }),
            ErrorCode::kOutOfRegime);
}

TEST(WorstCaseNeighborTest, NormOnRandomSummaries) {
  std::mt19937_64 rng(35);
  for (int trial = 0; trial < 20; ++trial) {
    const SpectralSummary s = testing::RandomSummary(20, 3, rng);
    const double h = Hilbert(s, s.top_edge(), 0);
    for (double factor : {1.01, 1.5, 3.0, 20.0}) {
      const WorstCaseNeighbor w = ComputeWorstCaseNeighbor(s, factor * h);
      EXPECT_NEAR(w.x_star.squaredNorm(), 20.0, 1e-12);
      EXPECT_GT(w.t_star, 0.0);
      EXPECT_LE(w.t_star, 1.0);
    }
  }
}

TEST(VarianceFunctionTest, TrivialCases) {
  const SpectralSummary s = testing::ReferenceSummary();
  const double n = *s.sample_count();
  EXPECT_EQ(VarianceFunction(s, Eigen::MatrixXd::Zero(5, 5), 2.0), 0.0);
  const Eigen::VectorXd bulk_point =
      std::sqrt(5.0) * Eigen::VectorXd::Unit(5, 1);
  EXPECT_EQ(VarianceFunctionDatapoint(s, bulk_point, n, 2.0), 0.0);
  EXPECT_EQ(VarianceFunctionDatapoint(s, Eigen::VectorXd::Zero(5), n, 2.0),
            0.0);
  const Eigen::VectorXd top_point =
      std::sqrt(5.0) * Eigen::VectorXd::Unit(5, 0);
  EXPECT_NEAR(VarianceFunctionDatapoint(s, top_point, n, 1.2), 0.4, 1e-14);
}

TEST(VarianceFunctionTest, Errors) {
  const SpectralSummary s = testing::ReferenceSummary();
  EXPECT_EQ(
      CodeOf([&] { VarianceFunction(s, Eigen::MatrixXd::Zero(4, 4), 1.0); }),
      ErrorCode::kDimensionMismatch);
  Eigen::MatrixXd asym = Eigen::MatrixXd::Zero(5, 5);
  asym(0, 1) = 1.0;
  EXPECT_EQ(CodeOf([&] { VarianceFunction(s, asym, 1.0); }),
            ErrorCode::kNotSymmetric);
  EXPECT_EQ(CodeOf([&] {
              VarianceFunctionDatapoint(s, Eigen::VectorXd::Zero(3), 1.0, 1.0);
            }),
            ErrorCode::kDimensionMismatch);
}

TEST(VarianceFunctionTest, MatchesDenseOracle) {
  std::mt19937_64 rng(36);
  for (int p : {6, 20, 50}) {
    const SpectralSummary s = testing::RandomSummary(p, 3, rng, 900.0);
    for (int trial = 0; trial < 5; ++trial) {
      const Eigen::MatrixXd e = testing::RandomSymmetric(p, rng);
      const double beta = 2.5;
      const double oracle = DenseVarianceOracle(s, e, beta);
      EXPECT_NEAR(VarianceFunction(s, e, beta) / oracle, 1.0, 1e-10);

      Eigen::VectorXd x = testing::GaussianMatrix(p, 1, rng).col(0);
      x *= std::sqrt(static_cast<double>(p)) / x.norm();
      const Eigen::MatrixXd ex =
          std::sqrt(static_cast<double>(p)) * x * x.transpose() / 900.0;
      EXPECT_NEAR(VarianceFunctionDatapoint(s, x, 900.0, beta) /
                      DenseVarianceOracle(s, ex, beta),
                  1.0, 1e-10);
    }
  }
}

TEST(GaussianTradeoffTest, ValuesAndEndpoints) {
  for (double alpha : {0.0, 0.01, 0.3, 0.5, 0.99, 1.0}) {
    EXPECT_NEAR(GdpTradeoff(0.0, alpha), 1.0 - alpha, 1e-15);
  }
  const double z95 = 1.6448536269514722;
  EXPECT_NEAR(GdpTradeoff(1.0, 0.05), SeriesNormalCdf(z95 - 1.0), 1e-12);
  EXPECT_NEAR(GdpTradeoff(1.0, 0.05), 0.74049, 5e-6);
  EXPECT_EQ(GdpTradeoff(2.0, 0.0), 1.0);
  EXPECT_EQ(GdpTradeoff(2.0, 1.0), 0.0);
  EXPECT_EQ(CodeOf([] { GdpTradeoff(-0.1, 0.5); }), ErrorCode::kDomainError);
  EXPECT_EQ(CodeOf([] { GdpTradeoff(1.0, 1.1); }), ErrorCode::kDomainError);
}

TEST(GaussianTradeoffTest, MonotoneInAlphaAndMu) {
  for (int i = 0; i <= 40; ++i) {
    for (int j = 1; j <= 50; ++j) {
      const double mu = 0.1 * i;
      const double alpha = j / 51.0;
      EXPECT_LT(GdpTradeoff(mu, alpha),
                GdpTradeoff(mu, alpha - 1.0 / 51.0) + 1e-16);
      EXPECT_LE(GdpTradeoff(mu + 0.1, alpha), GdpTradeoff(mu, alpha));
    }
  }
}

TEST(NormalTest, CdfAndQuantileAgreeWithSeries) {
  for (double x = -2.5; x <= 2.5; x += 0.125) {
    EXPECT_NEAR(NormalCdf(x), SeriesNormalCdf(x), 1e-13) << x;
  }
  EXPECT_NEAR(NormalQuantile(0.975), 1.959963984540054, 1e-14);
  EXPECT_NEAR(NormalCdf(NormalQuantile(0.3)), 0.3, 1e-15);
}

TEST(RenyiTest, Values) {
  EXPECT_EQ(RenyiGauss(0.0, 3.0), 0.0);
  EXPECT_EQ(RenyiGauss(1.0, 2.0), 1.0);
  EXPECT_EQ(CodeOf([] { RenyiGauss(1.0, 1.0); }), ErrorCode::kDomainError);
}

TEST(GuaranteeTest, Labels) {
  const SpectralSummary s = testing::ReferenceSummary();
  EXPECT_EQ(DescribeGuarantee(s, 0.0).label, "no utility, perfect privacy");
  EXPECT_FALSE(DescribeGuarantee(s, 0.5).sigma_beta.has_value());
  const GuaranteeStatement g = DescribeGuarantee(s, 2.6);
  ASSERT_TRUE(g.sigma_beta.has_value());
  EXPECT_NEAR(*g.sigma_beta, std::sqrt(0.5785714285714286), 1e-14);
  EXPECT_NE(g.label.find("asymptotic plug-in estimate"), std::string::npos);
}

}  // namespace
}  // namespace dppca
