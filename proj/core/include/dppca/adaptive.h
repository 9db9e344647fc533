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

#ifndef DPPCA_ADAPTIVE_H_
#define DPPCA_ADAPTIVE_H_

#include <Eigen/Dense>
#include <cstdint>
#include <nlohmann/json.hpp>
#include <string>

#include "dppca/dataset.h"
#include "dppca/mechanism.h"
#include "dppca/spectral.h"

namespace dppca {

// Non-private spectral statistics driving the calibration.
struct RawStats {
  double d = 0.0;   // n^2 (lambda_k - lambda_{k+1}) / p^3
  double h = 0.0;   // H(lambda_k)
  double s2 = 0.0;  // -(p^3 / (2 n^2)) H'(lambda_k)
};

// Throws kDegenerateGap and kMissingSampleCount.
RawStats ComputeRawStats(const SpectralSummary& summary);

// Noise variances before the 1/p scaling.
struct NoiseVariances {
  double v_d = 0.0;  // (sqrt(6) n / (rho p^{3/2}))^2
  double v_h = 0.0;  // (sqrt(3) p^{3/2} H'(lambda_k) / (rho n))^2
  double v_s = 0.0;  // (sqrt(3) p^{9/2} H''(lambda_k) / (rho n^3))^2
};

// Throws kNonpositiveBudget unless rho is finite and > 0.
NoiseVariances ComputeNoiseVariances(const SpectralSummary& summary,
                                     double rho);

struct PrivateSpectralStats {
  double d_plus = 0.0;
  double h_plus = 0.0;
  double s2_plus = 0.0;
  double rho = 0.0;
  double v_d = 0.0;
  double v_h = 0.0;
  double v_s = 0.0;
  std::uint64_t seed = 0;
};

// Standard normal draws behind one privatization.
struct StatNoise {
  double d = 0.0;
  double h = 0.0;
  double s = 0.0;
};

// Three independent N(0, 1) draws on counter-split streams of `seed`.
StatNoise DrawStatNoise(std::uint64_t seed);

// (D, H, S^2 + 3 sqrt(v_S / p)) plus sqrt(v / p) * noise, each clipped at 0.
PrivateSpectralStats PrivatizeStatsWithNoise(const SpectralSummary& summary,
                                             double rho, std::uint64_t seed,
                                             const StatNoise& noise);
PrivateSpectralStats PrivatizeStats(const SpectralSummary& summary, double rho,
                                    std::uint64_t seed);

// True iff w_sq >= stats.s2_plus.
bool FeasibilityTest(const PrivateSpectralStats& stats, double w_sq);

// 2 d_plus (w^2 + sqrt(max(w^4 - s2_plus w^2, 0))) + h_plus.
double PrivateBeta(const PrivateSpectralStats& stats, double w_sq);

// Label of the composed guarantee, e.g. "1.4142135623730951-AGDP".
std::string GuaranteeLabel(double mu);

struct AdaptiveOutcome {
  // False when the feasibility test failed; `frame` is then the all-zero
  // p x k sentinel, which is never a valid orthonormal frame.
  bool passed = false;
  Eigen::MatrixXd frame;
  PrivateSpectralStats stats;
  double rho = 0.0;
  double w_sq = 0.0;
  double beta_used = 0.0;     // meaningful only when passed
  double guarantee_mu = 0.0;  // sqrt(rho^2 + w^2)
  std::uint64_t seed = 0;

  // {rho, w_sq, test, beta_used, guarantee_label, guarantee_mu,
  //  zero_frame_sentinel, seed, stats: {d_plus, h_plus, s2_plus}}.
  nlohmann::json Report() const;
};

// Stream seeds used by AdaptiveMechanism for the statistics and the sampler.
std::uint64_t AdaptiveStatsSeed(std::uint64_t seed);
std::uint64_t AdaptiveSamplerSeed(std::uint64_t seed);

// Privatize statistics, test feasibility, then sample at beta = B.
// Randomness is derived from config.seed only. Throws kNonpositiveBudget
// and kDomainError (w_sq <= 0).
AdaptiveOutcome AdaptiveMechanism(const SpectralSummary& summary, double rho,
                                  double w_sq, const SamplerConfig& config);
// Warns on stderr when the dataset is not norm certified.
AdaptiveOutcome AdaptiveMechanism(const Dataset& dataset, double rho,
                                  double w_sq, int k,
                                  const SamplerConfig& config);

}  // namespace dppca

#endif  // DPPCA_ADAPTIVE_H_
