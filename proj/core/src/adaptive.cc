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

#include "dppca/adaptive.h"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <random>

#include "dppca/error.h"
#include "dppca/io.h"
#include "dppca/rng.h"

namespace dppca {
namespace {

constexpr std::uint64_t kStatsStream = 0x57A7;
constexpr std::uint64_t kAdaptiveStream = 0xADA9;

void CheckBudget(double rho) {
  if (!std::isfinite(rho) || !(rho > 0.0)) {
    throw Error(ErrorCode::kNonpositiveBudget, "rho must be finite and > 0");
  }
}

double Dim(const SpectralSummary& summary) {
  return static_cast<double>(summary.dim());
}

}  // namespace

RawStats ComputeRawStats(const SpectralSummary& summary) {
  summary.RequireGap();
  const double n = summary.RequireSampleCount();
  const double p = Dim(summary);
  const double p3 = p * p * p;
  RawStats raw;
  raw.d = n * n * summary.gap() / p3;
  raw.h = Hilbert(summary, summary.top_edge(), 0);
  raw.s2 = -(p3 / (2.0 * n * n)) * Hilbert(summary, summary.top_edge(), 1);
  return raw;
}

NoiseVariances ComputeNoiseVariances(const SpectralSummary& summary,
                                     double rho) {
  CheckBudget(rho);
  summary.RequireGap();
  const double n = summary.RequireSampleCount();
  const double p = Dim(summary);
  const double p15 = std::pow(p, 1.5);
  const double hprime = Hilbert(summary, summary.top_edge(), 1);
  const double hsecond = Hilbert(summary, summary.top_edge(), 2);
  const double sd_d = std::sqrt(6.0) * n / (rho * p15);
  const double sd_h = std::sqrt(3.0) * p15 / (rho * n) * hprime;
  const double sd_s =
      std::sqrt(3.0) * std::pow(p, 4.5) / (rho * n * n * n) * hsecond;
  return {sd_d * sd_d, sd_h * sd_h, sd_s * sd_s};
}

StatNoise DrawStatNoise(std::uint64_t seed) {
  StatNoise noise;
  double* slots[] = {&noise.d, &noise.h, &noise.s};
  for (std::uint64_t i = 0; i < 3; ++i) {
    Rng rng = MakeRng(DeriveSeed(seed, kStatsStream, i));
    *slots[i] = std::normal_distribution<double>()(rng);
  }
  return noise;
}

PrivateSpectralStats PrivatizeStatsWithNoise(const SpectralSummary& summary,
                                             double rho, std::uint64_t seed,
                                             const StatNoise& noise) {
  const NoiseVariances v = ComputeNoiseVariances(summary, rho);
  const RawStats raw = ComputeRawStats(summary);
  const double p = Dim(summary);
  PrivateSpectralStats stats;
  stats.rho = rho;
  stats.v_d = v.v_d;
  stats.v_h = v.v_h;
  stats.v_s = v.v_s;
  stats.seed = seed;
  const double s2_over = raw.s2 + 3.0 * std::sqrt(v.v_s / p);
  stats.d_plus = std::max(raw.d + std::sqrt(v.v_d / p) * noise.d, 0.0);
  stats.h_plus = std::max(raw.h + std::sqrt(v.v_h / p) * noise.h, 0.0);
  stats.s2_plus = std::max(s2_over + std::sqrt(v.v_s / p) * noise.s, 0.0);
  return stats;
}

PrivateSpectralStats PrivatizeStats(const SpectralSummary& summary, double rho,
                                    std::uint64_t seed) {
  return PrivatizeStatsWithNoise(summary, rho, seed, DrawStatNoise(seed));
}

bool FeasibilityTest(const PrivateSpectralStats& stats, double w_sq) {
  return w_sq >= stats.s2_plus;
}

double PrivateBeta(const PrivateSpectralStats& stats, double w_sq) {
  const double root =
      std::sqrt(std::max(w_sq * w_sq - stats.s2_plus * w_sq, 0.0));
  return 2.0 * stats.d_plus * (w_sq + root) + stats.h_plus;
}

std::string GuaranteeLabel(double mu) { return FormatDouble(mu) + "-AGDP"; }

nlohmann::json AdaptiveOutcome::Report() const {
  nlohmann::json report;
  report["rho"] = rho;
  report["w_sq"] = w_sq;
  report["test"] = passed ? 1 : 0;
  report["beta_used"] = passed ? nlohmann::json(beta_used) : nlohmann::json();
  report["guarantee_label"] = GuaranteeLabel(guarantee_mu);
  report["guarantee_mu"] = guarantee_mu;
  report["zero_frame_sentinel"] = !passed;
  report["seed"] = seed;
  report["stats"] = {{"d_plus", stats.d_plus},
                     {"h_plus", stats.h_plus},
                     {"s2_plus", stats.s2_plus}};
  return report;
}

std::uint64_t AdaptiveStatsSeed(std::uint64_t seed) {
  return DeriveSeed(seed, kAdaptiveStream, 0);
}

std::uint64_t AdaptiveSamplerSeed(std::uint64_t seed) {
  return DeriveSeed(seed, kAdaptiveStream, 1);
}

AdaptiveOutcome AdaptiveMechanism(const SpectralSummary& summary, double rho,
                                  double w_sq, const SamplerConfig& config) {
  CheckBudget(rho);
  if (!std::isfinite(w_sq) || !(w_sq > 0.0)) {
    throw Error(ErrorCode::kDomainError, "w^2 must be finite and > 0");
  }
  AdaptiveOutcome outcome;
  outcome.rho = rho;
  outcome.w_sq = w_sq;
  outcome.seed = config.seed;
  outcome.guarantee_mu = std::sqrt(rho * rho + w_sq);
  outcome.stats = PrivatizeStats(summary, rho, AdaptiveStatsSeed(config.seed));
  outcome.passed = FeasibilityTest(outcome.stats, w_sq);
  if (!outcome.passed) {
    outcome.frame = Eigen::MatrixXd::Zero(summary.dim(), summary.rank());
    return outcome;
  }
  outcome.beta_used = PrivateBeta(outcome.stats, w_sq);
  const GibbsTarget target(summary, outcome.beta_used);
  Rng rng = MakeRng(AdaptiveSamplerSeed(config.seed));
  outcome.frame = Sample(target, config, rng).matrix();
  return outcome;
}

AdaptiveOutcome AdaptiveMechanism(const Dataset& dataset, double rho,
                                  double w_sq, int k,
                                  const SamplerConfig& config) {
  if (!dataset.norm_certified()) {
    std::clog << "warning: dataset rows exceed the sqrt(p) norm bound; "
                 "privacy guarantees do not apply\n";
  }
  return AdaptiveMechanism(Summarize(dataset, k), rho, w_sq, config);
}

}  // namespace dppca
