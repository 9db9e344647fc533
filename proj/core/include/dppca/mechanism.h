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

#ifndef DPPCA_MECHANISM_H_
#define DPPCA_MECHANISM_H_

#include <Eigen/Dense>
#include <cstdint>
#include <string_view>
#include <vector>

#include "dppca/dataset.h"
#include "dppca/rng.h"
#include "dppca/spectral.h"

namespace dppca {

// A p x k matrix with orthonormal columns.
class OrthoFrame {
 public:
  // Throws kDomainError if ||V^T V - I||_max > kOrthonormalityTolerance.
  explicit OrthoFrame(Eigen::MatrixXd v);

  Eigen::Index dim() const { return v_.rows(); }
  Eigen::Index rank() const { return v_.cols(); }
  const Eigen::MatrixXd& matrix() const { return v_; }

  // ||V^T V - I_k||_max.
  double OrthonormalityError() const;

 private:
  Eigen::MatrixXd v_;
};

// The Gibbs law with density proportional to exp((p beta / 2) Tr[V^T S V])
// against the Haar measure on p x k frames.
class GibbsTarget {
 public:
  // beta must be finite and >= 0. For beta > 0 the gap must be strict
  // (kDegenerateGap otherwise).
  GibbsTarget(SpectralSummary summary, double beta);

  const SpectralSummary& summary() const { return summary_; }
  double beta() const { return beta_; }
  int rank() const { return summary_.rank(); }
  Eigen::Index dim() const { return summary_.dim(); }

  // (p-k) x k standard deviations of the Gaussian proposal for Z:
  // entry (i, j) is 1 / sqrt(beta p (lambda_j - lambda_{k+i})). Empty when
  // beta == 0.
  const Eigen::MatrixXd& proposal_stddev() const { return proposal_stddev_; }

 private:
  SpectralSummary summary_;
  double beta_;
  Eigen::MatrixXd proposal_stddev_;
};

enum class SamplerMode { kApproximate, kExactMh };

std::string_view SamplerModeName(SamplerMode mode);
// Accepts "approximate" and "exact_mh"; throws kDomainError otherwise.
SamplerMode ParseSamplerMode(std::string_view name);

struct SamplerConfig {
  SamplerMode mode = SamplerMode::kApproximate;
  int mh_burnin = 64;
  int mh_thin = 1;
  std::uint64_t seed = kDefaultSeed;
  // Threads used by batch sampling. Results do not depend on this value.
  int workers = 1;
};

// Haar-uniform p x k frame: QR of a Gaussian matrix with the diagonal of R
// made positive. Throws kRankOutOfRange unless 1 <= k <= p.
OrthoFrame SampleHaarFrame(Eigen::Index p, Eigen::Index k, Rng& rng);

// Draws Z with independent N(0, proposal_stddev^2) entries.
Eigen::MatrixXd DrawProposalZ(const GibbsTarget& target, Rng& rng);

// -1/2 log det(I_k - Z^T Z) when lambda_max(Z^T Z) < 1 - 1e-12, else -inf.
// Log-ratio (up to a constant) of the exact Z marginal to the Gaussian
// proposal.
double LogWeightZ(const Eigen::MatrixXd& z);

// V = U [ (I_k - Z^T Z)_+^{1/2} ; Z ] Q. When the clip is active the
// columns are re-orthonormalized with the polar factor so the result is
// always a valid frame.
OrthoFrame AssembleFrame(const SpectralSummary& summary,
                         const Eigen::MatrixXd& z, const Eigen::MatrixXd& q);

// Approximate Gibbs sample (Gaussian Z, Haar Q). beta == 0 returns a Haar
// frame.
OrthoFrame SampleApprox(const GibbsTarget& target, Rng& rng);

struct MhDiagnostics {
  std::int64_t proposals = 0;
  std::int64_t accepted = 0;
  std::int64_t init_attempts = 0;

  double acceptance_rate() const {
    return proposals == 0
               ? 0.0
               : static_cast<double>(accepted) / static_cast<double>(proposals);
  }
};

// Independence Metropolis-Hastings chain on Z-space whose proposal is the
// Gaussian of the approximate sampler. Its stationary law is the exact Z
// marginal of the Gibbs target.
class IndependenceMhChain {
 public:
  static constexpr int kMaxInitAttempts = 1000;

  // Initializes from proposals until one lands inside {Z^T Z < I}; throws
  // kChainInitFailure after kMaxInitAttempts consecutive misses and
  // kDomainError when beta == 0.
  IndependenceMhChain(const GibbsTarget& target, Rng& rng);

  // One MH transition. Returns true on acceptance.
  bool Step(Rng& rng);
  void Advance(int steps, Rng& rng);

  const Eigen::MatrixXd& state() const { return z_; }
  double state_log_weight() const { return log_weight_; }
  const MhDiagnostics& diagnostics() const { return diagnostics_; }

  // Frame for the current state with a fresh Haar Q.
  OrthoFrame Emit(Rng& rng) const;

 private:
  const GibbsTarget* target_;
  Eigen::MatrixXd z_;
  double log_weight_;
  MhDiagnostics diagnostics_;
};

// Single exact draw: fresh chain, burn-in, then mh_thin further steps.
// beta == 0 returns a Haar frame.
OrthoFrame SampleExactMh(const GibbsTarget& target, const SamplerConfig& config,
                         Rng& rng, MhDiagnostics* diagnostics = nullptr);

// `count` successive retained draws from one chain (burn-in once, then
// mh_thin steps between retained draws).
std::vector<OrthoFrame> RunMhChain(const GibbsTarget& target,
                                   const SamplerConfig& config, int count,
                                   Rng& rng,
                                   MhDiagnostics* diagnostics = nullptr);

// Dispatches on config.mode.
OrthoFrame Sample(const GibbsTarget& target, const SamplerConfig& config,
                  Rng& rng);

// Algorithm-level entry point: covariance, eigendecomposition, sampler.
// Warns on stderr (does not fail) when the dataset is not norm certified.
OrthoFrame ExpMechanism(const Dataset& dataset, double beta, int k,
                        const SamplerConfig& config, Rng& rng);

// Seed used for draw `index` of a batch with master seed `seed`.
std::uint64_t BatchDrawSeed(std::uint64_t seed, std::uint64_t index);

// `count` independent draws; draw i uses MakeRng(BatchDrawSeed(config.seed,
// i)) so the output is identical for every worker count.
std::vector<OrthoFrame> SampleBatch(const GibbsTarget& target, int count,
                                    const SamplerConfig& config);

// Generic parallel-for over [0, count) used by batch Monte-Carlo code.
// Each index is processed exactly once; the partition depends only on
// `workers`, and callers must write results by index.
template <typename Fn>
void ParallelFor(int count, int workers, Fn&& fn);

}  // namespace dppca

#include "dppca/internal/parallel.h"

#endif  // DPPCA_MECHANISM_H_
