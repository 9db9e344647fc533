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

#include "dppca/mechanism.h"

#include <cmath>
#include <iostream>
#include <limits>
#include <optional>
#include <string>

#include "dppca/error.h"

namespace dppca {
namespace {

// Streams for the counter-based seed split.
constexpr std::uint64_t kBatchStream = 0xBA7C;

// Symmetric eigendecomposition of Z^T Z, which is k x k.
Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> GramEigen(
    const Eigen::MatrixXd& z) {
  return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(z.transpose() * z);
}

}  // namespace

OrthoFrame::OrthoFrame(Eigen::MatrixXd v) : v_(std::move(v)) {
  if (v_.cols() > v_.rows() || v_.cols() == 0) {
    throw Error(ErrorCode::kDimensionMismatch,
                "frame must be p x k, 1 <= k <= p");
  }
  const double err = OrthonormalityError();
  if (!(err <= kOrthonormalityTolerance)) {
    throw Error(ErrorCode::kDomainError,
                "columns are not orthonormal (max deviation " +
                    std::to_string(err) + ")");
  }
}

double OrthoFrame::OrthonormalityError() const {
  const Eigen::Index k = v_.cols();
  return (v_.transpose() * v_ - Eigen::MatrixXd::Identity(k, k))
      .cwiseAbs()
      .maxCoeff();
}

GibbsTarget::GibbsTarget(SpectralSummary summary, double beta)
    : summary_(std::move(summary)), beta_(beta) {
  if (!std::isfinite(beta_) || beta_ < 0.0) {
    throw Error(ErrorCode::kDomainError, "beta must be finite and >= 0");
  }
  if (beta_ == 0.0) return;
  summary_.RequireGap();
  const Eigen::Index p = summary_.dim();
  const int k = summary_.rank();
  const auto bulk = summary_.bulk_eigenvalues();
  proposal_stddev_.resize(p - k, k);
  for (int j = 0; j < k; ++j) {
    for (Eigen::Index i = 0; i < p - k; ++i) {
      const double gap = summary_.eigenvalue(j) - bulk(i);
      proposal_stddev_(i, j) =
          1.0 / std::sqrt(beta_ * static_cast<double>(p) * gap);
    }
  }
}

std::string_view SamplerModeName(SamplerMode mode) {
  return mode == SamplerMode::kApproximate ? "approximate" : "exact_mh";
}

SamplerMode ParseSamplerMode(std::string_view name) {
  if (name == "approximate") return SamplerMode::kApproximate;
  if (name == "exact_mh") return SamplerMode::kExactMh;
  throw Error(ErrorCode::kDomainError,
              "unknown sampler mode '" + std::string(name) + "'");
}

OrthoFrame SampleHaarFrame(Eigen::Index p, Eigen::Index k, Rng& rng) {
  if (k < 1 || k > p) {
    throw Error(ErrorCode::kRankOutOfRange,
                "need 1 <= k <= p for a Haar frame");
  }
  std::normal_distribution<double> normal;
  Eigen::MatrixXd g(p, k);
  for (Eigen::Index j = 0; j < k; ++j) {
    for (Eigen::Index i = 0; i < p; ++i) g(i, j) = normal(rng);
  }
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
  Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(p, k);
  const auto r_diag = qr.matrixQR().diagonal();
  for (Eigen::Index j = 0; j < k; ++j) {
    if (r_diag(j) < 0) q.col(j) = -q.col(j);
  }
  return OrthoFrame(std::move(q));
}

Eigen::MatrixXd DrawProposalZ(const GibbsTarget& target, Rng& rng) {
  const Eigen::MatrixXd& sd = target.proposal_stddev();
  std::normal_distribution<double> normal;
  Eigen::MatrixXd z(sd.rows(), sd.cols());
  for (Eigen::Index j = 0; j < sd.cols(); ++j) {
    for (Eigen::Index i = 0; i < sd.rows(); ++i)
      z(i, j) = sd(i, j) * normal(rng);
  }
  return z;
}

double LogWeightZ(const Eigen::MatrixXd& z) {
  constexpr double kBoundary = 1.0 - 1e-12;
  constexpr double kMinusInf = -std::numeric_limits<double>::infinity();
  if (z.cols() == 1) {
    const double s = z.squaredNorm();
    return s < kBoundary ? -0.5 * std::log1p(-s) : kMinusInf;
  }
  const auto eig = GramEigen(z);
  const Eigen::VectorXd& mu = eig.eigenvalues();
  if (!(mu.maxCoeff() < kBoundary)) return kMinusInf;
  double log_det = 0.0;
  for (Eigen::Index i = 0; i < mu.size(); ++i) log_det += std::log1p(-mu(i));
  return -0.5 * log_det;
}

OrthoFrame AssembleFrame(const SpectralSummary& summary,
                         const Eigen::MatrixXd& z, const Eigen::MatrixXd& q) {
  const Eigen::Index p = summary.dim();
  const int k = summary.rank();
  if (z.rows() != p - k || z.cols() != k || q.rows() != k || q.cols() != k) {
    throw Error(ErrorCode::kDimensionMismatch, "Z must be (p-k) x k, Q k x k");
  }
  const auto eig = GramEigen(z);
  const Eigen::VectorXd& mu = eig.eigenvalues();
  const Eigen::MatrixXd& w = eig.eigenvectors();
  const Eigen::VectorXd root = (1.0 - mu.array()).max(0.0).sqrt().matrix();
  const Eigen::MatrixXd top_block = w * root.asDiagonal() * w.transpose();

  Eigen::MatrixXd v = (summary.top_eigenvectors() * top_block +
                       summary.bulk_eigenvectors() * z) *
                      q;
  if (mu.maxCoeff() > 1.0) {
    // Clip active: V^T V = Q^T (max(1, mu)) Q, restore orthonormality.
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> gram(v.transpose() * v);
    const Eigen::MatrixXd inv_sqrt = gram.operatorInverseSqrt();
    v = v * inv_sqrt;
  }
  return OrthoFrame(std::move(v));
}

OrthoFrame SampleApprox(const GibbsTarget& target, Rng& rng) {
  if (target.beta() == 0.0) {
    return SampleHaarFrame(target.dim(), target.rank(), rng);
  }
  const OrthoFrame q = SampleHaarFrame(target.rank(), target.rank(), rng);
  const Eigen::MatrixXd z = DrawProposalZ(target, rng);
  return AssembleFrame(target.summary(), z, q.matrix());
}

IndependenceMhChain::IndependenceMhChain(const GibbsTarget& target, Rng& rng)
    : target_(&target) {
  if (target.beta() == 0.0) {
    throw Error(ErrorCode::kDomainError,
                "MH chain needs beta > 0; beta = 0 is the Haar law");
  }
  for (int attempt = 1; attempt <= kMaxInitAttempts; ++attempt) {
    z_ = DrawProposalZ(target, rng);
    log_weight_ = LogWeightZ(z_);
    diagnostics_.init_attempts = attempt;
    if (std::isfinite(log_weight_)) return;
  }
  throw Error(ErrorCode::kChainInitFailure,
              std::to_string(kMaxInitAttempts) +
                  " consecutive proposals fell outside {Z^T Z < I}");
}

bool IndependenceMhChain::Step(Rng& rng) {
  Eigen::MatrixXd proposal = DrawProposalZ(*target_, rng);
  const double proposal_log_weight = LogWeightZ(proposal);
  const double log_u = std::log(std::uniform_real_distribution<double>()(rng));
  ++diagnostics_.proposals;
  if (std::isfinite(proposal_log_weight) &&
      log_u < proposal_log_weight - log_weight_) {
    z_ = std::move(proposal);
    log_weight_ = proposal_log_weight;
    ++diagnostics_.accepted;
    return true;
  }
  return false;
}

void IndependenceMhChain::Advance(int steps, Rng& rng) {
  for (int i = 0; i < steps; ++i) Step(rng);
}

OrthoFrame IndependenceMhChain::Emit(Rng& rng) const {
  const OrthoFrame q = SampleHaarFrame(target_->rank(), target_->rank(), rng);
  return AssembleFrame(target_->summary(), z_, q.matrix());
}

namespace {

void CheckChainConfig(const SamplerConfig& config) {
  if (config.mh_burnin < 0 || config.mh_thin < 1) {
    throw Error(ErrorCode::kDomainError,
                "need mh_burnin >= 0 and mh_thin >= 1");
  }
}

}  // namespace

OrthoFrame SampleExactMh(const GibbsTarget& target, const SamplerConfig& config,
                         Rng& rng, MhDiagnostics* diagnostics) {
  CheckChainConfig(config);
  if (target.beta() == 0.0) {
    return SampleHaarFrame(target.dim(), target.rank(), rng);
  }
  IndependenceMhChain chain(target, rng);
  chain.Advance(config.mh_burnin + config.mh_thin, rng);
  if (diagnostics != nullptr) *diagnostics = chain.diagnostics();
  return chain.Emit(rng);
}

std::vector<OrthoFrame> RunMhChain(const GibbsTarget& target,
                                   const SamplerConfig& config, int count,
                                   Rng& rng, MhDiagnostics* diagnostics) {
  CheckChainConfig(config);
  std::vector<OrthoFrame> frames;
  frames.reserve(static_cast<std::size_t>(std::max(count, 0)));
  if (target.beta() == 0.0) {
    for (int i = 0; i < count; ++i) {
      frames.push_back(SampleHaarFrame(target.dim(), target.rank(), rng));
    }
    return frames;
  }
  IndependenceMhChain chain(target, rng);
  chain.Advance(config.mh_burnin, rng);
  for (int i = 0; i < count; ++i) {
    chain.Advance(config.mh_thin, rng);
    frames.push_back(chain.Emit(rng));
  }
  if (diagnostics != nullptr) *diagnostics = chain.diagnostics();
  return frames;
}

OrthoFrame Sample(const GibbsTarget& target, const SamplerConfig& config,
                  Rng& rng) {
  switch (config.mode) {
    case SamplerMode::kApproximate:
      return SampleApprox(target, rng);
    case SamplerMode::kExactMh:
      return SampleExactMh(target, config, rng);
  }
  throw Error(ErrorCode::kDomainError, "unknown sampler mode");
}

OrthoFrame ExpMechanism(const Dataset& dataset, double beta, int k,
                        const SamplerConfig& config, Rng& rng) {
  if (!dataset.norm_certified()) {
    std::clog << "warning: dataset rows exceed the sqrt(p) norm bound "
                 "(max ||x||^2 = "
              << dataset.max_row_norm_sq() << ", p = " << dataset.dim()
              << "); privacy guarantees do not apply\n";
  }
  const GibbsTarget target(Summarize(dataset, k), beta);
  return Sample(target, config, rng);
}

std::uint64_t BatchDrawSeed(std::uint64_t seed, std::uint64_t index) {
  return DeriveSeed(seed, kBatchStream, index);
}

std::vector<OrthoFrame> SampleBatch(const GibbsTarget& target, int count,
                                    const SamplerConfig& config) {
  if (count < 1)
    throw Error(ErrorCode::kDomainError, "batch count must be >= 1");
  std::vector<std::optional<OrthoFrame>> slots(static_cast<std::size_t>(count));
  ParallelFor(count, config.workers, [&](int i) {
    Rng rng =
        MakeRng(BatchDrawSeed(config.seed, static_cast<std::uint64_t>(i)));
    slots[static_cast<std::size_t>(i)] = Sample(target, config, rng);
  });
  std::vector<OrthoFrame> frames;
  frames.reserve(slots.size());
  for (auto& slot : slots) frames.push_back(std::move(*slot));
  return frames;
}

}  // namespace dppca
