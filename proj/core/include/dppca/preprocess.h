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

#ifndef DPPCA_PREPROCESS_H_
#define DPPCA_PREPROCESS_H_

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "dppca/dataset.h"
#include "dppca/mechanism.h"
#include "dppca/rng.h"
#include "dppca/theory.h"

namespace dppca {

// Rank-transformed data. Entries lie in [-1, 1], so every row satisfies
// ||r||^2 <= p and the dataset is norm certified by construction. Each
// column sums to zero up to rounding.
struct RankDataset {
  Dataset data;
  // Per feature: number of samples whose value is shared with another sample.
  std::vector<Eigen::Index> tie_counts;
  // Shape and label of the source data.
  Eigen::Index source_samples = 0;
  Eigen::Index source_dim = 0;
  std::string source_label;
};

// r_ij = (2 / (n - 1)) (avg_rank_j(x_ij) - (n + 1) / 2), with ties given the
// average of their ranks. A constant column maps to zeros. Throws
// kTooFewSamples when n < 2.
RankDataset RankTransform(const Dataset& dataset,
                          std::string source_label = "in-memory");

// Covariance of the rank-transformed data.
Eigen::MatrixXd RankCovariance(const Dataset& dataset);

struct RankMechanismResult {
  OrthoFrame frame;
  GuaranteeStatement guarantee;
};

// Gibbs sample on the rank covariance. Identical to ExpMechanism applied to
// RankTransform(dataset).data with the same generator state.
RankMechanismResult RankMechanism(const Dataset& dataset, double beta, int k,
                                  const SamplerConfig& config, Rng& rng);

}  // namespace dppca

#endif  // DPPCA_PREPROCESS_H_
