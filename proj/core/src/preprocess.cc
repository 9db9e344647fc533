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

#include "dppca/preprocess.h"

#include <algorithm>
#include <numeric>
#include <utility>

#include "dppca/error.h"
#include "dppca/spectral.h"

namespace dppca {
namespace {

// Fills `out` with centered, scaled average ranks of `column`; returns the
// number of tied entries.
Eigen::Index RankColumn(const Eigen::Ref<const Eigen::VectorXd>& column,
                        Eigen::Ref<Eigen::VectorXd> out) {
  const Eigen::Index n = column.size();
  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(
      order.begin(), order.end(),
      [&](Eigen::Index a, Eigen::Index b) { return column(a) < column(b); });
  const double center = (static_cast<double>(n) + 1.0) / 2.0;
  const double scale = 2.0 / (static_cast<double>(n) - 1.0);
  Eigen::Index ties = 0;
  Eigen::Index start = 0;
  while (start < n) {
    Eigen::Index end = start + 1;
    while (end < n && column(order[end]) == column(order[start])) ++end;
    // One-based ranks start + 1 .. end share their mean.
    const double rank =
        (static_cast<double>(start + 1) + static_cast<double>(end)) / 2.0;
    for (Eigen::Index i = start; i < end; ++i)
      out(order[i]) = scale * (rank - center);
    if (end - start > 1) ties += end - start;
    start = end;
  }
  return ties;
}

}  // namespace

RankDataset RankTransform(const Dataset& dataset, std::string source_label) {
  const Eigen::Index n = dataset.num_samples();
  const Eigen::Index p = dataset.dim();
  if (n < 2) {
    throw Error(ErrorCode::kTooFewSamples, "rank transform needs n >= 2");
  }
  Eigen::MatrixXd ranks(n, p);
  std::vector<Eigen::Index> tie_counts(static_cast<std::size_t>(p));
  for (Eigen::Index j = 0; j < p; ++j) {
    tie_counts[static_cast<std::size_t>(j)] =
        RankColumn(dataset.values().col(j), ranks.col(j));
  }
  return RankDataset{Dataset(std::move(ranks)), std::move(tie_counts), n, p,
                     std::move(source_label)};
}

Eigen::MatrixXd RankCovariance(const Dataset& dataset) {
  return Covariance(RankTransform(dataset).data);
}

RankMechanismResult RankMechanism(const Dataset& dataset, double beta, int k,
                                  const SamplerConfig& config, Rng& rng) {
  const RankDataset ranked = RankTransform(dataset);
  const GibbsTarget target(Summarize(ranked.data, k), beta);
  OrthoFrame frame = Sample(target, config, rng);
  return RankMechanismResult{std::move(frame),
                             DescribeGuarantee(target.summary(), beta)};
}

}  // namespace dppca
