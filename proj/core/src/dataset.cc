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

#include "dppca/dataset.h"

#include <string>

#include "dppca/error.h"

namespace dppca {

Dataset::Dataset(Eigen::MatrixXd values) : values_(std::move(values)) {
  if (values_.rows() == 0 || values_.cols() == 0) {
    throw Error(ErrorCode::kEmptyDataset,
                "dataset needs at least one sample and one feature");
  }
  if (!values_.allFinite()) {
    throw Error(ErrorCode::kInvalidData, "dataset contains non-finite entries");
  }
  max_row_norm_sq_ = values_.rowwise().squaredNorm().maxCoeff();
  const double p = static_cast<double>(values_.cols());
  norm_certified_ = max_row_norm_sq_ <= p * (1.0 + kNormSlack);
}

Eigen::MatrixXd Covariance(const Dataset& dataset) {
  const Eigen::MatrixXd& x = dataset.values();
  Eigen::MatrixXd cov = Eigen::MatrixXd::Zero(x.cols(), x.cols());
  cov.selfadjointView<Eigen::Lower>().rankUpdate(x.transpose());
  Eigen::MatrixXd full = cov.selfadjointView<Eigen::Lower>();
  return full / static_cast<double>(x.rows());
}

}  // namespace dppca
