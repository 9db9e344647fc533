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

#ifndef DPPCA_DATASET_H_
#define DPPCA_DATASET_H_

#include <Eigen/Dense>

namespace dppca {

// Relative slack allowed on the squared-norm bound ||x||^2 <= p.
inline constexpr double kNormSlack = 1e-9;

// An n x p sample matrix (one row per sample). Immutable once built.
class Dataset {
 public:
  // Throws kEmptyDataset when there are no rows or columns and kInvalidData
  // on non-finite entries. The norm certification flag is computed here, so
  // it is always truthful.
  explicit Dataset(Eigen::MatrixXd values);

  Eigen::Index num_samples() const { return values_.rows(); }
  Eigen::Index dim() const { return values_.cols(); }
  const Eigen::MatrixXd& values() const { return values_; }

  // True iff every row satisfies ||x||^2 <= p * (1 + kNormSlack).
  bool norm_certified() const { return norm_certified_; }
  double max_row_norm_sq() const { return max_row_norm_sq_; }

 private:
  Eigen::MatrixXd values_;
  double max_row_norm_sq_ = 0.0;
  bool norm_certified_ = false;
};

// Uncentered sample covariance (1/n) X^T X.
Eigen::MatrixXd Covariance(const Dataset& dataset);

}  // namespace dppca

#endif  // DPPCA_DATASET_H_
