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

#ifndef DPPCA_ERROR_H_
#define DPPCA_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace dppca {

enum class ErrorCode {
  kEmptyDataset,
  kInvalidData,
  kParseError,
  kIoError,
  kNotSymmetric,
  kRankOutOfRange,
  kPoleViolation,
  kDegenerateGap,
  kMissingSampleCount,
  kOutOfRegime,
  kInfeasibleTarget,
  kDomainError,
  kDimensionMismatch,
  kNormViolation,
  kChainInitFailure,
  kNonpositiveBudget,
  kTooFewSamples,
  kUnsupportedDimension,
};

// Stable identifier used in reports and CLI messages, e.g. "DegenerateGap".
std::string_view ErrorCodeName(ErrorCode code);

// All library failures are reported through this exception type. The code
// identifies the violated precondition; what() carries a human readable
// message that already includes the code name.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace dppca

#endif  // DPPCA_ERROR_H_
