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

#include "dppca/error.h"

namespace dppca {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kEmptyDataset:
      return "EmptyDataset";
    case ErrorCode::kInvalidData:
      return "InvalidData";
    case ErrorCode::kParseError:
      return "ParseError";
    case ErrorCode::kIoError:
      return "IoError";
    case ErrorCode::kNotSymmetric:
      return "NotSymmetric";
    case ErrorCode::kRankOutOfRange:
      return "RankOutOfRange";
    case ErrorCode::kPoleViolation:
      return "PoleViolation";
    case ErrorCode::kDegenerateGap:
      return "DegenerateGap";
    case ErrorCode::kMissingSampleCount:
      return "MissingSampleCount";
    case ErrorCode::kOutOfRegime:
      return "OutOfRegime";
    case ErrorCode::kInfeasibleTarget:
      return "InfeasibleTarget";
    case ErrorCode::kDomainError:
      return "DomainError";
    case ErrorCode::kDimensionMismatch:
      return "DimensionMismatch";
    case ErrorCode::kNormViolation:
      return "NormViolation";
    case ErrorCode::kChainInitFailure:
      return "ChainInitFailure";
    case ErrorCode::kNonpositiveBudget:
      return "NonpositiveBudget";
    case ErrorCode::kTooFewSamples:
      return "TooFewSamples";
    case ErrorCode::kUnsupportedDimension:
      return "UnsupportedDimension";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
      code_(code) {}

}  // namespace dppca
