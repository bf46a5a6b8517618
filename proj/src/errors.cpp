// Copyright 2026 The qsl Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qsl/errors.hpp"

namespace qsl {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kNonHermitianInput: return "NonHermitianInput";
    case ErrorCode::kNotPositiveSemidefinite: return "NotPositiveSemidefinite";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kNonRealExpectation: return "NonRealExpectation";
    case ErrorCode::kInvalidState: return "InvalidState";
    case ErrorCode::kInvalidBasis: return "InvalidBasis";
    case ErrorCode::kInvariantViolation: return "InvariantViolation";
    case ErrorCode::kZeroEnergyVariance: return "ZeroEnergyVariance";
    case ErrorCode::kNonPositiveMeanEnergy: return "NonPositiveMeanEnergy";
    case ErrorCode::kValidityExceeded: return "ValidityExceeded";
    case ErrorCode::kSingularIntegrand: return "SingularIntegrand";
    case ErrorCode::kDenominatorUnderflow: return "DenominatorUnderflow";
    case ErrorCode::kNonFiniteSample: return "NonFiniteSample";
    case ErrorCode::kBlockIndexOutOfRange: return "BlockIndexOutOfRange";
    case ErrorCode::kNotProductState: return "NotProductState";
    case ErrorCode::kConfigError: return "ConfigError";
  }
  return "Unknown";
}

}  // namespace qsl
