// Copyright 2026 The ffgrowth Authors.
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

#include "ffgrowth/error.hpp"

namespace ffgrowth {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotPrime: return "NotPrime";
    case ErrorCode::kNotIrreducible: return "NotIrreducible";
    case ErrorCode::kBadModulus: return "BadModulus";
    case ErrorCode::kUniverseTooLarge: return "UniverseTooLarge";
    case ErrorCode::kDivisionByZero: return "DivisionByZero";
    case ErrorCode::kFieldMismatch: return "FieldMismatch";
    case ErrorCode::kDegenerateDenominator: return "DegenerateDenominator";
    case ErrorCode::kEmptySet: return "EmptySet";
    case ErrorCode::kEmptyX: return "EmptyX";
    case ErrorCode::kBadEpsilon: return "BadEpsilon";
    case ErrorCode::kBadModel: return "BadModel";
    case ErrorCode::kNTooLarge: return "NTooLarge";
    case ErrorCode::kBadTrials: return "BadTrials";
    case ErrorCode::kNoAdmissibleSet: return "NoAdmissibleSet";
    case ErrorCode::kBadSetFile: return "BadSetFile";
    case ErrorCode::kElementOutOfRange: return "ElementOutOfRange";
    case ErrorCode::kInvariantViolation: return "InternalInvariantViolation";
  }
  return "Unknown";
}

}  // namespace ffgrowth
