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

#ifndef FFGROWTH_ERROR_HPP_
#define FFGROWTH_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace ffgrowth {

enum class ErrorCode {
  kNotPrime,
  kNotIrreducible,
  kBadModulus,
  kUniverseTooLarge,
  kDivisionByZero,
  kFieldMismatch,
  kDegenerateDenominator,
  kEmptySet,
  kEmptyX,
  kBadEpsilon,
  kBadModel,
  kNTooLarge,
  kBadTrials,
  kNoAdmissibleSet,
  kBadSetFile,
  kElementOutOfRange,
  kInvariantViolation,
};

std::string_view error_code_name(ErrorCode code);

// All library failures surface as this exception. Callers that care about the
// category switch on code(); everything else can treat it as runtime_error.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  // True for failures caused by bad input rather than a broken invariant.
  bool is_validation() const noexcept {
    return code_ != ErrorCode::kInvariantViolation;
  }

 private:
  ErrorCode code_;
};

}  // namespace ffgrowth

#endif  // FFGROWTH_ERROR_HPP_
