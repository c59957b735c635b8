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

// Closure classification of a ratio set R:
//   Case 1: 1 + R is not contained in R
//   Case 2: M * R is not contained in R
//   Case 3: M^{-1} * R is not contained in R (zero dropped from M)
//   Case 4: all three closures hold
// where M is the multiplier set (A for R(A, A), Y for R(X, Y)). The cases are
// tested in order and the first violation is reported with a witness.

#ifndef FFGROWTH_CASES_HPP_
#define FFGROWTH_CASES_HPP_

#include <optional>
#include <string>

#include "ffgrowth/fset.hpp"
#include "ffgrowth/set_ops.hpp"

namespace ffgrowth {

enum class CaseKind { kCase1 = 1, kCase2 = 2, kCase3 = 3, kCase4 = 4 };

std::string case_name(CaseKind kind);

// r = 1 + q (Case 1), b * q (Case 2) or b^{-1} * q (Case 3), where
// q = (num1 - num2) / (den1 - den2) lies in R and r does not.
struct CaseWitness {
  Elem r = 0;
  Elem num1 = 0, num2 = 0, den1 = 0, den2 = 0;
  std::optional<Elem> b;
};

struct CaseLabel {
  CaseKind kind = CaseKind::kCase4;
  std::optional<CaseWitness> witness;  // present exactly for Cases 1-3
};

// Classifies R(A, A) with multiplier set A. Throws
// Error{kDegenerateDenominator} if |A| < 2.
CaseLabel classify_case(const FSet& a);

// Classifies R(X, Y) = ratio_set(Y, X) with multiplier set Y.
CaseLabel classify_case_xy(const FSet& x, const FSet& y);

// General form: R = ratio_set(numerators, denominators), multiplier set M.
CaseLabel classify_closure(const FSet& numerators, const FSet& denominators,
                           const FSet& multipliers);

// Recomputes r from the witness tuple and checks membership facts directly:
// the tuple entries come from the right sets, den1 != den2, r matches the
// tuple, and r is not a ratio. Case 4 labels verify iff every closure holds.
bool verify_case_label(const FSet& numerators, const FSet& denominators,
                       const FSet& multipliers, const CaseLabel& label);

}  // namespace ffgrowth

#endif  // FFGROWTH_CASES_HPP_
