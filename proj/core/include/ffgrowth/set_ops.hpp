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

// Set-valued expressions over F_q. Every binary operation throws
// Error{kFieldMismatch} when its operands live in different fields.

#ifndef FFGROWTH_SET_OPS_HPP_
#define FFGROWTH_SET_OPS_HPP_

#include <array>
#include <vector>

#include "ffgrowth/fset.hpp"

namespace ffgrowth {

FSet sumset(const FSet& a, const FSet& b);
FSet difference_set(const FSet& a, const FSet& b);
FSet product_set(const FSet& a, const FSet& b);

FSet dilate(Elem c, const FSet& a);
FSet translate(Elem t, const FSet& a);
FSet negate_set(const FSet& a);
// {x^{-1} : x in A, x != 0}; zero is dropped.
FSet inverse_set(const FSet& a);
// {x^2 : x in A}, not the product set A.A.
FSet square_set(const FSet& a);

// k-fold sumset B_1 + ... + B_k; {0} for an empty list.
FSet iterated_sumset(const FieldPtr& field, const std::vector<FSet>& sets);

// R(N, D) = {(n1 - n2) / (d1 - d2) : n_i in N, d_i in D, d1 != d2}.
// R(A, A) is ratio_set(A, A); the mixed R(X, Y), whose numerators are drawn
// from Y, is ratio_set(Y, X). Throws Error{kDegenerateDenominator} if |D| < 2.
FSet ratio_set(const FSet& numerators, const FSet& denominators);

// A ratio set together with one representation (n1, n2, d1, d2) of each of
// its elements (the first found when scanning difference values in order).
struct RatioSet {
  FSet values;
  std::vector<std::array<Elem, 4>> representation;  // indexed by element

  const std::array<Elem, 4>& rep(Elem r) const { return representation[r]; }
};
RatioSet ratio_set_with_representations(const FSet& numerators, const FSet& denominators);

// (A - A)^2 + (A - A)^2.
FSet distance_composite(const FSet& a);

// The affine image (A - a0) / (a1 - a0) with a0 < a1 the two smallest
// indices of A, so that 0 and 1 lie in the result. Throws
// Error{kDegenerateDenominator} when |A| < 2.
FSet normalize_affine(const FSet& a);

}  // namespace ffgrowth

#endif  // FFGROWTH_SET_OPS_HPP_
