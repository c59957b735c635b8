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

#ifndef FFGROWTH_SUBFIELD_HPP_
#define FFGROWTH_SUBFIELD_HPP_

#include <cstdint>
#include <vector>

#include "ffgrowth/field.hpp"
#include "ffgrowth/fset.hpp"

namespace ffgrowth {

// The subfield F_{p^d} of F_{p^k}, d | k: the fixed points of x -> x^{p^d}.
struct Subfield {
  std::uint32_t p = 0;
  std::uint32_t degree = 0;
  FSet elements;

  std::uint64_t order() const noexcept { return elements.size(); }
};

// One entry per divisor d of k, ascending; the last entry is the whole field.
std::vector<Subfield> subfield_lattice(const FieldPtr& field);

Subfield make_subfield(const FieldPtr& field, std::uint32_t degree);

// Smallest d >= 1 with x^{p^d} = x.
std::uint32_t element_degree(const Field& field, Elem x);

// F_B via the lcm of generator degrees. For q <= kClosureCrossCheckLimit the
// result is also checked against generated_subfield_by_closure and a mismatch
// throws Error{kInvariantViolation}. Throws Error{kEmptySet} for empty B.
Subfield generated_subfield(const FSet& generators);

// F_B as the fixpoint of B u {0, 1} under +, * and inversion.
FSet generated_subfield_by_closure(const FSet& generators);

inline constexpr std::uint32_t kClosureCrossCheckLimit = 1024;

}  // namespace ffgrowth

#endif  // FFGROWTH_SUBFIELD_HPP_
