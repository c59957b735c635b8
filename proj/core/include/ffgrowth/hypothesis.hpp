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

// Subfield-concentration hypotheses.
//
//   thm1: |A ∩ aG|^2 <= |G|        for every subfield G and a != 0
//   thm2: |(A+A) ∩ (aG + b)|^2 <= |G|  for every subfield G, a != 0, and b
//
// Thresholds are compared as integers. Each dilate aG is visited once, via
// the smallest index in the coset aG*, and each affine copy aG + b once per
// additive coset of aG.

#ifndef FFGROWTH_HYPOTHESIS_HPP_
#define FFGROWTH_HYPOTHESIS_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "ffgrowth/fset.hpp"
#include "ffgrowth/subfield.hpp"

namespace ffgrowth {

struct HypothesisViolation {
  std::uint32_t subfield_degree = 0;
  std::uint64_t subfield_order = 0;
  Elem a = 0;
  Elem b = 0;
  std::uint64_t count = 0;  // |S ∩ (aG + b)|
};

struct HypothesisReport {
  int theorem = 1;
  bool pass = true;
  std::optional<HypothesisViolation> violation;  // first in (G, a, b) order
  std::uint64_t dilates_checked = 0;
};

// Checks |S ∩ (aG + b)|^2 <= |G| over all subfields, dilates and (when
// with_translates) translates. The first violation in ascending
// (degree, a, b) order is reported.
HypothesisReport check_concentration(const FSet& s, const std::vector<Subfield>& lattice,
                                     bool with_translates);

HypothesisReport check_hypothesis_thm1(const FSet& a);
HypothesisReport check_hypothesis_thm2(const FSet& a);

// Same checks with a precomputed subfield lattice.
HypothesisReport check_hypothesis_thm1(const FSet& a, const std::vector<Subfield>& lattice);
HypothesisReport check_hypothesis_thm2(const FSet& a, const std::vector<Subfield>& lattice);

}  // namespace ffgrowth

#endif  // FFGROWTH_HYPOTHESIS_HPP_
