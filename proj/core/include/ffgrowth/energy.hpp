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

// Exact additive and mixed energies, computed from representation
// histograms rather than by enumerating tuples.

#ifndef FFGROWTH_ENERGY_HPP_
#define FFGROWTH_ENERGY_HPP_

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ffgrowth/fset.hpp"
#include "ffgrowth/rational.hpp"

namespace ffgrowth {

// counts[t] = number of representations of t; dense over F_q.
struct RepHistogram {
  std::vector<std::uint64_t> counts;
  std::uint64_t total = 0;

  std::size_t support_size() const;
  std::vector<std::pair<Elem, std::uint64_t>> nonzero() const;
  BigInt sum_of_squares() const;
};

enum class EnergyKind { kAdditive, kMixed };

struct EnergyReport {
  EnergyKind kind = EnergyKind::kAdditive;
  BigInt value = 0;  // sum_t r(t)^2
  RepHistogram histogram;
  std::size_t left_size = 0;
  std::size_t right_size = 0;
};

// E+(X, Y) = #{(x1, x2, y1, y2) : x1 + y1 = x2 + y2}.
EnergyReport additive_energy(const FSet& x, const FSet& y);

// #{(a1, a2, b1, b2) in A^4 : a1 + r b1 = a2 + r b2}. Equals
// E+(A, rA) for r != 0 and |A|^3 for r = 0, where the b's still range over A.
std::uint64_t dilated_energy(const FSet& a, Elem r);

// E(A^2, (A-B)^2) = sum_t v(t)^2 with
// v(t) = #{(a1, a2, b1) in A x A x B : a1^2 + (a2 - b1)^2 = t}.
EnergyReport mixed_energy(const FSet& a, const FSet& b);

struct RatioEnergySum {
  BigInt sum = 0;    // sum over r in R(A, A) of dilated_energy(A, r)
  BigInt bound = 0;  // |R| |A|^2 + |A|^4
  bool holds = true;
  std::size_t ratio_count = 0;
  Elem witness_r = 0;  // minimizes dilated_energy(A, r); ties to smallest r
  std::uint64_t witness_energy = 0;
  std::vector<std::pair<Elem, std::uint64_t>> per_ratio;
};

// Throws Error{kDegenerateDenominator} if |A| < 2.
RatioEnergySum energy_sum_over_ratios(const FSet& a);

struct CsGrowthReport {
  std::size_t n = 0;            // |A|
  std::size_t sumset_size = 0;  // |B| = |A + A|
  std::size_t square_sum_size = 0;  // |A^2 + A^2|
  BigInt energy = 0;            // E(A^2, (A - B)^2)
  BigInt lhs = 0;               // |A|^6
  BigInt rhs = 0;               // |A^2 + A^2| * energy
  bool holds = true;
  // 3 - log(energy / |B|^2) / log|A|, reported when |A| >= 2 and
  // energy < |A|^3 |B|^2.
  std::optional<double> epsilon;
};

// |A|^6 <= |A^2 + A^2| * E(A^2, (A - B)^2) with B = A + A.
CsGrowthReport cs_growth_check(const FSet& a);

}  // namespace ffgrowth

#endif  // FFGROWTH_ENERGY_HPP_
