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

// Checkers for the sumset structure results: the Plunnecke-Ruzsa bound,
// large-subset witnesses with small iterated sumsets, and covering by
// translates. Constants hidden in the asymptotic statements are measured and
// reported, never asserted.

#ifndef FFGROWTH_LEMMAS_HPP_
#define FFGROWTH_LEMMAS_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "ffgrowth/fset.hpp"
#include "ffgrowth/rational.hpp"

namespace ffgrowth {

// Exact subset searches are gated at this many elements.
inline constexpr std::size_t kExactSearchLimit = 12;

struct PlunneckeReport {
  BigInt lhs = 0;      // |B_1 + ... + B_k|
  BigInt rhs_num = 0;  // prod |X + B_i|
  BigInt rhs_den = 0;  // |X|^{k-1}
  bool holds = true;   // lhs * rhs_den <= rhs_num

  // |B_1 - B_2| <= |X + B_1| |X + B_2| / |X|, only for k == 2.
  std::optional<BigInt> diff_lhs;
  std::optional<BigInt> diff_rhs_num;
  std::optional<BigInt> diff_rhs_den;
  bool diff_holds = true;
};

// Throws Error{kEmptyX} for empty X and Error{kEmptySet} when no B is given.
PlunneckeReport plunnecke_check(const FSet& x, const std::vector<FSet>& bs);

enum class SearchMode { kGreedy, kExact };

struct SubsetWitness {
  FSet witness;
  std::size_t target_size = 0;   // ceil((1 - eps) |X|)
  std::size_t sumset_size = 0;   // |X' + B_1 + ... + B_k|
  Rational c_measured;           // sumset_size |X|^{k-1} / prod |X + B_i|
  SearchMode mode = SearchMode::kGreedy;
};

// Finds X' in X with |X'| >= ceil((1 - eps)|X|) and small |X' + sum B_i|.
// Greedy mode removes, one at a time, the element whose removal shrinks the
// sumset most (ties to the smallest index). Exact mode enumerates every
// subset of the target size and returns the first minimizer in bitmask order;
// it requires |X| <= kExactSearchLimit (Error{kNTooLarge} otherwise).
// Throws Error{kEmptyX}, Error{kEmptySet} (no B), Error{kBadEpsilon} unless
// 0 < eps < 1.
SubsetWitness katz_shen_search(const FSet& x, const std::vector<FSet>& bs, const Rational& eps,
                               SearchMode mode = SearchMode::kGreedy);

struct CoverResult {
  std::vector<Elem> translates;  // cover uses t + Y for each t, in pick order
  std::size_t count = 0;
  std::size_t covered = 0;
  Rational covered_fraction;
  Rational bound;  // min(|X + Y|, |X - Y|) / |Y|
  Rational count_over_bound;
};

// Greedy partial cover of X by translates of Y until at least (1 - eps)|X|
// elements are covered. Each round picks the translate covering the most
// uncovered elements, ties to the smallest t. Throws Error{kEmptySet} for
// empty X or Y and Error{kBadEpsilon} unless 0 <= eps < 1.
CoverResult greedy_cover(const FSet& x, const FSet& y, const Rational& eps);

// Minimum number of translates of Y covering at least (1 - eps)|X| elements
// of X, by breadth-first search over covered subsets. Requires
// |X| <= kExactSearchLimit.
std::size_t exact_cover_count(const FSet& x, const FSet& y, const Rational& eps);

// H(n) = 1 + 1/2 + ... + 1/n.
Rational harmonic_number(std::size_t n);

// Smallest integer >= n^eps, computed in floating point and snapped to an
// integer when within 1e-9 of one.
std::uint64_t ceil_power(std::uint64_t n, double eps);

struct CoverProfileEntry {
  Elem element = 0;       // b in B, or a in A
  std::size_t set_size = 0;  // |(A - b)^2| or |(B - a)^2|
  std::size_t count = 0;     // greedy translates of -A^2 for 90% cover
  Rational covered_fraction;
  std::uint64_t own_threshold = 0;  // ceil(set_size^eps)
};

struct Lemma32Profile {
  Rational epsilon;
  std::size_t n = 0;           // |A|
  std::size_t sumset_size = 0; // |B|
  std::vector<CoverProfileEntry> b_profile;  // (A - b)^2 for b in B
  std::vector<CoverProfileEntry> a_profile;  // (B - a)^2 for a in A
  std::uint64_t threshold = 0;               // ceil(|A|^eps)
  std::vector<Elem> y_star;      // b with count <= threshold
  std::vector<Elem> x_star;      // a with count <= threshold
  std::vector<Elem> y_star_own;  // b with count <= own_threshold
  std::vector<Elem> x_star_own;  // a with count <= own_threshold
  double x_star_ratio = 0;       // |X*| / |A|^{1-eps}
  double y_star_ratio = 0;       // |Y*| / |B|^{1-eps}
  Rational min_covered_fraction;
};

// Covers every (A - b)^2, b in A + A, and every (B - a)^2, a in A, by
// translates of -A^2 up to 9/10 of its elements. Throws Error{kEmptySet} if
// |A| < 2 and Error{kBadEpsilon} unless 0 <= eps <= 1.
Lemma32Profile lemma32_cover_profile(const FSet& a, const Rational& eps);

}  // namespace ffgrowth

#endif  // FFGROWTH_LEMMAS_HPP_
