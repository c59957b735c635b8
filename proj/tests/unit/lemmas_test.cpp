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

#include "ffgrowth/lemmas.hpp"

#include <random>

#include "ffgrowth/error.hpp"
#include "ffgrowth/set_ops.hpp"
#include "ffgrowth/subfield.hpp"
#include "gtest/gtest.h"
#include "test_util.hpp"

namespace ffgrowth {
namespace {

using testing::naive_of;
using testing::to_fset;

ErrorCode error_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kInvariantViolation;
}

TEST(Plunnecke, Examples) {
  auto f = Field::build(5, 1);
  const FSet x = FSet::of(f, {0, 1});
  const PlunneckeReport r = plunnecke_check(x, {x, x});
  EXPECT_EQ(r.lhs, 3);
  EXPECT_EQ(r.rhs_num, 9);
  EXPECT_EQ(r.rhs_den, 2);
  EXPECT_TRUE(r.holds);
  ASSERT_TRUE(r.diff_lhs.has_value());
  EXPECT_EQ(*r.diff_lhs, 3);
  EXPECT_TRUE(r.diff_holds);

  const FSet b = FSet::of(f, {1, 3});
  const PlunneckeReport single = plunnecke_check(FSet::of(f, {0}), {b, b, b});
  EXPECT_EQ(single.rhs_num, 8);
  EXPECT_EQ(single.rhs_den, 1);
  EXPECT_TRUE(single.holds);
  EXPECT_FALSE(single.diff_lhs.has_value());

  EXPECT_EQ(error_of([&] { plunnecke_check(FSet(f), {x}); }), ErrorCode::kEmptyX);
  EXPECT_EQ(error_of([&] { plunnecke_check(x, {}); }), ErrorCode::kEmptySet);
}

TEST(Plunnecke, HoldsOnRandomInstances) {
  for (auto [p, k] : {std::pair{2u, 4u}, {13u, 1u}, {3u, 2u}}) {
    auto f = Field::build(p, k);
    std::mt19937_64 rng(p + 3 * k);
    for (int i = 0; i < 500; ++i) {
      const FSet x = to_fset(f, oracle::random_set(rng, f->order(), 1, 5));
      std::vector<FSet> bs;
      const int count = 1 + static_cast<int>(rng() % 3);
      for (int j = 0; j < count; ++j) bs.push_back(to_fset(f, oracle::random_set(rng, f->order(), 1, 5)));
      const auto r = plunnecke_check(x, bs);
      ASSERT_TRUE(r.holds);
      ASSERT_TRUE(r.diff_holds);
      ASSERT_EQ(r.lhs, iterated_sumset(f, bs).size());
    }
  }
}

TEST(SubsetSearch, KEqualsOneWithFullSetHasUnitConstant) {
  auto f = Field::build(11, 1);
  const FSet x = FSet::of(f, {0, 1, 5});
  const FSet b = FSet::of(f, {2, 3});
  // eps small enough that X' = X.
  const SubsetWitness w = katz_shen_search(x, {b}, Rational(1, 10));
  EXPECT_EQ(w.witness, x);
  EXPECT_EQ(w.c_measured, 1);
  EXPECT_EQ(w.target_size, 3u);
}

TEST(SubsetSearch, ExactExampleMatchesEnumeration) {
  auto f = Field::build(7, 1);
  const FSet x = FSet::of(f, {0, 1, 2});
  const FSet b = FSet::of(f, {0, 1});
  const SubsetWitness w = katz_shen_search(x, {b, b}, Rational(1, 3), SearchMode::kExact);
  EXPECT_EQ(w.mode, SearchMode::kExact);
  EXPECT_EQ(w.target_size, 2u);
  EXPECT_EQ(w.witness.size(), 2u);
  // Every 2-subset of an interval pair gives |X' + {0,1,2}| >= 4; {0,1}
  // reaches it first in bitmask order.
  EXPECT_EQ(w.sumset_size, 4u);
  EXPECT_EQ(w.witness.elements(), (std::vector<Elem>{0, 1}));
  // |X + B_i| = 4, so c = 4 * 3 / (4 * 4).
  EXPECT_EQ(w.c_measured, Rational(3, 4));
}

TEST(SubsetSearch, GreedyNeverBeatsExact) {
  auto f = Field::build(13, 1);
  std::mt19937_64 rng(21);
  for (int i = 0; i < 100; ++i) {
    const FSet x = to_fset(f, oracle::random_set(rng, 13, 2, 8));
    std::vector<FSet> bs{to_fset(f, oracle::random_set(rng, 13, 1, 3)), to_fset(f, oracle::random_set(rng, 13, 1, 3))};
    const Rational eps(1, 4);
    const auto g = katz_shen_search(x, bs, eps, SearchMode::kGreedy);
    const auto e = katz_shen_search(x, bs, eps, SearchMode::kExact);
    ASSERT_GE(g.c_measured, e.c_measured);
    ASSERT_GE(g.witness.size(), g.target_size);
    ASSERT_TRUE(g.witness.is_subset_of(x));
    ASSERT_EQ(e.sumset_size, sumset(e.witness, iterated_sumset(f, bs)).size());
  }
}

TEST(SubsetSearch, Errors) {
  auto f = Field::build(31, 1);
  const FSet x = FSet::of(f, {0, 1});
  EXPECT_EQ(error_of([&] { katz_shen_search(x, {x}, Rational(1)); }), ErrorCode::kBadEpsilon);
  EXPECT_EQ(error_of([&] { katz_shen_search(x, {x}, Rational(0)); }), ErrorCode::kBadEpsilon);
  EXPECT_EQ(error_of([&] { katz_shen_search(FSet(f), {x}, Rational(1, 2)); }), ErrorCode::kEmptyX);
  FSet big(f);
  for (Elem e = 0; e < 13; ++e) big.insert(e);
  EXPECT_EQ(error_of([&] { katz_shen_search(big, {x}, Rational(1, 2), SearchMode::kExact); }), ErrorCode::kNTooLarge);
}

TEST(Cover, GreedyExample) {
  auto f = Field::build(7, 1);
  const CoverResult r = greedy_cover(FSet::of(f, {0, 1, 2}), FSet::of(f, {0, 1}), Rational(0));
  EXPECT_EQ(r.count, 2u);
  EXPECT_EQ(r.bound, 2);
  EXPECT_EQ(r.covered_fraction, 1);
  // Ties go to the smallest translate: {0, 1} first, then {1, 2}.
  EXPECT_EQ(r.translates, (std::vector<Elem>{0, 1}));
  EXPECT_EQ(r.count_over_bound, 1);
}

TEST(Cover, TrivialCases) {
  auto f = Field::build(11, 1);
  const FSet x = FSet::of(f, {2, 3});
  EXPECT_EQ(greedy_cover(x, FSet::of(f, {0, 2, 3, 4}), Rational(0)).count, 1u);
  const CoverResult self = greedy_cover(x, x, Rational(0));
  EXPECT_EQ(self.count, 1u);
  EXPECT_GE(self.bound, 1);
  EXPECT_EQ(error_of([&] { greedy_cover(FSet(f), x, Rational(0)); }), ErrorCode::kEmptySet);
  EXPECT_EQ(error_of([&] { greedy_cover(x, x, Rational(1)); }), ErrorCode::kBadEpsilon);
}

TEST(Cover, GreedyWithinHarmonicFactorOfExact) {
  auto f = Field::build(13, 1);
  const auto naive = naive_of(*f);
  std::mt19937_64 rng(8);
  for (int i = 0; i < 150; ++i) {
    const auto ex = oracle::random_set(rng, 13, 1, 10);
    const auto ey = oracle::random_set(rng, 13, 1, 4);
    const FSet x = to_fset(f, ex), y = to_fset(f, ey);
    const int tenths = static_cast<int>(rng() % 3);
    const Rational eps(tenths, 10);
    const CoverResult g = greedy_cover(x, y, eps);
    const std::size_t exact = exact_cover_count(x, y, eps);
    const std::size_t need = (ex.size() * (10 - tenths) + 9) / 10;
    ASSERT_EQ(exact, oracle::min_cover(naive, ex, ey, need));
    ASSERT_GE(g.covered_fraction, 1 - eps);
    ASSERT_LE(g.count, x.size());
    ASSERT_LE(Rational(g.count), harmonic_number(x.size()) * exact);
  }
}

TEST(Cover, CountMonotoneInEpsilon) {
  auto f = Field::build(2, 6);
  std::mt19937_64 rng(14);
  for (int i = 0; i < 50; ++i) {
    const FSet x = to_fset(f, oracle::random_set(rng, 64, 4, 20));
    const FSet y = to_fset(f, oracle::random_set(rng, 64, 2, 6));
    std::size_t last = x.size() + 1;
    for (int e = 0; e < 10; ++e) {
      const std::size_t c = greedy_cover(x, y, Rational(e, 10)).count;
      ASSERT_LE(c, last);
      last = c;
    }
  }
}

TEST(Helpers, HarmonicAndCeilPower) {
  EXPECT_EQ(harmonic_number(1), 1);
  EXPECT_EQ(harmonic_number(3), Rational(11, 6));
  EXPECT_EQ(ceil_power(100, 0.5), 10u);
  EXPECT_EQ(ceil_power(10, 0.5), 4u);
  EXPECT_EQ(ceil_power(7, 0), 1u);
  EXPECT_EQ(ceil_power(12, 1), 12u);
}

TEST(CoverProfile, TinySets) {
  auto f = Field::build(101, 1);
  const Lemma32Profile prof = lemma32_cover_profile(FSet::of(f, {3, 17}), Rational(1, 10));
  EXPECT_EQ(prof.b_profile.size(), 3u);
  EXPECT_EQ(prof.a_profile.size(), 2u);
  for (const auto& e : prof.b_profile) {
    EXPECT_LE(e.set_size, 2u);
    EXPECT_LE(e.count, 2u);
  }
  EXPECT_GE(prof.min_covered_fraction, Rational(9, 10));
  EXPECT_EQ(error_of([&] { lemma32_cover_profile(FSet::of(f, {3}), Rational(1, 10)); }), ErrorCode::kEmptySet);
}

TEST(CoverProfile, VacuousThresholdAtEpsilonOne) {
  auto f = Field::build(101, 1);
  std::mt19937_64 rng(3);
  const FSet a = to_fset(f, oracle::random_set(rng, 101, 6, 6));
  const Lemma32Profile prof = lemma32_cover_profile(a, Rational(1));
  EXPECT_EQ(prof.threshold, 6u);
  // |(A - b)^2| <= |A|, so every b qualifies. The sets (B - a)^2 can be
  // larger than |A|; only their own threshold is vacuous.
  EXPECT_EQ(prof.y_star, sumset(a, a).elements());
  EXPECT_EQ(prof.y_star_own, sumset(a, a).elements());
  EXPECT_EQ(prof.x_star_own, a.elements());
}

TEST(CoverProfile, DilatedSubfieldIsCheapToCover) {
  auto f = Field::build(2, 6);
  const FSet g = subfield_lattice(f)[2].elements;  // F_8
  const FSet a = dilate(f->primitive(), g);
  const Lemma32Profile prof = lemma32_cover_profile(a, Rational(1, 2));
  // (A - b)^2 and -A^2 lie in the same dilate of F_8 when b is in A + A = A.
  for (const auto& e : prof.b_profile) EXPECT_LE(e.count, 1u);
  EXPECT_GE(prof.min_covered_fraction, Rational(9, 10));
}

}  // namespace
}  // namespace ffgrowth
