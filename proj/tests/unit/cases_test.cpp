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

#include "ffgrowth/cases.hpp"

#include <random>

#include "ffgrowth/error.hpp"
#include "ffgrowth/hypothesis.hpp"
#include "ffgrowth/set_ops.hpp"
#include "ffgrowth/subfield.hpp"
#include "gtest/gtest.h"
#include "test_util.hpp"

namespace ffgrowth {
namespace {

using testing::naive_of;
using testing::to_fset;

TEST(Cases, FullFieldIsCase4) {
  for (auto [p, k] : {std::pair{5u, 1u}, {7u, 1u}, {2u, 3u}, {3u, 2u}}) {
    auto f = Field::build(p, k);
    const CaseLabel label = classify_case(FSet::full(f));
    EXPECT_EQ(label.kind, CaseKind::kCase4);
    EXPECT_FALSE(label.witness.has_value());
  }
}

TEST(Cases, Examples) {
  auto f7 = Field::build(7, 1);
  EXPECT_EQ(classify_case(FSet::of(f7, {0, 1, 2})).kind, CaseKind::kCase4);

  auto f5 = Field::build(5, 1);
  const FSet a = FSet::of(f5, {0, 1});
  const CaseLabel label = classify_case(a);
  ASSERT_EQ(label.kind, CaseKind::kCase1);
  ASSERT_TRUE(label.witness.has_value());
  EXPECT_FALSE(ratio_set(a, a).contains(label.witness->r));
  EXPECT_EQ(label.witness->r, 2u);  // 1 + 1 with R = {0, 1, 4}
  EXPECT_TRUE(verify_case_label(a, a, a, label));
  EXPECT_EQ(case_name(CaseKind::kCase1), "Case1");
}

TEST(Cases, DegenerateInput) {
  auto f5 = Field::build(5, 1);
  try {
    classify_case(FSet::of(f5, {3}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDegenerateDenominator);
  }
}

TEST(Cases, TamperedWitnessFailsVerification) {
  auto f = Field::build(11, 1);
  const FSet a = FSet::of(f, {0, 1});
  CaseLabel label = classify_case(a);
  ASSERT_NE(label.kind, CaseKind::kCase4);
  EXPECT_TRUE(verify_case_label(a, a, a, label));
  CaseLabel bad = label;
  bad.witness->r = 0;  // 0 is always a ratio
  EXPECT_FALSE(verify_case_label(a, a, a, bad));
  CaseLabel wrong_kind;
  wrong_kind.kind = CaseKind::kCase4;
  EXPECT_FALSE(verify_case_label(a, a, a, wrong_kind));
}

TEST(Cases, MatchesBruteForceAndWitnessesVerify) {
  for (auto [p, k] : {std::pair{13u, 1u}, {2u, 4u}, {3u, 2u}}) {
    auto f = Field::build(p, k);
    const auto naive = naive_of(*f);
    std::mt19937_64 rng(p * 7 + k);
    for (int i = 0; i < 150; ++i) {
      const auto ea = oracle::random_set(rng, f->order(), 2, 6);
      const FSet a = to_fset(f, ea);
      const CaseLabel label = classify_case(a);
      ASSERT_EQ(static_cast<int>(label.kind), oracle::classify(naive, ea, ea, ea));
      ASSERT_EQ(label.witness.has_value(), label.kind != CaseKind::kCase4);
      ASSERT_TRUE(verify_case_label(a, a, a, label));
    }
  }
}

TEST(Cases, XyVariantUsesSwappedRoles) {
  auto f = Field::build(13, 1);
  const auto naive = naive_of(*f);
  std::mt19937_64 rng(99);
  for (int i = 0; i < 150; ++i) {
    const auto ex = oracle::random_set(rng, 13, 2, 5);
    const auto ey = oracle::random_set(rng, 13, 1, 5);
    const FSet x = to_fset(f, ex), y = to_fset(f, ey);
    const CaseLabel label = classify_case_xy(x, y);
    // R(X, Y) has numerators from Y and denominators from X.
    ASSERT_EQ(static_cast<int>(label.kind), oracle::classify(naive, ey, ex, ey));
    ASSERT_TRUE(verify_case_label(y, x, y, label));
  }
}

TEST(Hypothesis, Examples) {
  auto f7 = Field::build(7, 1);
  EXPECT_TRUE(check_hypothesis_thm1(FSet::of(f7, {0, 1})).pass);
  const auto fail = check_hypothesis_thm1(FSet::of(f7, {0, 1, 2}));
  EXPECT_FALSE(fail.pass);
  ASSERT_TRUE(fail.violation.has_value());
  EXPECT_EQ(fail.violation->subfield_order, 7u);
  EXPECT_EQ(fail.violation->a, 1u);
  EXPECT_EQ(fail.violation->count, 3u);
  EXPECT_TRUE(check_hypothesis_thm1(FSet(f7)).pass);
  EXPECT_TRUE(check_hypothesis_thm2(FSet(f7)).pass);
}

TEST(Hypothesis, SubfieldIsRejected) {
  // F_4 inside F_16: |F_4 ∩ 1·F_4|^2 = 16 > 4.
  auto f = Field::build(2, 4);
  const auto lattice = subfield_lattice(f);
  const auto report = check_hypothesis_thm1(lattice[1].elements);
  EXPECT_FALSE(report.pass);
  EXPECT_EQ(report.violation->subfield_order, 2u);  // {0,1} already has 4 > 2
}

TEST(Hypothesis, DilateCountIsDeduplicated) {
  auto f = Field::build(2, 4);
  // |A| = 3 skips F_16 (9 <= 16); F_2 has 15 distinct dilates, F_4 has
  // 15 / 3 = 5.
  bool found = false;
  for (Elem x = 1; x < 16 && !found; ++x)
    for (Elem y = x + 1; y < 16 && !found; ++y)
      for (Elem z = y + 1; z < 16 && !found; ++z) {
        const auto report = check_hypothesis_thm1(FSet::of(f, {x, y, z}));
        if (!report.pass) continue;
        found = true;
        EXPECT_EQ(report.dilates_checked, 20u);
      }
  EXPECT_TRUE(found);
}

TEST(Hypothesis, MatchesUndeduplicatedOracle) {
  for (auto [p, k] : {std::pair{2u, 4u}, {3u, 2u}, {13u, 1u}, {2u, 6u}}) {
    auto f = Field::build(p, k);
    const auto naive = naive_of(*f);
    const auto lattice = subfield_lattice(f);
    std::mt19937_64 rng(p * 31 + k);
    const int trials = f->order() > 16 ? 15 : 60;
    for (int i = 0; i < trials; ++i) {
      const auto ea = oracle::random_set(rng, f->order(), 0, 4);
      const FSet a = to_fset(f, ea);
      ASSERT_EQ(check_hypothesis_thm1(a, lattice).pass, oracle::hypothesis_holds(naive, ea, false));
      const auto ss = oracle::sumset(naive, ea, ea);
      ASSERT_EQ(check_hypothesis_thm2(a, lattice).pass, oracle::hypothesis_holds(naive, ss, true));
    }
  }
}

}  // namespace
}  // namespace ffgrowth
