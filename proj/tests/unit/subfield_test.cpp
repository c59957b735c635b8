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

#include "ffgrowth/subfield.hpp"

#include <random>

#include "ffgrowth/error.hpp"
#include "gtest/gtest.h"
#include "test_util.hpp"

namespace ffgrowth {
namespace {

using testing::naive_of;
using testing::to_eset;
using testing::to_fset;

std::vector<std::uint64_t> orders(const std::vector<Subfield>& lattice) {
  std::vector<std::uint64_t> out;
  for (const auto& s : lattice) out.push_back(s.order());
  return out;
}

TEST(Subfield, LatticeExamples) {
  EXPECT_EQ(orders(subfield_lattice(Field::build(2, 6))), (std::vector<std::uint64_t>{2, 4, 8, 64}));
  EXPECT_EQ(orders(subfield_lattice(Field::build(7, 1))), (std::vector<std::uint64_t>{7}));
  const auto f4 = subfield_lattice(Field::build(2, 2));
  ASSERT_EQ(f4.size(), 2u);
  EXPECT_EQ(f4[0].elements.elements(), (std::vector<Elem>{0, 1}));
  EXPECT_EQ(f4[1].degree, 2u);
}

TEST(Subfield, LatticeMatchesOracleAndIsClosed) {
  for (auto [p, k] : {std::pair{2u, 6u}, {3u, 4u}, {2u, 4u}, {5u, 2u}}) {
    auto f = Field::build(p, k);
    const auto naive = naive_of(*f);
    for (const auto& s : subfield_lattice(f)) {
      EXPECT_EQ(s.p, p);
      EXPECT_EQ(to_eset(s.elements), naive.subfield(s.degree));
      std::uint64_t expected = 1;
      for (std::uint32_t i = 0; i < s.degree; ++i) expected *= p;
      EXPECT_EQ(s.order(), expected);
      s.elements.for_each([&](Elem x) {
        if (x != 0) EXPECT_TRUE(s.elements.contains(f->inv(x)));
        s.elements.for_each([&](Elem y) {
          EXPECT_TRUE(s.elements.contains(f->add(x, y)));
          EXPECT_TRUE(s.elements.contains(f->mul(x, y)));
        });
      });
    }
  }
}

TEST(Subfield, ElementDegree) {
  auto f4 = Field::build(2, 2, std::vector<std::uint32_t>{1, 1, 1});
  EXPECT_EQ(element_degree(*f4, 1), 1u);
  EXPECT_EQ(element_degree(*f4, 0), 1u);
  EXPECT_EQ(element_degree(*f4, 2), 2u);
  auto f64 = Field::build(2, 6);
  for (Elem x = 0; x < 64; ++x) {
    const auto d = element_degree(*f64, x);
    EXPECT_EQ(6 % d, 0u);
    EXPECT_EQ(f64->frob_iter(x, d), x);
  }
}

TEST(Subfield, GeneratedSubfieldExamples) {
  auto f16 = Field::build(2, 4);
  EXPECT_EQ(generated_subfield(FSet::of(f16, {0, 1})).order(), 2u);
  auto f4 = Field::build(2, 2, std::vector<std::uint32_t>{1, 1, 1});
  EXPECT_EQ(generated_subfield(FSet::of(f4, {2})).order(), 4u);
  auto f64 = Field::build(2, 6);
  Elem cubic = 0;
  for (Elem x = 0; x < 64 && cubic == 0; ++x)
    if (element_degree(*f64, x) == 3) cubic = x;
  ASSERT_NE(cubic, 0u);
  EXPECT_EQ(generated_subfield(FSet::of(f64, {cubic})).order(), 8u);
  EXPECT_EQ(generated_subfield(FSet::of(f64, {0})).order(), 2u);
  try {
    generated_subfield(FSet(f64));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptySet);
  }
}

TEST(Subfield, ClosureAgreesWithDegreeLcm) {
  for (auto [p, k] : {std::pair{2u, 6u}, {3u, 4u}, {2u, 8u}}) {
    auto f = Field::build(p, k);
    std::mt19937_64 rng(p + k);
    for (int i = 0; i < 100; ++i) {
      const FSet b = to_fset(f, oracle::random_set(rng, f->order(), 1, 3));
      EXPECT_EQ(generated_subfield(b).elements, generated_subfield_by_closure(b));
    }
  }
}

}  // namespace
}  // namespace ffgrowth
