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

#include "ffgrowth/harness.hpp"

#include <cmath>
#include <random>

#include "ffgrowth/error.hpp"
#include "ffgrowth/hypothesis.hpp"
#include "ffgrowth/set_ops.hpp"
#include "gtest/gtest.h"
#include "test_util.hpp"

namespace ffgrowth {
namespace {

using testing::to_fset;

ErrorCode error_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kInvariantViolation;
}

TEST(Measure, TwoPointSetInF5) {
  auto f = Field::build(5, 1);
  const GrowthRecord r = measure(FSet::of(f, {0, 1}));
  EXPECT_EQ(r.n, 2u);
  EXPECT_EQ(r.delta, 3u);
  EXPECT_EQ(r.size_sum, 3u);
  EXPECT_EQ(r.size_sq_sum, 3u);
  EXPECT_EQ(r.size_shift, 3u);
  ASSERT_TRUE(r.exp_delta.has_value());
  EXPECT_NEAR(*r.exp_delta, std::log2(3.0), 1e-12);
  EXPECT_GE(*r.exp_delta, 1 + 1.0 / 21);
  EXPECT_TRUE(r.hyp1);
  EXPECT_EQ(r.case_label->kind, CaseKind::kCase1);
  EXPECT_TRUE(r.energy.holds);
  EXPECT_EQ(r.ratio_sum_holds, true);
  EXPECT_EQ(r.chain_holds, true);
}

TEST(Measure, SingletonHasNoExponents) {
  auto f = Field::build(7, 1);
  const GrowthRecord r = measure(FSet::of(f, {4}));
  EXPECT_EQ(r.size_sum, 1u);
  EXPECT_EQ(r.size_sq_sum, 1u);
  EXPECT_EQ(r.size_shift, 1u);
  EXPECT_EQ(r.delta, 1u);
  EXPECT_FALSE(r.exp_sum.has_value());
  EXPECT_FALSE(r.case_label.has_value());
}

TEST(Measure, FullOddField) {
  for (std::uint32_t p : {5u, 7u, 11u}) {
    auto f = Field::build(p, 1);
    const GrowthRecord r = measure(FSet::full(f));
    EXPECT_EQ(r.size_sum, p);
    EXPECT_EQ(r.size_sq_sum, p);
    EXPECT_EQ(r.size_shift, p);
    EXPECT_EQ(r.delta, p);
  }
}

TEST(Measure, RecordInvariants) {
  auto f = Field::build(31, 1);
  std::mt19937_64 rng(6);
  for (int i = 0; i < 50; ++i) {
    const FSet a = to_fset(f, oracle::random_set(rng, 31, 1, 8));
    const GrowthRecord r = measure(a);
    const FSet sq_diff = square_set(difference_set(a, a));
    EXPECT_GE(r.delta, sq_diff.size());
    EXPECT_GE(r.size_sum, r.n);
    EXPECT_GE(r.size_shift, square_set(a).size());
    EXPECT_LE(r.delta, 31u);
    EXPECT_TRUE(r.energy.holds);
    EXPECT_NE(r.chain_holds, false);
    // Pure function of the input.
    const GrowthRecord again = measure(a);
    EXPECT_EQ(csv_row(r), csv_row(again));
  }
}

TEST(Exponent, ExactThresholds) {
  // 10^{22/21} = 11.16..., so 11 fails and 12 passes.
  EXPECT_FALSE(meets_exponent(11, 10, 21));
  EXPECT_TRUE(meets_exponent(12, 10, 21));
  // 10^{43/42} = 10.56...
  EXPECT_FALSE(meets_exponent(10, 10, 42));
  EXPECT_TRUE(meets_exponent(11, 10, 42));
  // Perfect power boundary: 4^{1 + 1/2} = 8.
  EXPECT_TRUE(meets_exponent(8, 4, 2));
  EXPECT_FALSE(meets_exponent(7, 4, 2));
}

TEST(Generate, Models) {
  auto f101 = Field::build(101, 1);
  EXPECT_EQ(generate(GenModel::kInterval, f101, 10, 0).elements(),
            (std::vector<Elem>{0, 1, 2, 3, 4, 5, 6, 7, 8, 9}));
  EXPECT_EQ(generate(GenModel::kUniform, f101, 10, 1), generate(GenModel::kUniform, f101, 10, 1));
  EXPECT_NE(generate(GenModel::kUniform, f101, 10, 1), generate(GenModel::kUniform, f101, 10, 2));
  EXPECT_EQ(generate(GenModel::kUniform, f101, 10, 1).size(), 10u);

  const FSet geo = generate(GenModel::kGeometric, f101, 5, 0);
  Elem x = 1;
  for (int i = 0; i < 5; ++i) {
    EXPECT_TRUE(geo.contains(x));
    x = f101->mul(x, f101->primitive());
  }

  auto f16 = Field::build(2, 4);
  GenerateOptions opt;
  opt.dilation = 2;  // w
  opt.subfield_degree = 2;
  const FSet coset = generate(GenModel::kSubfieldCoset, f16, 4, 9, opt);
  const FSet w_f4 = dilate(2, subfield_lattice(f16)[1].elements);
  EXPECT_EQ(coset.size(), 4u);
  EXPECT_TRUE(coset.is_subset_of(w_f4));

  EXPECT_EQ(error_of([&] { generate(GenModel::kInterval, f16, 3, 0); }), ErrorCode::kBadModel);
  EXPECT_EQ(error_of([&] { generate(GenModel::kUniform, f101, 102, 0); }), ErrorCode::kNTooLarge);
  EXPECT_EQ(error_of([&] { generate(GenModel::kGeometric, f101, 101, 0); }), ErrorCode::kNTooLarge);
  EXPECT_EQ(error_of([&] { parse_model("zipf"); }), ErrorCode::kBadModel);
  EXPECT_EQ(parse_model("subfield_coset"), GenModel::kSubfieldCoset);
  EXPECT_EQ(model_name(GenModel::kGeometric), "geometric");
}

TEST(Sweep, RecordsAndSummary) {
  SweepConfig config;
  config.field = Field::build(101, 1);
  config.n_min = 8;
  config.n_max = 12;
  config.trials = 3;
  config.seed = 7;
  const SweepResult result = sweep(config);
  ASSERT_EQ(result.records.size(), 15u);
  for (std::size_t i = 0; i < result.records.size(); ++i) {
    const auto& r = result.records[i];
    EXPECT_EQ(r.n, 8 + i / 3);
    ASSERT_TRUE(r.seed.has_value());
    EXPECT_EQ(*r.seed, derive_seed(7, r.n, i % 3));
    // The record regenerates its set.
    EXPECT_EQ(measure(generate(GenModel::kUniform, config.field, r.n, *r.seed)).delta, r.delta);
    // Above floor(sqrt(101)) = 10 the prime field itself is too concentrated.
    EXPECT_EQ(r.hyp1, r.n <= 10);
  }
  EXPECT_EQ(result.summary.records, 15u);
  EXPECT_EQ(result.summary.hyp1_pass, 9u);
  EXPECT_EQ(result.summary.invariant_failures, 0u);
  EXPECT_EQ(result.summary.delta_hyp.total, 9u);
}

TEST(Sweep, DeterministicAcrossThreadCounts) {
  SweepConfig config;
  config.field = Field::build(2, 6);
  config.n_min = 3;
  config.n_max = 6;
  config.trials = 4;
  config.seed = 11;
  const std::string one = records_to_csv(sweep(config).records);
  config.threads = 3;
  EXPECT_EQ(records_to_csv(sweep(config).records), one);
  EXPECT_EQ(one.substr(0, one.find('\n')), csv_header());
}

TEST(Sweep, Errors) {
  SweepConfig config;
  config.field = Field::build(11, 1);
  config.trials = 0;
  EXPECT_EQ(error_of([&] { sweep(config); }), ErrorCode::kBadTrials);
  config.trials = 1;
  config.n_min = 5;
  config.n_max = 4;
  EXPECT_EQ(error_of([&] { sweep(config); }), ErrorCode::kBadTrials);
  config.n_max = 12;
  EXPECT_EQ(error_of([&] { sweep(config); }), ErrorCode::kNTooLarge);
}

TEST(Csv, RowFormat) {
  auto f = Field::build(5, 1);
  const GrowthRecord r = measure(FSet::of(f, {0, 1}));
  EXPECT_EQ(csv_row(r), "5,1,5,file,,2,3,3,3,3,pass,fail,Case1,1.584963,1.584963,1.584963,1.584963");
  const GrowthRecord s = measure(FSet::of(f, {2}));
  EXPECT_EQ(csv_row(s), "5,1,5,file,,1,1,1,1,1,pass,pass,none,,,,");
}

TEST(Search, SingleIterationReturnsStart) {
  SearchConfig config;
  config.field = Field::build(101, 1);
  config.n = 10;
  config.iterations = 1;
  config.seed = 3;
  const SearchState s = extremal_search(config);
  EXPECT_EQ(s.iterations, 1u);
  EXPECT_EQ(s.current, generate(GenModel::kInterval, config.field, 10, 0));
  EXPECT_EQ(s.objective, s.start_objective);
  EXPECT_EQ(s.objective, s.best.delta);
}

TEST(Search, MonotoneAndNoWorseThanInterval) {
  SearchConfig config;
  config.field = Field::build(101, 1);
  config.n = 10;
  config.iterations = 300;
  config.seed = 3;
  const SearchState s = extremal_search(config);
  EXPECT_LE(s.objective, s.start_objective);
  ASSERT_EQ(s.history.size(), 300u);
  for (std::size_t i = 1; i < s.history.size(); ++i) EXPECT_LE(s.history[i], s.history[i - 1]);
  EXPECT_TRUE(check_hypothesis_thm1(s.current).pass);
  EXPECT_EQ(s.best.delta, s.objective);
  // Same seed, same trajectory.
  EXPECT_EQ(extremal_search(config).current, s.current);
}

TEST(Search, HypothesisFilterExcludesSubfield) {
  auto f16 = Field::build(2, 4);
  const FSet f4 = subfield_lattice(f16)[1].elements;
  SearchConfig config;
  config.field = f16;
  config.n = 4;
  config.iterations = 200;
  config.seed = 5;
  config.objective = Objective::kDelta;
  config.enforce_hypothesis = false;
  config.start = f4;
  const SearchState unfiltered = extremal_search(config);
  // Squaring is injective in characteristic 2, so Delta >= |A - A| >= 4,
  // which F_4 attains.
  EXPECT_EQ(unfiltered.objective, 4u);

  config.enforce_hypothesis = true;
  config.start.reset();
  const SearchState filtered = extremal_search(config);
  // Shifted F_2-planes also reach Delta = 4 and pass the hypothesis; what
  // the filter removes is every dilate of F_4.
  EXPECT_TRUE(check_hypothesis_thm1(filtered.current).pass);
  EXPECT_GE(filtered.objective, unfiltered.objective);
  for (Elem a = 1; a < 16; ++a) EXPECT_NE(filtered.current, dilate(a, f4));
}

TEST(Search, Errors) {
  SearchConfig config;
  config.field = Field::build(11, 1);
  config.n = 12;
  EXPECT_EQ(error_of([&] { extremal_search(config); }), ErrorCode::kNTooLarge);
  config.n = 1;
  EXPECT_EQ(error_of([&] { extremal_search(config); }), ErrorCode::kNTooLarge);
  config.n = 3;
  config.iterations = 0;
  EXPECT_EQ(error_of([&] { extremal_search(config); }), ErrorCode::kBadTrials);
  EXPECT_EQ(parse_objective("maxpair"), Objective::kMaxPair);
  EXPECT_EQ(error_of([&] { parse_objective("area"); }), ErrorCode::kBadModel);
}

}  // namespace
}  // namespace ffgrowth
