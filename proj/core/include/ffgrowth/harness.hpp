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

// Growth measurements. A GrowthRecord holds, for one set A,
//
//   |A + A|, |A^2 + A^2|, |A + A^2| and Delta = |(A - A)^2 + (A - A)^2|
//
// with the two subfield hypotheses, the closure case of R(A, A) and the
// exponents log_|A| of each size. Sweeps and searches produce records; the
// target exponents are 1 + 1/21 (Delta), 1 + 1/42 (the larger of the first
// two) and 1 + 1/84 (|A + A^2|).

#ifndef FFGROWTH_HARNESS_HPP_
#define FFGROWTH_HARNESS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ffgrowth/cases.hpp"
#include "ffgrowth/energy.hpp"
#include "ffgrowth/fset.hpp"
#include "ffgrowth/subfield.hpp"

namespace ffgrowth {

enum class GenModel { kUniform, kInterval, kSubfieldCoset, kGeometric };

// Throws Error{kBadModel}.
GenModel parse_model(std::string_view name);
std::string model_name(GenModel model);

struct GrowthRecord {
  FieldSpec field;
  std::string model = "file";
  std::optional<std::uint64_t> seed;

  std::size_t n = 0;
  std::size_t size_sum = 0;     // |A + A|
  std::size_t size_sq_sum = 0;  // |A^2 + A^2|
  std::size_t size_shift = 0;   // |A + A^2|
  std::size_t delta = 0;        // |(A - A)^2 + (A - A)^2|
  bool hyp1 = true;
  bool hyp2 = true;
  std::optional<CaseLabel> case_label;  // needs |A| >= 2

  // log base |A|; present only when |A| >= 2.
  std::optional<double> exp_sum, exp_sq_sum, exp_shift, exp_delta;

  CsGrowthReport energy;
  // Sum over R(A, A) against its bound, and for the minimizing r the
  // Cauchy-Schwarz consequence |A + rA| E+(A, rA) >= (|A||rA|)^2.
  std::optional<bool> ratio_sum_holds;
  std::optional<bool> chain_holds;
  std::optional<Elem> chain_r;

  std::size_t max_pair() const { return size_sum > size_sq_sum ? size_sum : size_sq_sum; }
};

struct MeasureOptions {
  bool ratio_energy = true;
};

GrowthRecord measure(const FSet& a, const MeasureOptions& options = {});
GrowthRecord measure(const FSet& a, const std::vector<Subfield>& lattice,
                     const MeasureOptions& options = {});

// Exact integer tests of size >= n^{1 + 1/d}, i.e. size^d >= n^{d + 1}.
bool meets_exponent(std::size_t size, std::size_t n, unsigned d);
bool meets_thm1(const GrowthRecord& r);  // d = 21 on Delta
bool meets_thm2(const GrowthRecord& r);  // d = 42 on max(|A+A|, |A^2+A^2|)
bool meets_cor(const GrowthRecord& r);   // d = 84 on |A + A^2|

struct GenerateOptions {
  std::optional<Elem> dilation;                 // subfield_coset: a
  std::optional<std::uint32_t> subfield_degree;  // subfield_coset: G = F_{p^d}
};

// Deterministic in (model, field, n, seed, options). Throws Error{kBadModel}
// (interval outside prime fields, bad subfield degree or zero dilation) and
// Error{kNTooLarge}.
FSet generate(GenModel model, const FieldPtr& field, std::size_t n, std::uint64_t seed,
              const GenerateOptions& options = {});

// Seed of trial `trial` at size n inside a sweep seeded with `seed`.
std::uint64_t derive_seed(std::uint64_t seed, std::size_t n, std::size_t trial);

struct SweepConfig {
  GenModel model = GenModel::kUniform;
  FieldPtr field;
  std::size_t n_min = 1;
  std::size_t n_max = 1;
  std::size_t trials = 1;
  std::uint64_t seed = 0;
  GenerateOptions generate;
  MeasureOptions measure;
  unsigned threads = 1;
};

struct PassCount {
  std::size_t passed = 0;
  std::size_t total = 0;
  double fraction() const { return total ? static_cast<double>(passed) / total : 0.0; }
};

struct SweepSummary {
  std::size_t records = 0;
  std::size_t hyp1_pass = 0;
  std::size_t hyp2_pass = 0;
  // Over every record.
  PassCount delta_all, max_all, shift_all;
  // Over records passing the matching hypothesis (hyp1 for Delta, hyp2 for
  // the other two).
  PassCount delta_hyp, max_hyp, shift_hyp;
  // Pigeonhole chain and Cauchy-Schwarz energy checks that failed; a nonzero
  // value indicates a bug.
  std::size_t invariant_failures = 0;
};

struct SweepResult {
  std::vector<GrowthRecord> records;  // ordered by (n, trial)
  SweepSummary summary;
};

// Throws Error{kBadTrials} for trials == 0 or an empty n range.
SweepResult sweep(const SweepConfig& config);
SweepSummary summarize(const std::vector<GrowthRecord>& records);

std::string csv_header();
std::string csv_row(const GrowthRecord& r);
std::string records_to_csv(const std::vector<GrowthRecord>& records);

enum class Objective { kDelta, kMaxPair, kShifted };

// Throws Error{kBadModel}.
Objective parse_objective(std::string_view name);
std::string objective_name(Objective objective);
std::size_t objective_value(const FSet& a, Objective objective);

struct SearchConfig {
  FieldPtr field;
  std::size_t n = 2;
  std::size_t iterations = 1;
  std::uint64_t seed = 0;
  Objective objective = Objective::kDelta;
  // Reject swaps that break the hypothesis matching the objective (hyp1 for
  // delta, hyp2 otherwise).
  bool enforce_hypothesis = true;
  // Defaults to the interval {0..n-1} in prime fields and a uniform set
  // otherwise.
  std::optional<FSet> start;
};

struct SearchState {
  FSet current;
  std::size_t objective = 0;
  std::size_t iterations = 0;
  std::uint64_t seed = 0;
  std::size_t accepted = 0;
  std::size_t rejected_hypothesis = 0;
  std::size_t start_objective = 0;
  std::vector<std::size_t> history;  // best objective after each iteration
  GrowthRecord best;
};

// Hill climbing by random single-element swaps, accepting moves that do not
// increase the objective. The first iteration evaluates the start set. When
// the hypothesis is enforced and the start set fails it, up to 256 uniform
// sets are drawn instead; Error{kNoAdmissibleSet} if none passes.
// Throws Error{kNTooLarge} unless 2 <= n <= q and Error{kBadTrials} for
// zero iterations.
SearchState extremal_search(const SearchConfig& config);

}  // namespace ffgrowth

#endif  // FFGROWTH_HARNESS_HPP_
