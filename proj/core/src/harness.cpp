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
#include <cstdio>
#include <numeric>
#include <random>
#include <thread>

#include "ffgrowth/hypothesis.hpp"
#include "ffgrowth/set_ops.hpp"

namespace ffgrowth {
namespace {

// Unbiased draw from [0, bound). std distributions are implementation
// defined, so they would break cross-platform reproducibility.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t v;
  do {
    v = rng();
  } while (v >= limit);
  return v % bound;
}

// First n entries of a seeded Fisher-Yates shuffle of pool.
std::vector<Elem> sample(std::vector<Elem> pool, std::size_t n, std::mt19937_64& rng) {
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = i + uniform_below(rng, pool.size() - i);
    std::swap(pool[i], pool[j]);
  }
  pool.resize(n);
  return pool;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

std::optional<double> log_base(std::size_t value, std::size_t n) {
  if (n < 2) return std::nullopt;
  return std::log(static_cast<double>(value)) / std::log(static_cast<double>(n));
}

std::string fmt_exponent(const std::optional<double>& v) {
  if (!v) return "";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", *v);
  return buf;
}

bool hypothesis_for(Objective objective, const FSet& a, const std::vector<Subfield>& lattice) {
  return objective == Objective::kDelta ? check_hypothesis_thm1(a, lattice).pass
                                        : check_hypothesis_thm2(a, lattice).pass;
}

}  // namespace

GenModel parse_model(std::string_view name) {
  if (name == "uniform") return GenModel::kUniform;
  if (name == "interval") return GenModel::kInterval;
  if (name == "subfield_coset") return GenModel::kSubfieldCoset;
  if (name == "geometric") return GenModel::kGeometric;
  throw Error(ErrorCode::kBadModel, "unknown model '" + std::string(name) +
                                        "' (expected uniform, interval, subfield_coset or geometric)");
}

std::string model_name(GenModel model) {
  switch (model) {
    case GenModel::kUniform: return "uniform";
    case GenModel::kInterval: return "interval";
    case GenModel::kSubfieldCoset: return "subfield_coset";
    case GenModel::kGeometric: return "geometric";
  }
  return "unknown";
}

GrowthRecord measure(const FSet& a, const MeasureOptions& options) {
  return measure(a, subfield_lattice(a.field_ptr()), options);
}

GrowthRecord measure(const FSet& a, const std::vector<Subfield>& lattice, const MeasureOptions& options) {
  GrowthRecord r;
  r.field = a.field().spec();
  r.n = a.size();
  const FSet sq = square_set(a);
  r.size_sum = sumset(a, a).size();
  r.size_sq_sum = sumset(sq, sq).size();
  r.size_shift = sumset(a, sq).size();
  r.delta = distance_composite(a).size();
  r.hyp1 = check_hypothesis_thm1(a, lattice).pass;
  r.hyp2 = check_hypothesis_thm2(a, lattice).pass;
  if (r.n >= 2) r.case_label = classify_case(a);
  r.exp_sum = log_base(r.size_sum, r.n);
  r.exp_sq_sum = log_base(r.size_sq_sum, r.n);
  r.exp_shift = log_base(r.size_shift, r.n);
  r.exp_delta = log_base(r.delta, r.n);
  r.energy = cs_growth_check(a);

  if (options.ratio_energy && r.n >= 2) {
    const RatioEnergySum sum = energy_sum_over_ratios(a);
    r.ratio_sum_holds = sum.holds;
    r.chain_r = sum.witness_r;
    const FSet ra = dilate(sum.witness_r, a);
    const BigInt energy = additive_energy(a, ra).value;
    const BigInt product = BigInt(a.size()) * ra.size();
    r.chain_holds = BigInt(sumset(a, ra).size()) * energy >= product * product;
  }
  return r;
}

bool meets_exponent(std::size_t size, std::size_t n, unsigned d) {
  return ipow(BigInt(size), d) >= ipow(BigInt(n), d + 1);
}

bool meets_thm1(const GrowthRecord& r) { return meets_exponent(r.delta, r.n, 21); }
bool meets_thm2(const GrowthRecord& r) { return meets_exponent(r.max_pair(), r.n, 42); }
bool meets_cor(const GrowthRecord& r) { return meets_exponent(r.size_shift, r.n, 84); }

FSet generate(GenModel model, const FieldPtr& field, std::size_t n, std::uint64_t seed,
              const GenerateOptions& options) {
  const std::uint32_t q = field->order();
  if (n > q) {
    throw Error(ErrorCode::kNTooLarge, "n = " + std::to_string(n) + " exceeds q = " + std::to_string(q));
  }
  std::mt19937_64 rng(seed);
  switch (model) {
    case GenModel::kUniform: {
      std::vector<Elem> pool(q);
      std::iota(pool.begin(), pool.end(), Elem{0});
      return FSet::of(field, sample(std::move(pool), n, rng));
    }
    case GenModel::kInterval: {
      if (!field->is_prime_field()) {
        throw Error(ErrorCode::kBadModel, "the interval model needs a prime field");
      }
      FSet s(field);
      for (Elem x = 0; x < n; ++x) s.insert(x);
      return s;
    }
    case GenModel::kSubfieldCoset: {
      const auto lattice = subfield_lattice(field);
      const Subfield* g = nullptr;
      if (options.subfield_degree) {
        for (const auto& sf : lattice) {
          if (sf.degree == *options.subfield_degree) g = &sf;
        }
        if (!g) throw Error(ErrorCode::kBadModel, "subfield degree must divide k");
      } else {
        for (const auto& sf : lattice) {
          if (sf.order() >= n) {
            g = &sf;
            break;
          }
        }
      }
      if (!g || g->order() < n) {
        throw Error(ErrorCode::kNTooLarge, "n exceeds the chosen subfield's size");
      }
      Elem a = 0;
      if (options.dilation) {
        a = *options.dilation;
        if (a == 0 || a >= q) throw Error(ErrorCode::kBadModel, "dilation must be a nonzero field element");
      } else {
        a = static_cast<Elem>(1 + uniform_below(rng, q - 1));
      }
      return FSet::of(field, sample(dilate(a, g->elements).elements(), n, rng));
    }
    case GenModel::kGeometric: {
      if (n > q - 1) throw Error(ErrorCode::kNTooLarge, "geometric sets have at most q - 1 elements");
      FSet s(field);
      for (std::size_t i = 0; i < n; ++i) s.insert(field->exp(i));
      return s;
    }
  }
  throw Error(ErrorCode::kBadModel, "unknown model");
}

std::uint64_t derive_seed(std::uint64_t seed, std::size_t n, std::size_t trial) {
  return splitmix64(splitmix64(splitmix64(seed) ^ n) ^ trial);
}

SweepResult sweep(const SweepConfig& config) {
  if (config.trials == 0) throw Error(ErrorCode::kBadTrials, "trials must be at least 1");
  if (config.n_min > config.n_max) throw Error(ErrorCode::kBadTrials, "empty n range");
  if (config.n_max > config.field->order()) {
    throw Error(ErrorCode::kNTooLarge, "n range exceeds q = " + std::to_string(config.field->order()));
  }
  const auto lattice = subfield_lattice(config.field);
  const std::size_t sizes = config.n_max - config.n_min + 1;
  const std::size_t jobs = sizes * config.trials;
  std::vector<GrowthRecord> records(jobs);

  auto run = [&](std::size_t job) {
    const std::size_t n = config.n_min + job / config.trials;
    const std::size_t trial = job % config.trials;
    const std::uint64_t s = derive_seed(config.seed, n, trial);
    const FSet a = generate(config.model, config.field, n, s, config.generate);
    GrowthRecord r = measure(a, lattice, config.measure);
    r.model = model_name(config.model);
    r.seed = s;
    records[job] = std::move(r);
  };

  const unsigned threads = std::max(1u, std::min<unsigned>(config.threads, static_cast<unsigned>(jobs)));
  if (threads == 1) {
    for (std::size_t j = 0; j < jobs; ++j) run(j);
  } else {
    std::vector<std::exception_ptr> errors(threads);
    {
      std::vector<std::jthread> pool;
      for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
          try {
            for (std::size_t j = t; j < jobs; j += threads) run(j);
          } catch (...) {
            errors[t] = std::current_exception();
          }
        });
      }
    }
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  SweepResult result;
  result.summary = summarize(records);
  result.records = std::move(records);
  return result;
}

SweepSummary summarize(const std::vector<GrowthRecord>& records) {
  SweepSummary s;
  s.records = records.size();
  auto tally = [](PassCount& c, bool ok) {
    ++c.total;
    c.passed += ok;
  };
  for (const auto& r : records) {
    const bool d = meets_thm1(r), m = meets_thm2(r), c = meets_cor(r);
    s.hyp1_pass += r.hyp1;
    s.hyp2_pass += r.hyp2;
    tally(s.delta_all, d);
    tally(s.max_all, m);
    tally(s.shift_all, c);
    if (r.hyp1) tally(s.delta_hyp, d);
    if (r.hyp2) {
      tally(s.max_hyp, m);
      tally(s.shift_hyp, c);
    }
    if (!r.energy.holds || r.ratio_sum_holds == false || r.chain_holds == false) ++s.invariant_failures;
  }
  return s;
}

std::string csv_header() {
  return "p,k,q,model,seed,n,size_sum,size_sq_sum,size_shift,delta,hyp1,hyp2,case,"
         "exp_sum,exp_sq_sum,exp_shift,exp_delta";
}

std::string csv_row(const GrowthRecord& r) {
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < r.field.k; ++i) q *= r.field.p;
  std::string row;
  auto put = [&row](const std::string& v) {
    if (!row.empty()) row += ',';
    row += v;
  };
  put(std::to_string(r.field.p));
  put(std::to_string(r.field.k));
  put(std::to_string(q));
  put(r.model);
  put(r.seed ? std::to_string(*r.seed) : "");
  put(std::to_string(r.n));
  put(std::to_string(r.size_sum));
  put(std::to_string(r.size_sq_sum));
  put(std::to_string(r.size_shift));
  put(std::to_string(r.delta));
  put(r.hyp1 ? "pass" : "fail");
  put(r.hyp2 ? "pass" : "fail");
  put(r.case_label ? case_name(r.case_label->kind) : "none");
  put(fmt_exponent(r.exp_sum));
  put(fmt_exponent(r.exp_sq_sum));
  put(fmt_exponent(r.exp_shift));
  put(fmt_exponent(r.exp_delta));
  return row;
}

std::string records_to_csv(const std::vector<GrowthRecord>& records) {
  std::string out = csv_header() + "\n";
  for (const auto& r : records) out += csv_row(r) + "\n";
  return out;
}

Objective parse_objective(std::string_view name) {
  if (name == "delta") return Objective::kDelta;
  if (name == "maxpair") return Objective::kMaxPair;
  if (name == "shifted") return Objective::kShifted;
  throw Error(ErrorCode::kBadModel,
              "unknown objective '" + std::string(name) + "' (expected delta, maxpair or shifted)");
}

std::string objective_name(Objective objective) {
  switch (objective) {
    case Objective::kDelta: return "delta";
    case Objective::kMaxPair: return "maxpair";
    case Objective::kShifted: return "shifted";
  }
  return "unknown";
}

std::size_t objective_value(const FSet& a, Objective objective) {
  switch (objective) {
    case Objective::kDelta:
      return distance_composite(a).size();
    case Objective::kMaxPair: {
      const FSet sq = square_set(a);
      return std::max(sumset(a, a).size(), sumset(sq, sq).size());
    }
    case Objective::kShifted:
      return sumset(a, square_set(a)).size();
  }
  return 0;
}

SearchState extremal_search(const SearchConfig& config) {
  const FieldPtr& field = config.field;
  const std::uint32_t q = field->order();
  if (config.n < 2 || config.n > q) {
    throw Error(ErrorCode::kNTooLarge, "search needs 2 <= n <= q");
  }
  if (config.iterations == 0) throw Error(ErrorCode::kBadTrials, "iterations must be at least 1");

  std::mt19937_64 rng(config.seed);
  const auto lattice = subfield_lattice(field);

  FSet current = config.start ? *config.start
                 : field->is_prime_field()
                     ? generate(GenModel::kInterval, field, config.n, config.seed)
                     : generate(GenModel::kUniform, field, config.n, config.seed);
  if (current.size() != config.n) throw Error(ErrorCode::kNTooLarge, "start set must have n elements");

  if (config.enforce_hypothesis && !hypothesis_for(config.objective, current, lattice)) {
    bool found = false;
    for (int attempt = 0; attempt < 256 && !found; ++attempt) {
      current = generate(GenModel::kUniform, field, config.n, rng());
      found = hypothesis_for(config.objective, current, lattice);
    }
    if (!found) {
      throw Error(ErrorCode::kNoAdmissibleSet, "no hypothesis-passing start set of size " +
                                                   std::to_string(config.n) + " was found");
    }
  }

  SearchState state{current, 0, 0, config.seed, 0, 0, 0, {}, {}};
  state.objective = objective_value(current, config.objective);
  state.start_objective = state.objective;
  state.iterations = 1;
  state.history.push_back(state.objective);

  for (std::size_t it = 1; it < config.iterations && config.n < q; ++it) {
    ++state.iterations;
    const auto members = state.current.elements();
    const Elem out = members[uniform_below(rng, members.size())];
    Elem in;
    do {
      in = static_cast<Elem>(uniform_below(rng, q));
    } while (state.current.contains(in));

    FSet candidate = state.current;
    candidate.erase(out);
    candidate.insert(in);
    if (config.enforce_hypothesis && !hypothesis_for(config.objective, candidate, lattice)) {
      ++state.rejected_hypothesis;
    } else {
      const std::size_t value = objective_value(candidate, config.objective);
      if (value <= state.objective) {
        state.current = std::move(candidate);
        state.objective = value;
        ++state.accepted;
      }
    }
    state.history.push_back(state.objective);
  }

  state.best = measure(state.current, lattice);
  state.best.model = "search";
  state.best.seed = config.seed;
  return state;
}

}  // namespace ffgrowth
