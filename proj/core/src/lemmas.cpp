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

#include <algorithm>
#include <bit>
#include <cmath>
#include <deque>

#include "ffgrowth/set_ops.hpp"

namespace ffgrowth {
namespace {

// ceil((1 - eps) n) for rational eps.
std::size_t required_count(std::size_t n, const Rational& eps) {
  const Rational need = (Rational(1) - eps) * n;
  BigInt num = boost::multiprecision::numerator(need);
  BigInt den = boost::multiprecision::denominator(need);
  BigInt c = num / den;
  if (c * den < num) ++c;
  if (c < 0) c = 0;
  return c.convert_to<std::size_t>();
}

void check_inputs(const FSet& x, const std::vector<FSet>& bs) {
  if (x.empty()) throw Error(ErrorCode::kEmptyX, "X must be nonempty");
  if (bs.empty()) throw Error(ErrorCode::kEmptySet, "at least one set B_i is required");
  for (const auto& b : bs) {
    if (!x.field().same_as(b.field())) throw Error(ErrorCode::kFieldMismatch, "operands live in different fields");
  }
}

Rational c_measured(std::size_t sumset_size, const FSet& x, const std::vector<FSet>& bs) {
  BigInt den = 1;
  for (const auto& b : bs) den *= sumset(x, b).size();
  const BigInt num = BigInt(sumset_size) * ipow(BigInt(x.size()), static_cast<unsigned>(bs.size() - 1));
  return Rational(num, den);
}

SubsetWitness greedy_witness(const FSet& x, const FSet& total, std::size_t target) {
  const Field& f = x.field();
  const auto s = total.elements();
  std::vector<std::uint32_t> cover(f.order(), 0);
  FSet current = x;
  current.for_each([&](Elem e) {
    for (Elem t : s) ++cover[f.add(e, t)];
  });
  while (current.size() > target) {
    Elem best = 0;
    std::size_t best_gain = 0;
    bool found = false;
    current.for_each([&](Elem e) {
      std::size_t gain = 0;
      for (Elem t : s) gain += cover[f.add(e, t)] == 1;
      if (!found || gain > best_gain) {
        best = e;
        best_gain = gain;
        found = true;
      }
    });
    current.erase(best);
    for (Elem t : s) --cover[f.add(best, t)];
  }
  SubsetWitness w{current, target, 0, Rational(0), SearchMode::kGreedy};
  w.sumset_size = sumset(current, total).size();
  return w;
}

SubsetWitness exact_witness(const FSet& x, const FSet& total, std::size_t target) {
  const auto xs = x.elements();
  const std::size_t n = xs.size();
  std::optional<FSet> best;
  std::size_t best_size = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) != target) continue;
    FSet candidate(x.field_ptr());
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1u) candidate.insert(xs[i]);
    }
    const std::size_t size = sumset(candidate, total).size();
    if (!best || size < best_size) {
      best = candidate;
      best_size = size;
    }
  }
  return SubsetWitness{*best, target, best_size, Rational(0), SearchMode::kExact};
}

// Bitmask over the elements of X for every translate t + Y that meets X.
std::vector<std::pair<Elem, std::uint32_t>> translate_masks(const std::vector<Elem>& xs, const FSet& y) {
  const Field& f = y.field();
  std::vector<std::uint32_t> masks(f.order(), 0);
  std::vector<bool> used(f.order(), false);
  const auto ys = y.elements();
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (Elem e : ys) {
      const Elem t = f.sub(xs[i], e);
      masks[t] |= 1u << i;
      used[t] = true;
    }
  }
  std::vector<std::pair<Elem, std::uint32_t>> out;
  for (Elem t = 0; t < f.order(); ++t) {
    if (used[t]) out.emplace_back(t, masks[t]);
  }
  return out;
}

}  // namespace

PlunneckeReport plunnecke_check(const FSet& x, const std::vector<FSet>& bs) {
  check_inputs(x, bs);
  PlunneckeReport r;
  r.lhs = iterated_sumset(x.field_ptr(), bs).size();
  r.rhs_num = 1;
  for (const auto& b : bs) r.rhs_num *= sumset(x, b).size();
  r.rhs_den = ipow(BigInt(x.size()), static_cast<unsigned>(bs.size() - 1));
  r.holds = r.lhs * r.rhs_den <= r.rhs_num;
  if (bs.size() == 2) {
    r.diff_lhs = BigInt(difference_set(bs[0], bs[1]).size());
    r.diff_rhs_num = BigInt(sumset(x, bs[0]).size()) * sumset(x, bs[1]).size();
    r.diff_rhs_den = BigInt(x.size());
    r.diff_holds = *r.diff_lhs * *r.diff_rhs_den <= *r.diff_rhs_num;
  }
  return r;
}

SubsetWitness katz_shen_search(const FSet& x, const std::vector<FSet>& bs, const Rational& eps,
                               SearchMode mode) {
  check_inputs(x, bs);
  if (eps <= 0 || eps >= 1) throw Error(ErrorCode::kBadEpsilon, "epsilon must lie strictly between 0 and 1");
  const std::size_t target = std::max<std::size_t>(required_count(x.size(), eps), 1);
  const FSet total = iterated_sumset(x.field_ptr(), bs);
  if (mode == SearchMode::kExact && x.size() > kExactSearchLimit) {
    throw Error(ErrorCode::kNTooLarge, "exact search needs |X| <= " + std::to_string(kExactSearchLimit));
  }
  SubsetWitness w = mode == SearchMode::kExact ? exact_witness(x, total, target)
                                               : greedy_witness(x, total, target);
  w.mode = mode;
  w.c_measured = c_measured(w.sumset_size, x, bs);
  return w;
}

CoverResult greedy_cover(const FSet& x, const FSet& y, const Rational& eps) {
  if (x.empty() || y.empty()) throw Error(ErrorCode::kEmptySet, "cover needs nonempty X and Y");
  if (!x.field().same_as(y.field())) throw Error(ErrorCode::kFieldMismatch, "operands live in different fields");
  if (eps < 0 || eps >= 1) throw Error(ErrorCode::kBadEpsilon, "epsilon must lie in [0, 1)");
  const Field& f = x.field();
  const std::size_t need = required_count(x.size(), eps);
  const auto ys = y.elements();

  CoverResult r;
  FSet uncovered = x;
  std::vector<std::uint32_t> hits(f.order(), 0);
  std::vector<Elem> touched;
  while (r.covered < need) {
    uncovered.for_each([&](Elem u) {
      for (Elem e : ys) {
        const Elem t = f.sub(u, e);
        if (hits[t]++ == 0) touched.push_back(t);
      }
    });
    Elem best = 0;
    std::uint32_t best_hits = 0;
    for (Elem t : touched) {
      if (hits[t] > best_hits || (hits[t] == best_hits && t < best)) {
        best = t;
        best_hits = hits[t];
      }
      hits[t] = 0;
    }
    touched.clear();
    for (Elem e : ys) {
      const Elem v = f.add(best, e);
      if (uncovered.contains(v)) {
        uncovered.erase(v);
        ++r.covered;
      }
    }
    r.translates.push_back(best);
  }
  r.count = r.translates.size();
  r.covered_fraction = Rational(r.covered, x.size());
  r.bound = Rational(std::min(sumset(x, y).size(), difference_set(x, y).size()), y.size());
  r.count_over_bound = Rational(r.count) / r.bound;
  return r;
}

std::size_t exact_cover_count(const FSet& x, const FSet& y, const Rational& eps) {
  if (x.empty() || y.empty()) throw Error(ErrorCode::kEmptySet, "cover needs nonempty X and Y");
  if (eps < 0 || eps >= 1) throw Error(ErrorCode::kBadEpsilon, "epsilon must lie in [0, 1)");
  if (x.size() > kExactSearchLimit) {
    throw Error(ErrorCode::kNTooLarge, "exact cover needs |X| <= " + std::to_string(kExactSearchLimit));
  }
  const auto xs = x.elements();
  const std::size_t need = required_count(xs.size(), eps);
  if (need == 0) return 0;
  const auto masks = translate_masks(xs, y);
  std::vector<int> dist(std::size_t{1} << xs.size(), -1);
  std::deque<std::uint32_t> queue{0};
  dist[0] = 0;
  while (!queue.empty()) {
    const std::uint32_t s = queue.front();
    queue.pop_front();
    if (static_cast<std::size_t>(std::popcount(s)) >= need) return static_cast<std::size_t>(dist[s]);
    for (const auto& [t, m] : masks) {
      const std::uint32_t next = s | m;
      if (dist[next] < 0) {
        dist[next] = dist[s] + 1;
        queue.push_back(next);
      }
    }
  }
  return 0;  // unreachable: the full mask is always reachable
}

Rational harmonic_number(std::size_t n) {
  Rational h = 0;
  for (std::size_t i = 1; i <= n; ++i) h += Rational(1, i);
  return h;
}

std::uint64_t ceil_power(std::uint64_t n, double eps) {
  const double v = std::pow(static_cast<double>(n), eps);
  const double nearest = std::round(v);
  if (std::abs(v - nearest) < 1e-9) return static_cast<std::uint64_t>(nearest);
  return static_cast<std::uint64_t>(std::ceil(v));
}

Lemma32Profile lemma32_cover_profile(const FSet& a, const Rational& eps) {
  if (a.size() < 2) throw Error(ErrorCode::kEmptySet, "cover profile needs |A| >= 2");
  if (eps < 0 || eps > 1) throw Error(ErrorCode::kBadEpsilon, "epsilon must lie in [0, 1]");
  const Field& f = a.field();
  const Rational ninety_percent(1, 10);
  const double e = to_double(eps);

  Lemma32Profile out;
  out.epsilon = eps;
  const FSet b = sumset(a, a);
  const FSet neg_squares = negate_set(square_set(a));
  out.n = a.size();
  out.sumset_size = b.size();
  out.threshold = ceil_power(a.size(), e);
  out.min_covered_fraction = 1;

  auto profile = [&](const FSet& base, Elem shift) {
    const FSet target = square_set(translate(f.neg(shift), base));
    const CoverResult c = greedy_cover(target, neg_squares, ninety_percent);
    CoverProfileEntry entry{shift, target.size(), c.count, c.covered_fraction,
                            ceil_power(target.size(), e)};
    out.min_covered_fraction = std::min(out.min_covered_fraction, c.covered_fraction);
    return entry;
  };

  b.for_each([&](Elem shift) { out.b_profile.push_back(profile(a, shift)); });
  a.for_each([&](Elem shift) { out.a_profile.push_back(profile(b, shift)); });

  for (const auto& entry : out.b_profile) {
    if (entry.count <= out.threshold) out.y_star.push_back(entry.element);
    if (entry.count <= entry.own_threshold) out.y_star_own.push_back(entry.element);
  }
  for (const auto& entry : out.a_profile) {
    if (entry.count <= out.threshold) out.x_star.push_back(entry.element);
    if (entry.count <= entry.own_threshold) out.x_star_own.push_back(entry.element);
  }
  out.x_star_ratio = static_cast<double>(out.x_star.size()) / std::pow(static_cast<double>(out.n), 1.0 - e);
  out.y_star_ratio =
      static_cast<double>(out.y_star.size()) / std::pow(static_cast<double>(out.sumset_size), 1.0 - e);
  return out;
}

}  // namespace ffgrowth
