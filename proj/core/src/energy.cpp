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

#include "ffgrowth/energy.hpp"

#include <cmath>

#include "ffgrowth/set_ops.hpp"

namespace ffgrowth {
namespace {

void require_same_field(const FSet& a, const FSet& b) {
  if (!a.field().same_as(b.field())) {
    throw Error(ErrorCode::kFieldMismatch, "operands live in different fields");
  }
}

RepHistogram empty_histogram(const Field& f) {
  return RepHistogram{std::vector<std::uint64_t>(f.order(), 0), 0};
}

}  // namespace

std::size_t RepHistogram::support_size() const {
  std::size_t n = 0;
  for (auto c : counts) n += c != 0;
  return n;
}

std::vector<std::pair<Elem, std::uint64_t>> RepHistogram::nonzero() const {
  std::vector<std::pair<Elem, std::uint64_t>> out;
  for (std::size_t t = 0; t < counts.size(); ++t) {
    if (counts[t]) out.emplace_back(static_cast<Elem>(t), counts[t]);
  }
  return out;
}

BigInt RepHistogram::sum_of_squares() const {
  BigInt s = 0;
  for (auto c : counts) {
    if (c) s += BigInt(c) * c;
  }
  return s;
}

EnergyReport additive_energy(const FSet& x, const FSet& y) {
  require_same_field(x, y);
  const Field& f = x.field();
  EnergyReport report;
  report.kind = EnergyKind::kAdditive;
  report.histogram = empty_histogram(f);
  report.left_size = x.size();
  report.right_size = y.size();
  const auto ys = y.elements();
  x.for_each([&](Elem a) {
    for (Elem b : ys) ++report.histogram.counts[f.add(a, b)];
  });
  report.histogram.total = std::uint64_t{x.size()} * y.size();
  report.value = report.histogram.sum_of_squares();
  return report;
}

std::uint64_t dilated_energy(const FSet& a, Elem r) {
  const Field& f = a.field();
  const auto elems = a.elements();
  std::vector<std::uint64_t> counts(f.order(), 0);
  std::vector<Elem> scaled;
  scaled.reserve(elems.size());
  for (Elem b : elems) scaled.push_back(f.mul(r, b));
  for (Elem x : elems) {
    for (Elem s : scaled) ++counts[f.add(x, s)];
  }
  std::uint64_t value = 0;
  for (auto c : counts) value += c * c;
  return value;
}

EnergyReport mixed_energy(const FSet& a, const FSet& b) {
  require_same_field(a, b);
  const Field& f = a.field();
  EnergyReport report;
  report.kind = EnergyKind::kMixed;
  report.histogram = empty_histogram(f);
  report.left_size = a.size();
  report.right_size = b.size();

  // squares[x] = #{a1 : a1^2 = x}; shifted[u] = #{(a2, b1) : (a2 - b1)^2 = u}.
  std::vector<std::uint64_t> squares(f.order(), 0), shifted(f.order(), 0);
  const auto as = a.elements();
  const auto bs = b.elements();
  for (Elem x : as) ++squares[f.square(x)];
  for (Elem x : as) {
    for (Elem y : bs) ++shifted[f.square(f.sub(x, y))];
  }
  std::vector<std::pair<Elem, std::uint64_t>> sq_support, sh_support;
  for (Elem t = 0; t < f.order(); ++t) {
    if (squares[t]) sq_support.emplace_back(t, squares[t]);
    if (shifted[t]) sh_support.emplace_back(t, shifted[t]);
  }
  auto& v = report.histogram.counts;
  for (const auto& [x, cx] : sq_support) {
    for (const auto& [u, cu] : sh_support) v[f.add(x, u)] += cx * cu;
  }
  report.histogram.total = std::uint64_t{as.size()} * as.size() * bs.size();
  report.value = report.histogram.sum_of_squares();
  return report;
}

RatioEnergySum energy_sum_over_ratios(const FSet& a) {
  const FSet ratios = ratio_set(a, a);
  const Field& f = a.field();
  const auto elems = a.elements();
  const std::uint64_t n = elems.size();

  RatioEnergySum out;
  out.ratio_count = ratios.size();
  std::vector<std::uint64_t> counts(f.order(), 0);
  std::vector<Elem> touched;
  std::vector<Elem> scaled(elems.size());
  bool first = true;
  ratios.for_each([&](Elem r) {
    for (std::size_t i = 0; i < elems.size(); ++i) scaled[i] = f.mul(r, elems[i]);
    for (Elem x : elems) {
      for (Elem s : scaled) {
        const Elem t = f.add(x, s);
        if (counts[t]++ == 0) touched.push_back(t);
      }
    }
    std::uint64_t e = 0;
    for (Elem t : touched) {
      e += counts[t] * counts[t];
      counts[t] = 0;
    }
    touched.clear();
    out.per_ratio.emplace_back(r, e);
    out.sum += e;
    if (first || e < out.witness_energy) {
      out.witness_r = r;
      out.witness_energy = e;
      first = false;
    }
  });
  out.bound = BigInt(out.ratio_count) * n * n + BigInt(n) * n * n * n;
  out.holds = out.sum <= out.bound;
  return out;
}

CsGrowthReport cs_growth_check(const FSet& a) {
  CsGrowthReport r;
  const FSet b = sumset(a, a);
  const FSet sq = square_set(a);
  r.n = a.size();
  r.sumset_size = b.size();
  r.square_sum_size = sumset(sq, sq).size();
  r.energy = mixed_energy(a, b).value;
  r.lhs = ipow(BigInt(r.n), 6);
  r.rhs = BigInt(r.square_sum_size) * r.energy;
  r.holds = r.lhs <= r.rhs;
  if (r.n >= 2) {
    const BigInt b2 = BigInt(r.sumset_size) * r.sumset_size;
    if (r.energy < ipow(BigInt(r.n), 3) * b2) {
      const double ratio = r.energy.convert_to<double>() / b2.convert_to<double>();
      r.epsilon = 3.0 - std::log(ratio) / std::log(static_cast<double>(r.n));
    }
  }
  return r;
}

}  // namespace ffgrowth
