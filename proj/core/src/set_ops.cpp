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

#include "ffgrowth/set_ops.hpp"

#include <utility>

namespace ffgrowth {
namespace {

void require_same_field(const FSet& a, const FSet& b) {
  if (!a.field().same_as(b.field())) {
    throw Error(ErrorCode::kFieldMismatch, "operands live in different fields");
  }
}

template <class Op>
FSet combine(const FSet& a, const FSet& b, Op op) {
  require_same_field(a, b);
  FSet out(a.field_ptr());
  if (a.empty() || b.empty()) return out;
  const auto right = b.elements();
  a.for_each([&](Elem x) {
    for (Elem y : right) out.insert(op(x, y));
  });
  return out;
}

template <class Op>
FSet image(const FSet& a, Op op) {
  FSet out(a.field_ptr());
  a.for_each([&](Elem x) { out.insert(op(x)); });
  return out;
}

// Distinct values of x - y over ordered pairs, each with its first pair.
std::vector<std::pair<Elem, std::array<Elem, 2>>> differences(const FSet& s, bool skip_zero) {
  const Field& f = s.field();
  std::vector<std::pair<Elem, std::array<Elem, 2>>> out;
  std::vector<bool> seen(f.order(), false);
  const auto elems = s.elements();
  for (Elem x : elems) {
    for (Elem y : elems) {
      const Elem d = f.sub(x, y);
      if ((skip_zero && d == 0) || seen[d]) continue;
      seen[d] = true;
      out.push_back({d, {x, y}});
    }
  }
  return out;
}

}  // namespace

FSet sumset(const FSet& a, const FSet& b) {
  const Field& f = a.field();
  return combine(a, b, [&f](Elem x, Elem y) { return f.add(x, y); });
}

FSet difference_set(const FSet& a, const FSet& b) {
  const Field& f = a.field();
  return combine(a, b, [&f](Elem x, Elem y) { return f.sub(x, y); });
}

FSet product_set(const FSet& a, const FSet& b) {
  const Field& f = a.field();
  return combine(a, b, [&f](Elem x, Elem y) { return f.mul(x, y); });
}

FSet dilate(Elem c, const FSet& a) {
  const Field& f = a.field();
  return image(a, [&](Elem x) { return f.mul(c, x); });
}

FSet translate(Elem t, const FSet& a) {
  const Field& f = a.field();
  return image(a, [&](Elem x) { return f.add(t, x); });
}

FSet negate_set(const FSet& a) {
  const Field& f = a.field();
  return image(a, [&](Elem x) { return f.neg(x); });
}

FSet inverse_set(const FSet& a) {
  const Field& f = a.field();
  FSet out(a.field_ptr());
  a.for_each([&](Elem x) {
    if (x != 0) out.insert(f.inv(x));
  });
  return out;
}

FSet square_set(const FSet& a) {
  const Field& f = a.field();
  return image(a, [&](Elem x) { return f.square(x); });
}

FSet iterated_sumset(const FieldPtr& field, const std::vector<FSet>& sets) {
  FSet acc = FSet::of(field, {0});
  for (const auto& s : sets) acc = sumset(acc, s);
  return acc;
}

RatioSet ratio_set_with_representations(const FSet& numerators, const FSet& denominators) {
  require_same_field(numerators, denominators);
  if (denominators.size() < 2) {
    throw Error(ErrorCode::kDegenerateDenominator, "ratio set needs at least two denominator elements");
  }
  const Field& f = numerators.field();
  RatioSet out{FSet(numerators.field_ptr()), std::vector<std::array<Elem, 4>>(f.order())};
  const auto nums = differences(numerators, false);
  const auto dens = differences(denominators, true);
  for (const auto& [nd, np] : nums) {
    for (const auto& [dd, dp] : dens) {
      const Elem r = f.mul(nd, f.inv(dd));
      if (!out.values.contains(r)) {
        out.values.insert(r);
        out.representation[r] = {np[0], np[1], dp[0], dp[1]};
      }
    }
  }
  return out;
}

FSet ratio_set(const FSet& numerators, const FSet& denominators) {
  require_same_field(numerators, denominators);
  if (denominators.size() < 2) {
    throw Error(ErrorCode::kDegenerateDenominator, "ratio set needs at least two denominator elements");
  }
  const FSet num_diffs = difference_set(numerators, numerators);
  FSet den_diffs = difference_set(denominators, denominators);
  den_diffs.erase(0);
  const FSet den_invs = inverse_set(den_diffs);
  return product_set(num_diffs, den_invs);
}

FSet distance_composite(const FSet& a) {
  const FSet sq = square_set(difference_set(a, a));
  return sumset(sq, sq);
}

FSet normalize_affine(const FSet& a) {
  if (a.size() < 2) throw Error(ErrorCode::kDegenerateDenominator, "normalization needs |A| >= 2");
  const auto elems = a.elements();
  const Field& f = a.field();
  const Elem scale = f.inv(f.sub(elems[1], elems[0]));
  return dilate(scale, translate(f.neg(elems[0]), a));
}

}  // namespace ffgrowth
