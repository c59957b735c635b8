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

namespace ffgrowth {

std::string case_name(CaseKind kind) {
  return "Case" + std::to_string(static_cast<int>(kind));
}

CaseLabel classify_closure(const FSet& numerators, const FSet& denominators,
                           const FSet& multipliers) {
  const Field& f = numerators.field();
  const RatioSet ratios = ratio_set_with_representations(numerators, denominators);
  const FSet& r_set = ratios.values;
  const auto rs = r_set.elements();

  auto witness = [&](Elem r, Elem quotient, std::optional<Elem> b) {
    const auto& rep = ratios.rep(quotient);
    return CaseWitness{r, rep[0], rep[1], rep[2], rep[3], b};
  };

  for (Elem x : rs) {
    const Elem r = f.add(1, x);
    if (!r_set.contains(r)) return {CaseKind::kCase1, witness(r, x, std::nullopt)};
  }
  const auto ms = multipliers.elements();
  for (Elem b : ms) {
    for (Elem x : rs) {
      const Elem r = f.mul(b, x);
      if (!r_set.contains(r)) return {CaseKind::kCase2, witness(r, x, b)};
    }
  }
  for (Elem b : ms) {
    if (b == 0) continue;
    const Elem b_inv = f.inv(b);
    for (Elem x : rs) {
      const Elem r = f.mul(b_inv, x);
      if (!r_set.contains(r)) return {CaseKind::kCase3, witness(r, x, b)};
    }
  }
  return {CaseKind::kCase4, std::nullopt};
}

CaseLabel classify_case(const FSet& a) { return classify_closure(a, a, a); }

CaseLabel classify_case_xy(const FSet& x, const FSet& y) {
  return classify_closure(y, x, y);
}

bool verify_case_label(const FSet& numerators, const FSet& denominators,
                       const FSet& multipliers, const CaseLabel& label) {
  const Field& f = numerators.field();
  const FSet r_set = ratio_set(numerators, denominators);
  if (label.kind == CaseKind::kCase4) {
    if (label.witness) return false;
    return classify_closure(numerators, denominators, multipliers).kind == CaseKind::kCase4;
  }
  if (!label.witness) return false;
  const CaseWitness& w = *label.witness;
  if (!numerators.contains(w.num1) || !numerators.contains(w.num2)) return false;
  if (!denominators.contains(w.den1) || !denominators.contains(w.den2)) return false;
  if (w.den1 == w.den2) return false;
  const Elem quotient = f.div(f.sub(w.num1, w.num2), f.sub(w.den1, w.den2));
  Elem expected = 0;
  switch (label.kind) {
    case CaseKind::kCase1:
      if (w.b) return false;
      expected = f.add(1, quotient);
      break;
    case CaseKind::kCase2:
      if (!w.b || !multipliers.contains(*w.b)) return false;
      expected = f.mul(*w.b, quotient);
      break;
    case CaseKind::kCase3:
      if (!w.b || *w.b == 0 || !multipliers.contains(*w.b)) return false;
      expected = f.div(quotient, *w.b);
      break;
    case CaseKind::kCase4:
      return false;
  }
  return expected == w.r && !r_set.contains(w.r);
}

}  // namespace ffgrowth
