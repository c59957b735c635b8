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

#include "ffgrowth/hypothesis.hpp"

#include <algorithm>

#include "ffgrowth/set_ops.hpp"

namespace ffgrowth {

HypothesisReport check_concentration(const FSet& s, const std::vector<Subfield>& lattice,
                                     bool with_translates) {
  HypothesisReport report;
  report.theorem = with_translates ? 2 : 1;
  const Field& f = s.field();
  const std::uint32_t q = f.order();
  const auto members = s.elements();
  const std::uint64_t n = members.size();

  std::vector<std::uint32_t> hits(q, 0);
  std::vector<Elem> touched;

  for (const Subfield& g : lattice) {
    const std::uint64_t order = g.order();
    // |S ∩ anything|^2 <= |S|^2, so large subfields cannot be violated.
    if (n * n <= order) continue;
    const auto g_elems = g.elements.elements();
    std::vector<bool> covered(q, false);
    for (Elem a = 1; a < q; ++a) {
      if (covered[a]) continue;
      for (Elem x : g_elems) {
        if (x != 0) covered[f.mul(a, x)] = true;
      }
      ++report.dilates_checked;

      if (!with_translates) {
        std::uint64_t count = 0;
        for (Elem x : g_elems) count += s.contains(f.mul(a, x));
        if (count * count > order) {
          report.pass = false;
          report.violation = HypothesisViolation{g.degree, order, a, 0, count};
          return report;
        }
        continue;
      }

      // hits[b] = #{(s, x) : s - a x = b} = |S ∩ (aG + b)|.
      for (Elem m : members) {
        for (Elem x : g_elems) {
          const Elem b = f.sub(m, f.mul(a, x));
          if (hits[b]++ == 0) touched.push_back(b);
        }
      }
      std::optional<Elem> worst;
      for (Elem b : touched) {
        const std::uint64_t c = hits[b];
        if (c * c > order && (!worst || b < *worst)) worst = b;
      }
      if (worst) {
        report.pass = false;
        report.violation = HypothesisViolation{g.degree, order, a, *worst, hits[*worst]};
        return report;
      }
      for (Elem b : touched) hits[b] = 0;
      touched.clear();
    }
  }
  return report;
}

HypothesisReport check_hypothesis_thm1(const FSet& a, const std::vector<Subfield>& lattice) {
  return check_concentration(a, lattice, false);
}

HypothesisReport check_hypothesis_thm2(const FSet& a, const std::vector<Subfield>& lattice) {
  return check_concentration(sumset(a, a), lattice, true);
}

HypothesisReport check_hypothesis_thm1(const FSet& a) {
  return check_hypothesis_thm1(a, subfield_lattice(a.field_ptr()));
}

HypothesisReport check_hypothesis_thm2(const FSet& a) {
  return check_hypothesis_thm2(a, subfield_lattice(a.field_ptr()));
}

}  // namespace ffgrowth
