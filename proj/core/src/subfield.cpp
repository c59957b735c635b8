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

#include <numeric>
#include <string>

namespace ffgrowth {

Subfield make_subfield(const FieldPtr& field, std::uint32_t degree) {
  FSet elements(field);
  for (Elem x = 0; x < field->order(); ++x) {
    if (field->frob_iter(x, degree) == x) elements.insert(x);
  }
  return Subfield{field->p(), degree, std::move(elements)};
}

std::vector<Subfield> subfield_lattice(const FieldPtr& field) {
  std::vector<Subfield> out;
  for (std::uint32_t d = 1; d <= field->k(); ++d) {
    if (field->k() % d == 0) out.push_back(make_subfield(field, d));
  }
  return out;
}

std::uint32_t element_degree(const Field& field, Elem x) {
  Elem y = field.frob(x);
  std::uint32_t d = 1;
  while (y != x) {
    y = field.frob(y);
    ++d;
  }
  return d;
}

FSet generated_subfield_by_closure(const FSet& generators) {
  const Field& f = generators.field();
  FSet closed(generators.field_ptr());
  std::vector<Elem> pending;
  auto push = [&](Elem x) {
    if (!closed.contains(x)) {
      closed.insert(x);
      pending.push_back(x);
    }
  };
  push(0);
  push(1);
  generators.for_each(push);
  std::vector<Elem> seen;
  while (!pending.empty()) {
    const Elem x = pending.back();
    pending.pop_back();
    seen.push_back(x);
    if (x != 0) push(f.inv(x));
    // Every pair is combined once, when its later member is popped.
    for (std::size_t i = 0, n = seen.size(); i < n; ++i) {
      push(f.add(x, seen[i]));
      push(f.mul(x, seen[i]));
    }
  }
  return closed;
}

Subfield generated_subfield(const FSet& generators) {
  if (generators.empty()) throw Error(ErrorCode::kEmptySet, "generated_subfield of an empty set");
  const Field& f = generators.field();
  std::uint32_t d = 1;
  generators.for_each([&](Elem x) { d = std::lcm(d, element_degree(f, x)); });
  Subfield result = make_subfield(generators.field_ptr(), d);
  if (f.order() <= kClosureCrossCheckLimit) {
    if (!(generated_subfield_by_closure(generators) == result.elements)) {
      throw Error(ErrorCode::kInvariantViolation,
                  "closure and degree methods disagree on the generated subfield (d = " +
                      std::to_string(d) + ")");
    }
  }
  return result;
}

}  // namespace ffgrowth
