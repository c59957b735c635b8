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

// Dense polynomials over a prime field F_p, used to build extension fields.
// Coefficients are stored low degree first and kept normalized: no trailing
// zero coefficients, and the zero polynomial is the empty vector.

#ifndef FFGROWTH_POLY_HPP_
#define FFGROWTH_POLY_HPP_

#include <cstdint>
#include <span>
#include <vector>

namespace ffgrowth::poly {

using Poly = std::vector<std::uint32_t>;

bool is_prime(std::uint64_t n);

// Distinct prime divisors of n, ascending.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

void normalize(Poly& f);
int degree(const Poly& f);  // -1 for the zero polynomial

Poly add(const Poly& f, const Poly& g, std::uint32_t p);
Poly sub(const Poly& f, const Poly& g, std::uint32_t p);
Poly mul(const Poly& f, const Poly& g, std::uint32_t p);
Poly mod(const Poly& f, const Poly& m, std::uint32_t p);
Poly mulmod(const Poly& f, const Poly& g, const Poly& m, std::uint32_t p);
Poly powmod(const Poly& f, std::uint64_t e, const Poly& m, std::uint32_t p);
Poly gcd(Poly f, Poly g, std::uint32_t p);

// Rabin's test: a monic m of degree k is irreducible over F_p iff
// gcd(x^{p^i} - x mod m, m) = 1 for every i <= k/2. Degree <= 3 uses the
// cheaper no-root test.
bool is_irreducible(const Poly& m, std::uint32_t p);

// Smallest monic irreducible of degree k, ordering candidates
// lexicographically by (c_0, c_1, ..., c_{k-1}).
Poly smallest_irreducible(std::uint32_t p, std::uint32_t k);

}  // namespace ffgrowth::poly

#endif  // FFGROWTH_POLY_HPP_
