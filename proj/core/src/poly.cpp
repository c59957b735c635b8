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

#include "ffgrowth/poly.hpp"

#include <algorithm>
#include <cassert>

namespace ffgrowth::poly {
namespace {

std::uint32_t mulp(std::uint64_t a, std::uint64_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>((a * b) % p);
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  // p prime: a^(p-2)
  std::uint64_t result = 1, base = a % p;
  std::uint64_t e = p - 2;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

Poly monomial_x() { return Poly{0, 1}; }

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

void normalize(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int degree(const Poly& f) {
  for (std::size_t i = f.size(); i > 0; --i) {
    if (f[i - 1] != 0) return static_cast<int>(i - 1);
  }
  return -1;
}

Poly add(const Poly& f, const Poly& g, std::uint32_t p) {
  Poly r(std::max(f.size(), g.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    std::uint64_t s = (i < f.size() ? f[i] : 0) + std::uint64_t{i < g.size() ? g[i] : 0};
    r[i] = static_cast<std::uint32_t>(s % p);
  }
  normalize(r);
  return r;
}

Poly sub(const Poly& f, const Poly& g, std::uint32_t p) {
  Poly r(std::max(f.size(), g.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    std::uint64_t a = i < f.size() ? f[i] : 0;
    std::uint64_t b = i < g.size() ? g[i] : 0;
    r[i] = static_cast<std::uint32_t>((a + p - b) % p);
  }
  normalize(r);
  return r;
}

Poly mul(const Poly& f, const Poly& g, std::uint32_t p) {
  if (f.empty() || g.empty()) return {};
  Poly r(f.size() + g.size() - 1, 0);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] == 0) continue;
    for (std::size_t j = 0; j < g.size(); ++j) {
      r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t{mulp(f[i], g[j], p)}) % p);
    }
  }
  normalize(r);
  return r;
}

Poly mod(const Poly& f, const Poly& m, std::uint32_t p) {
  const int dm = degree(m);
  assert(dm >= 0);
  Poly r = f;
  normalize(r);
  const std::uint32_t lead_inv = inv_mod(m[dm], p);
  for (int dr = degree(r); dr >= dm; dr = degree(r)) {
    const std::uint32_t factor = mulp(r[dr], lead_inv, p);
    const int shift = dr - dm;
    for (int i = 0; i <= dm; ++i) {
      const std::uint32_t t = mulp(factor, m[i], p);
      r[i + shift] = (r[i + shift] + p - t) % p;
    }
    normalize(r);
  }
  return r;
}

Poly mulmod(const Poly& f, const Poly& g, const Poly& m, std::uint32_t p) {
  return mod(mul(f, g, p), m, p);
}

Poly powmod(const Poly& f, std::uint64_t e, const Poly& m, std::uint32_t p) {
  Poly result = mod(Poly{1}, m, p);
  Poly base = mod(f, m, p);
  while (e) {
    if (e & 1) result = mulmod(result, base, m, p);
    e >>= 1;
    if (e) base = mulmod(base, base, m, p);
  }
  return result;
}

Poly gcd(Poly f, Poly g, std::uint32_t p) {
  normalize(f);
  normalize(g);
  while (!g.empty()) {
    Poly r = mod(f, g, p);
    f = std::move(g);
    g = std::move(r);
  }
  if (!f.empty()) {
    const std::uint32_t lead_inv = inv_mod(f.back(), p);
    for (auto& c : f) c = mulp(c, lead_inv, p);
  }
  return f;
}

bool is_irreducible(const Poly& m, std::uint32_t p) {
  const int k = degree(m);
  if (k < 1) return false;
  if (k == 1) return true;
  if (k <= 3) {
    // A reducible polynomial of degree 2 or 3 has a linear factor.
    for (std::uint64_t x = 0; x < p; ++x) {
      std::uint64_t acc = 0;
      for (int i = k; i >= 0; --i) acc = (acc * x + m[i]) % p;
      if (acc == 0) return false;
    }
    return true;
  }
  const Poly x = monomial_x();
  Poly frob = x;
  for (int i = 1; i <= k / 2; ++i) {
    frob = powmod(frob, p, m, p);
    if (degree(gcd(sub(frob, x, p), m, p)) > 0) return false;
  }
  return true;
}

Poly smallest_irreducible(std::uint32_t p, std::uint32_t k) {
  assert(k >= 1);
  if (k == 1) return Poly{0, 1};
  // Candidate digits (c_0, ..., c_{k-1}) with c_0 most significant. Every
  // candidate with c_0 = 0 is divisible by x, so start at c_0 = 1.
  std::vector<std::uint32_t> digits(k, 0);
  digits[0] = 1;
  for (;;) {
    Poly m(digits.begin(), digits.end());
    m.push_back(1);
    if (is_irreducible(m, p)) return m;
    std::size_t pos = k;
    while (pos > 0) {
      --pos;
      if (++digits[pos] < p) break;
      digits[pos] = 0;
      if (pos == 0) return {};  // unreachable: irreducibles exist in every degree
    }
  }
}

}  // namespace ffgrowth::poly
