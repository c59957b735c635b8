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

#include "ffgrowth/field.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>
#include <string>

#include "ffgrowth/poly.hpp"

namespace ffgrowth {
namespace {

poly::Poly to_poly(Elem index, std::uint32_t p, std::uint32_t k) {
  poly::Poly f(k, 0);
  for (std::uint32_t i = 0; i < k; ++i) {
    f[i] = index % p;
    index /= p;
  }
  poly::normalize(f);
  return f;
}

Elem from_poly(const poly::Poly& f, std::uint32_t p) {
  Elem index = 0;
  for (std::size_t i = f.size(); i > 0; --i) index = index * p + f[i - 1];
  return index;
}

// Digit-wise sum of two base-p encodings.
Elem add_digits(Elem a, Elem b, std::uint32_t p, std::uint32_t k) {
  Elem result = 0, scale = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    const std::uint32_t d = (a % p + b % p) % p;
    result += d * scale;
    a /= p;
    b /= p;
    scale *= p;
  }
  return result;
}

Elem neg_digits(Elem a, std::uint32_t p, std::uint32_t k) {
  Elem result = 0, scale = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    const std::uint32_t d = (p - a % p) % p;
    result += d * scale;
    a /= p;
    scale *= p;
  }
  return result;
}

std::string join(const std::vector<std::uint32_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

}  // namespace

std::uint64_t universe_cap_from_env() {
  const char* raw = std::getenv("FFGROWTH_UNIVERSE_CAP");
  if (raw == nullptr) return kDefaultUniverseCap;
  std::uint64_t value = 0;
  const char* end = raw + std::strlen(raw);
  auto [ptr, ec] = std::from_chars(raw, end, value);
  if (ec != std::errc() || ptr != end || value < 2) return kDefaultUniverseCap;
  return value;
}

FieldPtr Field::build(std::uint32_t p, std::uint32_t k,
                      std::optional<std::vector<std::uint32_t>> modulus,
                      const BuildOptions& options) {
  if (!poly::is_prime(p)) {
    throw Error(ErrorCode::kNotPrime, "p must be prime (got " + std::to_string(p) + ")");
  }
  if (k < 1) throw Error(ErrorCode::kBadModulus, "k must be at least 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    q *= p;
    if (q > options.universe_cap || q > 0xFFFFFFFFull) {
      throw Error(ErrorCode::kUniverseTooLarge,
                  "q = " + std::to_string(p) + "^" + std::to_string(k) +
                      " exceeds the universe cap " + std::to_string(options.universe_cap));
    }
  }

  poly::Poly m;
  if (k == 1) {
    if (modulus && (modulus->size() != 2 || (*modulus)[1] != 1)) {
      throw Error(ErrorCode::kBadModulus, "modulus for k = 1 must be monic of degree 1");
    }
    m = {0, 1};
  } else if (modulus) {
    m = *modulus;
    if (m.size() != k + 1 || m.back() != 1) {
      throw Error(ErrorCode::kBadModulus,
                  "modulus must be monic of degree " + std::to_string(k) + " (got " + join(m) + ")");
    }
    for (auto c : m) {
      if (c >= p) throw Error(ErrorCode::kBadModulus, "modulus coefficient out of range: " + join(m));
    }
    if (!poly::is_irreducible(m, p)) {
      throw Error(ErrorCode::kNotIrreducible, "modulus " + join(m) + " is reducible over F_" + std::to_string(p));
    }
  } else {
    m = poly::smallest_irreducible(p, k);
  }

  std::shared_ptr<Field> f(new Field());
  f->spec_ = FieldSpec{p, k, m};
  f->q_ = static_cast<std::uint32_t>(q);
  const std::uint32_t n = f->q_ - 1;

  // Primitive element: smallest index g whose order is exactly q - 1.
  const auto factors = poly::prime_factors(n);
  Elem g = 1;
  for (;; ++g) {
    const poly::Poly gp = to_poly(g, p, k);
    bool primitive = true;
    for (auto l : factors) {
      if (poly::powmod(gp, n / l, m, p) == poly::Poly{1}) {
        primitive = false;
        break;
      }
    }
    if (primitive) break;
  }
  f->primitive_ = g;

  f->exp_.resize(n);
  f->log_.assign(f->q_, 0);
  {
    const poly::Poly gp = to_poly(g, p, k);
    poly::Poly cur{1};
    for (std::uint32_t i = 0; i < n; ++i) {
      const Elem e = from_poly(cur, p);
      f->exp_[i] = e;
      f->log_[e] = i;
      cur = poly::mulmod(cur, gp, m, p);
    }
  }

  f->neg_.resize(f->q_);
  f->inv_.resize(f->q_);
  f->frob_.resize(f->q_);
  f->zech_.resize(n);
  f->neg_[0] = 0;
  f->inv_[0] = kNoInverse;
  f->frob_[0] = 0;
  for (Elem a = 1; a < f->q_; ++a) {
    f->neg_[a] = neg_digits(a, p, k);
    const std::uint64_t la = f->log_[a];
    f->inv_[a] = f->exp_[(n - la) % n];
    f->frob_[a] = f->exp_[(la * p) % n];
  }
  for (std::uint32_t i = 0; i < n; ++i) {
    const Elem v = f->exp_[i];
    const std::uint32_t c0 = v % p;
    const Elem w = v - c0 + (c0 + 1) % p;
    f->zech_[i] = w == 0 ? kNoInverse : f->log_[w];
  }

  if (f->q_ <= kDenseLimit && !options.force_sparse) {
    const std::size_t qq = std::size_t{f->q_} * f->q_;
    f->add_table_.resize(qq);
    f->mul_table_.resize(qq);
    for (Elem a = 0; a < f->q_; ++a) {
      for (Elem b = 0; b < f->q_; ++b) {
        const std::size_t at = std::size_t{a} * f->q_ + b;
        f->add_table_[at] = add_digits(a, b, p, k);
        if (a == 0 || b == 0) {
          f->mul_table_[at] = 0;
        } else {
          f->mul_table_[at] = f->exp_[(std::uint64_t{f->log_[a]} + f->log_[b]) % n];
        }
      }
    }
  }
  return f;
}

Elem Field::zech_add(Elem a, Elem b) const noexcept {
  if (a == 0) return b;
  if (b == 0) return a;
  const std::uint32_t n = q_ - 1;
  const std::uint32_t la = log_[a];
  const std::uint32_t lb = log_[b];
  const std::uint32_t diff = lb >= la ? lb - la : lb + n - la;
  const std::uint32_t z = zech_[diff];
  if (z == kNoInverse) return 0;
  std::uint32_t s = la + z;
  if (s >= n) s -= n;
  return exp_[s];
}

Elem Field::pow(Elem a, std::uint64_t e) const noexcept {
  if (e == 0) return 1;
  if (a == 0) return 0;
  const std::uint64_t n = q_ - 1;
  return exp_[(std::uint64_t{log_[a]} * (e % n)) % n];
}

Elem Field::frob_iter(Elem a, std::uint32_t d) const noexcept {
  for (std::uint32_t i = 0; i < d; ++i) a = frob_[a];
  return a;
}

std::vector<std::uint32_t> Field::coefficients(Elem a) const {
  std::vector<std::uint32_t> c(spec_.k, 0);
  for (std::uint32_t i = 0; i < spec_.k; ++i) {
    c[i] = a % spec_.p;
    a /= spec_.p;
  }
  return c;
}

Elem Field::from_coefficients(std::span<const std::uint32_t> coeffs) const {
  Elem index = 0;
  for (std::size_t i = coeffs.size(); i > 0; --i) {
    index = index * spec_.p + coeffs[i - 1] % spec_.p;
  }
  return index;
}

Elem Field::from_int(std::int64_t n) const noexcept {
  const std::int64_t p = spec_.p;
  return static_cast<Elem>(((n % p) + p) % p);
}

}  // namespace ffgrowth
