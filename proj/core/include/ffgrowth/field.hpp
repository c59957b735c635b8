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

// Fully materialized finite fields F_{p^k}.
//
// An element is the index sum_i c_i p^i of its coefficient vector
// (c_0, ..., c_{k-1}) modulo the defining polynomial, so 0 and 1 are the
// additive and multiplicative identities and indices are stable across runs.
//
// Arithmetic is table driven. Small fields (q <= kDenseLimit) carry full
// q x q addition and multiplication tables; larger fields use log/antilog
// tables with respect to a fixed primitive element and a Zech logarithm table
// for addition. Either way every operation is O(1).

#ifndef FFGROWTH_FIELD_HPP_
#define FFGROWTH_FIELD_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "ffgrowth/error.hpp"

namespace ffgrowth {

using Elem = std::uint32_t;

inline constexpr std::uint64_t kDefaultUniverseCap = std::uint64_t{1} << 16;
inline constexpr std::uint32_t kDenseLimit = 1024;

struct FieldSpec {
  std::uint32_t p = 0;
  std::uint32_t k = 0;
  // k + 1 coefficients, low degree first, monic. For k = 1 this is the
  // placeholder x (coefficients {0, 1}) and carries no information.
  std::vector<std::uint32_t> modulus;

  bool operator==(const FieldSpec&) const = default;
};

struct BuildOptions {
  std::uint64_t universe_cap = kDefaultUniverseCap;
  // Forces the log/Zech representation even for small q. Used to cross-check
  // the two arithmetic back ends against each other.
  bool force_sparse = false;
};

// Universe cap from FFGROWTH_UNIVERSE_CAP if set and parseable, otherwise the
// default.
std::uint64_t universe_cap_from_env();

class Field;
using FieldPtr = std::shared_ptr<const Field>;

class Field {
 public:
  static constexpr Elem kNoInverse = 0xFFFFFFFFu;

  // Throws Error{kNotPrime, kNotIrreducible, kBadModulus, kUniverseTooLarge}.
  static FieldPtr build(std::uint32_t p, std::uint32_t k,
                        std::optional<std::vector<std::uint32_t>> modulus = std::nullopt,
                        const BuildOptions& options = {});

  const FieldSpec& spec() const noexcept { return spec_; }
  std::uint32_t p() const noexcept { return spec_.p; }
  std::uint32_t k() const noexcept { return spec_.k; }
  std::uint32_t order() const noexcept { return q_; }
  bool dense() const noexcept { return !add_table_.empty(); }
  bool is_prime_field() const noexcept { return spec_.k == 1; }

  Elem add(Elem a, Elem b) const noexcept {
    if (dense()) return add_table_[std::size_t{a} * q_ + b];
    return zech_add(a, b);
  }
  Elem neg(Elem a) const noexcept { return neg_[a]; }
  Elem sub(Elem a, Elem b) const noexcept { return add(a, neg_[b]); }

  Elem mul(Elem a, Elem b) const noexcept {
    if (dense()) return mul_table_[std::size_t{a} * q_ + b];
    if (a == 0 || b == 0) return 0;
    std::uint32_t s = log_[a] + log_[b];
    if (s >= q_ - 1) s -= q_ - 1;
    return exp_[s];
  }
  Elem square(Elem a) const noexcept { return mul(a, a); }

  // Throws Error{kDivisionByZero} for a == 0.
  Elem inv(Elem a) const {
    const Elem r = inv_[a];
    if (r == kNoInverse) throw Error(ErrorCode::kDivisionByZero, "inverse of zero");
    return r;
  }
  // Raw table entry; kNoInverse for 0.
  Elem inv_or_sentinel(Elem a) const noexcept { return inv_[a]; }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const noexcept;

  // x -> x^p.
  Elem frob(Elem a) const noexcept { return frob_[a]; }
  // x -> x^{p^d}.
  Elem frob_iter(Elem a, std::uint32_t d) const noexcept;

  Elem primitive() const noexcept { return primitive_; }
  // g^i for the fixed primitive element g, i taken mod q - 1.
  Elem exp(std::uint64_t i) const noexcept { return exp_[i % (q_ - 1)]; }
  // Discrete log base primitive(); a must be nonzero.
  std::uint32_t log(Elem a) const noexcept { return log_[a]; }

  std::vector<std::uint32_t> coefficients(Elem a) const;
  Elem from_coefficients(std::span<const std::uint32_t> coeffs) const;
  // Integer n reduced into the prime subfield.
  Elem from_int(std::int64_t n) const noexcept;

  bool same_as(const Field& other) const noexcept {
    return this == &other || spec_ == other.spec_;
  }

 private:
  Field() = default;
  Elem zech_add(Elem a, Elem b) const noexcept;

  FieldSpec spec_;
  std::uint32_t q_ = 0;
  Elem primitive_ = 0;
  std::vector<Elem> exp_;  // length q - 1
  std::vector<std::uint32_t> log_;  // log_[0] unused
  std::vector<std::uint32_t> zech_;  // log(1 + g^n), kNoInverse when 1 + g^n = 0
  std::vector<Elem> neg_;
  std::vector<Elem> inv_;
  std::vector<Elem> frob_;
  std::vector<Elem> add_table_;
  std::vector<Elem> mul_table_;
};

}  // namespace ffgrowth

#endif  // FFGROWTH_FIELD_HPP_
