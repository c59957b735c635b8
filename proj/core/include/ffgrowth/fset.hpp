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

#ifndef FFGROWTH_FSET_HPP_
#define FFGROWTH_FSET_HPP_

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "ffgrowth/field.hpp"

namespace ffgrowth {

// A subset of F_q stored as a bit vector over element indices. The size is
// cached and always equals the population count.
class FSet {
 public:
  explicit FSet(FieldPtr field);

  static FSet of(FieldPtr field, std::span<const Elem> elements);
  static FSet of(FieldPtr field, std::initializer_list<Elem> elements);
  static FSet full(FieldPtr field);

  const Field& field() const noexcept { return *field_; }
  const FieldPtr& field_ptr() const noexcept { return field_; }
  std::uint32_t universe() const noexcept { return field_->order(); }

  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }

  bool contains(Elem x) const noexcept {
    return x < universe() && ((words_[x >> 6] >> (x & 63)) & 1u);
  }
  // Throws Error{kElementOutOfRange}.
  void insert(Elem x);
  void erase(Elem x) noexcept;

  // Calls fn(x) for every element in ascending index order.
  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        const int tz = std::countr_zero(bits);
        fn(static_cast<Elem>(w * 64 + tz));
        bits &= bits - 1;
      }
    }
  }

  std::vector<Elem> elements() const;
  // Smallest element; the set must be nonempty.
  Elem min() const;

  bool is_subset_of(const FSet& other) const;
  std::size_t intersection_size(const FSet& other) const;
  FSet unite(const FSet& other) const;
  FSet intersect(const FSet& other) const;
  FSet minus(const FSet& other) const;

  bool operator==(const FSet& other) const;

 private:
  void recount() noexcept;
  void check_same_field(const FSet& other) const;

  FieldPtr field_;
  std::vector<std::uint64_t> words_;
  std::size_t size_ = 0;
};

}  // namespace ffgrowth

#endif  // FFGROWTH_FSET_HPP_
