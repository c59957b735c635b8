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

#include "ffgrowth/fset.hpp"

#include <string>

namespace ffgrowth {

FSet::FSet(FieldPtr field)
    : field_(std::move(field)), words_((field_->order() + 63) / 64, 0) {}

FSet FSet::of(FieldPtr field, std::span<const Elem> elements) {
  FSet s(std::move(field));
  for (Elem x : elements) s.insert(x);
  return s;
}

FSet FSet::of(FieldPtr field, std::initializer_list<Elem> elements) {
  return of(std::move(field), std::span<const Elem>(elements.begin(), elements.size()));
}

FSet FSet::full(FieldPtr field) {
  FSet s(std::move(field));
  const std::uint32_t q = s.universe();
  for (std::size_t w = 0; w < s.words_.size(); ++w) s.words_[w] = ~std::uint64_t{0};
  if (q % 64) s.words_.back() = (std::uint64_t{1} << (q % 64)) - 1;
  s.size_ = q;
  return s;
}

void FSet::insert(Elem x) {
  if (x >= universe()) {
    throw Error(ErrorCode::kElementOutOfRange,
                "element " + std::to_string(x) + " is not below q = " + std::to_string(universe()));
  }
  std::uint64_t& w = words_[x >> 6];
  const std::uint64_t bit = std::uint64_t{1} << (x & 63);
  if (!(w & bit)) {
    w |= bit;
    ++size_;
  }
}

void FSet::erase(Elem x) noexcept {
  if (x >= universe()) return;
  std::uint64_t& w = words_[x >> 6];
  const std::uint64_t bit = std::uint64_t{1} << (x & 63);
  if (w & bit) {
    w &= ~bit;
    --size_;
  }
}

std::vector<Elem> FSet::elements() const {
  std::vector<Elem> out;
  out.reserve(size_);
  for_each([&](Elem x) { out.push_back(x); });
  return out;
}

Elem FSet::min() const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w]) return static_cast<Elem>(w * 64 + std::countr_zero(words_[w]));
  }
  throw Error(ErrorCode::kEmptySet, "min of empty set");
}

void FSet::check_same_field(const FSet& other) const {
  if (!field_->same_as(*other.field_)) {
    throw Error(ErrorCode::kFieldMismatch, "sets live in different fields");
  }
}

bool FSet::is_subset_of(const FSet& other) const {
  check_same_field(other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] & ~other.words_[w]) return false;
  }
  return true;
}

std::size_t FSet::intersection_size(const FSet& other) const {
  check_same_field(other);
  std::size_t n = 0;
  for (std::size_t w = 0; w < words_.size(); ++w) n += std::popcount(words_[w] & other.words_[w]);
  return n;
}

FSet FSet::unite(const FSet& other) const {
  check_same_field(other);
  FSet r(field_);
  for (std::size_t w = 0; w < words_.size(); ++w) r.words_[w] = words_[w] | other.words_[w];
  r.recount();
  return r;
}

FSet FSet::intersect(const FSet& other) const {
  check_same_field(other);
  FSet r(field_);
  for (std::size_t w = 0; w < words_.size(); ++w) r.words_[w] = words_[w] & other.words_[w];
  r.recount();
  return r;
}

FSet FSet::minus(const FSet& other) const {
  check_same_field(other);
  FSet r(field_);
  for (std::size_t w = 0; w < words_.size(); ++w) r.words_[w] = words_[w] & ~other.words_[w];
  r.recount();
  return r;
}

bool FSet::operator==(const FSet& other) const {
  return field_->same_as(*other.field_) && words_ == other.words_;
}

void FSet::recount() noexcept {
  size_ = 0;
  for (auto w : words_) size_ += std::popcount(w);
}

}  // namespace ffgrowth
