// Copyright 2026 The smx Authors.
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

#include "smx/bitset.h"

#include <bit>

#include "smx/error.h"

namespace smx {

namespace {
constexpr std::size_t kWordBits = 64;

std::size_t WordCount(std::size_t size) {
  return (size + kWordBits - 1) / kWordBits;
}
}  // namespace

Bitset::Bitset(std::size_t size) : size_(size), words_(WordCount(size), 0) {}

Bitset Bitset::FromMask(std::size_t size, std::uint64_t mask) {
  Bitset b(size);
  if (!b.words_.empty()) {
    b.words_[0] = mask;
    b.ClearPadding();
  }
  return b;
}

Bitset Bitset::FromIndices(std::size_t size,
                           const std::vector<std::size_t>& indices) {
  Bitset b(size);
  for (std::size_t i : indices) b.set(i);
  return b;
}

Bitset Bitset::Full(std::size_t size) {
  Bitset b(size);
  for (auto& w : b.words_) w = ~std::uint64_t{0};
  b.ClearPadding();
  return b;
}

void Bitset::CheckIndex(std::size_t i) const {
  if (i >= size_) {
    Fail(ErrorCode::kDomain, "bit index " + std::to_string(i) +
                                 " out of range for size " +
                                 std::to_string(size_));
  }
}

void Bitset::CheckSameSize(const Bitset& other) const {
  if (size_ != other.size_) {
    Fail(ErrorCode::kDomain, "bitset size mismatch (" + std::to_string(size_) +
                                 " vs " + std::to_string(other.size_) + ")");
  }
}

void Bitset::ClearPadding() {
  const std::size_t tail = size_ % kWordBits;
  if (tail != 0 && !words_.empty()) {
    words_.back() &= (std::uint64_t{1} << tail) - 1;
  }
}

bool Bitset::test(std::size_t i) const {
  CheckIndex(i);
  return (words_[i / kWordBits] >> (i % kWordBits)) & 1u;
}

Bitset& Bitset::set(std::size_t i, bool value) {
  CheckIndex(i);
  const std::uint64_t bit = std::uint64_t{1} << (i % kWordBits);
  if (value) {
    words_[i / kWordBits] |= bit;
  } else {
    words_[i / kWordBits] &= ~bit;
  }
  return *this;
}

std::size_t Bitset::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool Bitset::any() const {
  for (auto w : words_) {
    if (w != 0) return true;
  }
  return false;
}

std::uint64_t Bitset::ToMask() const {
  Require(size_ <= kWordBits, ErrorCode::kCapacity,
          "ToMask requires at most 64 bits");
  return words_.empty() ? 0 : words_[0];
}

std::vector<std::size_t> Bitset::Indices() const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t word = words_[w];
    while (word != 0) {
      const int bit = std::countr_zero(word);
      out.push_back(w * kWordBits + static_cast<std::size_t>(bit));
      word &= word - 1;
    }
  }
  return out;
}

bool Bitset::IsSubsetOf(const Bitset& other) const {
  CheckSameSize(other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & ~other.words_[w]) != 0) return false;
  }
  return true;
}

Bitset& Bitset::operator|=(const Bitset& other) {
  CheckSameSize(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
  return *this;
}

Bitset& Bitset::operator&=(const Bitset& other) {
  CheckSameSize(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
  return *this;
}

Bitset& Bitset::operator-=(const Bitset& other) {
  CheckSameSize(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~other.words_[w];
  return *this;
}

Bitset Bitset::operator~() const {
  Bitset out = *this;
  for (auto& w : out.words_) w = ~w;
  out.ClearPadding();
  return out;
}

std::strong_ordering operator<=>(const Bitset& a, const Bitset& b) {
  if (auto c = a.size_ <=> b.size_; c != 0) return c;
  for (std::size_t w = a.words_.size(); w-- > 0;) {
    if (auto c = a.words_[w] <=> b.words_[w]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::string Bitset::ToString() const {
  std::string out = "{";
  bool first = true;
  for (std::size_t i : Indices()) {
    if (!first) out += ',';
    out += std::to_string(i);
    first = false;
  }
  out += '}';
  return out;
}

std::size_t Bitset::Hash() const {
  std::uint64_t h = 0xcbf29ce484222325ull ^ size_;
  for (auto w : words_) {
    h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

}  // namespace smx
