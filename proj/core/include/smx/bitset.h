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

#ifndef SMX_BITSET_H_
#define SMX_BITSET_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace smx {

// Fixed-length set of indices 0..size()-1. Bits past size() are always zero,
// so equality and ordering are plain word comparisons.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t size);

  static Bitset FromMask(std::size_t size, std::uint64_t mask);
  static Bitset FromIndices(std::size_t size,
                            const std::vector<std::size_t>& indices);
  static Bitset Full(std::size_t size);

  std::size_t size() const { return size_; }
  bool test(std::size_t i) const;
  Bitset& set(std::size_t i, bool value = true);
  Bitset& reset(std::size_t i) { return set(i, false); }

  std::size_t count() const;
  bool any() const;
  bool none() const { return !any(); }

  // Requires size() <= 64.
  std::uint64_t ToMask() const;
  std::vector<std::size_t> Indices() const;

  bool IsSubsetOf(const Bitset& other) const;

  Bitset& operator|=(const Bitset& other);
  Bitset& operator&=(const Bitset& other);
  Bitset& operator-=(const Bitset& other);
  Bitset operator~() const;

  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator-(Bitset a, const Bitset& b) { return a -= b; }

  friend bool operator==(const Bitset& a, const Bitset& b) = default;

  // Orders by size first, then by the binary value of the bits (bit i has
  // weight 2^i). Enumeration order of subsets agrees with this ordering.
  friend std::strong_ordering operator<=>(const Bitset& a, const Bitset& b);

  // "{0,2,5}"
  std::string ToString() const;

  std::size_t Hash() const;

 private:
  void CheckIndex(std::size_t i) const;
  void CheckSameSize(const Bitset& other) const;
  void ClearPadding();

  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace smx

template <>
struct std::hash<smx::Bitset> {
  std::size_t operator()(const smx::Bitset& b) const { return b.Hash(); }
};

#endif  // SMX_BITSET_H_
