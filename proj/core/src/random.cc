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

#include "smx/random.h"

#include <cmath>
#include <numbers>
#include <numeric>
#include <vector>

#include "smx/error.h"

namespace smx {

namespace {
std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}
}  // namespace

std::uint64_t DeriveSeed(std::uint64_t seed, std::string_view name,
                         std::uint64_t replica) {
  std::uint64_t h = 0xcbf29ce484222325ull;  // FNV-1a
  for (char c : name) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ull;
  }
  return SplitMix64(SplitMix64(seed ^ h) + replica);
}

std::uint64_t UniformIndex(Rng& rng, std::uint64_t n) {
  Require(n > 0, ErrorCode::kDomain, "UniformIndex on an empty range");
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
  std::uint64_t r;
  do {
    r = rng();
  } while (r >= limit);
  return r % n;
}

double UniformReal(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double UniformReal(Rng& rng, double lo, double hi) {
  return lo + (hi - lo) * UniformReal(rng);
}

double StandardNormal(Rng& rng) {
  double u1 = UniformReal(rng);
  while (u1 <= 0.0) u1 = UniformReal(rng);
  const double u2 = UniformReal(rng);
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

bool Coin(Rng& rng, double p) { return UniformReal(rng) < p; }

Bitset UniformSubset(Rng& rng, std::size_t n) {
  Bitset out(n);
  std::uint64_t word = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (i % 64 == 0) word = rng();
    if ((word >> (i % 64)) & 1u) out.set(i);
  }
  return out;
}

Bitset UniformKSubset(Rng& rng, std::size_t n, std::size_t k) {
  Require(k <= n, ErrorCode::kDomain, "k-subset larger than ground set");
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  // Partial Fisher-Yates.
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = i + UniformIndex(rng, n - i);
    std::swap(perm[i], perm[j]);
  }
  Bitset out(n);
  for (std::size_t i = 0; i < k; ++i) out.set(perm[i]);
  return out;
}

}  // namespace smx
