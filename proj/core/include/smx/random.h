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

#ifndef SMX_RANDOM_H_
#define SMX_RANDOM_H_

// Seeded randomness with results that do not depend on the standard library
// implementation: distributions are computed here from raw 64-bit draws.

#include <cstdint>
#include <random>
#include <string_view>

#include "smx/bitset.h"

namespace smx {

using Rng = std::mt19937_64;

// Substream seed for (seed, algorithm name, replica index).
std::uint64_t DeriveSeed(std::uint64_t seed, std::string_view name,
                         std::uint64_t replica = 0);

// Uniform integer in [0, n). n > 0.
std::uint64_t UniformIndex(Rng& rng, std::uint64_t n);
// Uniform double in [0, 1).
double UniformReal(Rng& rng);
double UniformReal(Rng& rng, double lo, double hi);
double StandardNormal(Rng& rng);
bool Coin(Rng& rng, double p = 0.5);

// Each of the n bits independently with probability 1/2.
Bitset UniformSubset(Rng& rng, std::size_t n);
// Uniform subset of exactly k elements out of n.
Bitset UniformKSubset(Rng& rng, std::size_t n, std::size_t k);

}  // namespace smx

#endif  // SMX_RANDOM_H_
