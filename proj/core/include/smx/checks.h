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

#ifndef SMX_CHECKS_H_
#define SMX_CHECKS_H_

// Exhaustive (small n) and sampled checkers for submodularity, monotonicity
// and nonnegativity. Every property suite in the repository is built on
// these.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "smx/oracle.h"

namespace smx {

struct CheckOptions {
  double tol = 1e-9;
  // Exhaustive mode when the combined ground set has at most this many
  // elements.
  std::size_t exhaustive_limit = 14;
  // Above the limit: sample (S, T, u) triples instead of failing.
  bool allow_sampling = false;
  std::uint64_t trials = 100000;
  std::uint64_t seed = 0;
};

struct CheckReport {
  bool ok = true;
  bool exhaustive = true;
  std::uint64_t checked = 0;
  // Human-readable counterexample when !ok.
  std::optional<std::string> witness;

  explicit operator bool() const { return ok; }
};

// f(u | S) >= f(u | T) - tol for all S ⊆ T ⊆ N1 ⊎ N2, u ∉ T.
CheckReport CheckJointlySubmodular(const ValueOracle& f,
                                   const CheckOptions& options = {});
// Same inequality, but S and T may only differ on u's own side.
CheckReport CheckDisjointlySubmodular(const ValueOracle& f,
                                      const CheckOptions& options = {});
// f(u | S) >= -tol for every u ∈ N2 and every S.
CheckReport CheckN2Monotone(const ValueOracle& f,
                            const CheckOptions& options = {});
CheckReport CheckNonnegative(const ValueOracle& f,
                             const CheckOptions& options = {});

CheckReport CheckSubmodular(const GroundFunction& f,
                            const CheckOptions& options = {});
CheckReport CheckMonotone(const GroundFunction& f,
                          const CheckOptions& options = {});

}  // namespace smx

#endif  // SMX_CHECKS_H_
