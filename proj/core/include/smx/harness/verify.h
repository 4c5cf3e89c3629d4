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

#ifndef SMX_HARNESS_VERIFY_H_
#define SMX_HARNESS_VERIFY_H_

// Property suites over seeded random instances. Each check compares a
// solver against exhaustive search on small instances.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "smx/objectives.h"

namespace smx::harness {

struct PropertyResult {
  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  // First counterexample or a summary of the measured quantity.
  std::string detail;
};

struct PropertyScale {
  std::size_t instances = 20;
  std::uint64_t seed = 2026;
};

// MNP value equals the exhaustive minimum within 1e-6 (n <= max_n).
PropertyResult CheckSfmExactness(const PropertyScale& scale,
                                 std::size_t max_n = 12);
// Double greedy reaches half of the exhaustive maximum (n <= max_n).
PropertyResult CheckUsmHalf(const PropertyScale& scale, std::size_t max_n = 12);
// g(Y) = min_X f(X ⊎ Y) is submodular, and monotone when f is N2-monotone.
PropertyResult CheckInnerMinProperties(const PropertyScale& scale,
                                       std::size_t max_n = 5);
// Min-as-oracle never exceeds τ' and matches it with the exact maximizer.
PropertyResult CheckMaxMinUpperBound(const PropertyScale& scale,
                                     std::size_t max_n = 5);
// τ <= singletons value <= (n2 + 1) τ and the per-X sandwich.
PropertyResult CheckSingletonsBracket(const PropertyScale& scale,
                                      std::size_t max_n1 = 8,
                                      std::size_t max_n2 = 6);
// max_Y f(X ⊎ Y) <= 4 h(X) for every X on instances of the given family.
// kind = nullopt uses the random joint and disjoint families.
PropertyResult CheckFourHBound(const PropertyScale& scale,
                               std::optional<ObjectiveKind> kind,
                               std::size_t max_n = 6);
// Exact-mode random subsets lies in [τ, (4 + ε/2) τ].
PropertyResult CheckRandomSubsetsExact(const PropertyScale& scale,
                                       std::size_t max_n = 6);
// Sampled mode, ε = epsilon, n2 fixed: failure count over
// instances x seeds_per_instance runs must not exceed the allowance
// floor((ε / (8 (n2 + 1)) + 0.02) runs).
PropertyResult CheckRandomSubsetsSampled(const PropertyScale& scale,
                                         std::size_t seeds_per_instance,
                                         double epsilon = 0.4,
                                         std::size_t n2 = 10,
                                         std::size_t max_n1 = 6);
// max_Y f(X̂ ⊎ Y) <= 4 (n2 + 1) τ for the best-of-two set, on the instances
// (and, in sampled mode, the run seeds) of the two random-subsets checks at
// the same scale seed.
PropertyResult CheckBestOfTwoBound(const PropertyScale& scale,
                                   std::size_t max_n = 6,
                                   std::size_t sampled_instances = 0,
                                   std::size_t seeds_per_instance = 0,
                                   double epsilon = 0.4,
                                   std::size_t sampled_n2 = 10,
                                   std::size_t max_n1 = 6);
// Exact oracle, β = sqrt(n1): τ <= value <= (3 sqrt(n1) + 3) τ and at most
// n1 + 1 iterations.
PropertyResult CheckGrowingBracket(const PropertyScale& scale,
                                   std::size_t max_n1 = 8,
                                   std::size_t max_n2 = 5);
// Gadget min equality, disjoint submodularity, conditional monotonicity.
PropertyResult CheckGadgets(const PropertyScale& scale, std::size_t max_m = 4,
                            std::size_t max_n2 = 5);
// Both SAT encodings: max-min value is 1 iff the formula is satisfiable.
PropertyResult CheckSatTracking(const PropertyScale& scale,
                                std::size_t max_vars = 6,
                                std::size_t max_clauses = 8);
// Nonnegativity and joint submodularity, exhaustive, n1 + n2 <= max_total.
PropertyResult CheckObjectiveProperties(const PropertyScale& scale,
                                    ObjectiveKind kind,
                                    std::size_t max_total = 8);

enum class VerifyLevel { kQuick, kFull };

struct SuiteReport {
  std::vector<PropertyResult> results;
  bool ok() const;
};

// Runs every property; progress lines go to log when non-null.
SuiteReport RunVerifySuite(VerifyLevel level, std::uint64_t seed,
                           std::ostream* log);

}  // namespace smx::harness

#endif  // SMX_HARNESS_VERIFY_H_
