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

#ifndef SMX_SUBMAX_H_
#define SMX_SUBMAX_H_

// Submodular maximization subroutines: the cardinality greedy family,
// deterministic double greedy for the unconstrained case, and exhaustive
// search.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>

#include "smx/bitset.h"
#include "smx/oracle.h"

namespace smx {

// Sentinel approximation factor for runs that carry no guarantee.
inline constexpr double kHeuristicAlpha =
    std::numeric_limits<double>::infinity();

struct MaxResult {
  Bitset chosen;
  double value = 0.0;
  // Claimed approximation factor α >= 1 (OPT <= α · value), or
  // kHeuristicAlpha.
  double alpha_claim = kHeuristicAlpha;
};

// Adds the element of largest marginal (earliest index on ties) up to k
// times. Without force_k it stops once the best marginal is <= 0. With
// `monotone` the (1 - 1/e)^{-1} guarantee is claimed.
MaxResult GreedyCardinality(const GroundFunction& f, std::size_t k,
                            bool force_k, bool monotone = false);

// Descending-threshold greedy. Thresholds start at the largest singleton
// marginal d and shrink by (1 - eps_t) until they fall below (eps_t / n) d.
MaxResult ThresholdGreedy(const GroundFunction& f, std::size_t k,
                          double eps_t = 0.05, bool monotone = false);

// Random Greedy: every round picks uniformly among the (at most k) best
// remaining marginals, with negative-marginal elements replaced by
// zero-valued dummies. Claims e in expectation.
MaxResult RandomGreedy(const GroundFunction& f, std::size_t k,
                       std::uint64_t seed);

// Deterministic double greedy over index order: keep u in A when
// f(u | A) >= f(B - u) - f(B), otherwise drop it from B. f must be
// nonnegative. The proven factor of this rule is 3.
MaxResult DoubleGreedyUsm(const GroundFunction& f);

// Exact maximum over the feasible sets of c, earliest set on ties. n <= 24.
MaxResult BruteForceMax(const GroundFunction& f, const Constraint& c);

enum class MaximizerKind {
  kGreedy,
  kThresholdGreedy,
  kRandomGreedy,
  kDoubleGreedy,
  kBruteForce,
};

struct MaximizerSpec {
  MaximizerKind kind = MaximizerKind::kGreedy;
  double eps_t = 0.05;
  std::uint64_t seed = 0;
  // The maximized function is known to be monotone.
  bool monotone = false;
};

// Runs the chosen maximizer under c. AllSubsets runs the cardinality
// methods with k = n (greedy without force_k); double greedy requires
// AllSubsets.
MaxResult Maximize(const GroundFunction& f, const Constraint& c,
                   const MaximizerSpec& spec);

bool IsDeterministic(MaximizerKind kind);
// The alpha_claim Maximize would report for this spec.
double ClaimedAlpha(const MaximizerSpec& spec);
std::string_view MaximizerName(MaximizerKind kind);
MaximizerKind ParseMaximizer(std::string_view name);

inline constexpr std::size_t kBruteForceMaxLimit = 24;

}  // namespace smx

#endif  // SMX_SUBMAX_H_
