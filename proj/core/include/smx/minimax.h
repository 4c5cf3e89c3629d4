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

#ifndef SMX_MINIMAX_H_
#define SMX_MINIMAX_H_

// Max-min and min-max solvers over a two-sided submodular objective.
//
// Notation: f is a nonnegative function of X ⊎ Y with X ⊆ N1 and Y ∈ F2.
//   g(Y)  = min_X f(X ⊎ Y)               (inner minimum)
//   τ     = min_X max_{Y ∈ F2} f(X ⊎ Y)  (min-max optimum)
//   τ'    = max_{Y ∈ F2} min_X f(X ⊎ Y)  (max-min optimum)
//   h(X)  = E[f(X ⊎ R)] for R a uniformly random subset of N2
//
// Every solver reports a bracket [tau_lower, tau_upper] on the relevant
// optimum. Brackets are only filled from inequalities that hold for the
// instance's declared tags; otherwise they stay at [0, +inf).

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>

#include "smx/oracle.h"
#include "smx/sfm.h"
#include "smx/submax.h"

namespace smx {

struct InstanceTags {
  bool jointly_submodular = false;
  bool disjointly_submodular = false;
  bool n2_monotone = false;
};

struct MinimaxInstance {
  OraclePtr f;
  Constraint f2 = Constraint::AllSubsets();
  InstanceTags tags;
  SfmOptions sfm;
  // Fill otherwise-unknown bracket ends by exhaustive search.
  bool audit = false;

  const BiGroundSet& ground() const { return f->ground(); }
  void Validate() const;
};

enum class Certificate { kNone, kDeterministic, kHighProbability };

struct SolveResult {
  // Only the side chosen by the algorithm is meaningful.
  Subset chosen;
  double value = 0.0;
  double tau_lower = 0.0;
  double tau_upper = std::numeric_limits<double>::infinity();
  Certificate certificate = Certificate::kNone;
  // max_{Y ∈ F2} f(chosen ⊎ Y) <= set_factor · τ, unconditionally.
  double set_factor = std::numeric_limits<double>::infinity();
  // f(chosen.x ⊎ Ŷ) for a maximizer reply Ŷ, when the algorithm computed
  // one.
  std::optional<double> reply_value;
  std::uint64_t oracle_calls = 0;
  std::size_t iterations = 0;
  double millis = 0.0;
  // Some minimization ran on a function not known to be submodular.
  bool heuristic = false;
};

struct InnerMinResult {
  Bitset x;
  double value = 0.0;
  bool heuristic = false;
};

// argmin / min over X ⊆ N1 of f(X ⊎ y).
InnerMinResult InnerMin(const MinimaxInstance& inst, const Bitset& y);
// Y ↦ g(Y) as a set function over N2. Keeps a reference to inst.
GroundFunction InnerMinFunction(const MinimaxInstance& inst);

// Runs the maximizer on g under F2 `repeats` times with derived seeds and
// keeps the best Ŷ. value = g(Ŷ) <= τ'.
SolveResult MaxMinViaOracle(const MinimaxInstance& inst,
                            const MaximizerSpec& maximizer,
                            std::size_t repeats, std::uint64_t seed);

// Minimizes f(X) + Σ_{u ∈ N2} f(X ⊎ {u}); τ <= value <= (n2 + 1) τ.
SolveResult MinMaxSingletons(const MinimaxInstance& inst);

struct SamplePlan {
  double epsilon = 0.25;
  std::uint64_t m = 0;
  std::uint64_t seed = 0;
  // Average over all 2^{n2} subsets instead of m samples (then g = h).
  bool exact_mode = false;

  // m from the concentration bound; exact mode whenever 2^{n2} <= m unless
  // allow_exact is false.
  static SamplePlan Make(double epsilon, std::size_t n1, std::size_t n2,
                         std::uint64_t seed, bool allow_exact = true);
};

// ⌈3200 ε^{-2} [(n1 + 1) ln 2 + ln(n2 + 1) + ln(8/ε)]⌉
std::uint64_t SampleCount(double epsilon, std::size_t n1, std::size_t n2);

// Minimizes the sample average of f(X ⊎ Y_i) and reports
// (4 + ε/2) · g(X'). Requires F2 = all subsets.
SolveResult MinMaxRandomSubsets(const MinimaxInstance& inst,
                                const SamplePlan& plan);

// Keep the random-subsets set X' unless its double-greedy reply exceeds
// twice the singleton set's reply.
bool PreferFirstOfTwo(double first_reply, double second_reply);

SolveResult BestOfTwo(const MinimaxInstance& inst, const SamplePlan& plan);

// A maximizer over F2 for Y ↦ f(X ⊎ Y), within factor alpha.
struct AlphaOracle {
  std::function<Bitset(const Bitset& x)> reply;
  double alpha = 1.0;
  bool deterministic = true;
};

AlphaOracle MakeAlphaOracle(const MinimaxInstance& inst,
                            const MaximizerSpec& maximizer);

struct GrowingOptions {
  // Weight of the f(X ∪ X_{i-1}) term; defaults to sqrt(n1).
  std::optional<double> beta;
  // Return the best iterate instead of the last one.
  bool best_iterate = false;
};

// Grows X by repeatedly answering the oracle's reply Y_i with
// argmin_X beta · f(X ∪ X_{i-1}) + f(X ⊎ Y_i). Requires ∅ ∈ F2.
SolveResult IterativeXGrowing(const MinimaxInstance& inst,
                              const AlphaOracle& oracle,
                              const GrowingOptions& options = {});

// 2 sqrt(n1) + 2 + 1/sqrt(n1) (1 when n1 = 0): the growing algorithm's
// factor for beta = sqrt(n1) and an exact oracle.
double GrowingFactor(std::size_t n1);

// 2^{-n2} Σ_{Y ⊆ N2} f(x ⊎ Y). n2 <= 20.
double HExact(const MinimaxInstance& inst, const Bitset& x);

// Exhaustive max_{Y ∈ F2} f(x ⊎ Y), earliest maximizer.
struct BruteOptimum {
  Bitset set;
  double value = 0.0;
};
BruteOptimum BruteForceMaxOverY(const MinimaxInstance& inst, const Bitset& x);
// Exhaustive τ with the earliest optimal X.
BruteOptimum BruteForceMinMax(const MinimaxInstance& inst);
double BruteForceTau(const MinimaxInstance& inst);
// Exhaustive τ' with the earliest optimal Y.
BruteOptimum BruteForceMaxMin(const MinimaxInstance& inst);

// Exhaustive runs are refused beyond this many oracle evaluations.
inline constexpr std::uint64_t kBruteForceBudget = std::uint64_t{1} << 28;

}  // namespace smx

#endif  // SMX_MINIMAX_H_
