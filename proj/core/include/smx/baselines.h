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

#ifndef SMX_BASELINES_H_
#define SMX_BASELINES_H_

// Comparison baselines for the max-min and min-max problems. All of them
// return the chosen pair in SolveResult::chosen with value = f(chosen)
// re-evaluated; no bracket is ever filled.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "smx/minimax.h"

namespace smx {

enum class Mode { kMaxMin, kMinMax };

std::string_view ModeName(Mode mode);
Mode ParseMode(std::string_view name);

// Max-min: a uniform feasible Y of the largest feasible size (uniform subset
// under AllSubsets). Min-max: a uniform subset of N1.
SolveResult RandomBaseline(const MinimaxInstance& inst, Mode mode,
                           std::uint64_t seed);

// Y maximizing f(∅ ⊎ Y) over F2.
SolveResult MaxOnly(const MinimaxInstance& inst,
                    const MaximizerSpec& maximizer);

// Max-Only's Y followed by the inner argmin X against it.
SolveResult MaxAndThenMin(const MinimaxInstance& inst,
                          const MaximizerSpec& maximizer);

// The k elements of N2 with the largest g({u}); earliest index on ties.
SolveResult TopKSingletons(const MinimaxInstance& inst, std::size_t k);

struct BestResponseStep {
  Bitset x;
  Bitset y;
  double value = 0.0;
};

struct BestResponseTrace {
  std::vector<BestResponseStep> steps;
  bool converged = false;
  bool cycle_detected = false;
};

struct BestResponseOptions {
  std::size_t max_iters = 50;
  Mode mode = Mode::kMaxMin;
  bool return_best_seen = false;
};

struct BestResponseResult {
  SolveResult result;
  BestResponseTrace trace;
};

// Alternates Y_t = maximizer(X_{t-1}) (X_0 = ∅) and X_t = argmin f(· ⊎ Y_t)
// until a fixed point, a repeated pair, or max_iters rounds.
BestResponseResult BestResponse(const MinimaxInstance& inst,
                                const MaximizerSpec& maximizer,
                                const BestResponseOptions& options = {});

// Evaluation rules used to compare algorithms. Max-min: g(y). Min-max:
// threshold-greedy estimate of max_{Y ∈ F2} f(x ⊎ Y).
double EvaluateMaxMin(const MinimaxInstance& inst, const Bitset& y);
double EvaluateMinMaxProxy(const MinimaxInstance& inst, const Bitset& x,
                           double eps_t = 0.05);

}  // namespace smx

#endif  // SMX_BASELINES_H_
