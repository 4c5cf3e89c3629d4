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

#ifndef SMX_INSTANCES_H_
#define SMX_INSTANCES_H_

// Seeded random instance families used by tests, benchmarks and the
// verification suites.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "smx/minimax.h"
#include "smx/objectives.h"
#include "smx/oracle.h"
#include "smx/random.h"
#include "smx/reductions.h"

namespace smx {

struct WeightedEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  double weight = 0.0;
};

// Σ w over edges leaving S.
GroundFunction DirectedCut(std::size_t n, std::vector<WeightedEdge> edges);
// Σ w_i over S.
GroundFunction Modular(std::vector<double> weights);
// Σ of item weights covered by S; element i covers the items in covers[i]
// (a bit mask over at most 64 items).
GroundFunction Coverage(std::vector<std::uint64_t> covers,
                        std::vector<double> item_weights);
// sqrt(Σ w_i over S), w >= 0.
GroundFunction SqrtModular(std::vector<double> weights);
GroundFunction Sum(std::vector<GroundFunction> parts);

GroundFunction RandomDirectedCut(Rng& rng, std::size_t n, double density,
                                 double max_weight = 1.0);
GroundFunction RandomCoverage(Rng& rng, std::size_t n, std::size_t items,
                              double density);
GroundFunction RandomModular(Rng& rng, std::size_t n, double lo, double hi);

// Flat function over N1 ⊎ N2 (bits 0..n1-1 are N1) as a bipartite oracle.
OraclePtr FromFlat(std::size_t n1, std::size_t n2, GroundFunction flat);

// Directed cut + coverage + sqrt-modular + nonnegative modular over the
// combined ground set. Nonnegative and jointly submodular.
MinimaxInstance RandomJointInstance(Rng& rng, std::size_t n1, std::size_t n2);
// Σ_{v ∈ N1 \ X} max_{u ∈ Y} s_{u,v} + β Σ_{v ∈ N1 \ X} Σ_{u ∈ Y} s_{u,v}
// + λ|X| with random s. Jointly submodular and N2-monotone.
MinimaxInstance RandomMonotoneJointInstance(Rng& rng, std::size_t n1,
                                            std::size_t n2);
// Σ_t A_t(X) B_t(Y) + C(X) + D(Y) with nonnegative submodular parts.
// Disjointly submodular; usually not jointly submodular.
MinimaxInstance RandomDisjointInstance(Rng& rng, std::size_t n1,
                                       std::size_t n2);

// Directed cut plus a modular term with weights in [-2, 1].
GroundFunction RandomCutPlusModular(Rng& rng, std::size_t n);
// Coverage minus a nonnegative modular term.
GroundFunction RandomCoverageMinusModular(Rng& rng, std::size_t n);
// Nonnegative submodular (cut + coverage + small modular).
GroundFunction RandomNonnegativeSubmodular(Rng& rng, std::size_t n);

// m nonnegative submodular functions over n2 elements: a mix of coverage,
// cut, modular and sqrt-modular members. Monotone members are flagged.
FunctionFamily RandomFamily(Rng& rng, std::size_t m, std::size_t n2,
                            bool monotone_only = false);

// Clauses of 1..max_width distinct variables with random signs.
CnfFormula RandomCnf(Rng& rng, std::size_t num_vars, std::size_t num_clauses,
                     std::size_t max_width = 3);

// Entries uniform in [0, 1], symmetric N2 block with unit diagonal.
SimilarityMatrix RandomSimilarity(Rng& rng, std::size_t n1, std::size_t n2,
                                  std::size_t anchors = 0);
// Objective over a random similarity matrix (or, with probability 1/2,
// convenience scores of random clustered points) with random λ, α, β.
MinimaxInstance RandomObjectiveInstance(Rng& rng, ObjectiveKind kind,
                                        std::size_t n1, std::size_t n2);

// n1 = n2 = 1 with f(∅) = 1, f({x}) = 0.5, f({y}) = 2, f({x, y}) = 1.
MinimaxInstance ToyInstance();

}  // namespace smx

#endif  // SMX_INSTANCES_H_
