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

#ifndef SMX_HARNESS_EXPERIMENT_H_
#define SMX_HARNESS_EXPERIMENT_H_

// Seeded experiment sweeps over (λ × k × ε/β) cells, seeds and algorithms.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "smx/baselines.h"
#include "smx/harness/io.h"
#include "smx/minimax.h"
#include "smx/objectives.h"
#include "smx/submax.h"

namespace smx::harness {

struct ClusterParams {
  std::size_t clusters = 4;
  // Standard deviation of each coordinate around its cluster center.
  double spread = 0.005;
  // N2 points copy the coordinates of distinct random N1 points (as when
  // driver locations are sampled from the pickups), instead of being drawn
  // from the clusters. Needs n2 <= n1; otherwise N2 is drawn from the
  // clusters.
  bool n2_from_n1 = true;
};

// Gaussian clusters in the unit square; ids x<i> (N1), y<j> (N2), a<i>
// (anchors). Deterministic per seed.
PointSet SynthPoints(std::size_t n1, std::size_t n2, std::uint64_t seed,
                     const ClusterParams& clusters = {},
                     std::size_t anchors = 0);

enum class DataKind { kSynthetic, kPoints, kMatrix };

struct DataSource {
  DataKind kind = DataKind::kSynthetic;
  std::string path;
  std::size_t n1 = 8;
  std::size_t n2 = 6;
  std::size_t anchors = 0;
  std::uint64_t seed = 1;
  ClusterParams clusters;
};

SimilarityMatrix LoadSimilarity(const DataSource& data);

struct ExperimentSpec {
  Mode mode = Mode::kMinMax;
  ObjectiveKind objective = ObjectiveKind::kFacility;
  double alpha_div = 1.0;
  double beta_lin = 0.0;
  // Cube-norm k; defaults to the cell's k.
  std::optional<double> k_card;
  std::vector<double> lambdas{0.0};
  // Empty means no cardinality bound on N2.
  std::vector<std::size_t> ks;
  std::vector<double> epsilons{0.25};
  // Empty means β = sqrt(n1).
  std::vector<double> betas;
  std::vector<std::string> algorithms;
  std::vector<std::uint64_t> seeds{1};
  DataSource data;

  MaximizerKind maximizer = MaximizerKind::kThresholdGreedy;
  double eps_t = 0.05;
  std::size_t repeats = 1;
  std::size_t max_iters = 50;
  bool best_iterate = false;
  // Random subsets always sample, even when 2^{n2} <= m.
  bool sampled = false;
  // brute_tau is filled when the exhaustive search needs at most
  // 2^brute_limit oracle calls.
  std::size_t brute_limit = 22;
  // 0 means one worker per hardware thread.
  std::size_t threads = 0;
  // Fill the millis column (breaks byte-identical reruns).
  bool timing = false;

  void Validate() const;
};

// Algorithms accepted in each mode.
std::vector<std::string> AlgorithmNames(Mode mode);

// Flat JSON document; keys mirror the CLI flags (lambda, k, epsilon, beta,
// algo, seeds, ...). Scalars or arrays of scalars.
ExperimentSpec ParseSpecJson(const std::string& text);
ExperimentSpec LoadSpec(const std::string& path);

struct AlgorithmParams {
  MaximizerKind maximizer = MaximizerKind::kThresholdGreedy;
  double eps_t = 0.05;
  std::size_t repeats = 1;
  std::size_t max_iters = 50;
  bool best_iterate = false;
  bool sampled = false;
  std::optional<double> epsilon;
  std::optional<double> beta;
  std::size_t k = 0;
};

// Runs one algorithm on one instance.
SolveResult RunAlgorithm(const MinimaxInstance& inst, Mode mode,
                         const std::string& algorithm,
                         const AlgorithmParams& params, std::uint64_t seed);

// Mode evaluation rule: g(Y) for max-min, threshold-greedy max over Y for
// min-max.
double EvaluateChosen(const MinimaxInstance& inst, Mode mode,
                      const Subset& chosen, double eps_t);

// Exhaustive τ' (max-min) or τ (min-max), when within the budget.
std::optional<double> BruteValue(const MinimaxInstance& inst, Mode mode,
                                 std::size_t brute_limit);

MinimaxInstance BuildInstance(const ExperimentSpec& spec,
                              const SimilarityMatrix& s, double lambda,
                              std::size_t k);

// One row per (λ, k, algorithm, ε/β, seed) in that nesting order.
std::vector<ResultRow> RunExperiment(const ExperimentSpec& spec);

}  // namespace smx::harness

#endif  // SMX_HARNESS_EXPERIMENT_H_
