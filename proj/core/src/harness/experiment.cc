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

#include "smx/harness/experiment.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "smx/error.h"
#include "smx/random.h"

namespace smx::harness {

namespace {

using Json = nlohmann::json;

const std::vector<std::string>& MaxMinAlgorithms() {
  static const std::vector<std::string> kNames = {
      "min-as-oracle", "random",        "max-only",
      "top-k",         "best-response", "brute-force"};
  return kNames;
}

const std::vector<std::string>& MinMaxAlgorithms() {
  static const std::vector<std::string> kNames = {
      "singletons", "random-subsets", "best-of-two",   "x-growing",
      "random",     "max-then-min",   "best-response", "brute-force"};
  return kNames;
}

bool UsesEpsilon(const std::string& algo) {
  return algo == "random-subsets" || algo == "best-of-two";
}

bool UsesBeta(const std::string& algo) { return algo == "x-growing"; }

template <typename T>
std::vector<T> ScalarOrArray(const Json& value, const std::string& key) {
  std::vector<T> out;
  try {
    if (value.is_array()) {
      for (const Json& v : value) out.push_back(v.get<T>());
    } else {
      out.push_back(value.get<T>());
    }
  } catch (const Json::exception& e) {
    Fail(ErrorCode::kUsage, "config key '" + key + "': " + e.what());
  }
  return out;
}

template <typename T>
T Scalar(const Json& value, const std::string& key) {
  try {
    return value.get<T>();
  } catch (const Json::exception& e) {
    Fail(ErrorCode::kUsage, "config key '" + key + "': " + e.what());
  }
}

// Runs fn(i) for i in [0, count) on up to `threads` workers.
template <typename Fn>
void ParallelFor(std::size_t count, std::size_t threads, Fn fn) {
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = std::min(threads, count);
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) fn(i);
    });
  }
  for (std::thread& th : pool) th.join();
}

}  // namespace

PointSet SynthPoints(std::size_t n1, std::size_t n2, std::uint64_t seed,
                     const ClusterParams& clusters, std::size_t anchors) {
  Require(clusters.clusters >= 1, ErrorCode::kDomain,
          "need at least one cluster");
  Require(clusters.spread >= 0.0, ErrorCode::kDomain,
          "cluster spread must be >= 0");
  Rng rng(DeriveSeed(seed, "synth-points"));
  std::vector<std::pair<double, double>> centers(clusters.clusters);
  for (auto& [cx, cy] : centers) {
    cx = UniformReal(rng, 0.1, 0.9);
    cy = UniformReal(rng, 0.1, 0.9);
  }
  PointSet points;
  auto draw = [&](std::string_view prefix, PointSide side, std::size_t count) {
    for (std::size_t i = 0; i < count; ++i) {
      const auto& [cx, cy] = centers[UniformIndex(rng, centers.size())];
      Point p;
      p.id = std::string(prefix) + std::to_string(i);
      p.side = side;
      p.x = std::clamp(cx + clusters.spread * StandardNormal(rng), 0.0, 1.0);
      p.y = std::clamp(cy + clusters.spread * StandardNormal(rng), 0.0, 1.0);
      points.points.push_back(std::move(p));
    }
  };
  draw("x", PointSide::kN1, n1);
  if (clusters.n2_from_n1 && n2 <= n1) {
    const Bitset picked = UniformKSubset(rng, n1, n2);
    std::size_t j = 0;
    for (std::size_t i = 0; i < n1; ++i) {
      if (!picked.test(i)) continue;
      Point p = points.points[i];
      p.id = "y" + std::to_string(j++);
      p.side = PointSide::kN2;
      points.points.push_back(std::move(p));
    }
  } else {
    draw("y", PointSide::kN2, n2);
  }
  draw("a", PointSide::kAnchor, anchors);
  return points;
}

SimilarityMatrix LoadSimilarity(const DataSource& data) {
  switch (data.kind) {
    case DataKind::kSynthetic:
      return BuildConvenienceMatrix(SynthPoints(data.n1, data.n2, data.seed,
                                                data.clusters, data.anchors));
    case DataKind::kPoints:
      return BuildConvenienceMatrix(ReadPoints(data.path));
    case DataKind::kMatrix:
      return ReadMatrix(data.path);
  }
  Fail(ErrorCode::kUsage, "unknown data source");
}

std::vector<std::string> AlgorithmNames(Mode mode) {
  return mode == Mode::kMaxMin ? MaxMinAlgorithms() : MinMaxAlgorithms();
}

void ExperimentSpec::Validate() const {
  Require(!lambdas.empty(), ErrorCode::kUsage, "lambda grid is empty");
  Require(!epsilons.empty(), ErrorCode::kUsage, "epsilon grid is empty");
  Require(!algorithms.empty(), ErrorCode::kUsage, "no algorithms given");
  Require(!seeds.empty(), ErrorCode::kUsage, "no seeds given");
  Require(repeats >= 1, ErrorCode::kUsage, "repeats must be >= 1");
  Require(std::set<std::uint64_t>(seeds.begin(), seeds.end()).size() ==
              seeds.size(),
          ErrorCode::kUsage, "seeds must be distinct");
  const std::vector<std::string> valid = AlgorithmNames(mode);
  for (const std::string& a : algorithms) {
    if (std::find(valid.begin(), valid.end(), a) == valid.end()) {
      std::string list;
      for (const std::string& v : valid) list += (list.empty() ? "" : ", ") + v;
      Fail(ErrorCode::kUsage, "algorithm '" + a + "' is not available in " +
                                  std::string(ModeName(mode)) +
                                  " mode (choose from " + list + ")");
    }
  }
  for (double l : lambdas) {
    Require(std::isfinite(l) && l >= 0.0, ErrorCode::kUsage,
            "lambda must be >= 0");
  }
  for (double e : epsilons) {
    Require(e > 0.0 && e < 0.5, ErrorCode::kUsage,
            "epsilon must lie in (0, 1/2)");
  }
  for (double b : betas) {
    Require(std::isfinite(b) && b >= 0.0, ErrorCode::kUsage,
            "beta must be >= 0");
  }
  Require(alpha_div >= 0.0 && alpha_div <= 1.0, ErrorCode::kUsage,
          "alpha_div must lie in [0, 1]");
  Require(eps_t > 0.0 && eps_t < 1.0, ErrorCode::kUsage,
          "eps_t must lie in (0, 1)");
  if (data.kind != DataKind::kSynthetic) {
    Require(!data.path.empty(), ErrorCode::kUsage, "data path is empty");
  }
}

ExperimentSpec ParseSpecJson(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::exception& e) {
    Fail(ErrorCode::kParse, std::string("config is not valid JSON: ") +
                                e.what());
  }
  if (!doc.is_object()) Fail(ErrorCode::kParse, "config must be an object");
  ExperimentSpec spec;
  for (const auto& [key, value] : doc.items()) {
    if (value.is_object()) {
      Fail(ErrorCode::kUsage, "config key '" + key + "' must be flat");
    }
    if (key == "mode") {
      spec.mode = ParseMode(Scalar<std::string>(value, key));
    } else if (key == "objective") {
      spec.objective = ParseObjective(Scalar<std::string>(value, key));
    } else if (key == "lambda") {
      spec.lambdas = ScalarOrArray<double>(value, key);
    } else if (key == "k") {
      spec.ks = ScalarOrArray<std::size_t>(value, key);
    } else if (key == "epsilon") {
      spec.epsilons = ScalarOrArray<double>(value, key);
    } else if (key == "beta") {
      spec.betas = ScalarOrArray<double>(value, key);
    } else if (key == "algo") {
      spec.algorithms = ScalarOrArray<std::string>(value, key);
    } else if (key == "seeds" || key == "seed") {
      spec.seeds = ScalarOrArray<std::uint64_t>(value, key);
    } else if (key == "points") {
      spec.data.kind = DataKind::kPoints;
      spec.data.path = Scalar<std::string>(value, key);
    } else if (key == "matrix") {
      spec.data.kind = DataKind::kMatrix;
      spec.data.path = Scalar<std::string>(value, key);
    } else if (key == "synth_n1") {
      spec.data.n1 = Scalar<std::size_t>(value, key);
    } else if (key == "synth_n2") {
      spec.data.n2 = Scalar<std::size_t>(value, key);
    } else if (key == "synth_n2_from_n1") {
      spec.data.clusters.n2_from_n1 = Scalar<bool>(value, key);
    } else if (key == "synth_anchors") {
      spec.data.anchors = Scalar<std::size_t>(value, key);
    } else if (key == "synth_seed") {
      spec.data.seed = Scalar<std::uint64_t>(value, key);
    } else if (key == "synth_clusters") {
      spec.data.clusters.clusters = Scalar<std::size_t>(value, key);
    } else if (key == "synth_spread") {
      spec.data.clusters.spread = Scalar<double>(value, key);
    } else if (key == "alpha_div") {
      spec.alpha_div = Scalar<double>(value, key);
    } else if (key == "beta_lin") {
      spec.beta_lin = Scalar<double>(value, key);
    } else if (key == "k_card") {
      spec.k_card = Scalar<double>(value, key);
    } else if (key == "maximizer") {
      spec.maximizer = ParseMaximizer(Scalar<std::string>(value, key));
    } else if (key == "eps_t") {
      spec.eps_t = Scalar<double>(value, key);
    } else if (key == "repeats") {
      spec.repeats = Scalar<std::size_t>(value, key);
    } else if (key == "max_iters") {
      spec.max_iters = Scalar<std::size_t>(value, key);
    } else if (key == "best_iterate") {
      spec.best_iterate = Scalar<bool>(value, key);
    } else if (key == "sampled") {
      spec.sampled = Scalar<bool>(value, key);
    } else if (key == "brute_limit") {
      spec.brute_limit = Scalar<std::size_t>(value, key);
    } else if (key == "threads") {
      spec.threads = Scalar<std::size_t>(value, key);
    } else if (key == "timing") {
      spec.timing = Scalar<bool>(value, key);
    } else {
      Fail(ErrorCode::kUsage, "unknown config key '" + key + "'");
    }
  }
  return spec;
}

ExperimentSpec LoadSpec(const std::string& path) {
  std::ifstream in(path);
  if (!in) Fail(ErrorCode::kIo, "cannot open '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return ParseSpecJson(text.str());
}

SolveResult RunAlgorithm(const MinimaxInstance& inst, Mode mode,
                         const std::string& algorithm,
                         const AlgorithmParams& params, std::uint64_t seed) {
  MaximizerSpec maximizer;
  maximizer.kind = params.maximizer;
  maximizer.eps_t = params.eps_t;
  maximizer.seed = DeriveSeed(seed, algorithm);
  maximizer.monotone = inst.tags.n2_monotone;
  const BiGroundSet& ground = inst.ground();

  if (algorithm == "random") return RandomBaseline(inst, mode, seed);
  if (algorithm == "best-response") {
    BestResponseOptions options;
    options.max_iters = params.max_iters;
    options.mode = mode;
    return BestResponse(inst, maximizer, options).result;
  }
  if (algorithm == "brute-force") {
    SolveResult result;
    result.chosen = Subset::Empty(ground);
    const std::uint64_t calls = inst.f->call_count();
    const BruteOptimum best = mode == Mode::kMaxMin ? BruteForceMaxMin(inst)
                                                    : BruteForceMinMax(inst);
    (mode == Mode::kMaxMin ? result.chosen.y : result.chosen.x) = best.set;
    result.value = best.value;
    result.tau_lower = best.value;
    result.tau_upper = best.value;
    result.certificate = Certificate::kDeterministic;
    result.oracle_calls = inst.f->call_count() - calls;
    return result;
  }
  if (mode == Mode::kMaxMin) {
    if (algorithm == "min-as-oracle") {
      return MaxMinViaOracle(inst, maximizer, params.repeats, seed);
    }
    if (algorithm == "max-only") return MaxOnly(inst, maximizer);
    if (algorithm == "top-k") return TopKSingletons(inst, params.k);
  } else {
    if (algorithm == "singletons") return MinMaxSingletons(inst);
    if (algorithm == "random-subsets" || algorithm == "best-of-two") {
      const SamplePlan plan =
          SamplePlan::Make(params.epsilon.value_or(0.25), ground.n1, ground.n2,
                           seed, /*allow_exact=*/!params.sampled);
      return algorithm == "random-subsets" ? MinMaxRandomSubsets(inst, plan)
                                           : BestOfTwo(inst, plan);
    }
    if (algorithm == "x-growing") {
      GrowingOptions options;
      options.beta = params.beta;
      options.best_iterate = params.best_iterate;
      return IterativeXGrowing(inst, MakeAlphaOracle(inst, maximizer), options);
    }
    if (algorithm == "max-then-min") return MaxAndThenMin(inst, maximizer);
  }
  Fail(ErrorCode::kUsage, "algorithm '" + algorithm + "' is not available in " +
                              std::string(ModeName(mode)) + " mode");
}

double EvaluateChosen(const MinimaxInstance& inst, Mode mode,
                      const Subset& chosen, double eps_t) {
  return mode == Mode::kMaxMin ? EvaluateMaxMin(inst, chosen.y)
                               : EvaluateMinMaxProxy(inst, chosen.x, eps_t);
}

std::optional<double> BruteValue(const MinimaxInstance& inst, Mode mode,
                                 std::size_t brute_limit) {
  const BiGroundSet& g = inst.ground();
  if (g.n1 > 24 || g.n2 > 30) return std::nullopt;
  const double log_y = std::log2(static_cast<double>(
      std::max<std::uint64_t>(1, FeasibleCount(g.n2, inst.f2))));
  if (static_cast<double>(g.n1) + log_y > static_cast<double>(brute_limit)) {
    return std::nullopt;
  }
  if (mode == Mode::kMinMax && g.n1 > 14) return std::nullopt;
  return mode == Mode::kMaxMin ? BruteForceMaxMin(inst).value
                               : BruteForceTau(inst);
}

MinimaxInstance BuildInstance(const ExperimentSpec& spec,
                              const SimilarityMatrix& s, double lambda,
                              std::size_t k) {
  ObjectiveConfig cfg;
  cfg.lambda = lambda;
  cfg.alpha_div = spec.alpha_div;
  cfg.beta_lin = spec.beta_lin;
  cfg.k_card = spec.k_card.value_or(static_cast<double>(k));
  MinimaxInstance inst;
  inst.f = MakeObjective(spec.objective, s, cfg);
  inst.f2 = k >= s.n2() ? Constraint::AllSubsets()
                        : Constraint::CardinalityAtMost(k);
  inst.tags = ObjectiveTags(spec.objective);
  return inst;
}

std::vector<ResultRow> RunExperiment(const ExperimentSpec& spec) {
  spec.Validate();
  const SimilarityMatrix s = LoadSimilarity(spec.data);
  const std::size_t n2 = s.n2();
  std::vector<std::size_t> ks = spec.ks;
  if (ks.empty()) ks.push_back(n2);
  for (std::size_t k : ks) {
    Require(k <= n2, ErrorCode::kUsage,
            "k=" + std::to_string(k) + " exceeds n2=" + std::to_string(n2));
  }

  struct Cell {
    double lambda;
    std::size_t k;
  };
  std::vector<Cell> cells;
  for (double lambda : spec.lambdas) {
    for (std::size_t k : ks) cells.push_back({lambda, k});
  }

  // Exhaustive values, one per cell.
  std::vector<std::optional<double>> brute(cells.size());
  ParallelFor(cells.size(), spec.threads, [&](std::size_t i) {
    try {
      brute[i] = BruteValue(BuildInstance(spec, s, cells[i].lambda, cells[i].k),
                            spec.mode, spec.brute_limit);
    } catch (const Error&) {
      brute[i] = std::nullopt;
    }
  });

  struct Job {
    std::size_t cell;
    std::string algorithm;
    std::optional<double> param;
    std::uint64_t seed;
  };
  std::vector<Job> jobs;
  for (std::size_t c = 0; c < cells.size(); ++c) {
    for (const std::string& algo : spec.algorithms) {
      std::vector<std::optional<double>> params{std::nullopt};
      if (UsesEpsilon(algo)) {
        params.assign(spec.epsilons.begin(), spec.epsilons.end());
      } else if (UsesBeta(algo) && !spec.betas.empty()) {
        params.assign(spec.betas.begin(), spec.betas.end());
      }
      for (const auto& param : params) {
        for (std::uint64_t seed : spec.seeds) {
          jobs.push_back({c, algo, param, seed});
        }
      }
    }
  }

  std::vector<ResultRow> rows(jobs.size());
  ParallelFor(jobs.size(), spec.threads, [&](std::size_t j) {
    const Job& job = jobs[j];
    const Cell& cell = cells[job.cell];
    ResultRow& row = rows[j];
    row.seed = job.seed;
    row.algorithm = job.algorithm;
    row.lambda = cell.lambda;
    row.k = cell.k;
    row.param = job.param;
    row.brute_tau = brute[job.cell];
    try {
      const MinimaxInstance inst = BuildInstance(spec, s, cell.lambda, cell.k);
      AlgorithmParams params;
      params.maximizer = spec.maximizer;
      params.eps_t = spec.eps_t;
      params.repeats = spec.repeats;
      params.max_iters = spec.max_iters;
      params.best_iterate = spec.best_iterate;
      params.sampled = spec.sampled;
      params.k = cell.k;
      if (UsesEpsilon(job.algorithm)) params.epsilon = job.param;
      if (UsesBeta(job.algorithm)) {
        params.beta = job.param;
        if (!row.param) row.param = std::sqrt(static_cast<double>(s.n1()));
      }
      const SolveResult r =
          RunAlgorithm(inst, spec.mode, job.algorithm, params, job.seed);
      row.chosen = r.chosen;
      row.value = EvaluateChosen(inst, spec.mode, r.chosen, spec.eps_t);
      row.tau_lower = r.tau_lower;
      row.tau_upper = r.tau_upper;
      row.oracle_calls = r.oracle_calls;
      row.iterations = r.iterations;
      if (spec.timing) row.millis = r.millis;
    } catch (const std::exception& e) {
      row.error = e.what();
    }
  });
  return rows;
}

}  // namespace smx::harness
