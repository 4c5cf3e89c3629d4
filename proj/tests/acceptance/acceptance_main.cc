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

// Acceptance runner. Prints one [PASS]/[FAIL] line per criterion and exits
// nonzero if any selected criterion fails. Instance counts, seeds and
// tolerances are fixed here; budgets are wall-clock seconds on a Release
// build.

#include <chrono>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "smx/baselines.h"
#include "smx/error.h"
#include "smx/harness/experiment.h"
#include "smx/harness/io.h"
#include "smx/harness/verify.h"
#include "smx/objectives.h"

namespace smx::harness {
namespace {

constexpr std::uint64_t kSeed = 20260101;

struct Outcome {
  bool passed = true;
  std::string detail;
};

// Folds several property results into one criterion outcome.
Outcome Merge(const std::vector<PropertyResult>& parts) {
  Outcome out;
  for (const PropertyResult& r : parts) {
    out.passed = out.passed && r.passed;
    if (!out.detail.empty()) out.detail += "; ";
    out.detail += r.name + " " + std::to_string(r.cases) + " cases" +
                  (r.detail.empty() ? "" : " (" + r.detail + ")");
  }
  return out;
}

PropertyScale Scale(std::size_t instances) { return {instances, kSeed}; }

std::string Fixed(double v) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(4) << v;
  return out.str();
}

// Mean value per algorithm over ten synthetic facility instances. X-growing
// runs as in the ride-share experiments: best iterate, beta = 0.5.
std::map<std::string, double> DirectionalMeans(
    Mode mode, const std::vector<std::string>& algorithms) {
  std::map<std::string, double> sum;
  constexpr std::size_t kInstances = 10;
  for (std::uint64_t s = 1; s <= kInstances; ++s) {
    ExperimentSpec spec;
    spec.mode = mode;
    spec.objective = ObjectiveKind::kFacility;
    spec.lambdas = {0.2};
    spec.ks = {5};
    spec.algorithms = algorithms;
    spec.seeds = {s};
    spec.data.n1 = 60;
    spec.data.n2 = 20;
    spec.data.seed = s;
    spec.betas = {0.5};
    spec.best_iterate = true;
    spec.brute_limit = 0;
    spec.threads = 1;
    for (const ResultRow& row : RunExperiment(spec)) {
      if (row.error) Fail(ErrorCode::kContract, *row.error);
      sum[row.algorithm] += row.value;
    }
  }
  for (auto& [name, total] : sum) total /= kInstances;
  return sum;
}

Outcome Directional() {
  const auto minmax =
      DirectionalMeans(Mode::kMinMax, {"x-growing", "singletons", "random"});
  const auto maxmin = DirectionalMeans(Mode::kMaxMin, {"min-as-oracle", "random"});
  Outcome out;
  out.passed = minmax.at("x-growing") <= minmax.at("random") &&
               minmax.at("singletons") <= minmax.at("random") &&
               maxmin.at("min-as-oracle") >= maxmin.at("random");
  out.detail = "minmax proxy means: x-growing " + Fixed(minmax.at("x-growing")) +
               ", singletons " + Fixed(minmax.at("singletons")) + ", random " +
               Fixed(minmax.at("random")) + "; maxmin means: min-as-oracle " +
               Fixed(maxmin.at("min-as-oracle")) + ", random " +
               Fixed(maxmin.at("random"));
  return out;
}

Outcome Determinism() {
  ExperimentSpec spec;
  spec.mode = Mode::kMinMax;
  spec.objective = ObjectiveKind::kDst;
  spec.lambdas = {0.1, 0.4};
  spec.epsilons = {0.2, 0.4};
  spec.algorithms = AlgorithmNames(Mode::kMinMax);
  spec.seeds = {1, 2, 3};
  spec.data.n1 = 6;
  spec.data.n2 = 5;
  spec.data.seed = 9;
  auto csv = [](const ExperimentSpec& s) {
    std::ostringstream out;
    WriteResults(out, RunExperiment(s));
    return out.str();
  };
  spec.threads = 1;
  const std::string first = csv(spec);
  const std::string second = csv(spec);
  spec.threads = 3;
  const std::string threaded = csv(spec);
  spec.mode = Mode::kMaxMin;
  spec.algorithms = AlgorithmNames(Mode::kMaxMin);
  spec.ks = {2};
  spec.threads = 1;
  const std::string maxmin_a = csv(spec);
  const std::string maxmin_b = csv(spec);
  Outcome out;
  out.passed = first == second && first == threaded && maxmin_a == maxmin_b;
  out.detail = std::to_string(first.size() + maxmin_a.size()) +
               " CSV bytes compared across reruns and thread counts";
  return out;
}

struct Criterion {
  std::string label;
  double budget_seconds;
  std::function<Outcome()> run;
};

std::vector<Criterion> Criteria() {
  return {
      {"SFM exactness (MNP = brute force within 1e-6, 200 instances)", 60,
       [] { return Merge({CheckSfmExactness(Scale(200), 12)}); }},
      {"USM half-approximation (double greedy >= OPT/2, 200 instances)", 30,
       [] { return Merge({CheckUsmHalf(Scale(200), 12)}); }},
      {"inner-min g submodular, monotone when f is (50 instances)", 60,
       [] { return Merge({CheckInnerMinProperties(Scale(50), 5)}); }},
      {"max-min via oracle <= optimum, = optimum with exact maximizer", 60,
       [] { return Merge({CheckMaxMinUpperBound(Scale(50), 5)}); }},
      {"singletons bracket [tau, (n2+1) tau] and per-X sandwich", 120,
       [] { return Merge({CheckSingletonsBracket(Scale(100), 8, 6)}); }},
      {"max_Y f(X+Y) <= 4 h(X) for all X (50 instances, 5 families)", 120,
       [] {
         return Merge({CheckFourHBound(Scale(10), std::nullopt, 6),
                       CheckFourHBound(Scale(10), ObjectiveKind::kFacility, 6),
                       CheckFourHBound(Scale(10), ObjectiveKind::kRobustQa, 6),
                       CheckFourHBound(Scale(10), ObjectiveKind::kDst, 6),
                       CheckFourHBound(Scale(10), ObjectiveKind::kCubeNorm, 6)});
       }},
      {"random subsets: exact bracket and sampled failure rate", 600,
       [] {
         return Merge({CheckRandomSubsetsExact(Scale(100), 6),
                       CheckRandomSubsetsSampled(Scale(4), 100, 0.4, 10, 6)});
       }},
      {"best-of-two max_Y f <= 4(n2+1) tau on the random-subsets instances",
       600,
       [] {
         return Merge(
             {CheckBestOfTwoBound(Scale(100), 6, 4, 100, 0.4, 10, 6)});
       }},
      {"x-growing bracket [tau, (3 sqrt(n1) + 3) tau], <= n1+1 iterations",
       300, [] { return Merge({CheckGrowingBracket(Scale(100), 8, 5)}); }},
      {"gadget min over X = min_i g_i, disjoint submodularity, monotonicity",
       120, [] { return Merge({CheckGadgets(Scale(100), 4, 5)}); }},
      {"SAT tracking, both encodings (40 formulas)", 120,
       [] { return Merge({CheckSatTracking(Scale(40), 6, 8)}); }},
      {"objectives nonnegative and jointly submodular (n1+n2 <= 8)", 120,
       [] {
         return Merge(
             {CheckObjectiveProperties(Scale(10), ObjectiveKind::kFacility, 8),
              CheckObjectiveProperties(Scale(10), ObjectiveKind::kRobustQa, 8),
              CheckObjectiveProperties(Scale(10), ObjectiveKind::kDst, 8),
              CheckObjectiveProperties(Scale(10), ObjectiveKind::kCubeNorm, 8)});
       }},
      {"directional sanity on synthetic facility (n1=60, n2=20, k=5)", 300,
       Directional},
      {"sweep determinism (byte-identical CSV)", 60, Determinism},
  };
}

bool RunOne(std::size_t index, const Criterion& c) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = c.run();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double seconds = std::chrono::duration<double>(
                             std::chrono::steady_clock::now() - start)
                             .count();
  const bool in_budget = seconds <= c.budget_seconds;
  const bool passed = out.passed && in_budget;
  std::cout << (passed ? "[PASS] " : "[FAIL] ") << 'C' << std::setw(2)
            << std::setfill('0') << index << std::setfill(' ') << ' '
            << c.label << " | " << out.detail << " | " << Fixed(seconds)
            << " s of " << c.budget_seconds << " s budget"
            << (in_budget ? "" : " (over budget)") << std::endl;
  return passed;
}

}  // namespace
}  // namespace smx::harness

int main(int argc, char** argv) {
  CLI::App app{"smx acceptance criteria"};
  std::vector<std::size_t> selected;
  app.add_option("--criterion", selected, "criterion numbers (default: all)")
      ->check(CLI::Range(1, 14));
  CLI11_PARSE(app, argc, argv);

  const auto criteria = smx::harness::Criteria();
  if (selected.empty()) {
    for (std::size_t i = 1; i <= criteria.size(); ++i) selected.push_back(i);
  }
  bool ok = true;
  for (std::size_t i : selected) {
    ok = smx::harness::RunOne(i, criteria[i - 1]) && ok;
  }
  return ok ? 0 : 1;
}
