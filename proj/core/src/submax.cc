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

#include "smx/submax.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "smx/error.h"
#include "smx/random.h"

namespace smx {

namespace {

void CheckCardinality(const GroundFunction& f, std::size_t k) {
  if (k > f.n) {
    Fail(ErrorCode::kDomain, "cardinality k=" + std::to_string(k) +
                                 " exceeds ground set size " +
                                 std::to_string(f.n));
  }
}

constexpr double kGreedyMonotoneAlpha =
    std::numbers::e / (std::numbers::e - 1.0);

}  // namespace

MaxResult GreedyCardinality(const GroundFunction& f, std::size_t k,
                            bool force_k, bool monotone) {
  CheckCardinality(f, k);
  Bitset chosen(f.n);
  double current = f(chosen);
  for (std::size_t round = 0; round < k; ++round) {
    std::size_t best = f.n;
    double best_gain = 0.0;
    double best_value = 0.0;
    for (std::size_t u = 0; u < f.n; ++u) {
      if (chosen.test(u)) continue;
      chosen.set(u);
      const double v = f(chosen);
      chosen.reset(u);
      const double gain = v - current;
      if (best == f.n || gain > best_gain) {
        best = u;
        best_gain = gain;
        best_value = v;
      }
    }
    if (best == f.n) break;
    if (!force_k && best_gain <= 0.0) break;
    chosen.set(best);
    current = best_value;
  }
  MaxResult result;
  result.value = f(chosen);
  result.chosen = std::move(chosen);
  result.alpha_claim = monotone ? kGreedyMonotoneAlpha : kHeuristicAlpha;
  return result;
}

MaxResult ThresholdGreedy(const GroundFunction& f, std::size_t k,
                          double eps_t, bool monotone) {
  CheckCardinality(f, k);
  if (!(eps_t > 0.0 && eps_t < 1.0)) {
    Fail(ErrorCode::kDomain,
         "threshold greedy eps_t must lie in (0,1), got " + std::to_string(eps_t));
  }
  Bitset chosen(f.n);
  double current = f(chosen);
  double top = 0.0;
  for (std::size_t u = 0; u < f.n; ++u) {
    chosen.set(u);
    top = std::max(top, f(chosen) - current);
    chosen.reset(u);
  }
  std::size_t size = 0;
  if (top > 0.0 && k > 0) {
    const double floor = eps_t / static_cast<double>(f.n) * top;
    for (double threshold = top; threshold >= floor && size < k;
         threshold *= (1.0 - eps_t)) {
      for (std::size_t u = 0; u < f.n && size < k; ++u) {
        if (chosen.test(u)) continue;
        chosen.set(u);
        const double v = f(chosen);
        if (v - current >= threshold) {
          current = v;
          ++size;
        } else {
          chosen.reset(u);
        }
      }
    }
  }
  MaxResult result;
  result.value = f(chosen);
  result.chosen = std::move(chosen);
  result.alpha_claim = monotone ? 1.0 / (1.0 - 1.0 / std::numbers::e - eps_t)
                                : kHeuristicAlpha;
  return result;
}

MaxResult RandomGreedy(const GroundFunction& f, std::size_t k,
                       std::uint64_t seed) {
  CheckCardinality(f, k);
  Rng rng(seed);
  Bitset chosen(f.n);
  double current = f(chosen);
  struct Candidate {
    std::size_t index;
    double gain;
    double value;
  };
  std::vector<Candidate> pool;
  for (std::size_t round = 0; round < k; ++round) {
    pool.clear();
    for (std::size_t u = 0; u < f.n; ++u) {
      if (chosen.test(u)) continue;
      chosen.set(u);
      const double v = f(chosen);
      chosen.reset(u);
      pool.push_back({u, v - current, v});
    }
    if (pool.empty()) break;
    std::stable_sort(pool.begin(), pool.end(),
                     [](const Candidate& a, const Candidate& b) {
                       return a.gain > b.gain;
                     });
    const std::size_t width = std::min(k, pool.size());
    const Candidate& pick = pool[UniformIndex(rng, width)];
    // Negative marginals stand in for dummies: picking one adds nothing.
    if (pick.gain < 0.0) continue;
    chosen.set(pick.index);
    current = pick.value;
  }
  MaxResult result;
  result.value = f(chosen);
  result.chosen = std::move(chosen);
  result.alpha_claim = std::numbers::e;
  return result;
}

MaxResult DoubleGreedyUsm(const GroundFunction& f) {
  auto eval = [&f](const Bitset& s) {
    const double v = f(s);
    if (v < -1e-12) {
      Fail(ErrorCode::kContract, "double greedy requires a nonnegative "
                                 "function; f(" + s.ToString() + ")=" +
                                 std::to_string(v));
    }
    return v;
  };
  Bitset lower(f.n);
  Bitset upper = Bitset::Full(f.n);
  double lower_value = eval(lower);
  double upper_value = eval(upper);
  for (std::size_t u = 0; u < f.n; ++u) {
    lower.set(u);
    const double add_value = eval(lower);
    lower.reset(u);
    upper.reset(u);
    const double drop_value = eval(upper);
    upper.set(u);
    const double a = add_value - lower_value;
    const double b = drop_value - upper_value;
    if (a >= b) {
      lower.set(u);
      lower_value = add_value;
    } else {
      upper.reset(u);
      upper_value = drop_value;
    }
  }
  MaxResult result;
  result.value = f(lower);
  result.chosen = std::move(lower);
  result.alpha_claim = 3.0;
  return result;
}

MaxResult BruteForceMax(const GroundFunction& f, const Constraint& c) {
  Require(f.n <= kBruteForceMaxLimit, ErrorCode::kCapacity,
          "brute-force maximization supports n <= 24, got " +
              std::to_string(f.n));
  c.Validate(f.n);
  MaxResult best;
  best.alpha_claim = 1.0;
  bool first = true;
  ForEachFeasible(f.n, c, [&](const Bitset& s) {
    const double v = f(s);
    if (first || v > best.value) {
      best.value = v;
      best.chosen = s;
      first = false;
    }
  });
  return best;
}

MaxResult Maximize(const GroundFunction& f, const Constraint& c,
                   const MaximizerSpec& spec) {
  c.Validate(f.n);
  const std::size_t k = c.MaxSize(f.n);
  switch (spec.kind) {
    case MaximizerKind::kGreedy:
      return GreedyCardinality(f, k, /*force_k=*/false, spec.monotone);
    case MaximizerKind::kThresholdGreedy:
      return ThresholdGreedy(f, k, spec.eps_t, spec.monotone);
    case MaximizerKind::kRandomGreedy:
      return RandomGreedy(f, k, spec.seed);
    case MaximizerKind::kDoubleGreedy:
      if (c.kind() != Constraint::Kind::kAllSubsets) {
        Fail(ErrorCode::kDomain,
             "double greedy only handles the unconstrained case");
      }
      return DoubleGreedyUsm(f);
    case MaximizerKind::kBruteForce:
      return BruteForceMax(f, c);
  }
  Fail(ErrorCode::kDomain, "unknown maximizer");
}

bool IsDeterministic(MaximizerKind kind) {
  return kind != MaximizerKind::kRandomGreedy;
}

double ClaimedAlpha(const MaximizerSpec& spec) {
  switch (spec.kind) {
    case MaximizerKind::kGreedy:
      return spec.monotone ? kGreedyMonotoneAlpha : kHeuristicAlpha;
    case MaximizerKind::kThresholdGreedy:
      return spec.monotone ? 1.0 / (1.0 - 1.0 / std::numbers::e - spec.eps_t)
                           : kHeuristicAlpha;
    case MaximizerKind::kRandomGreedy:
      return std::numbers::e;
    case MaximizerKind::kDoubleGreedy:
      return 3.0;
    case MaximizerKind::kBruteForce:
      return 1.0;
  }
  return kHeuristicAlpha;
}

std::string_view MaximizerName(MaximizerKind kind) {
  switch (kind) {
    case MaximizerKind::kGreedy:
      return "greedy";
    case MaximizerKind::kThresholdGreedy:
      return "threshold-greedy";
    case MaximizerKind::kRandomGreedy:
      return "random-greedy";
    case MaximizerKind::kDoubleGreedy:
      return "double-greedy";
    case MaximizerKind::kBruteForce:
      return "brute-force";
  }
  return "unknown";
}

MaximizerKind ParseMaximizer(std::string_view name) {
  for (auto kind : {MaximizerKind::kGreedy, MaximizerKind::kThresholdGreedy,
                    MaximizerKind::kRandomGreedy, MaximizerKind::kDoubleGreedy,
                    MaximizerKind::kBruteForce}) {
    if (MaximizerName(kind) == name) return kind;
  }
  Fail(ErrorCode::kUsage, "unknown maximizer '" + std::string(name) + "'");
}

}  // namespace smx
