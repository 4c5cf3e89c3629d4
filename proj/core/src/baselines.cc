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

#include "smx/baselines.h"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <optional>
#include <set>
#include <utility>

#include "smx/error.h"
#include "smx/random.h"

namespace smx {

namespace {

using Clock = std::chrono::steady_clock;

// Fills value, oracle_calls and millis for a baseline result.
void Finalize(const MinimaxInstance& inst, std::uint64_t calls_before,
              Clock::time_point start, SolveResult& result) {
  result.value = (*inst.f)(result.chosen);
  result.oracle_calls = inst.f->call_count() - calls_before;
  result.millis =
      std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

Bitset Reply(const MinimaxInstance& inst, const Bitset& x,
             const MaximizerSpec& spec) {
  return Maximize(RestrictToN2(*inst.f, x), inst.f2, spec).chosen;
}

}  // namespace

std::string_view ModeName(Mode mode) {
  return mode == Mode::kMaxMin ? "maxmin" : "minmax";
}

Mode ParseMode(std::string_view name) {
  if (name == "maxmin") return Mode::kMaxMin;
  if (name == "minmax") return Mode::kMinMax;
  Fail(ErrorCode::kUsage, "unknown mode '" + std::string(name) +
                              "' (expected maxmin or minmax)");
}

SolveResult RandomBaseline(const MinimaxInstance& inst, Mode mode,
                           std::uint64_t seed) {
  inst.Validate();
  const auto start = Clock::now();
  const std::uint64_t calls = inst.f->call_count();
  const BiGroundSet& ground = inst.ground();
  Rng rng(DeriveSeed(seed, "random"));
  SolveResult result;
  result.chosen = Subset::Empty(ground);
  if (mode == Mode::kMaxMin) {
    result.chosen.y =
        inst.f2.kind() == Constraint::Kind::kAllSubsets
            ? UniformSubset(rng, ground.n2)
            : UniformKSubset(rng, ground.n2, inst.f2.MaxSize(ground.n2));
  } else {
    result.chosen.x = UniformSubset(rng, ground.n1);
  }
  Finalize(inst, calls, start, result);
  return result;
}

SolveResult MaxOnly(const MinimaxInstance& inst,
                    const MaximizerSpec& maximizer) {
  inst.Validate();
  const auto start = Clock::now();
  const std::uint64_t calls = inst.f->call_count();
  SolveResult result;
  result.chosen = Subset::Empty(inst.ground());
  result.chosen.y = Reply(inst, result.chosen.x, maximizer);
  result.iterations = 1;
  Finalize(inst, calls, start, result);
  return result;
}

SolveResult MaxAndThenMin(const MinimaxInstance& inst,
                          const MaximizerSpec& maximizer) {
  inst.Validate();
  const auto start = Clock::now();
  const std::uint64_t calls = inst.f->call_count();
  SolveResult result;
  result.chosen = Subset::Empty(inst.ground());
  result.chosen.y = Reply(inst, result.chosen.x, maximizer);
  const InnerMinResult inner = InnerMin(inst, result.chosen.y);
  result.chosen.x = inner.x;
  result.heuristic = inner.heuristic;
  result.iterations = 1;
  Finalize(inst, calls, start, result);
  return result;
}

SolveResult TopKSingletons(const MinimaxInstance& inst, std::size_t k) {
  inst.Validate();
  const std::size_t n2 = inst.ground().n2;
  if (k > n2) {
    Fail(ErrorCode::kDomain, "k=" + std::to_string(k) + " exceeds n2=" +
                                 std::to_string(n2));
  }
  const auto start = Clock::now();
  const std::uint64_t calls = inst.f->call_count();
  std::vector<double> score(n2);
  bool heuristic = false;
  for (std::size_t u = 0; u < n2; ++u) {
    const InnerMinResult inner =
        InnerMin(inst, Bitset::FromIndices(n2, {u}));
    score[u] = inner.value;
    heuristic = heuristic || inner.heuristic;
  }
  std::vector<std::size_t> order(n2);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return score[a] > score[b];
                   });
  SolveResult result;
  result.chosen = Subset::Empty(inst.ground());
  for (std::size_t i = 0; i < k; ++i) result.chosen.y.set(order[i]);
  result.heuristic = heuristic;
  Finalize(inst, calls, start, result);
  return result;
}

BestResponseResult BestResponse(const MinimaxInstance& inst,
                                const MaximizerSpec& maximizer,
                                const BestResponseOptions& options) {
  inst.Validate();
  const auto start = Clock::now();
  const std::uint64_t calls = inst.f->call_count();
  const ValueOracle& f = *inst.f;

  auto reply = [&](const Bitset& x, std::size_t round) {
    MaximizerSpec spec = maximizer;
    spec.seed = DeriveSeed(maximizer.seed, "best-response", round);
    return Reply(inst, x, spec);
  };

  BestResponseResult out;
  BestResponseTrace& trace = out.trace;
  SolveResult& result = out.result;
  result.chosen = Subset::Empty(inst.ground());
  Bitset y = reply(result.chosen.x, 0);
  result.chosen.y = y;

  // For minmax best-seen: the X whose next reply scored lowest.
  std::optional<std::pair<double, Bitset>> best_x;
  std::optional<std::pair<double, Bitset>> best_y;
  std::set<std::pair<Bitset, Bitset>> seen;
  for (std::size_t t = 1; t <= options.max_iters; ++t) {
    const InnerMinResult inner = InnerMin(inst, y);
    result.heuristic = result.heuristic || inner.heuristic;
    const Bitset x = inner.x;
    trace.steps.push_back({x, y, f(x, y)});
    result.chosen = Subset{x, y};
    result.iterations = t;
    if (!best_y || inner.value > best_y->first) best_y.emplace(inner.value, y);

    if (!seen.emplace(x, y).second) {
      trace.cycle_detected = true;
      break;
    }
    const Bitset next = reply(x, t);
    const double reply_value = f(x, next);
    if (!best_x || reply_value < best_x->first) best_x.emplace(reply_value, x);
    if (next == y) {
      trace.steps.push_back({x, y, trace.steps.back().value});
      trace.converged = true;
      result.iterations = t + 1;
      break;
    }
    y = next;
  }

  if (options.return_best_seen) {
    if (options.mode == Mode::kMaxMin && best_y) {
      result.chosen.y = best_y->second;
      result.chosen.x = InnerMin(inst, best_y->second).x;
    } else if (options.mode == Mode::kMinMax && best_x) {
      result.chosen.x = best_x->second;
    }
  }
  Finalize(inst, calls, start, result);
  return out;
}

double EvaluateMaxMin(const MinimaxInstance& inst, const Bitset& y) {
  return InnerMin(inst, y).value;
}

double EvaluateMinMaxProxy(const MinimaxInstance& inst, const Bitset& x,
                           double eps_t) {
  const GroundFunction fy = RestrictToN2(*inst.f, x);
  return ThresholdGreedy(fy, inst.f2.MaxSize(fy.n), eps_t).value;
}

}  // namespace smx
