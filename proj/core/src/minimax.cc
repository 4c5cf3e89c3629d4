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

#include "smx/minimax.h"

#include <atomic>
#include <chrono>
#include <cmath>
#include <map>
#include <memory>

#include "smx/error.h"
#include "smx/random.h"

namespace smx {

namespace {

using Clock = std::chrono::steady_clock;

// Oracle-call and wall-time bookkeeping for one solver run.
class RunMeter {
 public:
  explicit RunMeter(const ValueOracle& f)
      : f_(f), calls_(f.call_count()), start_(Clock::now()) {}

  void Finish(SolveResult& result) const {
    result.oracle_calls = f_.call_count() - calls_;
    result.millis =
        std::chrono::duration<double, std::milli>(Clock::now() - start_)
            .count();
  }

 private:
  const ValueOracle& f_;
  std::uint64_t calls_;
  Clock::time_point start_;
};

bool MinimizationIsExact(const MinimaxInstance& inst, std::size_t n,
                         bool submodular) {
  const bool brute =
      inst.sfm.method == SfmMethod::kBruteForce ||
      (inst.sfm.method == SfmMethod::kAuto && n <= inst.sfm.brute_limit);
  return brute || submodular;
}

bool Disjoint(const InstanceTags& tags) {
  return tags.disjointly_submodular || tags.jointly_submodular;
}

void CheckEnumerable(const MinimaxInstance& inst, std::uint64_t x_count) {
  const std::uint64_t y_count = FeasibleCount(inst.ground().n2, inst.f2);
  Require(inst.ground().n1 <= 30 && inst.ground().n2 <= 30 &&
              y_count <= kBruteForceBudget / std::max<std::uint64_t>(1, x_count),
          ErrorCode::kCapacity,
          "instance too large for exhaustive search (n1=" +
              std::to_string(inst.ground().n1) +
              ", n2=" + std::to_string(inst.ground().n2) + ")");
}

}  // namespace

void MinimaxInstance::Validate() const {
  Require(f != nullptr, ErrorCode::kContract, "instance has no oracle");
  f2.Validate(f->n2());
}

InnerMinResult InnerMin(const MinimaxInstance& inst, const Bitset& y) {
  const ValueOracle& f = *inst.f;
  const MinResult r = MinimizeUnconstrained(RestrictToN1(f, y), inst.sfm);
  InnerMinResult out;
  out.x = r.minimizer;
  out.value = r.value;
  out.heuristic =
      !MinimizationIsExact(inst, f.n1(), inst.tags.jointly_submodular ||
                                             inst.tags.disjointly_submodular);
  return out;
}

GroundFunction InnerMinFunction(const MinimaxInstance& inst) {
  return {inst.ground().n2,
          [&inst](const Bitset& y) { return InnerMin(inst, y).value; }};
}

SolveResult MaxMinViaOracle(const MinimaxInstance& inst,
                            const MaximizerSpec& maximizer,
                            std::size_t repeats, std::uint64_t seed) {
  inst.Validate();
  Require(repeats >= 1, ErrorCode::kDomain, "repeats must be at least 1");
  RunMeter meter(*inst.f);
  const GroundFunction g = InnerMinFunction(inst);

  MaximizerSpec spec = maximizer;
  spec.monotone = spec.monotone || inst.tags.n2_monotone;
  std::optional<MaxResult> best;
  for (std::size_t r = 0; r < repeats; ++r) {
    spec.seed = DeriveSeed(seed, "min-as-oracle", r);
    MaxResult candidate = Maximize(g, inst.f2, spec);
    if (!best || candidate.value > best->value) best = std::move(candidate);
  }

  const InnerMinResult inner = InnerMin(inst, best->chosen);
  SolveResult result;
  result.chosen = Subset{inner.x, best->chosen};
  result.value = inner.value;
  result.iterations = repeats;
  result.heuristic = inner.heuristic;
  if (!inner.heuristic) {
    // g(Ŷ) is attained by a feasible Y, so it never exceeds τ'.
    result.tau_lower = result.value;
    result.certificate = Certificate::kDeterministic;
    const double alpha = ClaimedAlpha(spec);
    if (inst.tags.jointly_submodular && IsDeterministic(spec.kind) &&
        std::isfinite(alpha)) {
      result.tau_upper = alpha * result.value;
    }
  }
  if (inst.audit) {
    const double exact = BruteForceMaxMin(inst).value;
    result.tau_lower = std::max(result.tau_lower, exact);
    result.tau_upper = std::min(result.tau_upper, exact);
  }
  meter.Finish(result);
  return result;
}

SolveResult MinMaxSingletons(const MinimaxInstance& inst) {
  inst.Validate();
  if (!inst.f2.AdmitsSingletons()) {
    Fail(ErrorCode::kContract,
         "singleton estimator needs every {u} to be feasible; constraint is " +
             inst.f2.ToString());
  }
  RunMeter meter(*inst.f);
  const ValueOracle& f = *inst.f;
  const std::size_t n2 = f.n2();
  const bool with_empty = inst.f2.AdmitsEmpty();
  const GroundFunction surrogate{
      f.n1(), [&f, n2, with_empty](const Bitset& x) {
        Bitset y(n2);
        double total = with_empty ? f(x, y) : 0.0;
        for (std::size_t u = 0; u < n2; ++u) {
          y.set(u);
          total += f(x, y);
          y.reset(u);
        }
        return total;
      }};
  const MinResult r = MinimizeUnconstrained(surrogate, inst.sfm);

  SolveResult result;
  result.chosen = Subset{r.minimizer, Bitset(n2)};
  result.value = r.value;
  result.iterations = r.iterations;
  result.heuristic = !MinimizationIsExact(inst, f.n1(), Disjoint(inst.tags));
  if (Disjoint(inst.tags) && !result.heuristic) {
    const double terms = static_cast<double>(n2) + (with_empty ? 1.0 : 0.0);
    result.tau_lower = result.value / terms;
    result.tau_upper = result.value;
    result.set_factor = terms;
    result.certificate = Certificate::kDeterministic;
  }
  if (inst.audit) {
    const double tau = BruteForceTau(inst);
    result.tau_lower = std::max(result.tau_lower, tau);
    result.tau_upper = std::min(result.tau_upper, tau);
  }
  meter.Finish(result);
  return result;
}

std::uint64_t SampleCount(double epsilon, std::size_t n1, std::size_t n2) {
  if (!(epsilon > 0.0 && epsilon < 0.5)) {
    Fail(ErrorCode::kDomain,
         "epsilon must lie in (0, 1/2), got " + std::to_string(epsilon));
  }
  const double bracket = (static_cast<double>(n1) + 1.0) * std::log(2.0) +
                         std::log(static_cast<double>(n2) + 1.0) +
                         std::log(8.0 / epsilon);
  return static_cast<std::uint64_t>(
      std::ceil(3200.0 / (epsilon * epsilon) * bracket));
}

SamplePlan SamplePlan::Make(double epsilon, std::size_t n1, std::size_t n2,
                            std::uint64_t seed, bool allow_exact) {
  SamplePlan plan;
  plan.epsilon = epsilon;
  plan.m = SampleCount(epsilon, n1, n2);
  plan.seed = seed;
  plan.exact_mode =
      allow_exact && n2 < 63 && (std::uint64_t{1} << n2) <= plan.m;
  return plan;
}

SolveResult MinMaxRandomSubsets(const MinimaxInstance& inst,
                                const SamplePlan& plan) {
  inst.Validate();
  if (inst.f2.kind() != Constraint::Kind::kAllSubsets) {
    Fail(ErrorCode::kContract,
         "random-subsets estimator requires the unconstrained N2 side");
  }
  if (!(plan.epsilon > 0.0 && plan.epsilon < 0.5)) {
    Fail(ErrorCode::kDomain,
         "epsilon must lie in (0, 1/2), got " + std::to_string(plan.epsilon));
  }
  RunMeter meter(*inst.f);
  const ValueOracle& f = *inst.f;
  const std::size_t n2 = f.n2();

  // Multiset of sampled Y as (set, weight); the average over m draws only
  // depends on the multiplicities.
  std::vector<std::pair<Bitset, double>> support;
  if (plan.exact_mode) {
    Require(n2 <= 20, ErrorCode::kCapacity,
            "exact mode enumerates 2^n2 sets; n2=" + std::to_string(n2));
    const double w = std::ldexp(1.0, -static_cast<int>(n2));
    ForEachSubset(n2, [&](const Bitset& y) { support.emplace_back(y, w); });
  } else {
    Require(plan.m > 0, ErrorCode::kDomain, "sample count must be positive");
    Rng rng(DeriveSeed(plan.seed, "random-subsets"));
    std::map<Bitset, std::uint64_t> counts;
    for (std::uint64_t i = 0; i < plan.m; ++i) ++counts[UniformSubset(rng, n2)];
    const double m = static_cast<double>(plan.m);
    for (auto& [y, c] : counts) support.emplace_back(y, static_cast<double>(c) / m);
  }

  const GroundFunction average{f.n1(), [&f, &support](const Bitset& x) {
                                 double total = 0.0;
                                 for (const auto& [y, w] : support) total += w * f(x, y);
                                 return total;
                               }};
  const MinResult r = MinimizeUnconstrained(average, inst.sfm);

  const double scale = 4.0 + plan.epsilon / 2.0;
  SolveResult result;
  result.chosen = Subset{r.minimizer, Bitset(n2)};
  result.value = scale * r.value;
  result.iterations = r.iterations;
  result.heuristic = !MinimizationIsExact(inst, f.n1(), Disjoint(inst.tags));
  if (Disjoint(inst.tags) && !result.heuristic) {
    result.tau_lower = result.value / scale;
    result.tau_upper = result.value;
    result.certificate = plan.exact_mode ? Certificate::kDeterministic
                                         : Certificate::kHighProbability;
  }
  if (inst.audit) {
    const double tau = BruteForceTau(inst);
    result.tau_lower = std::max(result.tau_lower, tau);
    result.tau_upper = std::min(result.tau_upper, tau);
  }
  meter.Finish(result);
  return result;
}

bool PreferFirstOfTwo(double first_reply, double second_reply) {
  return first_reply <= 2.0 * second_reply;
}

SolveResult BestOfTwo(const MinimaxInstance& inst, const SamplePlan& plan) {
  RunMeter meter(*inst.f);
  SolveResult sampled = MinMaxRandomSubsets(inst, plan);
  const SolveResult singles = MinMaxSingletons(inst);
  const ValueOracle& f = *inst.f;

  const MaxResult first = DoubleGreedyUsm(RestrictToN2(f, sampled.chosen.x));
  const MaxResult second = DoubleGreedyUsm(RestrictToN2(f, singles.chosen.x));

  SolveResult result = sampled;
  if (PreferFirstOfTwo(first.value, second.value)) {
    result.reply_value = first.value;
  } else {
    result.chosen = singles.chosen;
    result.reply_value = second.value;
  }
  result.iterations = sampled.iterations + singles.iterations;
  result.heuristic = sampled.heuristic || singles.heuristic;
  if (Disjoint(inst.tags) && !result.heuristic) {
    // Whichever set is kept, its best reply is within 2·α_usm·(n2 + 1) of τ.
    result.set_factor =
        2.0 * first.alpha_claim * (static_cast<double>(f.n2()) + 1.0);
  }
  meter.Finish(result);
  return result;
}

AlphaOracle MakeAlphaOracle(const MinimaxInstance& inst,
                            const MaximizerSpec& maximizer) {
  MaximizerSpec spec = maximizer;
  spec.monotone = spec.monotone || inst.tags.n2_monotone;
  auto counter = std::make_shared<std::atomic<std::uint64_t>>(0);
  AlphaOracle oracle;
  oracle.alpha = ClaimedAlpha(spec);
  oracle.deterministic = IsDeterministic(spec.kind);
  oracle.reply = [&inst, spec, counter](const Bitset& x) {
    MaximizerSpec local = spec;
    local.seed = DeriveSeed(spec.seed, "alpha-oracle", counter->fetch_add(1));
    return Maximize(RestrictToN2(*inst.f, x), inst.f2, local).chosen;
  };
  return oracle;
}

double GrowingFactor(std::size_t n1) {
  if (n1 == 0) return 1.0;
  const double r = std::sqrt(static_cast<double>(n1));
  return 2.0 * r + 2.0 + 1.0 / r;
}

SolveResult IterativeXGrowing(const MinimaxInstance& inst,
                              const AlphaOracle& oracle,
                              const GrowingOptions& options) {
  inst.Validate();
  if (!inst.f2.AdmitsEmpty()) {
    Fail(ErrorCode::kContract, "iterative growing requires the empty set in F2");
  }
  Require(oracle.alpha >= 1.0, ErrorCode::kDomain, "alpha must be >= 1");
  RunMeter meter(*inst.f);
  const ValueOracle& f = *inst.f;
  const std::size_t n1 = f.n1();
  const std::size_t n2 = f.n2();
  const double sqrt_n1 = std::sqrt(static_cast<double>(n1));
  const double beta = options.beta.value_or(sqrt_n1);
  Require(beta >= 0.0, ErrorCode::kDomain, "beta must be nonnegative");
  const bool alpha_known = std::isfinite(oracle.alpha);
  const double multiplier = alpha_known ? oracle.alpha : 1.0;
  const Bitset no_y(n2);

  Bitset current = MinimizeUnconstrained(RestrictToN1(f, no_y), inst.sfm).minimizer;

  struct Iterate {
    Bitset x;
    Bitset y;
    double value;
  };
  std::optional<Iterate> best;
  std::optional<Iterate> last;
  std::size_t iterations = 0;
  for (std::size_t i = 1; i <= n1 + 1; ++i) {
    iterations = i;
    const Bitset y = oracle.reply(current);
    if (!inst.f2.Admits(y)) {
      Fail(ErrorCode::kContract, "alpha oracle returned an infeasible set " +
                                     y.ToString());
    }
    last = Iterate{current, y, multiplier * f(current, y)};
    if (!best || last->value < best->value) best = last;

    const Bitset base = current;
    const GroundFunction step{
        n1, [&f, &base, &y, &no_y, beta](const Bitset& x) {
          return beta * f(x | base, no_y) + f(x, y);
        }};
    const Bitset grown = MinimizeUnconstrained(step, inst.sfm).minimizer;
    if (grown.IsSubsetOf(current)) break;
    current |= grown;
  }

  const Iterate& out = options.best_iterate ? *best : *last;
  SolveResult result;
  result.chosen = Subset{out.x, Bitset(n2)};
  result.value = out.value;
  result.reply_value = f(out.x, out.y);
  result.iterations = iterations;
  result.heuristic = !MinimizationIsExact(inst, n1, inst.tags.jointly_submodular);
  if (inst.tags.jointly_submodular && alpha_known && oracle.deterministic &&
      !result.heuristic) {
    // α f(X ⊎ Y) >= max_Y f(X ⊎ Y) >= τ for every iterate.
    result.tau_upper = result.value;
    result.certificate = Certificate::kDeterministic;
    if (std::abs(beta - sqrt_n1) <= 1e-12 * std::max(1.0, sqrt_n1)) {
      const double factor = oracle.alpha * GrowingFactor(n1);
      result.tau_lower = result.value / factor;
      result.set_factor = factor;
    }
  }
  if (inst.audit) {
    const double tau = BruteForceTau(inst);
    result.tau_lower = std::max(result.tau_lower, tau);
    result.tau_upper = std::min(result.tau_upper, tau);
  }
  meter.Finish(result);
  return result;
}

double HExact(const MinimaxInstance& inst, const Bitset& x) {
  const std::size_t n2 = inst.ground().n2;
  Require(n2 <= 20, ErrorCode::kCapacity,
          "exact h enumerates 2^n2 sets; n2=" + std::to_string(n2));
  double total = 0.0;
  ForEachSubset(n2, [&](const Bitset& y) { total += (*inst.f)(x, y); });
  return std::ldexp(total, -static_cast<int>(n2));
}

BruteOptimum BruteForceMaxOverY(const MinimaxInstance& inst, const Bitset& x) {
  CheckEnumerable(inst, 1);
  BruteOptimum best;
  bool first = true;
  ForEachFeasible(inst.ground().n2, inst.f2, [&](const Bitset& y) {
    const double v = (*inst.f)(x, y);
    if (first || v > best.value) {
      best.value = v;
      best.set = y;
      first = false;
    }
  });
  return best;
}

BruteOptimum BruteForceMinMax(const MinimaxInstance& inst) {
  inst.Validate();
  const std::size_t n1 = inst.ground().n1;
  Require(n1 <= 14, ErrorCode::kCapacity,
          "brute-force τ supports n1 <= 14, got " + std::to_string(n1));
  CheckEnumerable(inst, std::uint64_t{1} << n1);
  BruteOptimum best;
  bool first = true;
  ForEachSubset(n1, [&](const Bitset& x) {
    const double v = BruteForceMaxOverY(inst, x).value;
    if (first || v < best.value) {
      best.value = v;
      best.set = x;
      first = false;
    }
  });
  return best;
}

double BruteForceTau(const MinimaxInstance& inst) {
  return BruteForceMinMax(inst).value;
}

BruteOptimum BruteForceMaxMin(const MinimaxInstance& inst) {
  inst.Validate();
  const std::size_t n1 = inst.ground().n1;
  Require(n1 <= 24, ErrorCode::kCapacity,
          "brute-force max-min supports n1 <= 24, got " + std::to_string(n1));
  CheckEnumerable(inst, std::uint64_t{1} << n1);
  BruteOptimum best;
  bool first = true;
  ForEachFeasible(inst.ground().n2, inst.f2, [&](const Bitset& y) {
    const double v = BruteForceMin(RestrictToN1(*inst.f, y)).value;
    if (first || v > best.value) {
      best.value = v;
      best.set = y;
      first = false;
    }
  });
  return best;
}

}  // namespace smx
