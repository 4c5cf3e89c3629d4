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

#include <cmath>
#include <limits>

#include "gtest/gtest.h"
#include "smx/checks.h"
#include "smx/instances.h"
#include "smx/random.h"
#include "test_util.h"

namespace smx {
namespace {

using ::smx::testing::Constant;
using ::smx::testing::Set;

constexpr double kTol = 1e-9;

// Toy values: f(∅) = 1, f({x}) = 0.5, f({y}) = 2, f({x,y}) = 1.
const Bitset kNoX = Bitset(1);
const Bitset kX = Bitset::Full(1);
const Bitset kNoY = Bitset(1);
const Bitset kY = Bitset::Full(1);

MinimaxInstance ConstantInstance(std::size_t n1, std::size_t n2, double c) {
  MinimaxInstance inst;
  inst.f = Constant(n1, n2, c);
  inst.tags = {true, true, true};
  return inst;
}

// Independent min-max oracle: nested loops over masks.
double LoopTau(const MinimaxInstance& inst) {
  const ValueOracle& f = *inst.f;
  double tau = std::numeric_limits<double>::infinity();
  for (std::uint64_t mx = 0; mx < (std::uint64_t{1} << f.n1()); ++mx) {
    double worst = -std::numeric_limits<double>::infinity();
    for (std::uint64_t my = 0; my < (std::uint64_t{1} << f.n2()); ++my) {
      const Bitset y = Bitset::FromMask(f.n2(), my);
      if (!inst.f2.Admits(y)) continue;
      worst = std::max(worst, f(Bitset::FromMask(f.n1(), mx), y));
    }
    tau = std::min(tau, worst);
  }
  return tau;
}

double LoopMaxOverY(const MinimaxInstance& inst, const Bitset& x) {
  double worst = -std::numeric_limits<double>::infinity();
  ForEachFeasible(inst.ground().n2, inst.f2, [&](const Bitset& y) {
    worst = std::max(worst, (*inst.f)(x, y));
  });
  return worst;
}

MaximizerSpec Brute() {
  MaximizerSpec spec;
  spec.kind = MaximizerKind::kBruteForce;
  return spec;
}

TEST(InnerMinTest, ToyInstance) {
  const MinimaxInstance inst = ToyInstance();
  const InnerMinResult empty = InnerMin(inst, kNoY);
  EXPECT_EQ(empty.x, kX);
  EXPECT_EQ(empty.value, 0.5);
  const InnerMinResult with_y = InnerMin(inst, kY);
  EXPECT_EQ(with_y.x, kX);
  EXPECT_EQ(with_y.value, 1.0);
  EXPECT_FALSE(with_y.heuristic);
}

TEST(InnerMinTest, IndependentOfXPicksEmpty) {
  MinimaxInstance inst;
  inst.f = MakeOracle(3, 2, [](const Bitset&, const Bitset& y) {
    return 1.0 + static_cast<double>(y.count());
  });
  inst.tags = {true, true, true};
  const InnerMinResult r = InnerMin(inst, Set(2, {1}));
  EXPECT_TRUE(r.x.none());
  EXPECT_EQ(r.value, 2.0);
}

// Disjoint submodularity already makes X -> f(X ⊎ Y) submodular, so only an
// untagged instance under MNP is heuristic.
TEST(InnerMinTest, UntaggedInstanceIsFlaggedHeuristic) {
  Rng rng(1);
  MinimaxInstance inst = RandomDisjointInstance(rng, 3, 3);
  EXPECT_FALSE(InnerMin(inst, Bitset(3)).heuristic);
  inst.tags = {};
  inst.sfm.method = SfmMethod::kMinNormPoint;
  EXPECT_TRUE(InnerMin(inst, Bitset(3)).heuristic);
  inst.sfm.method = SfmMethod::kAuto;
  EXPECT_FALSE(InnerMin(inst, Bitset(3)).heuristic);
}

TEST(InnerMinTest, SubmodularAndMonotone) {
  Rng rng(DeriveSeed(5, "inner-min-test"));
  for (int i = 0; i < 10; ++i) {
    const MinimaxInstance inst = RandomMonotoneJointInstance(rng, 4, 4);
    const GroundFunction g = InnerMinFunction(inst);
    EXPECT_TRUE(CheckSubmodular(g)) << "instance " << i;
    EXPECT_TRUE(CheckMonotone(g)) << "instance " << i;
  }
}

TEST(MaxMinTest, ToyWithExactMaximizer) {
  const MinimaxInstance inst = ToyInstance();
  const SolveResult r = MaxMinViaOracle(inst, Brute(), 1, 0);
  EXPECT_EQ(r.chosen.y, kY);
  EXPECT_EQ(r.value, 1.0);
  EXPECT_EQ(r.value, BruteForceMaxMin(inst).value);
  EXPECT_EQ(r.tau_lower, 1.0);
  EXPECT_EQ(r.tau_upper, 1.0);
}

TEST(MaxMinTest, ConstantFunction) {
  const SolveResult r = MaxMinViaOracle(ConstantInstance(2, 3, 4.0), {}, 1, 9);
  EXPECT_EQ(r.value, 4.0);
}

TEST(MaxMinTest, RepeatsAreDeterministic) {
  Rng rng(21);
  const MinimaxInstance inst = RandomJointInstance(rng, 4, 5);
  MaximizerSpec spec;
  spec.kind = MaximizerKind::kRandomGreedy;
  const SolveResult a = MaxMinViaOracle(inst, spec, 3, 42);
  const SolveResult b = MaxMinViaOracle(inst, spec, 3, 42);
  EXPECT_EQ(a.chosen, b.chosen);
  EXPECT_EQ(a.value, b.value);
  EXPECT_TRUE(std::isinf(a.tau_upper));
}

TEST(MaxMinTest, NeverExceedsOptimum) {
  Rng rng(DeriveSeed(8, "max-min-test"));
  for (int i = 0; i < 20; ++i) {
    MinimaxInstance inst = RandomJointInstance(rng, 4, 4);
    if (i % 2) inst.f2 = Constraint::CardinalityAtMost(2);
    const double opt = BruteForceMaxMin(inst).value;
    for (MaximizerKind kind :
         {MaximizerKind::kGreedy, MaximizerKind::kThresholdGreedy,
          MaximizerKind::kRandomGreedy}) {
      MaximizerSpec spec;
      spec.kind = kind;
      EXPECT_LE(MaxMinViaOracle(inst, spec, 2, i).value, opt + kTol);
    }
    EXPECT_NEAR(MaxMinViaOracle(inst, Brute(), 1, i).value, opt, kTol);
  }
}

TEST(MaxMinTest, OracleCallsMatchCounter) {
  Rng rng(2);
  const MinimaxInstance inst = RandomJointInstance(rng, 3, 3);
  const std::uint64_t before = inst.f->call_count();
  const SolveResult r = MaxMinViaOracle(inst, {}, 1, 0);
  EXPECT_EQ(r.oracle_calls, inst.f->call_count() - before);
  EXPECT_GT(r.oracle_calls, 0u);
}

TEST(SingletonsTest, ToyInstance) {
  // g(∅) = 1 + 2 = 3, g({x}) = 0.5 + 1 = 1.5.
  const SolveResult r = MinMaxSingletons(ToyInstance());
  EXPECT_EQ(r.chosen.x, kX);
  EXPECT_EQ(r.value, 1.5);
  EXPECT_EQ(r.tau_upper, 1.5);
  EXPECT_EQ(r.tau_lower, 0.75);
  EXPECT_LE(LoopTau(ToyInstance()), r.value);
  EXPECT_LE(r.value, 2.0 * LoopTau(ToyInstance()));
}

TEST(SingletonsTest, NoN2IsPlainMinimum) {
  Rng rng(4);
  MinimaxInstance inst;
  inst.f = FromFlat(5, 0, RandomNonnegativeSubmodular(rng, 5));
  inst.tags = {true, true, true};
  EXPECT_NEAR(MinMaxSingletons(inst).value,
              BruteForceMin(Flatten(*inst.f)).value, kTol);
}

TEST(SingletonsTest, ConstantIsTightUpperEnd) {
  EXPECT_EQ(MinMaxSingletons(ConstantInstance(3, 4, 2.0)).value, 10.0);
}

TEST(SingletonsTest, ZeroBudgetIsContractError) {
  MinimaxInstance inst = ToyInstance();
  inst.f2 = Constraint::CardinalityAtMost(0);
  EXPECT_SMX_ERROR(MinMaxSingletons(inst), ErrorCode::kContract);
}

TEST(SingletonsTest, BracketOnDisjointInstances) {
  Rng rng(DeriveSeed(3, "singletons-test"));
  for (int i = 0; i < 20; ++i) {
    const std::size_t n2 = 1 + UniformIndex(rng, 5);
    const MinimaxInstance inst = RandomDisjointInstance(rng, 5, n2);
    const double tau = LoopTau(inst);
    const SolveResult r = MinMaxSingletons(inst);
    EXPECT_LE(tau, r.value + kTol);
    EXPECT_LE(r.value, static_cast<double>(n2 + 1) * tau + kTol);
  }
}

TEST(SampleCountTest, HandArithmetic) {
  const double bracket = 4.0 * std::log(2.0) + std::log(5.0) + std::log(16.0);
  const auto expected =
      static_cast<std::uint64_t>(std::ceil(3200.0 / 0.25 * bracket));
  EXPECT_EQ(expected, 91580u);
  EXPECT_SMX_ERROR(SampleCount(0.5, 3, 4), ErrorCode::kDomain);
  EXPECT_EQ(SampleCount(0.4999999999, 3, 4), SampleCount(0.4999999999, 3, 4));
}

TEST(SampleCountTest, FormulaAtInteriorEpsilon) {
  const double bracket = 4.0 * std::log(2.0) + std::log(5.0) + std::log(20.0);
  EXPECT_EQ(SampleCount(0.4, 3, 4),
            static_cast<std::uint64_t>(std::ceil(3200.0 / 0.16 * bracket)));
}

TEST(SamplePlanTest, ExactModeWhenEnumerationIsCheaper) {
  EXPECT_TRUE(SamplePlan::Make(0.25, 3, 10, 1).exact_mode);
  EXPECT_FALSE(SamplePlan::Make(0.25, 3, 10, 1, false).exact_mode);
  EXPECT_FALSE(SamplePlan::Make(0.25, 3, 40, 1).exact_mode);
}

TEST(RandomSubsetsTest, ToyExactMode) {
  const SolveResult r =
      MinMaxRandomSubsets(ToyInstance(), SamplePlan::Make(0.4, 1, 1, 0));
  EXPECT_EQ(r.chosen.x, kX);
  EXPECT_NEAR(r.value, 4.2 * 0.75, 1e-12);
  EXPECT_EQ(r.certificate, Certificate::kDeterministic);
  EXPECT_LE(1.0, r.value);
  EXPECT_LE(r.value, 4.2);
}

TEST(RandomSubsetsTest, ConstantEverySeed) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    SamplePlan plan = SamplePlan::Make(0.25, 2, 3, seed, false);
    plan.m = 500;
    const SolveResult r = MinMaxRandomSubsets(ConstantInstance(2, 3, 3.0), plan);
    EXPECT_NEAR(r.value, 4.125 * 3.0, 1e-12);
    EXPECT_EQ(r.certificate, Certificate::kHighProbability);
  }
}

TEST(RandomSubsetsTest, RequiresUnconstrainedN2) {
  MinimaxInstance inst = ToyInstance();
  inst.f2 = Constraint::CardinalityAtMost(1);
  EXPECT_SMX_ERROR(MinMaxRandomSubsets(inst, SamplePlan::Make(0.25, 1, 1, 0)),
                   ErrorCode::kContract);
}

TEST(RandomSubsetsTest, ExactModeBracket) {
  Rng rng(DeriveSeed(6, "random-subsets-test"));
  for (int i = 0; i < 20; ++i) {
    const MinimaxInstance inst = i % 2 ? RandomJointInstance(rng, 4, 4)
                                       : RandomDisjointInstance(rng, 4, 4);
    const double tau = LoopTau(inst);
    const SolveResult r =
        MinMaxRandomSubsets(inst, SamplePlan::Make(0.4, 4, 4, i));
    ASSERT_TRUE(SamplePlan::Make(0.4, 4, 4, i).exact_mode);
    EXPECT_LE(tau, r.value + kTol);
    EXPECT_LE(r.value, 4.2 * tau + kTol);
  }
}

TEST(BestOfTwoTest, DecisionRule) {
  EXPECT_TRUE(PreferFirstOfTwo(3.0, 2.0));
  EXPECT_FALSE(PreferFirstOfTwo(5.0, 2.0));
  EXPECT_TRUE(PreferFirstOfTwo(4.0, 2.0));
}

TEST(BestOfTwoTest, SameSetWhenBothBranchesAgree) {
  const MinimaxInstance inst = ToyInstance();
  const SamplePlan plan = SamplePlan::Make(0.4, 1, 1, 0);
  const SolveResult sampled = MinMaxRandomSubsets(inst, plan);
  ASSERT_EQ(sampled.chosen.x, MinMaxSingletons(inst).chosen.x);
  const SolveResult r = BestOfTwo(inst, plan);
  EXPECT_EQ(r.chosen.x, sampled.chosen.x);
  EXPECT_EQ(r.value, sampled.value);
}

TEST(BestOfTwoTest, UnconditionalBound) {
  Rng rng(DeriveSeed(9, "best-of-two-test"));
  for (int i = 0; i < 20; ++i) {
    const MinimaxInstance inst = RandomDisjointInstance(rng, 4, 4);
    const double tau = LoopTau(inst);
    const SolveResult r = BestOfTwo(inst, SamplePlan::Make(0.4, 4, 4, i));
    EXPECT_LE(LoopMaxOverY(inst, r.chosen.x), 4.0 * 5.0 * tau + kTol);
    EXPECT_LE(LoopMaxOverY(inst, r.chosen.x), r.set_factor * tau + kTol);
  }
}

TEST(GrowingTest, ToyTrace) {
  const MinimaxInstance inst = ToyInstance();
  GrowingOptions options;
  options.beta = 1.0;
  const SolveResult r =
      IterativeXGrowing(inst, MakeAlphaOracle(inst, Brute()), options);
  EXPECT_EQ(r.chosen.x, kX);
  EXPECT_EQ(r.value, 1.0);
  EXPECT_EQ(r.iterations, 1u);
  EXPECT_EQ(r.value, LoopTau(inst));
}

TEST(GrowingTest, EmptyN1) {
  Rng rng(3);
  MinimaxInstance inst;
  inst.f = FromFlat(0, 4, RandomNonnegativeSubmodular(rng, 4));
  inst.tags = {true, true, false};
  const SolveResult r = IterativeXGrowing(inst, MakeAlphaOracle(inst, Brute()));
  EXPECT_TRUE(r.chosen.x.none());
  EXPECT_NEAR(r.value, LoopMaxOverY(inst, Bitset(0)), kTol);
  EXPECT_EQ(r.iterations, 1u);
}

TEST(GrowingTest, ConstantFunction) {
  const MinimaxInstance inst = ConstantInstance(3, 3, 2.0);
  AlphaOracle oracle = MakeAlphaOracle(inst, Brute());
  oracle.alpha = 1.5;
  const SolveResult r = IterativeXGrowing(inst, oracle);
  EXPECT_TRUE(r.chosen.x.none());
  EXPECT_EQ(r.value, 3.0);
}

TEST(GrowingTest, NeedsEmptyFeasibleAndValidAlpha) {
  const MinimaxInstance inst = ToyInstance();
  AlphaOracle oracle = MakeAlphaOracle(inst, Brute());
  oracle.alpha = 0.5;
  EXPECT_SMX_ERROR(IterativeXGrowing(inst, oracle), ErrorCode::kDomain);
}

TEST(GrowingTest, BracketAndIterationBound) {
  Rng rng(DeriveSeed(10, "growing-test"));
  for (int i = 0; i < 20; ++i) {
    const std::size_t n1 = 1 + UniformIndex(rng, 6);
    const MinimaxInstance inst = RandomJointInstance(rng, n1, 4);
    const double tau = LoopTau(inst);
    const SolveResult r =
        IterativeXGrowing(inst, MakeAlphaOracle(inst, Brute()));
    const double bound = 3.0 * std::sqrt(static_cast<double>(n1)) + 3.0;
    EXPECT_LE(tau, r.value + kTol);
    EXPECT_LE(r.value, bound * tau + kTol);
    EXPECT_LE(r.iterations, n1 + 1);
    EXPECT_LE(r.tau_lower, tau + kTol);
    EXPECT_GE(r.tau_upper, tau - kTol);
  }
}

TEST(GrowingTest, BestIterateNeverWorse) {
  Rng rng(13);
  for (int i = 0; i < 10; ++i) {
    const MinimaxInstance inst = RandomJointInstance(rng, 6, 4);
    GrowingOptions last;
    last.beta = 0.5;
    GrowingOptions best = last;
    best.best_iterate = true;
    const AlphaOracle oracle = MakeAlphaOracle(inst, Brute());
    EXPECT_LE(IterativeXGrowing(inst, oracle, best).value,
              IterativeXGrowing(inst, oracle, last).value + kTol);
  }
}

TEST(GrowingFactorTest, Values) {
  EXPECT_EQ(GrowingFactor(0), 1.0);
  EXPECT_DOUBLE_EQ(GrowingFactor(4), 2.0 * 2.0 + 2.0 + 0.5);
}

TEST(HExactTest, ToyAndConstant) {
  const MinimaxInstance inst = ToyInstance();
  EXPECT_EQ(HExact(inst, kX), 0.75);
  EXPECT_EQ(HExact(inst, kNoX), 1.5);
  EXPECT_LE(LoopMaxOverY(inst, kX), 4.0 * HExact(inst, kX));
  EXPECT_EQ(HExact(ConstantInstance(2, 5, 3.5), Bitset(2)), 3.5);
}

TEST(BruteForceTauTest, ToyConstantAndZeroBudget) {
  MinimaxInstance inst = ToyInstance();
  EXPECT_EQ(BruteForceTau(inst), 1.0);
  EXPECT_EQ(BruteForceMinMax(inst).set, kX);
  EXPECT_EQ(BruteForceTau(ConstantInstance(3, 3, 7.0)), 7.0);
  inst.f2 = Constraint::CardinalityAtMost(0);
  EXPECT_EQ(BruteForceTau(inst), 0.5);
}

TEST(BruteForceTauTest, MatchesLoops) {
  Rng rng(14);
  for (int i = 0; i < 10; ++i) {
    MinimaxInstance inst = RandomDisjointInstance(rng, 4, 4);
    inst.f2 = Constraint::CardinalityAtMost(i % 5);
    EXPECT_EQ(BruteForceTau(inst), LoopTau(inst));
  }
}

TEST(BruteForceTauTest, CapacityLimit) {
  EXPECT_SMX_ERROR(BruteForceTau(ConstantInstance(15, 1, 1.0)),
                   ErrorCode::kCapacity);
}

}  // namespace
}  // namespace smx
