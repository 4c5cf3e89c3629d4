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

#include <cmath>
#include <numbers>

#include "gtest/gtest.h"
#include "smx/instances.h"
#include "smx/random.h"
#include "test_util.h"

namespace smx {
namespace {

using ::smx::testing::ConstantFn;
using ::smx::testing::Fn;
using ::smx::testing::Set;

// Items a, b, c; S1 = {a, b}, S2 = {b, c}, S3 = {c}.
GroundFunction ThreeSetCoverage() {
  return Coverage({0b011, 0b110, 0b100}, {1.0, 1.0, 1.0});
}

// |S| (3 - |S|) on three elements: OPT = 2 at sizes 1 and 2.
GroundFunction CardinalityHump() {
  return Fn(3, [](const Bitset& s) {
    const double c = static_cast<double>(s.count());
    return c * (3.0 - c);
  });
}

// Independent oracle for the maximum over sets of size <= k.
double EnumeratedMax(const GroundFunction& f, std::size_t k) {
  double best = -std::numeric_limits<double>::infinity();
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << f.n); ++m) {
    const Bitset s = Bitset::FromMask(f.n, m);
    if (s.count() <= k) best = std::max(best, f(s));
  }
  return best;
}

TEST(GreedyTest, ModularTopTwo) {
  const MaxResult r = GreedyCardinality(Modular({5.0, 1.0, 3.0}), 2, true);
  EXPECT_EQ(r.chosen, Set(3, {0, 2}));
  EXPECT_EQ(r.value, 8.0);
}

TEST(GreedyTest, CoveragePicksFirstTwoSets) {
  const GroundFunction f = ThreeSetCoverage();
  const MaxResult r = GreedyCardinality(f, 2, true, true);
  EXPECT_EQ(r.chosen, Set(3, {0, 1}));
  EXPECT_EQ(r.value, 3.0);
  EXPECT_EQ(EnumeratedMax(f, 2), 3.0);
  EXPECT_NEAR(r.alpha_claim, std::numbers::e / (std::numbers::e - 1.0), 1e-12);
}

TEST(GreedyTest, ZeroBudget) {
  const MaxResult r = GreedyCardinality(Modular({1.0, 2.0}), 0, true);
  EXPECT_TRUE(r.chosen.none());
  EXPECT_EQ(r.value, 0.0);
}

TEST(GreedyTest, StopsOnNonPositiveMarginalUnlessForced) {
  const GroundFunction f = Modular({2.0, -1.0, 0.0});
  EXPECT_EQ(GreedyCardinality(f, 3, false).chosen, Set(3, {0}));
  EXPECT_EQ(GreedyCardinality(f, 3, true).chosen.count(), 3u);
}

TEST(GreedyTest, NonmonotoneClaimsNothing) {
  EXPECT_EQ(GreedyCardinality(CardinalityHump(), 2, false).alpha_claim,
            kHeuristicAlpha);
}

TEST(GreedyTest, BudgetAboveNIsDomainError) {
  EXPECT_SMX_ERROR(GreedyCardinality(Modular({1.0}), 2, true),
                   ErrorCode::kDomain);
}

TEST(ThresholdGreedyTest, ModularScheduleFiveThenHalf) {
  // Thresholds 5, 2.5: picks element 0 then element 2.
  const MaxResult r = ThresholdGreedy(Modular({5.0, 1.0, 3.0}), 2, 0.5);
  EXPECT_EQ(r.chosen, Set(3, {0, 2}));
  EXPECT_EQ(r.value, 8.0);
}

TEST(ThresholdGreedyTest, FullBudgetTakesEverythingPositive) {
  const MaxResult r = ThresholdGreedy(Modular({0.3, 2.0, 1.0, 0.7}), 4);
  EXPECT_EQ(r.chosen, Bitset::Full(4));
}

TEST(ThresholdGreedyTest, CoverageReachesOptimum) {
  EXPECT_EQ(ThresholdGreedy(ThreeSetCoverage(), 2, 0.05).value, 3.0);
}

TEST(ThresholdGreedyTest, EpsilonOutOfRange) {
  EXPECT_SMX_ERROR(ThresholdGreedy(Modular({1.0}), 1, 0.0), ErrorCode::kDomain);
  EXPECT_SMX_ERROR(ThresholdGreedy(Modular({1.0}), 1, 1.0), ErrorCode::kDomain);
}

TEST(RandomGreedyTest, FullBudgetNonnegativeModularTakesAll) {
  const GroundFunction f = Modular({1.0, 0.5, 2.0, 0.25});
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    EXPECT_EQ(RandomGreedy(f, 4, seed).chosen, Bitset::Full(4));
  }
}

TEST(RandomGreedyTest, SameSeedSameOutput) {
  Rng rng(1);
  const GroundFunction f = RandomNonnegativeSubmodular(rng, 10);
  EXPECT_EQ(RandomGreedy(f, 4, 7).chosen, RandomGreedy(f, 4, 7).chosen);
}

TEST(RandomGreedyTest, ExpectationOnHump) {
  const GroundFunction f = CardinalityHump();
  double total = 0.0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    total += RandomGreedy(f, 3, DeriveSeed(seed, "hump")).value;
  }
  EXPECT_GE(total / 1000.0, 2.0 / std::numbers::e - 0.05);
}

TEST(DoubleGreedyTest, MonotoneModularKeepsEverything) {
  const MaxResult r = DoubleGreedyUsm(Modular({1.0, 2.0, 0.5}));
  EXPECT_EQ(r.chosen, Bitset::Full(3));
  EXPECT_EQ(r.value, 3.5);
}

TEST(DoubleGreedyTest, HumpReachesHalf) {
  const GroundFunction f = CardinalityHump();
  EXPECT_EQ(EnumeratedMax(f, 3), 2.0);
  EXPECT_GE(DoubleGreedyUsm(f).value, 1.0);
}

TEST(DoubleGreedyTest, ConstantFunction) {
  EXPECT_EQ(DoubleGreedyUsm(ConstantFn(4, 2.5)).value, 2.5);
}

TEST(DoubleGreedyTest, NegativeValueIsContractError) {
  EXPECT_SMX_ERROR(DoubleGreedyUsm(Modular({-1.0, 1.0})), ErrorCode::kContract);
}

TEST(DoubleGreedyTest, HalfOfOptimumOnRandomInstances) {
  Rng rng(DeriveSeed(2026, "usm-test"));
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 1 + UniformIndex(rng, 12);
    const GroundFunction f = RandomNonnegativeSubmodular(rng, n);
    const double opt = EnumeratedMax(f, n);
    EXPECT_GE(DoubleGreedyUsm(f).value, 0.5 * opt - 1e-9) << "instance " << i;
  }
}

TEST(BruteForceMaxTest, ModularCardinality) {
  const MaxResult r = BruteForceMax(Modular({1.0, -2.0, 4.0, 3.0}),
                                    Constraint::CardinalityAtMost(2));
  EXPECT_EQ(r.chosen, Set(4, {2, 3}));
  EXPECT_EQ(r.value, 7.0);
  EXPECT_EQ(r.alpha_claim, 1.0);
}

TEST(BruteForceMaxTest, CoverageAndTies) {
  EXPECT_EQ(BruteForceMax(ThreeSetCoverage(), Constraint::CardinalityAtMost(2))
                .value,
            3.0);
  EXPECT_TRUE(BruteForceMax(ConstantFn(3, 1.0), Constraint::AllSubsets())
                  .chosen.none());
}

TEST(MaximizeTest, FeasibleAndReEvaluated) {
  Rng rng(3);
  const GroundFunction f = RandomNonnegativeSubmodular(rng, 8);
  const Constraint c = Constraint::CardinalityAtMost(3);
  for (MaximizerKind kind :
       {MaximizerKind::kGreedy, MaximizerKind::kThresholdGreedy,
        MaximizerKind::kRandomGreedy, MaximizerKind::kBruteForce}) {
    MaximizerSpec spec;
    spec.kind = kind;
    spec.seed = 5;
    const MaxResult r = Maximize(f, c, spec);
    EXPECT_TRUE(c.Admits(r.chosen)) << MaximizerName(kind);
    EXPECT_EQ(r.value, f(r.chosen));
    EXPECT_EQ(r.alpha_claim, ClaimedAlpha(spec)) << MaximizerName(kind);
  }
}

TEST(MaximizeTest, DoubleGreedyNeedsAllSubsets) {
  MaximizerSpec spec;
  spec.kind = MaximizerKind::kDoubleGreedy;
  EXPECT_SMX_ERROR(
      Maximize(Modular({1.0}), Constraint::CardinalityAtMost(1), spec),
      ErrorCode::kDomain);
  EXPECT_EQ(ClaimedAlpha(spec), 3.0);
}

TEST(MaximizeTest, NamesRoundTrip) {
  for (MaximizerKind kind :
       {MaximizerKind::kGreedy, MaximizerKind::kThresholdGreedy,
        MaximizerKind::kRandomGreedy, MaximizerKind::kDoubleGreedy,
        MaximizerKind::kBruteForce}) {
    EXPECT_EQ(ParseMaximizer(MaximizerName(kind)), kind);
  }
  EXPECT_SMX_ERROR(ParseMaximizer("lazy"), ErrorCode::kUsage);
}

}  // namespace
}  // namespace smx
