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

#include "smx/sfm.h"

#include <cmath>
#include <limits>
#include <vector>

#include "gtest/gtest.h"
#include "smx/instances.h"
#include "smx/random.h"
#include "test_util.h"

namespace smx {
namespace {

using ::smx::testing::ConstantFn;
using ::smx::testing::Fn;
using ::smx::testing::Set;

SfmOptions Mnp() {
  SfmOptions o;
  o.method = SfmMethod::kMinNormPoint;
  return o;
}

// Independent oracle: plain loop over masks, no library code.
double EnumeratedMin(const GroundFunction& f) {
  double best = std::numeric_limits<double>::infinity();
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << f.n); ++m) {
    best = std::min(best, f(Bitset::FromMask(f.n, m)));
  }
  return best;
}

TEST(LovaszTest, AgreesWithFOnVertices) {
  Rng rng(4);
  const GroundFunction f = RandomCutPlusModular(rng, 6);
  for (std::uint64_t m = 0; m < 64; ++m) {
    std::vector<double> x(6);
    for (std::size_t i = 0; i < 6; ++i) x[i] = (m >> i) & 1 ? 1.0 : 0.0;
    EXPECT_NEAR(LovaszExtension(f, x), f(Bitset::FromMask(6, m)), 1e-12);
  }
}

TEST(LovaszTest, UndirectedEdgeAtHalfIsZero) {
  const GroundFunction cut =
      DirectedCut(2, {{.from = 0, .to = 1, .weight = 1.0},
                      {.from = 1, .to = 0, .weight = 1.0}});
  EXPECT_DOUBLE_EQ(LovaszExtension(cut, std::vector<double>{0.5, 0.5}), 0.0);
}

TEST(LovaszTest, ModularHandComputation) {
  // 0.75 * (-1) + 0.25 * 3 = 0.
  const GroundFunction f = Modular({3.0, -1.0});
  EXPECT_DOUBLE_EQ(LovaszExtension(f, std::vector<double>{0.25, 0.75}), 0.0);
}

TEST(LovaszTest, PositivelyHomogeneousAfterShift) {
  Rng rng(8);
  GroundFunction f = RandomCoverageMinusModular(rng, 5);
  const double f0 = f(Bitset(5));
  const std::vector<double> x = {0.9, 0.1, 0.5, 0.3, 0.7};
  std::vector<double> half(x);
  for (double& v : half) v *= 0.5;
  EXPECT_NEAR(LovaszExtension(f, half) - f0,
              0.5 * (LovaszExtension(f, x) - f0), 1e-12);
}

TEST(LovaszTest, CoordinateOutsideUnitIntervalIsDomainError) {
  const GroundFunction f = Modular({1.0, 1.0});
  EXPECT_SMX_ERROR(LovaszExtension(f, std::vector<double>{1.5, 0.0}),
                   ErrorCode::kDomain);
  EXPECT_SMX_ERROR(LovaszExtension(f, std::vector<double>{0.5}),
                   ErrorCode::kDomain);
}

TEST(GreedyVertexTest, SumsToNormalizedFullValue) {
  Rng rng(2);
  const GroundFunction f = RandomCutPlusModular(rng, 7);
  const std::vector<std::size_t> order = {3, 1, 6, 0, 2, 5, 4};
  const std::vector<double> q = GreedyVertex(f, order);
  double sum = 0.0;
  for (double v : q) sum += v;
  EXPECT_NEAR(sum, f(Bitset::Full(7)) - f(Bitset(7)), 1e-12);
}

TEST(MinimizeTest, ModularPicksNegativeWeights) {
  const GroundFunction f = Modular({-1.0, 2.0, -3.0});
  for (SfmMethod m : {SfmMethod::kBruteForce, SfmMethod::kMinNormPoint}) {
    SfmOptions o;
    o.method = m;
    const MinResult r = MinimizeUnconstrained(f, o);
    EXPECT_EQ(r.minimizer, Set(3, {0, 2}));
    EXPECT_DOUBLE_EQ(r.value, -4.0);
  }
}

TEST(MinimizeTest, NonnegativeWithZeroAtEmpty) {
  Rng rng(6);
  const GroundFunction f = RandomNonnegativeSubmodular(rng, 6);
  const GroundFunction g = Fn(6, [f](const Bitset& s) {
    return f(s) - f(Bitset(6));
  });
  const MinResult r = MinimizeUnconstrained(g, Mnp());
  EXPECT_LE(r.value, 0.0);
  EXPECT_GE(r.value, -1e-9);
}

TEST(MinimizeTest, MnpMatchesEnumerationOnCutPlusModular) {
  Rng rng(DeriveSeed(2026, "sfm-test"));
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 1 + UniformIndex(rng, 12);
    const GroundFunction f = RandomCutPlusModular(rng, n);
    const MinResult r = MinimizeUnconstrained(f, Mnp());
    EXPECT_NEAR(r.value, EnumeratedMin(f), 1e-6) << "instance " << i;
    EXPECT_EQ(r.value, f(r.minimizer));
  }
}

TEST(MinimizeTest, MnpMatchesEnumerationOnCoverageMinusModular) {
  Rng rng(DeriveSeed(2026, "sfm-test-coverage"));
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = 1 + UniformIndex(rng, 12);
    const GroundFunction f = RandomCoverageMinusModular(rng, n);
    EXPECT_NEAR(MinimizeUnconstrained(f, Mnp()).value, EnumeratedMin(f), 1e-6)
        << "instance " << i;
  }
}

TEST(MinimizeTest, MnpLargerInstancesUpToSixteen) {
  Rng rng(99);
  for (std::size_t n : {13u, 14u, 16u}) {
    const GroundFunction f = RandomCutPlusModular(rng, n);
    EXPECT_NEAR(MinimizeUnconstrained(f, Mnp()).value, EnumeratedMin(f), 1e-6);
  }
}

TEST(MinimizeTest, SeedInstanceSelfConsistency) {
  Rng rng(1234);
  const GroundFunction f = RandomCutPlusModular(rng, 10);
  EXPECT_NEAR(BruteForceMin(f).value, MinimizeUnconstrained(f, Mnp()).value,
              1e-6);
}

TEST(MinimizeTest, CertificateAndAudit) {
  Rng rng(31);
  const GroundFunction f = RandomCutPlusModular(rng, 9);
  const MinResult plain = MinimizeUnconstrained(f, Mnp());
  EXPECT_EQ(plain.method, MinResult::Method::kMinNormPoint);
  EXPECT_LE(plain.lower_bound, plain.value + 1e-9);
  SfmOptions audited = Mnp();
  audited.audit = true;
  EXPECT_TRUE(MinimizeUnconstrained(f, audited).certified);
}

TEST(MinimizeTest, MnpTerminatesAndCertifiesAtLargeN) {
  // At n = 128 the duality gap used to hover near 1e-8 forever.
  Rng rng(7);
  const GroundFunction f = RandomCutPlusModular(rng, 128);
  SfmOptions mnp;
  mnp.method = SfmMethod::kMinNormPoint;
  const MinNormPointResult point = MinNormPoint(f, mnp);
  EXPECT_TRUE(point.converged);
  EXPECT_LT(point.iterations, 200u);
  const MinResult r = MinimizeUnconstrained(f, mnp);
  EXPECT_TRUE(r.certified);
  EXPECT_NEAR(r.value, r.lower_bound, 1e-6);
}

TEST(MinimizeTest, IterationCapLeavesResultUncertified) {
  Rng rng(12);
  const GroundFunction f = RandomCutPlusModular(rng, 12);
  SfmOptions o = Mnp();
  o.max_major_iterations = 1;
  const MinResult r = MinimizeUnconstrained(f, o);
  EXPECT_EQ(r.iterations, 1u);
  EXPECT_EQ(r.value, f(r.minimizer));
  EXPECT_GE(r.value, EnumeratedMin(f));
}

TEST(MinimizeTest, AutoUsesEnumerationForSmallN) {
  const MinResult r = MinimizeUnconstrained(Modular({1.0, -1.0}));
  EXPECT_EQ(r.method, MinResult::Method::kBruteForce);
  EXPECT_TRUE(r.certified);
}

TEST(MinimizeTest, NonFiniteValueIsNumericError) {
  const GroundFunction f = Fn(3, [](const Bitset& s) {
    return s.count() == 3 ? std::numeric_limits<double>::infinity() : 0.0;
  });
  EXPECT_SMX_ERROR(BruteForceMin(f), ErrorCode::kNumeric);
}

TEST(MinimizeTest, EmptyGroundSet) {
  const MinResult r = MinimizeUnconstrained(ConstantFn(0, 2.5), Mnp());
  EXPECT_EQ(r.value, 2.5);
  EXPECT_EQ(r.minimizer.size(), 0u);
}

TEST(BruteForceMinTest, ConstantAndCardinality) {
  const MinResult c = BruteForceMin(ConstantFn(4, 7.0));
  EXPECT_EQ(c.minimizer, Bitset(4));
  EXPECT_EQ(c.value, 7.0);
  const MinResult card = BruteForceMin(
      Fn(4, [](const Bitset& s) { return static_cast<double>(s.count()); }));
  EXPECT_EQ(card.minimizer, Bitset(4));
  EXPECT_EQ(card.value, 0.0);
  EXPECT_TRUE(card.certified);
}

TEST(BruteForceMinTest, CapacityLimit) {
  EXPECT_SMX_ERROR(BruteForceMin(ConstantFn(25, 0.0)), ErrorCode::kCapacity);
}

TEST(BruteForceMinTest, MinimizersFormALattice) {
  Rng rng(77);
  for (int i = 0; i < 20; ++i) {
    const std::size_t n = 2 + UniformIndex(rng, 9);
    const GroundFunction f = RandomCutPlusModular(rng, n);
    const double best = BruteForceMin(f).value;
    std::vector<Bitset> minimizers;
    ForEachSubset(n, [&](const Bitset& s) {
      if (f(s) <= best + 1e-9) minimizers.push_back(s);
    });
    for (const Bitset& a : minimizers) {
      for (const Bitset& b : minimizers) {
        EXPECT_LE(f(a & b), best + 1e-9);
        EXPECT_LE(f(a | b), best + 1e-9);
      }
    }
  }
}

}  // namespace
}  // namespace smx
