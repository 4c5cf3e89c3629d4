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

#include "smx/harness/verify.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <ostream>
#include <sstream>

#include "smx/checks.h"
#include "smx/instances.h"
#include "smx/minimax.h"
#include "smx/random.h"
#include "smx/reductions.h"
#include "smx/sfm.h"
#include "smx/submax.h"

namespace smx::harness {

namespace {

constexpr double kTol = 1e-9;

// a <= b up to kTol, scaled by the magnitude of b.
bool Leq(double a, double b) {
  return a <= b + kTol * std::max(1.0, std::abs(b));
}

std::size_t Between(Rng& rng, std::size_t lo, std::size_t hi) {
  return lo + static_cast<std::size_t>(UniformIndex(rng, hi - lo + 1));
}

// Records the first failure.
class Recorder {
 public:
  explicit Recorder(std::string name) { result_.name = std::move(name); }

  void Case() { ++result_.cases; }
  void Fail(const std::string& detail) {
    if (result_.passed) result_.detail = detail;
    result_.passed = false;
  }
  void Note(const std::string& detail) {
    if (result_.passed) result_.detail = detail;
  }
  bool failed() const { return !result_.passed; }
  PropertyResult Done() { return result_; }

 private:
  PropertyResult result_;
};

std::string Describe(std::size_t i, std::size_t n1, std::size_t n2) {
  return "instance " + std::to_string(i) + " (n1=" + std::to_string(n1) +
         ", n2=" + std::to_string(n2) + ")";
}

std::string Num(double v) {
  std::ostringstream out;
  out.precision(10);
  out << v;
  return out.str();
}

MinimaxInstance JointOrMonotone(Rng& rng, std::size_t i, std::size_t n1,
                                std::size_t n2) {
  return i % 2 == 0 ? RandomJointInstance(rng, n1, n2)
                    : RandomMonotoneJointInstance(rng, n1, n2);
}

MinimaxInstance AnySubmodularInY(Rng& rng, std::size_t i, std::size_t n1,
                                 std::size_t n2) {
  switch (i % 3) {
    case 0:
      return RandomDisjointInstance(rng, n1, n2);
    case 1:
      return RandomJointInstance(rng, n1, n2);
    default:
      return RandomMonotoneJointInstance(rng, n1, n2);
  }
}

Constraint RandomConstraint(Rng& rng, std::size_t n2) {
  if (n2 == 0 || Coin(rng)) return Constraint::AllSubsets();
  return Constraint::CardinalityAtMost(Between(rng, 1, n2));
}

}  // namespace

PropertyResult CheckSfmExactness(const PropertyScale& scale,
                                 std::size_t max_n) {
  Recorder rec("sfm-exactness");
  Rng rng(DeriveSeed(scale.seed, "sfm-exactness"));
  SfmOptions mnp;
  mnp.method = SfmMethod::kMinNormPoint;
  double worst = 0.0;
  for (std::size_t i = 0; i < scale.instances && !rec.failed(); ++i) {
    const std::size_t n = Between(rng, 1, max_n);
    const GroundFunction f = i % 2 == 0 ? RandomCutPlusModular(rng, n)
                                        : RandomCoverageMinusModular(rng, n);
    const double exact = BruteForceMin(f).value;
    const double got = MinimizeUnconstrained(f, mnp).value;
    worst = std::max(worst, std::abs(got - exact));
    rec.Case();
    if (std::abs(got - exact) > 1e-6) {
      rec.Fail("instance " + std::to_string(i) + " (n=" + std::to_string(n) +
               "): MNP " + Num(got) + " vs exact " + Num(exact));
    }
  }
  rec.Note("max |MNP - exact| = " + Num(worst));
  return rec.Done();
}

PropertyResult CheckUsmHalf(const PropertyScale& scale, std::size_t max_n) {
  Recorder rec("usm-half");
  Rng rng(DeriveSeed(scale.seed, "usm-half"));
  double worst = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < scale.instances && !rec.failed(); ++i) {
    const std::size_t n = Between(rng, 1, max_n);
    const GroundFunction f = RandomNonnegativeSubmodular(rng, n);
    const double opt = BruteForceMax(f, Constraint::AllSubsets()).value;
    const double got = DoubleGreedyUsm(f).value;
    if (opt > 0.0) worst = std::min(worst, got / opt);
    rec.Case();
    if (!Leq(0.5 * opt, got)) {
      rec.Fail("instance " + std::to_string(i) + " (n=" + std::to_string(n) +
               "): double greedy " + Num(got) + " < OPT/2 = " + Num(opt / 2));
    }
  }
  rec.Note("min value/OPT = " + Num(worst));
  return rec.Done();
}

PropertyResult CheckInnerMinProperties(const PropertyScale& scale,
                                       std::size_t max_n) {
  Recorder rec("inner-min-submodular");
  Rng rng(DeriveSeed(scale.seed, "inner-min"));
  std::size_t monotone_cases = 0;
  for (std::size_t i = 0; i < scale.instances && !rec.failed(); ++i) {
    const std::size_t n1 = Between(rng, 0, max_n);
    const std::size_t n2 = Between(rng, 1, max_n);
    const MinimaxInstance inst = JointOrMonotone(rng, i, n1, n2);
    const GroundFunction g = InnerMinFunction(inst);
    rec.Case();
    const CheckReport sub = CheckSubmodular(g);
    if (!sub) {
      rec.Fail(Describe(i, n1, n2) + ": g not submodular: " +
               sub.witness.value_or(""));
      break;
    }
    if (CheckN2Monotone(*inst.f)) {
      ++monotone_cases;
      const CheckReport mono = CheckMonotone(g);
      if (!mono) {
        rec.Fail(Describe(i, n1, n2) + ": f is N2-monotone but g is not: " +
                 mono.witness.value_or(""));
      }
    }
  }
  rec.Note(std::to_string(monotone_cases) + " N2-monotone instances");
  return rec.Done();
}

PropertyResult CheckMaxMinUpperBound(const PropertyScale& scale,
                                     std::size_t max_n) {
  Recorder rec("max-min-upper-bound");
  Rng rng(DeriveSeed(scale.seed, "inner-min"));
  const MaximizerKind kinds[] = {MaximizerKind::kGreedy,
                                 MaximizerKind::kThresholdGreedy,
                                 MaximizerKind::kRandomGreedy};
  for (std::size_t i = 0; i < scale.instances && !rec.failed(); ++i) {
    const std::size_t n1 = Between(rng, 0, max_n);
    const std::size_t n2 = Between(rng, 1, max_n);
    // Same draws as the inner-min check, so the instances coincide.
    const MinimaxInstance inst = JointOrMonotone(rng, i, n1, n2);
    const double opt = BruteForceMaxMin(inst).value;
    for (MaximizerKind kind : kinds) {
      MaximizerSpec spec;
      spec.kind = kind;
      const SolveResult r = MaxMinViaOracle(inst, spec, 2, i);
      rec.Case();
      if (!Leq(r.value, opt)) {
        rec.Fail(Describe(i, n1, n2) + ": " +
                 std::string(MaximizerName(kind)) + " value " + Num(r.value) +
                 " > max-min optimum " + Num(opt));
      }
    }
    MaximizerSpec exact;
    exact.kind = MaximizerKind::kBruteForce;
    const SolveResult r = MaxMinViaOracle(inst, exact, 1, i);
    rec.Case();
    if (std::abs(r.value - opt) > kTol * std::max(1.0, std::abs(opt))) {
      rec.Fail(Describe(i, n1, n2) + ": exact maximizer gives " +
               Num(r.value) + ", optimum " + Num(opt));
    }
  }
  return rec.Done();
}

PropertyResult CheckSingletonsBracket(const PropertyScale& scale,
                                      std::size_t max_n1,
                                      std::size_t max_n2) {
  Recorder rec("singletons-bracket");
  Rng rng(DeriveSeed(scale.seed, "singletons"));
  double worst = 0.0;
  for (std::size_t i = 0; i < scale.instances && !rec.failed(); ++i) {
    const std::size_t n1 = Between(rng, 0, max_n1);
    const std::size_t n2 = Between(rng, 0, max_n2);
    const MinimaxInstance inst = AnySubmodularInY(rng, i, n1, n2);
    const double tau = BruteForceTau(inst);
    const SolveResult r = MinMaxSingletons(inst);
    const double factor = static_cast<double>(n2) + 1.0;
    rec.Case();
    if (tau > 0.0) worst = std::max(worst, r.value / tau);
    if (!Leq(tau, r.value) || !Leq(r.value, factor * tau)) {
      rec.Fail(Describe(i, n1, n2) + ": value " + Num(r.value) +
               " outside [" + Num(tau) + ", " + Num(factor * tau) + "]");
      break;
    }
    ForEachSubset(n1, [&](const Bitset& x) {
      if (rec.failed()) return;
      const double best = BruteForceMaxOverY(inst, x).value;
      double surrogate = (*inst.f)(x, Bitset(n2));
      for (std::size_t u = 0; u < n2; ++u) {
        surrogate += (*inst.f)(x, Bitset::FromIndices(n2, {u}));
      }
      if (!Leq(best, surrogate) || !Leq(surrogate, factor * best)) {
        rec.Fail(Describe(i, n1, n2) + ": sandwich fails at X=" +
                 x.ToString() + " (max " + Num(best) + ", surrogate " +
                 Num(surrogate) + ")");
      }
    });
  }
  rec.Note("max value/tau = " + Num(worst));
  return rec.Done();
}

PropertyResult CheckFourHBound(const PropertyScale& scale,
                               std::optional<ObjectiveKind> kind,
                               std::size_t max_n) {
  Recorder rec(kind ? "four-h-bound/" + std::string(ObjectiveName(*kind))
                    : std::string("four-h-bound/random"));
  Rng rng(DeriveSeed(scale.seed, rec.Done().name));
  double worst = 0.0;
  for (std::size_t i = 0; i < scale.instances && !rec.failed(); ++i) {
    const std::size_t n1 = Between(rng, 0, max_n);
    const std::size_t n2 = Between(rng, 1, max_n);
    const MinimaxInstance inst =
        kind ? RandomObjectiveInstance(rng, *kind, n1, n2)
             : AnySubmodularInY(rng, i, n1, n2);
    rec.Case();
    ForEachSubset(n1, [&](const Bitset& x) {
      if (rec.failed()) return;
      const double best = BruteForceMaxOverY(inst, x).value;
      const double h = HExact(inst, x);
      if (h > 0.0) worst = std::max(worst, best / h);
      if (!Leq(best, 4.0 * h)) {
        rec.Fail(Describe(i, n1, n2) + ": max_Y f = " + Num(best) +
                 " > 4h = " + Num(4.0 * h) + " at X=" + x.ToString());
      }
    });
  }
  rec.Note("max (max_Y f)/h = " + Num(worst));
  return rec.Done();
}

PropertyResult CheckRandomSubsetsExact(const PropertyScale& scale,
                                       std::size_t max_n) {
  Recorder rec("random-subsets-exact");
  Rng rng(DeriveSeed(scale.seed, "random-subsets-exact"));
  for (std::size_t i = 0; i < scale.instances && !rec.failed(); ++i) {
    const std::size_t n1 = Between(rng, 0, max_n);
    const std::size_t n2 = Between(rng, 0, max_n);
    const MinimaxInstance inst = AnySubmodularInY(rng, i, n1, n2);
    const double epsilon = UniformReal(rng, 0.05, 0.45);
    const SamplePlan plan = SamplePlan::Make(epsilon, n1, n2, i);
    const double tau = BruteForceTau(inst);
    const SolveResult r = MinMaxRandomSubsets(inst, plan);
    const double hi = (4.0 + epsilon / 2.0) * tau;
    rec.Case();
    if (!plan.exact_mode) {
      rec.Fail(Describe(i, n1, n2) + ": plan is not in exact mode");
    } else if (!Leq(tau, r.value) || !Leq(r.value, hi)) {
      rec.Fail(Describe(i, n1, n2) + ": value " + Num(r.value) +
               " outside [" + Num(tau) + ", " + Num(hi) + "]");
    }
  }
  return rec.Done();
}

PropertyResult CheckRandomSubsetsSampled(const PropertyScale& scale,
                                         std::size_t seeds_per_instance,
                                         double epsilon, std::size_t n2,
                                         std::size_t max_n1) {
  Recorder rec("random-subsets-sampled");
  Rng rng(DeriveSeed(scale.seed, "random-subsets-sampled"));
  std::size_t runs = 0;
  std::size_t failures = 0;
  for (std::size_t i = 0; i < scale.instances; ++i) {
    const std::size_t n1 = Between(rng, 1, max_n1);
    const MinimaxInstance inst = AnySubmodularInY(rng, i, n1, n2);
    const double tau = BruteForceTau(inst);
    const double hi = (4.0 + epsilon / 2.0) * tau;
    for (std::size_t s = 0; s < seeds_per_instance; ++s) {
      const SamplePlan plan = SamplePlan::Make(
          epsilon, n1, n2, DeriveSeed(scale.seed, "sampled-run", runs),
          /*allow_exact=*/false);
      const SolveResult r = MinMaxRandomSubsets(inst, plan);
      ++runs;
      rec.Case();
      if (!Leq(tau, r.value) || !Leq(r.value, hi)) ++failures;
    }
  }
  const double rate = epsilon / (8.0 * (static_cast<double>(n2) + 1.0)) + 0.02;
  const auto allowed =
      static_cast<std::size_t>(std::floor(rate * static_cast<double>(runs)));
  const std::string summary = std::to_string(failures) + "/" +
                              std::to_string(runs) +
                              " runs outside the bracket (allowed " +
                              std::to_string(allowed) + ")";
  if (failures > allowed) {
    rec.Fail(summary);
  } else {
    rec.Note(summary);
  }
  return rec.Done();
}

PropertyResult CheckBestOfTwoBound(const PropertyScale& scale,
                                   std::size_t max_n,
                                   std::size_t sampled_instances,
                                   std::size_t seeds_per_instance,
                                   double epsilon, std::size_t sampled_n2,
                                   std::size_t max_n1) {
  Recorder rec("best-of-two-bound");
  double worst = 0.0;
  auto check = [&](const MinimaxInstance& inst, const SamplePlan& plan,
                   double tau, const std::string& where) {
    const SolveResult r = BestOfTwo(inst, plan);
    const double best = BruteForceMaxOverY(inst, r.chosen.x).value;
    const double n2 = static_cast<double>(inst.ground().n2);
    const double bound = 4.0 * (n2 + 1.0) * tau;
    rec.Case();
    if (tau > 0.0) worst = std::max(worst, best / tau);
    if (!Leq(best, bound)) {
      rec.Fail(where + ": max_Y f(X ⊎ Y) = " + Num(best) +
               " > 4(n2+1)tau = " + Num(bound));
    }
  };
  // Same draws as the random-subsets checks, so the instances coincide.
  Rng exact_rng(DeriveSeed(scale.seed, "random-subsets-exact"));
  for (std::size_t i = 0; i < scale.instances && !rec.failed(); ++i) {
    const std::size_t n1 = Between(exact_rng, 0, max_n);
    const std::size_t n2 = Between(exact_rng, 0, max_n);
    const MinimaxInstance inst = AnySubmodularInY(exact_rng, i, n1, n2);
    const double eps = UniformReal(exact_rng, 0.05, 0.45);
    check(inst, SamplePlan::Make(eps, n1, n2, i), BruteForceTau(inst),
          Describe(i, n1, n2));
  }
  Rng sampled_rng(DeriveSeed(scale.seed, "random-subsets-sampled"));
  std::size_t runs = 0;
  for (std::size_t i = 0; i < sampled_instances && !rec.failed(); ++i) {
    const std::size_t n1 = Between(sampled_rng, 1, max_n1);
    const MinimaxInstance inst =
        AnySubmodularInY(sampled_rng, i, n1, sampled_n2);
    const double tau = BruteForceTau(inst);
    for (std::size_t s = 0; s < seeds_per_instance && !rec.failed(); ++s) {
      const SamplePlan plan = SamplePlan::Make(
          epsilon, n1, sampled_n2, DeriveSeed(scale.seed, "sampled-run", runs),
          /*allow_exact=*/false);
      ++runs;
      check(inst, plan, tau, "sampled " + Describe(i, n1, sampled_n2));
    }
  }
  rec.Note("max (max_Y f)/tau = " + Num(worst));
  return rec.Done();
}

PropertyResult CheckGrowingBracket(const PropertyScale& scale,
                                   std::size_t max_n1, std::size_t max_n2) {
  Recorder rec("x-growing-bracket");
  Rng rng(DeriveSeed(scale.seed, "x-growing"));
  double worst = 0.0;
  for (std::size_t i = 0; i < scale.instances && !rec.failed(); ++i) {
    const std::size_t n1 = Between(rng, 0, max_n1);
    const std::size_t n2 = Between(rng, 1, max_n2);
    MinimaxInstance inst = JointOrMonotone(rng, i, n1, n2);
    inst.f2 = RandomConstraint(rng, n2);
    MaximizerSpec exact;
    exact.kind = MaximizerKind::kBruteForce;
    const SolveResult r =
        IterativeXGrowing(inst, MakeAlphaOracle(inst, exact));
    const double tau = BruteForceTau(inst);
    const double root = std::sqrt(static_cast<double>(n1));
    const double hi = (3.0 * root + 3.0) * tau;
    rec.Case();
    if (tau > 0.0) worst = std::max(worst, r.value / tau);
    if (!Leq(tau, r.value) || !Leq(r.value, hi)) {
      rec.Fail(Describe(i, n1, n2) + ": value " + Num(r.value) +
               " outside [" + Num(tau) + ", " + Num(hi) + "]");
    } else if (r.iterations > n1 + 1) {
      rec.Fail(Describe(i, n1, n2) + ": " + std::to_string(r.iterations) +
               " iterations");
    }
  }
  rec.Note("max value/tau = " + Num(worst));
  return rec.Done();
}

PropertyResult CheckGadgets(const PropertyScale& scale, std::size_t max_m,
                            std::size_t max_n2) {
  Recorder rec("gadget");
  Rng rng(DeriveSeed(scale.seed, "gadget"));
  std::size_t monotone = 0;
  for (std::size_t i = 0; i < scale.instances && !rec.failed(); ++i) {
    const std::size_t m = Between(rng, 1, max_m);
    const std::size_t n2 = Between(rng, 1, max_n2);
    auto gadget = BuildGadget(RandomFamily(rng, m, n2, /*monotone_only=*/i % 2 == 1));
    const GadgetReport report = VerifyGadget(*gadget);
    rec.Case();
    if (report.n2_monotone) ++monotone;
    // [i - 1] ⊎ Y evaluates to g_i(Y).
    Bitset prefix(gadget->n1());
    for (std::size_t k = 0; k < m && !rec.failed(); ++k) {
      ForEachSubset(n2, [&](const Bitset& y) {
        if ((*gadget)(prefix, y) != gadget->family().g[k](y)) {
          rec.Fail("family " + std::to_string(i) + ": f([" +
                   std::to_string(k) + "] ⊎ Y) differs from g_" +
                   std::to_string(k + 1));
        }
      });
      if (k + 1 < m) prefix.set(k);
    }
    if (!report.ok()) {
      std::string why;
      for (const std::string& w : report.witnesses) why += w + "; ";
      rec.Fail("family " + std::to_string(i) + " (m=" + std::to_string(m) +
               ", n2=" + std::to_string(n2) + "): " + why);
    }
  }
  rec.Note(std::to_string(monotone) + " monotone families");
  return rec.Done();
}

PropertyResult CheckSatTracking(const PropertyScale& scale,
                                std::size_t max_vars,
                                std::size_t max_clauses) {
  Recorder rec("sat-tracking");
  Rng rng(DeriveSeed(scale.seed, "sat"));
  std::size_t satisfiable = 0;
  for (std::size_t i = 0; i < scale.instances && !rec.failed(); ++i) {
    const std::size_t n = Between(rng, 1, max_vars);
    const std::size_t clauses = Between(rng, 1, max_clauses);
    const CnfFormula phi = RandomCnf(rng, n, clauses, 3);
    const bool sat = BruteForceSat(phi).has_value();
    satisfiable += sat ? 1 : 0;
    const double expected = sat ? 1.0 : 0.0;

    const FunctionFamily plain = SatEncodeUnconstrained(phi);
    const double v1 = MaxMinValueOfFamily(plain, Constraint::AllSubsets());
    const CardinalityEncoding card = SatEncodeCardinality(phi);
    const double v2 = MaxMinValueOfFamily(
        card.family, Constraint::CardinalityAtMost(card.k));
    rec.Case();
    if (v1 != expected || v2 != expected) {
      rec.Fail("formula " + std::to_string(i) + " (n=" + std::to_string(n) +
               ", " + std::to_string(clauses) + " clauses): values " +
               Num(v1) + ", " + Num(v2) + " but satisfiable=" +
               (sat ? "yes" : "no"));
      break;
    }
    // Through the gadget when the exhaustive max-min is affordable.
    if (plain.m() - 1 + plain.n2 <= 16) {
      MinimaxInstance inst;
      inst.f = BuildGadget(plain);
      inst.tags.disjointly_submodular = true;
      const double v = BruteForceMaxMin(inst).value;
      if (v != expected) {
        rec.Fail("formula " + std::to_string(i) +
                 ": gadget max-min value " + Num(v));
      }
    }
  }
  rec.Note(std::to_string(satisfiable) + " satisfiable formulas");
  return rec.Done();
}

PropertyResult CheckObjectiveProperties(const PropertyScale& scale,
                                    ObjectiveKind kind,
                                    std::size_t max_total) {
  Recorder rec("objective-properties/" + std::string(ObjectiveName(kind)));
  Rng rng(DeriveSeed(scale.seed, rec.Done().name));
  std::size_t violations = 0;
  for (std::size_t i = 0; i < scale.instances; ++i) {
    const std::size_t n2 = Between(rng, 1, max_total - 1);
    const std::size_t n1 = Between(rng, 0, max_total - n2);
    const MinimaxInstance inst = RandomObjectiveInstance(rng, kind, n1, n2);
    rec.Case();
    const CheckReport nonneg = CheckNonnegative(*inst.f);
    const CheckReport joint = CheckJointlySubmodular(*inst.f);
    if (!nonneg) {
      rec.Fail(Describe(i, n1, n2) + ": negative value " +
               nonneg.witness.value_or(""));
    }
    if (!joint) {
      ++violations;
      rec.Fail(Describe(i, n1, n2) + ": not jointly submodular: " +
               joint.witness.value_or(""));
    }
  }
  PropertyResult out = rec.Done();
  if (violations > 0) {
    out.detail = std::to_string(violations) + "/" +
                 std::to_string(scale.instances) +
                 " instances not jointly submodular; first: " + out.detail;
  }
  return out;
}

bool SuiteReport::ok() const {
  return std::all_of(results.begin(), results.end(),
                     [](const PropertyResult& r) { return r.passed; });
}

SuiteReport RunVerifySuite(VerifyLevel level, std::uint64_t seed,
                           std::ostream* log) {
  const bool full = level == VerifyLevel::kFull;
  auto scale = [&](std::size_t quick, std::size_t big) {
    return PropertyScale{full ? big : quick, seed};
  };
  std::vector<std::function<PropertyResult()>> checks = {
      [&] { return CheckSfmExactness(scale(40, 200)); },
      [&] { return CheckUsmHalf(scale(40, 200)); },
      [&] { return CheckInnerMinProperties(scale(10, 50)); },
      [&] { return CheckMaxMinUpperBound(scale(10, 50)); },
      [&] { return CheckSingletonsBracket(scale(20, 100)); },
      [&] { return CheckFourHBound(scale(10, 30), std::nullopt); },
      [&] { return CheckFourHBound(scale(4, 10), ObjectiveKind::kFacility); },
      [&] { return CheckFourHBound(scale(4, 10), ObjectiveKind::kRobustQa); },
      [&] { return CheckFourHBound(scale(4, 10), ObjectiveKind::kDst); },
      [&] { return CheckRandomSubsetsExact(scale(20, 100)); },
      [&] { return CheckBestOfTwoBound(scale(20, 100)); },
      [&] { return CheckGrowingBracket(scale(20, 100)); },
      [&] { return CheckGadgets(scale(20, 100)); },
      [&] { return CheckSatTracking(scale(10, 40)); },
      [&] { return CheckObjectiveProperties(scale(3, 10), ObjectiveKind::kFacility); },
      [&] { return CheckObjectiveProperties(scale(3, 10), ObjectiveKind::kRobustQa); },
      [&] { return CheckObjectiveProperties(scale(3, 10), ObjectiveKind::kDst); },
  };
  if (full) {
    checks.push_back([&] { return CheckRandomSubsetsSampled(scale(4, 4), 100); });
  }
  SuiteReport report;
  for (const auto& check : checks) {
    PropertyResult r = check();
    if (log) {
      *log << (r.passed ? "[PASS] " : "[FAIL] ") << r.name << " (" << r.cases
           << " cases)" << (r.detail.empty() ? "" : ": " + r.detail) << '\n';
    }
    report.results.push_back(std::move(r));
  }
  return report;
}

}  // namespace smx::harness
