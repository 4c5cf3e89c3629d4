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

#ifndef SMX_SFM_H_
#define SMX_SFM_H_

// Unconstrained submodular function minimization.
//
// MinimizeUnconstrained dispatches between exhaustive enumeration (small n)
// and the Fujishige-Wolfe minimum-norm-point method on the base polytope of
// the normalized function F(S) = f(S) - f(∅). The minimum-norm point x*
// satisfies {i : x*_i < 0} ∈ argmin F; since x* is only approximate in
// floating point, every threshold set {i : x*_i <= θ} is evaluated and the
// best one returned.

#include <cstddef>
#include <span>
#include <vector>

#include "smx/bitset.h"
#include "smx/oracle.h"

namespace smx {

enum class SfmMethod { kAuto, kBruteForce, kMinNormPoint };

struct SfmOptions {
  SfmMethod method = SfmMethod::kAuto;
  // Auto mode enumerates all subsets when n <= brute_limit.
  std::size_t brute_limit = 20;
  // Wolfe stopping rule: ||x||^2 - <x, q> <= gap_tol * max(1, ||x||^2).
  double gap_tol = 1e-10;
  double drop_tol = 1e-12;
  // 0 means 10 * n^2 (at least 50).
  std::size_t max_major_iterations = 0;
  // After an MNP run with n <= brute_limit, confirm the answer by
  // enumeration.
  bool audit = false;
};

struct MinResult {
  enum class Method { kBruteForce, kMinNormPoint };

  Bitset minimizer;
  double value = 0.0;
  Method method = Method::kBruteForce;
  // Optimality is proven: exhaustive search, a brute-force audit, or the
  // base-polytope lower bound x*^-(N) matching the returned value.
  bool certified = false;
  // Lower bound on min f from the final base vector (MNP only).
  double lower_bound = 0.0;
  std::size_t iterations = 0;
};

// f(∅) + Σ_i x_{π(i)} (f(P_i) - f(P_{i-1})), π sorting x in descending
// order with ties broken by index and P_i = {π(0), ..., π(i)}.
double LovaszExtension(const GroundFunction& f, std::span<const double> x);

// Greedy vertex of the base polytope of F = f - f(∅) for the given order.
std::vector<double> GreedyVertex(const GroundFunction& f,
                                 std::span<const std::size_t> order);

struct MinNormPointResult {
  std::vector<double> point;
  std::size_t iterations = 0;
  bool converged = false;
};

MinNormPointResult MinNormPoint(const GroundFunction& f,
                                const SfmOptions& options = {});

// Exact minimum by enumeration, earliest minimizer in mask order. n <= 24.
MinResult BruteForceMin(const GroundFunction& f);

MinResult MinimizeUnconstrained(const GroundFunction& f,
                                const SfmOptions& options = {});

inline constexpr std::size_t kBruteForceMinLimit = 24;

}  // namespace smx

#endif  // SMX_SFM_H_
