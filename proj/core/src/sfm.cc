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

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "smx/error.h"

namespace smx {

namespace {

double Dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::vector<std::size_t> AscendingOrder(std::span<const double> x) {
  std::vector<std::size_t> order(x.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });
  return order;
}

// argmin ||Σ α_i s_i|| subject to Σ α_i = 1.
Eigen::VectorXd AffineMinimizer(const std::vector<std::vector<double>>& corral) {
  const Eigen::Index k = static_cast<Eigen::Index>(corral.size());
  Eigen::MatrixXd kkt = Eigen::MatrixXd::Zero(k + 1, k + 1);
  for (Eigen::Index i = 0; i < k; ++i) {
    for (Eigen::Index j = i; j < k; ++j) {
      const double g = Dot(corral[static_cast<std::size_t>(i)],
                           corral[static_cast<std::size_t>(j)]);
      kkt(i, j) = g;
      kkt(j, i) = g;
    }
    kkt(i, k) = 1.0;
    kkt(k, i) = 1.0;
  }
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(k + 1);
  rhs(k) = 1.0;
  const Eigen::VectorXd sol = kkt.completeOrthogonalDecomposition().solve(rhs);
  Eigen::VectorXd alpha = sol.head(k);
  const double total = alpha.sum();
  if (std::abs(total) > 0.0) alpha /= total;
  return alpha;
}

std::vector<double> Combine(const std::vector<std::vector<double>>& corral,
                            const std::vector<double>& weights) {
  std::vector<double> x(corral.front().size(), 0.0);
  for (std::size_t j = 0; j < corral.size(); ++j) {
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += weights[j] * corral[j][i];
  }
  return x;
}

void DropSmall(std::vector<std::vector<double>>& corral,
               std::vector<double>& weights, double drop_tol) {
  std::size_t out = 0;
  for (std::size_t j = 0; j < corral.size(); ++j) {
    if (weights[j] > drop_tol) {
      if (out != j) corral[out] = std::move(corral[j]);
      weights[out] = weights[j];
      ++out;
    }
  }
  corral.resize(out);
  weights.resize(out);
  const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
  for (auto& w : weights) w /= total;
}

}  // namespace

double LovaszExtension(const GroundFunction& f, std::span<const double> x) {
  Require(x.size() == f.n, ErrorCode::kDomain,
          "Lovász extension point has dimension " + std::to_string(x.size()) +
              ", expected " + std::to_string(f.n));
  for (double xi : x) {
    if (!(xi >= 0.0 && xi <= 1.0)) {
      Fail(ErrorCode::kDomain, "Lovász extension coordinate " +
                                   std::to_string(xi) + " outside [0,1]");
    }
  }
  std::vector<std::size_t> order(f.n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return x[a] > x[b]; });
  Bitset prefix(f.n);
  double prev = f(prefix);
  double value = prev;
  for (std::size_t i : order) {
    prefix.set(i);
    const double cur = f(prefix);
    value += x[i] * (cur - prev);
    prev = cur;
  }
  return value;
}

std::vector<double> GreedyVertex(const GroundFunction& f,
                                 std::span<const std::size_t> order) {
  std::vector<double> q(f.n, 0.0);
  Bitset prefix(f.n);
  double prev = f(prefix);
  for (std::size_t i : order) {
    prefix.set(i);
    const double cur = f(prefix);
    q[i] = cur - prev;
    prev = cur;
  }
  return q;
}

MinNormPointResult MinNormPoint(const GroundFunction& f,
                                const SfmOptions& options) {
  MinNormPointResult result;
  const std::size_t n = f.n;
  if (n == 0) {
    result.converged = true;
    return result;
  }
  const std::size_t cap =
      options.max_major_iterations != 0
          ? options.max_major_iterations
          : std::max<std::size_t>(50, 10 * n * n);

  std::vector<double> x;
  {
    std::vector<std::size_t> identity(n);
    std::iota(identity.begin(), identity.end(), std::size_t{0});
    x = GreedyVertex(f, identity);
  }
  std::vector<std::vector<double>> corral{x};
  std::vector<double> weights{1.0};
  double last_xx = std::numeric_limits<double>::infinity();
  std::size_t stalled = 0;

  for (std::size_t major = 0; major < cap; ++major) {
    result.iterations = major + 1;
    const std::vector<double> q = GreedyVertex(f, AscendingOrder(x));
    const double xx = Dot(x, x);
    const double gap = xx - Dot(x, q);
    // Wolfe's test: the gap is measured against the largest squared norm of
    // a point in play, which bounds the rounding error in x·x and x·q.
    double scale = std::max(1.0, Dot(q, q));
    for (const auto& p : corral) scale = std::max(scale, Dot(p, p));
    if (gap <= options.gap_tol * scale) {
      result.converged = true;
      break;
    }
    // ||x|| no longer shrinks: the remaining gap is rounding noise.
    if (xx >= last_xx) {
      if (++stalled >= 3) {
        result.converged = true;
        break;
      }
    } else {
      stalled = 0;
    }
    last_xx = xx;
    const bool already_present =
        std::any_of(corral.begin(), corral.end(), [&](const auto& p) {
          for (std::size_t i = 0; i < n; ++i) {
            if (std::abs(p[i] - q[i]) > 1e-12 * std::max(1.0, std::abs(q[i])))
              return false;
          }
          return true;
        });
    if (already_present) {
      // No further descent is numerically possible.
      result.converged = true;
      break;
    }
    corral.push_back(q);
    weights.push_back(0.0);

    for (std::size_t minor = 0; minor <= n + 1; ++minor) {
      const Eigen::VectorXd alpha = AffineMinimizer(corral);
      if (alpha.minCoeff() > -options.drop_tol) {
        for (std::size_t j = 0; j < weights.size(); ++j) {
          weights[j] = std::max(0.0, alpha(static_cast<Eigen::Index>(j)));
        }
        DropSmall(corral, weights, options.drop_tol);
        break;
      }
      double theta = 1.0;
      for (std::size_t j = 0; j < weights.size(); ++j) {
        const double a = alpha(static_cast<Eigen::Index>(j));
        if (a < 0.0) theta = std::min(theta, weights[j] / (weights[j] - a));
      }
      for (std::size_t j = 0; j < weights.size(); ++j) {
        weights[j] = theta * alpha(static_cast<Eigen::Index>(j)) +
                     (1.0 - theta) * weights[j];
      }
      DropSmall(corral, weights, options.drop_tol);
    }
    x = Combine(corral, weights);
  }
  result.point = std::move(x);
  return result;
}

MinResult BruteForceMin(const GroundFunction& f) {
  Require(f.n <= kBruteForceMinLimit, ErrorCode::kCapacity,
          "brute-force minimization supports n <= 24, got " +
              std::to_string(f.n));
  MinResult best;
  best.method = MinResult::Method::kBruteForce;
  best.certified = true;
  bool first = true;
  const std::uint64_t end = std::uint64_t{1} << f.n;
  for (std::uint64_t mask = 0; mask < end; ++mask) {
    Bitset s = Bitset::FromMask(f.n, mask);
    const double v = f(s);
    if (!std::isfinite(v)) {
      Fail(ErrorCode::kNumeric, "non-finite value at " + s.ToString());
    }
    if (first || v < best.value) {
      best.value = v;
      best.minimizer = std::move(s);
      first = false;
    }
  }
  best.lower_bound = best.value;
  return best;
}

MinResult MinimizeUnconstrained(const GroundFunction& f,
                                const SfmOptions& options) {
  const bool brute =
      options.method == SfmMethod::kBruteForce ||
      (options.method == SfmMethod::kAuto && f.n <= options.brute_limit);
  if (brute) return BruteForceMin(f);

  MinNormPointResult mnp = MinNormPoint(f, options);
  MinResult result;
  result.method = MinResult::Method::kMinNormPoint;
  result.iterations = mnp.iterations;

  Bitset candidate(f.n);
  result.minimizer = candidate;
  result.value = f(candidate);
  const double empty_value = result.value;
  if (!std::isfinite(empty_value)) {
    Fail(ErrorCode::kNumeric, "non-finite value at the empty set");
  }
  // Every prefix of the ascending order of x*; this covers each threshold
  // set {i : x*_i <= θ}.
  for (std::size_t i : AscendingOrder(mnp.point)) {
    candidate.set(i);
    const double v = f(candidate);
    if (!std::isfinite(v)) {
      Fail(ErrorCode::kNumeric, "non-finite value at " + candidate.ToString());
    }
    if (v < result.value || (v == result.value && candidate < result.minimizer)) {
      result.value = v;
      result.minimizer = candidate;
    }
  }
  double negative_mass = 0.0;
  double scale = std::abs(empty_value);
  for (double xi : mnp.point) {
    negative_mass += std::min(xi, 0.0);
    scale += std::abs(xi);
  }
  result.lower_bound = empty_value + negative_mass;
  result.certified =
      result.value - result.lower_bound <= 1e-7 * std::max(1.0, scale);

  if (options.audit && f.n <= options.brute_limit &&
      f.n <= kBruteForceMinLimit) {
    const MinResult exact = BruteForceMin(f);
    result.certified = result.value <= exact.value + 1e-9 * std::max(1.0, std::abs(exact.value));
  }
  // Re-evaluate once so value == f(minimizer) exactly.
  result.value = f(result.minimizer);
  return result;
}

}  // namespace smx
