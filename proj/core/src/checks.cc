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

#include "smx/checks.h"

#include <sstream>
#include <vector>

#include "smx/error.h"
#include "smx/random.h"

namespace smx {

namespace {

// A set function over [n] together with a side mask per element; the
// disjoint check restricts T \ S to u's side.
struct FlatView {
  std::size_t n = 0;
  std::size_t n1 = 0;  // elements below n1 belong to the first side
  std::function<double(std::uint64_t)> eval;
  std::function<std::string(std::uint64_t)> describe;
};

FlatView ViewOf(const ValueOracle& f) {
  const BiGroundSet ground = f.ground();
  Require(ground.total() <= 62, ErrorCode::kCapacity,
          "checkers support at most 62 combined elements");
  FlatView v;
  v.n = ground.total();
  v.n1 = ground.n1;
  auto split = [ground](std::uint64_t mask) {
    const std::uint64_t xmask =
        ground.n1 == 0 ? 0 : mask & ((std::uint64_t{1} << ground.n1) - 1);
    return Subset{Bitset::FromMask(ground.n1, xmask),
                  Bitset::FromMask(ground.n2, mask >> ground.n1)};
  };
  v.eval = [&f, split](std::uint64_t mask) { return f(split(mask)); };
  v.describe = [split](std::uint64_t mask) { return split(mask).ToString(); };
  return v;
}

FlatView ViewOf(const GroundFunction& f) {
  Require(f.n <= 62, ErrorCode::kCapacity,
          "checkers support at most 62 elements");
  FlatView v;
  v.n = f.n;
  v.n1 = f.n;
  const std::size_t n = f.n;
  v.eval = [&f, n](std::uint64_t mask) { return f(Bitset::FromMask(n, mask)); };
  v.describe = [n](std::uint64_t mask) {
    return Bitset::FromMask(n, mask).ToString();
  };
  return v;
}

std::uint64_t SideMask(const FlatView& v, std::size_t u) {
  const std::uint64_t low =
      v.n1 == 0 ? 0 : (std::uint64_t{1} << v.n1) - 1;
  const std::uint64_t all =
      v.n == 0 ? 0 : (v.n >= 64 ? ~0ull : (std::uint64_t{1} << v.n) - 1);
  return u < v.n1 ? low : (all & ~low);
}

std::string ElementName(const FlatView& v, std::size_t u) {
  if (v.n1 == v.n) return std::to_string(u);
  return u < v.n1 ? "N1:" + std::to_string(u)
                  : "N2:" + std::to_string(u - v.n1);
}

std::vector<double> Tabulate(const FlatView& v) {
  std::vector<double> table(std::size_t{1} << v.n);
  for (std::uint64_t m = 0; m < table.size(); ++m) table[m] = v.eval(m);
  return table;
}

std::string DescribeViolation(const FlatView& v, std::uint64_t s,
                              std::uint64_t t, std::size_t u, double ms,
                              double mt) {
  std::ostringstream os;
  os.precision(12);
  os << "u=" << ElementName(v, u) << " S=[" << v.describe(s) << "] T=["
     << v.describe(t) << "] f(u|S)=" << ms << " < f(u|T)=" << mt;
  return os.str();
}

bool UseExhaustive(const FlatView& v, const CheckOptions& options) {
  if (v.n <= options.exhaustive_limit) return true;
  if (!options.allow_sampling) {
    Fail(ErrorCode::kCapacity,
         "ground set of " + std::to_string(v.n) +
             " elements exceeds the exhaustive limit of " +
             std::to_string(options.exhaustive_limit) +
             "; enable sampling to check it");
  }
  return false;
}

// same_side_only: T \ S must lie within the side of u.
CheckReport CheckDiminishingReturns(const FlatView& v,
                                    const CheckOptions& options,
                                    bool same_side_only) {
  CheckReport report;
  const std::uint64_t full =
      v.n == 0 ? 0 : (std::uint64_t{1} << v.n) - 1;
  if (UseExhaustive(v, options)) {
    const std::vector<double> table = Tabulate(v);
    for (std::uint64_t t = 0; t <= full; ++t) {
      for (std::size_t u = 0; u < v.n; ++u) {
        const std::uint64_t ubit = std::uint64_t{1} << u;
        if (t & ubit) continue;
        const double mt = table[t | ubit] - table[t];
        const std::uint64_t removable =
            same_side_only ? (t & SideMask(v, u)) : t;
        // Enumerate every D ⊆ removable, S = T \ D.
        std::uint64_t d = removable;
        while (true) {
          const std::uint64_t s = t & ~d;
          const double ms = table[s | ubit] - table[s];
          ++report.checked;
          if (ms < mt - options.tol) {
            report.ok = false;
            report.witness = DescribeViolation(v, s, t, u, ms, mt);
            return report;
          }
          if (d == 0) break;
          d = (d - 1) & removable;
        }
      }
    }
    return report;
  }

  report.exhaustive = false;
  Rng rng(options.seed);
  for (std::uint64_t trial = 0; trial < options.trials; ++trial) {
    std::uint64_t t = rng() & full;
    if (t == full) continue;
    std::size_t u;
    do {
      u = static_cast<std::size_t>(UniformIndex(rng, v.n));
    } while (t & (std::uint64_t{1} << u));
    const std::uint64_t ubit = std::uint64_t{1} << u;
    const std::uint64_t removable = same_side_only ? (t & SideMask(v, u)) : t;
    const std::uint64_t s = t & ~(rng() & removable);
    const double ms = v.eval(s | ubit) - v.eval(s);
    const double mt = v.eval(t | ubit) - v.eval(t);
    ++report.checked;
    if (ms < mt - options.tol) {
      report.ok = false;
      report.witness = DescribeViolation(v, s, t, u, ms, mt);
      return report;
    }
  }
  return report;
}

CheckReport CheckIncreasing(const FlatView& v, const CheckOptions& options,
                            std::size_t first_element) {
  CheckReport report;
  const std::uint64_t full =
      v.n == 0 ? 0 : (std::uint64_t{1} << v.n) - 1;
  auto violation = [&](std::uint64_t s, std::size_t u, double m) {
    std::ostringstream os;
    os.precision(12);
    os << "u=" << ElementName(v, u) << " S=[" << v.describe(s)
       << "] f(u|S)=" << m << " < 0";
    report.ok = false;
    report.witness = os.str();
  };
  if (UseExhaustive(v, options)) {
    const std::vector<double> table = Tabulate(v);
    for (std::uint64_t s = 0; s <= full; ++s) {
      for (std::size_t u = first_element; u < v.n; ++u) {
        const std::uint64_t ubit = std::uint64_t{1} << u;
        if (s & ubit) continue;
        ++report.checked;
        const double m = table[s | ubit] - table[s];
        if (m < -options.tol) {
          violation(s, u, m);
          return report;
        }
      }
    }
    return report;
  }
  report.exhaustive = false;
  if (first_element >= v.n) return report;
  Rng rng(options.seed);
  for (std::uint64_t trial = 0; trial < options.trials; ++trial) {
    const std::size_t u =
        first_element + static_cast<std::size_t>(UniformIndex(rng, v.n - first_element));
    const std::uint64_t s = rng() & full & ~(std::uint64_t{1} << u);
    ++report.checked;
    const double m = v.eval(s | (std::uint64_t{1} << u)) - v.eval(s);
    if (m < -options.tol) {
      violation(s, u, m);
      return report;
    }
  }
  return report;
}

}  // namespace

CheckReport CheckJointlySubmodular(const ValueOracle& f,
                                   const CheckOptions& options) {
  return CheckDiminishingReturns(ViewOf(f), options, false);
}

CheckReport CheckDisjointlySubmodular(const ValueOracle& f,
                                      const CheckOptions& options) {
  return CheckDiminishingReturns(ViewOf(f), options, true);
}

CheckReport CheckN2Monotone(const ValueOracle& f, const CheckOptions& options) {
  return CheckIncreasing(ViewOf(f), options, f.n1());
}

CheckReport CheckNonnegative(const ValueOracle& f,
                             const CheckOptions& options) {
  const FlatView v = ViewOf(f);
  CheckReport report;
  const std::uint64_t full = v.n == 0 ? 0 : (std::uint64_t{1} << v.n) - 1;
  auto visit = [&](std::uint64_t s) {
    ++report.checked;
    const double value = v.eval(s);
    if (value < -options.tol) {
      std::ostringstream os;
      os.precision(12);
      os << "f(" << v.describe(s) << ")=" << value << " < 0";
      report.ok = false;
      report.witness = os.str();
    }
    return report.ok;
  };
  if (UseExhaustive(v, options)) {
    for (std::uint64_t s = 0; s <= full; ++s) {
      if (!visit(s)) break;
    }
    return report;
  }
  report.exhaustive = false;
  Rng rng(options.seed);
  for (std::uint64_t trial = 0; trial < options.trials; ++trial) {
    if (!visit(rng() & full)) break;
  }
  return report;
}

CheckReport CheckSubmodular(const GroundFunction& f,
                            const CheckOptions& options) {
  return CheckDiminishingReturns(ViewOf(f), options, false);
}

CheckReport CheckMonotone(const GroundFunction& f,
                          const CheckOptions& options) {
  return CheckIncreasing(ViewOf(f), options, 0);
}

}  // namespace smx
