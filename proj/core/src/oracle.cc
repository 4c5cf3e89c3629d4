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

#include "smx/oracle.h"

#include <bit>
#include <cmath>

#include "smx/error.h"

namespace smx {

Subset Subset::With(const Element& e) const {
  Subset out = *this;
  if (e.side == Side::kN1) {
    out.x.set(e.index);
  } else {
    out.y.set(e.index);
  }
  return out;
}

Subset Subset::Without(const Element& e) const {
  Subset out = *this;
  if (e.side == Side::kN1) {
    out.x.reset(e.index);
  } else {
    out.y.reset(e.index);
  }
  return out;
}

std::string Subset::ToString() const {
  return "X=" + x.ToString() + " Y=" + y.ToString();
}

double ValueOracle::operator()(const Bitset& x, const Bitset& y) const {
  if (x.size() != ground_.n1 || y.size() != ground_.n2) {
    Fail(ErrorCode::kDomain, "subset sizes (" + std::to_string(x.size()) +
                                 "," + std::to_string(y.size()) +
                                 ") do not match ground set (" +
                                 std::to_string(ground_.n1) + "," +
                                 std::to_string(ground_.n2) + ")");
  }
  calls_.fetch_add(1, std::memory_order_relaxed);
  const double v = Evaluate(x, y);
  if (!std::isfinite(v)) {
    Fail(ErrorCode::kNumeric, "oracle returned a non-finite value at X=" +
                                  x.ToString() + " Y=" + y.ToString());
  }
  return v;
}

OraclePtr MakeOracle(std::size_t n1, std::size_t n2, FunctionOracle::Fn fn) {
  return std::make_shared<FunctionOracle>(n1, n2, std::move(fn));
}

GroundFunction RestrictToN1(const ValueOracle& f, Bitset y) {
  return {f.n1(), [&f, y = std::move(y)](const Bitset& x) { return f(x, y); }};
}

GroundFunction RestrictToN2(const ValueOracle& f, Bitset x) {
  return {f.n2(), [&f, x = std::move(x)](const Bitset& y) { return f(x, y); }};
}

Subset SplitFlat(const BiGroundSet& ground, const Bitset& flat) {
  Subset s = Subset::Empty(ground);
  for (std::size_t i : flat.Indices()) {
    if (i < ground.n1) {
      s.x.set(i);
    } else {
      s.y.set(i - ground.n1);
    }
  }
  return s;
}

Bitset JoinFlat(const Subset& s) {
  Bitset flat(s.x.size() + s.y.size());
  for (std::size_t i : s.x.Indices()) flat.set(i);
  for (std::size_t j : s.y.Indices()) flat.set(s.x.size() + j);
  return flat;
}

GroundFunction Flatten(const ValueOracle& f) {
  const BiGroundSet ground = f.ground();
  return {ground.total(), [&f, ground](const Bitset& flat) {
            return f(SplitFlat(ground, flat));
          }};
}

double Marginal(const ValueOracle& f, const Element& u, const Subset& s) {
  if (s.Contains(u)) {
    Fail(ErrorCode::kPrecondition,
         std::string("marginal of an element already in S (") +
             (u.side == Side::kN1 ? "N1:" : "N2:") + std::to_string(u.index) +
             ")");
  }
  return f(s.With(u)) - f(s);
}

double Marginal(const GroundFunction& f, std::size_t u, const Bitset& s) {
  if (s.test(u)) {
    Fail(ErrorCode::kPrecondition,
         "marginal of an element already in S (" + std::to_string(u) + ")");
  }
  Bitset with = s;
  with.set(u);
  return f(with) - f(s);
}

void Constraint::Validate(std::size_t n2) const {
  if (kind_ == Kind::kCardinalityAtMost && k_ > n2) {
    Fail(ErrorCode::kDomain, "cardinality bound k=" + std::to_string(k_) +
                                 " exceeds n2=" + std::to_string(n2));
  }
}

std::string Constraint::ToString() const {
  return kind_ == Kind::kAllSubsets ? "all-subsets"
                                    : "cardinality<=" + std::to_string(k_);
}

void ForEachSubset(std::size_t n,
                   const std::function<void(const Bitset&)>& fn) {
  Require(n <= kMaxEnumerationBits, ErrorCode::kCapacity,
          "cannot enumerate 2^" + std::to_string(n) + " subsets");
  const std::uint64_t end = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < end; ++mask) {
    fn(Bitset::FromMask(n, mask));
  }
}

void ForEachFeasible(std::size_t n2, const Constraint& c,
                     const std::function<void(const Bitset&)>& fn) {
  Require(n2 <= kMaxEnumerationBits, ErrorCode::kCapacity,
          "cannot enumerate 2^" + std::to_string(n2) + " subsets");
  const std::size_t limit = c.MaxSize(n2);
  const std::uint64_t end = std::uint64_t{1} << n2;
  for (std::uint64_t mask = 0; mask < end; ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) > limit) continue;
    fn(Bitset::FromMask(n2, mask));
  }
}

std::uint64_t FeasibleCount(std::size_t n2, const Constraint& c) {
  const std::size_t limit = c.MaxSize(n2);
  // Sum of binomials, saturating at 2^63.
  constexpr std::uint64_t kCap = std::uint64_t{1} << 63;
  std::uint64_t total = 0;
  double binom = 1.0;
  for (std::size_t i = 0; i <= limit; ++i) {
    if (i > 0) binom = binom * static_cast<double>(n2 - i + 1) / static_cast<double>(i);
    const double rounded = std::round(binom);
    if (rounded >= static_cast<double>(kCap) ||
        total + static_cast<std::uint64_t>(rounded) >= kCap) {
      return kCap;
    }
    total += static_cast<std::uint64_t>(rounded);
  }
  return total;
}

}  // namespace smx
