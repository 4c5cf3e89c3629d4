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

#ifndef SMX_ORACLE_H_
#define SMX_ORACLE_H_

// Two-sided ground sets, joint subsets X ⊎ Y, and value-oracle access to a
// set function f over N1 ⊎ N2.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>

#include "smx/bitset.h"

namespace smx {

struct BiGroundSet {
  std::size_t n1 = 0;
  std::size_t n2 = 0;

  std::size_t total() const { return n1 + n2; }
  friend bool operator==(const BiGroundSet&, const BiGroundSet&) = default;
};

enum class Side { kN1, kN2 };

struct Element {
  Side side;
  std::size_t index;
};

// The joint argument X ⊎ Y with X ⊆ N1 and Y ⊆ N2.
struct Subset {
  Bitset x;
  Bitset y;

  static Subset Empty(const BiGroundSet& ground) {
    return {Bitset(ground.n1), Bitset(ground.n2)};
  }

  bool Contains(const Element& e) const {
    return e.side == Side::kN1 ? x.test(e.index) : y.test(e.index);
  }
  Subset With(const Element& e) const;
  Subset Without(const Element& e) const;

  // Position in the canonical enumeration order: ascending binary value of
  // (maskY << n1) | maskX. All tie-breaking follows this order.
  friend bool operator<(const Subset& a, const Subset& b) {
    if (a.y != b.y) return a.y < b.y;
    return a.x < b.x;
  }
  friend bool operator==(const Subset&, const Subset&) = default;

  std::string ToString() const;
};

// f: 2^{N1 ⊎ N2} -> R with a call counter. Implementations must be
// deterministic and safe to evaluate from several threads at once.
class ValueOracle {
 public:
  ValueOracle(std::size_t n1, std::size_t n2) : ground_{n1, n2} {}
  virtual ~ValueOracle() = default;

  ValueOracle(const ValueOracle&) = delete;
  ValueOracle& operator=(const ValueOracle&) = delete;

  const BiGroundSet& ground() const { return ground_; }
  std::size_t n1() const { return ground_.n1; }
  std::size_t n2() const { return ground_.n2; }

  double operator()(const Bitset& x, const Bitset& y) const;
  double operator()(const Subset& s) const { return (*this)(s.x, s.y); }

  std::uint64_t call_count() const {
    return calls_.load(std::memory_order_relaxed);
  }

 protected:
  virtual double Evaluate(const Bitset& x, const Bitset& y) const = 0;

 private:
  BiGroundSet ground_;
  mutable std::atomic<std::uint64_t> calls_{0};
};

using OraclePtr = std::shared_ptr<const ValueOracle>;

class FunctionOracle final : public ValueOracle {
 public:
  using Fn = std::function<double(const Bitset& x, const Bitset& y)>;

  FunctionOracle(std::size_t n1, std::size_t n2, Fn fn)
      : ValueOracle(n1, n2), fn_(std::move(fn)) {}

 protected:
  double Evaluate(const Bitset& x, const Bitset& y) const override {
    return fn_(x, y);
  }

 private:
  Fn fn_;
};

OraclePtr MakeOracle(std::size_t n1, std::size_t n2, FunctionOracle::Fn fn);

// A set function over a single ground set [n].
struct GroundFunction {
  std::size_t n = 0;
  std::function<double(const Bitset&)> eval;

  double operator()(const Bitset& s) const { return eval(s); }
};

// X ↦ f(X ⊎ y). The oracle must outlive the returned function.
GroundFunction RestrictToN1(const ValueOracle& f, Bitset y);
// Y ↦ f(x ⊎ Y).
GroundFunction RestrictToN2(const ValueOracle& f, Bitset x);
// f viewed over the combined ground set; bits 0..n1-1 are N1.
GroundFunction Flatten(const ValueOracle& f);
Subset SplitFlat(const BiGroundSet& ground, const Bitset& flat);
Bitset JoinFlat(const Subset& s);

// f(S + u) - f(S). Exactly two oracle calls.
double Marginal(const ValueOracle& f, const Element& u, const Subset& s);
double Marginal(const GroundFunction& f, std::size_t u, const Bitset& s);

// Feasible family F2 on the N2 side. F1 is always 2^{N1}.
class Constraint {
 public:
  enum class Kind { kAllSubsets, kCardinalityAtMost };

  static Constraint AllSubsets() { return Constraint(Kind::kAllSubsets, 0); }
  static Constraint CardinalityAtMost(std::size_t k) {
    return Constraint(Kind::kCardinalityAtMost, k);
  }

  Kind kind() const { return kind_; }
  std::size_t k() const { return k_; }

  bool Admits(const Bitset& y) const {
    return kind_ == Kind::kAllSubsets || y.count() <= k_;
  }
  // Largest feasible cardinality over a ground set of n2 elements.
  std::size_t MaxSize(std::size_t n2) const {
    return kind_ == Kind::kAllSubsets ? n2 : std::min(k_, n2);
  }
  bool AdmitsEmpty() const { return true; }
  bool AdmitsSingletons() const {
    return kind_ == Kind::kAllSubsets || k_ >= 1;
  }

  void Validate(std::size_t n2) const;
  std::string ToString() const;

  friend bool operator==(const Constraint&, const Constraint&) = default;

 private:
  Constraint(Kind kind, std::size_t k) : kind_(kind), k_(k) {}

  Kind kind_;
  std::size_t k_;
};

// Visits all subsets of [n] in ascending mask order. n <= 30.
void ForEachSubset(std::size_t n, const std::function<void(const Bitset&)>& fn);
// Visits every Y admitted by c, ascending mask order.
void ForEachFeasible(std::size_t n2, const Constraint& c,
                     const std::function<void(const Bitset&)>& fn);
// Number of sets admitted by c over n2 elements (saturating).
std::uint64_t FeasibleCount(std::size_t n2, const Constraint& c);

inline constexpr std::size_t kMaxEnumerationBits = 30;

}  // namespace smx

#endif  // SMX_ORACLE_H_
