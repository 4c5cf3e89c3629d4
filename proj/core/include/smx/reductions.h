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

#ifndef SMX_REDUCTIONS_H_
#define SMX_REDUCTIONS_H_

// The gadget that turns min_i g_i(Y) into min_X f(X ⊎ Y), and the two SAT
// encodings built on it.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "smx/checks.h"
#include "smx/oracle.h"

namespace smx {

// g_1, ..., g_m over a shared ground set of n2 elements.
struct FunctionFamily {
  std::size_t n2 = 0;
  std::vector<GroundFunction> g;
  std::vector<bool> monotone;

  std::size_t m() const { return g.size(); }
  bool all_monotone() const;
  // m >= 1, matching sizes; for n2 <= 12 also nonnegativity and
  // submodularity of every member.
  void Validate() const;
};

// Largest i with elements 1..i all in x, where bit j is element j + 1.
std::size_t PrefixLength(const Bitset& x);

// f(X ⊎ Y) = g_{c(X)+1}(Y) + (|X| - c(X)) M over N1 = [m - 1].
class GadgetOracle final : public ValueOracle {
 public:
  GadgetOracle(FunctionFamily family, double big_m);

  const FunctionFamily& family() const { return family_; }
  double big_m() const { return big_m_; }

 protected:
  double Evaluate(const Bitset& x, const Bitset& y) const override;

 private:
  FunctionFamily family_;
  double big_m_;
};

// 6 times the largest double-greedy value over the family (at least 1).
// Double greedy is within a factor 3 of each max_Y g_i(Y), so the result is
// at least 2 max_i max_Y g_i(Y).
double GadgetBigM(const FunctionFamily& family);

std::shared_ptr<const GadgetOracle> BuildGadget(
    FunctionFamily family, std::optional<double> big_m = std::nullopt);

struct GadgetReport {
  bool min_equality = true;
  bool disjointly_submodular = true;
  // Only checked when every g_i is monotone.
  std::optional<bool> n2_monotone;
  std::vector<std::string> witnesses;

  bool ok() const {
    return min_equality && disjointly_submodular && n2_monotone.value_or(true);
  }
};

// Exhaustive check of min_X f(X ⊎ Y) = min_i g_i(Y) for every Y, disjoint
// submodularity, and N2-monotonicity for monotone families. m <= 5,
// n2 <= 6.
GadgetReport VerifyGadget(const GadgetOracle& gadget,
                          const CheckOptions& options = {});

struct CnfFormula {
  std::size_t num_vars = 0;
  // Literals are ±v for v in 1..num_vars.
  std::vector<std::vector<int>> clauses;

  void Validate() const;
  // Bit i - 1 of assignment is the value of x_i.
  bool Satisfied(std::uint64_t assignment) const;
};

CnfFormula ParseDimacs(std::istream& in);
CnfFormula ReadDimacsFile(const std::string& path);
void WriteDimacs(std::ostream& out, const CnfFormula& phi);

// Element 2i - 2 (0-based) is x_i = true, element 2i - 1 is x_i = false.
// Parity gadgets |{2i - 1, 2i} ∩ Y| mod 2 followed by one clause gadget per
// clause: 1 if Y contains an element whose assignment satisfies the clause.
FunctionFamily SatEncodeUnconstrained(const CnfFormula& phi);

struct CardinalityEncoding {
  FunctionFamily family;
  std::size_t k = 0;
};

// Hitting gadgets min{|Y ∩ {2i - 1, 2i}|, 1} and the same clause gadgets,
// under |Y| <= n. Every member is monotone.
CardinalityEncoding SatEncodeCardinality(const CnfFormula& phi);

// max_{Y ∈ c} min_i g_i(Y) by enumeration.
double MaxMinValueOfFamily(const FunctionFamily& family, const Constraint& c);

// A satisfying assignment by enumeration, or nullopt. num_vars <= 30.
std::optional<std::uint64_t> BruteForceSat(const CnfFormula& phi);

}  // namespace smx

#endif  // SMX_REDUCTIONS_H_
