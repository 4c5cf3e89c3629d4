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

#include "smx/reductions.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <utility>

#include "smx/error.h"
#include "smx/submax.h"

namespace smx {

bool FunctionFamily::all_monotone() const {
  return std::all_of(monotone.begin(), monotone.end(),
                     [](bool b) { return b; });
}

void FunctionFamily::Validate() const {
  Require(m() >= 1, ErrorCode::kValidation, "family needs at least one g_i");
  Require(monotone.size() == m(), ErrorCode::kValidation,
          "one monotone flag per function expected");
  for (std::size_t i = 0; i < m(); ++i) {
    Require(g[i].n == n2, ErrorCode::kValidation,
            "g_" + std::to_string(i + 1) + " has ground size " +
                std::to_string(g[i].n) + ", expected " + std::to_string(n2));
  }
  if (n2 > 12) return;
  for (std::size_t i = 0; i < m(); ++i) {
    ForEachSubset(n2, [&](const Bitset& y) {
      if (g[i](y) < 0.0) {
        Fail(ErrorCode::kContract, "g_" + std::to_string(i + 1) +
                                       " is negative at " + y.ToString());
      }
    });
    const CheckReport sub = CheckSubmodular(g[i]);
    if (!sub) {
      Fail(ErrorCode::kValidation, "g_" + std::to_string(i + 1) +
                                       " is not submodular: " +
                                       sub.witness.value_or(""));
    }
  }
}

std::size_t PrefixLength(const Bitset& x) {
  std::size_t c = 0;
  while (c < x.size() && x.test(c)) ++c;
  return c;
}

GadgetOracle::GadgetOracle(FunctionFamily family, double big_m)
    : ValueOracle(family.m() == 0 ? 0 : family.m() - 1, family.n2),
      family_(std::move(family)),
      big_m_(big_m) {
  Require(family_.m() >= 1, ErrorCode::kValidation,
          "family needs at least one g_i");
  Require(std::isfinite(big_m_) && big_m_ >= 0.0, ErrorCode::kDomain,
          "M must be finite and nonnegative");
}

double GadgetOracle::Evaluate(const Bitset& x, const Bitset& y) const {
  const std::size_t c = PrefixLength(x);
  const double extra = static_cast<double>(x.count() - c);
  return family_.g[c](y) + extra * big_m_;
}

double GadgetBigM(const FunctionFamily& family) {
  double best = 0.0;
  for (const GroundFunction& g : family.g) {
    best = std::max(best, DoubleGreedyUsm(g).value);
  }
  return best > 0.0 ? 6.0 * best : 1.0;
}

std::shared_ptr<const GadgetOracle> BuildGadget(FunctionFamily family,
                                                std::optional<double> big_m) {
  family.Validate();
  const double m = big_m.value_or(GadgetBigM(family));
  return std::make_shared<const GadgetOracle>(std::move(family), m);
}

GadgetReport VerifyGadget(const GadgetOracle& gadget,
                          const CheckOptions& options) {
  const FunctionFamily& fam = gadget.family();
  Require(fam.m() <= 5 && fam.n2 <= 6, ErrorCode::kCapacity,
          "gadget verification supports m <= 5 and n2 <= 6");
  GadgetReport report;
  ForEachSubset(fam.n2, [&](const Bitset& y) {
    double family_min = fam.g[0](y);
    for (std::size_t i = 1; i < fam.m(); ++i) {
      family_min = std::min(family_min, fam.g[i](y));
    }
    double gadget_min = 0.0;
    bool first = true;
    ForEachSubset(gadget.n1(), [&](const Bitset& x) {
      const double v = gadget(x, y);
      if (first || v < gadget_min) gadget_min = v;
      first = false;
    });
    if (std::abs(gadget_min - family_min) > options.tol &&
        report.min_equality) {
      report.min_equality = false;
      report.witnesses.push_back("min over X is " + std::to_string(gadget_min) +
                                 " but min_i g_i is " +
                                 std::to_string(family_min) + " at Y=" +
                                 y.ToString());
    }
  });
  const CheckReport disjoint = CheckDisjointlySubmodular(gadget, options);
  report.disjointly_submodular = disjoint.ok;
  if (!disjoint) report.witnesses.push_back(disjoint.witness.value_or(""));
  if (fam.all_monotone()) {
    const CheckReport mono = CheckN2Monotone(gadget, options);
    report.n2_monotone = mono.ok;
    if (!mono) report.witnesses.push_back(mono.witness.value_or(""));
  }
  return report;
}

void CnfFormula::Validate() const {
  Require(num_vars >= 1, ErrorCode::kValidation,
          "formula needs at least one variable");
  for (std::size_t j = 0; j < clauses.size(); ++j) {
    Require(!clauses[j].empty(), ErrorCode::kValidation,
            "clause " + std::to_string(j + 1) + " is empty");
    for (int lit : clauses[j]) {
      const auto v = static_cast<std::size_t>(std::abs(lit));
      Require(lit != 0 && v <= num_vars, ErrorCode::kValidation,
              "literal " + std::to_string(lit) + " out of range in clause " +
                  std::to_string(j + 1));
    }
  }
}

bool CnfFormula::Satisfied(std::uint64_t assignment) const {
  for (const auto& clause : clauses) {
    bool sat = false;
    for (int lit : clause) {
      const bool value = (assignment >> (std::abs(lit) - 1)) & 1U;
      if (value == (lit > 0)) {
        sat = true;
        break;
      }
    }
    if (!sat) return false;
  }
  return true;
}

CnfFormula ParseDimacs(std::istream& in) {
  CnfFormula phi;
  std::optional<std::size_t> declared_clauses;
  std::vector<int> current;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream tokens(line);
    std::string first;
    if (!(tokens >> first) || first == "c") continue;
    // SATLIB files end with "%" and a stray "0".
    if (first[0] == '%') break;
    if (first == "p") {
      std::string format;
      long long vars = -1;
      long long count = -1;
      if (!(tokens >> format >> vars >> count) || format != "cnf" ||
          vars < 0 || count < 0 || declared_clauses) {
        Fail(ErrorCode::kParse,
             "line " + std::to_string(line_no) + ": bad problem line");
      }
      phi.num_vars = static_cast<std::size_t>(vars);
      declared_clauses = static_cast<std::size_t>(count);
      continue;
    }
    if (!declared_clauses) {
      Fail(ErrorCode::kParse, "line " + std::to_string(line_no) +
                                  ": clause before 'p cnf' header");
    }
    std::istringstream body(line);
    std::string token;
    while (body >> token) {
      char* end = nullptr;
      const long lit = std::strtol(token.c_str(), &end, 10);
      if (end == token.c_str() || *end != '\0') {
        Fail(ErrorCode::kParse, "line " + std::to_string(line_no) +
                                    ": bad literal '" + token + "'");
      }
      if (lit == 0) {
        if (current.empty()) {
          Fail(ErrorCode::kParse,
               "line " + std::to_string(line_no) + ": empty clause");
        }
        phi.clauses.push_back(std::move(current));
        current.clear();
      } else {
        if (static_cast<std::size_t>(std::labs(lit)) > phi.num_vars) {
          Fail(ErrorCode::kParse, "line " + std::to_string(line_no) +
                                      ": literal " + token +
                                      " exceeds variable count");
        }
        current.push_back(static_cast<int>(lit));
      }
    }
  }
  if (!declared_clauses) Fail(ErrorCode::kParse, "missing 'p cnf' header");
  if (!current.empty()) phi.clauses.push_back(std::move(current));
  if (phi.clauses.size() != *declared_clauses) {
    Fail(ErrorCode::kParse, "header declares " +
                                std::to_string(*declared_clauses) +
                                " clauses, found " +
                                std::to_string(phi.clauses.size()));
  }
  phi.Validate();
  return phi;
}

CnfFormula ReadDimacsFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) Fail(ErrorCode::kIo, "cannot open '" + path + "'");
  return ParseDimacs(in);
}

void WriteDimacs(std::ostream& out, const CnfFormula& phi) {
  out << "p cnf " << phi.num_vars << ' ' << phi.clauses.size() << '\n';
  for (const auto& clause : phi.clauses) {
    for (int lit : clause) out << lit << ' ';
    out << "0\n";
  }
}

namespace {

std::size_t TrueElement(std::size_t var) { return 2 * (var - 1); }
std::size_t FalseElement(std::size_t var) { return 2 * (var - 1) + 1; }

GroundFunction ClauseGadget(std::size_t n2, const std::vector<int>& clause) {
  Bitset hits(n2);
  for (int lit : clause) {
    const auto v = static_cast<std::size_t>(std::abs(lit));
    hits.set(lit > 0 ? TrueElement(v) : FalseElement(v));
  }
  return {n2, [hits](const Bitset& y) {
            Bitset common = y;
            common &= hits;
            return common.any() ? 1.0 : 0.0;
          }};
}

FunctionFamily EncodeWithPairs(const CnfFormula& phi, bool parity) {
  phi.Validate();
  FunctionFamily fam;
  fam.n2 = 2 * phi.num_vars;
  for (std::size_t v = 1; v <= phi.num_vars; ++v) {
    const std::size_t a = TrueElement(v);
    const std::size_t b = FalseElement(v);
    fam.g.push_back({fam.n2, [a, b, parity](const Bitset& y) {
                       const int hits = int{y.test(a)} + int{y.test(b)};
                       return parity ? static_cast<double>(hits % 2)
                                     : static_cast<double>(std::min(hits, 1));
                     }});
    fam.monotone.push_back(!parity);
  }
  for (const auto& clause : phi.clauses) {
    fam.g.push_back(ClauseGadget(fam.n2, clause));
    fam.monotone.push_back(true);
  }
  return fam;
}

}  // namespace

FunctionFamily SatEncodeUnconstrained(const CnfFormula& phi) {
  return EncodeWithPairs(phi, /*parity=*/true);
}

CardinalityEncoding SatEncodeCardinality(const CnfFormula& phi) {
  return {EncodeWithPairs(phi, /*parity=*/false), phi.num_vars};
}

double MaxMinValueOfFamily(const FunctionFamily& family, const Constraint& c) {
  Require(family.m() >= 1, ErrorCode::kValidation,
          "family needs at least one g_i");
  c.Validate(family.n2);
  double best = 0.0;
  bool first = true;
  ForEachFeasible(family.n2, c, [&](const Bitset& y) {
    double v = family.g[0](y);
    for (std::size_t i = 1; i < family.m(); ++i) v = std::min(v, family.g[i](y));
    if (first || v > best) best = v;
    first = false;
  });
  return best;
}

std::optional<std::uint64_t> BruteForceSat(const CnfFormula& phi) {
  phi.Validate();
  Require(phi.num_vars <= 30, ErrorCode::kCapacity,
          "brute-force SAT supports at most 30 variables");
  const std::uint64_t total = std::uint64_t{1} << phi.num_vars;
  for (std::uint64_t a = 0; a < total; ++a) {
    if (phi.Satisfied(a)) return a;
  }
  return std::nullopt;
}

}  // namespace smx
