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

#include "smx/instances.h"

#include <algorithm>
#include <cmath>
#include <utility>

#include "smx/error.h"

namespace smx {

GroundFunction DirectedCut(std::size_t n, std::vector<WeightedEdge> edges) {
  for (const WeightedEdge& e : edges) {
    Require(e.from < n && e.to < n && e.weight >= 0.0, ErrorCode::kDomain,
            "bad cut edge");
  }
  return {n, [edges = std::move(edges)](const Bitset& s) {
            double total = 0.0;
            for (const WeightedEdge& e : edges) {
              if (s.test(e.from) && !s.test(e.to)) total += e.weight;
            }
            return total;
          }};
}

GroundFunction Modular(std::vector<double> weights) {
  const std::size_t n = weights.size();
  return {n, [w = std::move(weights)](const Bitset& s) {
            double total = 0.0;
            for (std::size_t i = 0; i < w.size(); ++i) {
              if (s.test(i)) total += w[i];
            }
            return total;
          }};
}

GroundFunction Coverage(std::vector<std::uint64_t> covers,
                        std::vector<double> item_weights) {
  Require(item_weights.size() <= 64, ErrorCode::kCapacity,
          "coverage supports at most 64 items");
  const std::size_t n = covers.size();
  return {n, [covers = std::move(covers),
              w = std::move(item_weights)](const Bitset& s) {
            std::uint64_t covered = 0;
            for (std::size_t i = 0; i < covers.size(); ++i) {
              if (s.test(i)) covered |= covers[i];
            }
            double total = 0.0;
            for (std::size_t j = 0; j < w.size(); ++j) {
              if ((covered >> j) & 1U) total += w[j];
            }
            return total;
          }};
}

GroundFunction SqrtModular(std::vector<double> weights) {
  GroundFunction inner = Modular(std::move(weights));
  return {inner.n, [inner](const Bitset& s) { return std::sqrt(inner(s)); }};
}

GroundFunction Sum(std::vector<GroundFunction> parts) {
  Require(!parts.empty(), ErrorCode::kDomain, "empty sum");
  const std::size_t n = parts.front().n;
  for (const GroundFunction& p : parts) {
    Require(p.n == n, ErrorCode::kDomain, "summands over different sets");
  }
  return {n, [parts = std::move(parts)](const Bitset& s) {
            double total = 0.0;
            for (const GroundFunction& p : parts) total += p(s);
            return total;
          }};
}

GroundFunction RandomDirectedCut(Rng& rng, std::size_t n, double density,
                                 double max_weight) {
  std::vector<WeightedEdge> edges;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b && Coin(rng, density)) {
        edges.push_back({a, b, UniformReal(rng, 0.0, max_weight)});
      }
    }
  }
  return DirectedCut(n, std::move(edges));
}

GroundFunction RandomCoverage(Rng& rng, std::size_t n, std::size_t items,
                              double density) {
  std::vector<std::uint64_t> covers(n, 0);
  for (auto& c : covers) {
    for (std::size_t j = 0; j < items; ++j) {
      if (Coin(rng, density)) c |= std::uint64_t{1} << j;
    }
  }
  std::vector<double> w(items);
  for (double& v : w) v = UniformReal(rng, 0.1, 1.0);
  return Coverage(std::move(covers), std::move(w));
}

GroundFunction RandomModular(Rng& rng, std::size_t n, double lo, double hi) {
  std::vector<double> w(n);
  for (double& v : w) v = UniformReal(rng, lo, hi);
  return Modular(std::move(w));
}

OraclePtr FromFlat(std::size_t n1, std::size_t n2, GroundFunction flat) {
  Require(flat.n == n1 + n2, ErrorCode::kDomain, "flat size mismatch");
  return MakeOracle(n1, n2, [flat = std::move(flat)](const Bitset& x,
                                                     const Bitset& y) {
    return flat(JoinFlat(Subset{x, y}));
  });
}

MinimaxInstance RandomJointInstance(Rng& rng, std::size_t n1, std::size_t n2) {
  const std::size_t n = n1 + n2;
  std::vector<double> sqrt_w(n);
  for (double& v : sqrt_w) v = UniformReal(rng, 0.0, 2.0);
  GroundFunction flat = Sum({RandomDirectedCut(rng, n, 0.3),
                             RandomCoverage(rng, n, 8, 0.3),
                             SqrtModular(std::move(sqrt_w)),
                             RandomModular(rng, n, 0.0, 0.3)});
  MinimaxInstance inst;
  inst.f = FromFlat(n1, n2, std::move(flat));
  inst.tags.jointly_submodular = true;
  inst.tags.disjointly_submodular = true;
  return inst;
}

MinimaxInstance RandomMonotoneJointInstance(Rng& rng, std::size_t n1,
                                            std::size_t n2) {
  std::vector<double> s(n1 * n2);
  for (double& v : s) v = Coin(rng, 0.6) ? UniformReal(rng) : 0.0;
  const double beta = UniformReal(rng, 0.0, 0.5);
  const double lambda = UniformReal(rng, 0.0, 1.0);
  MinimaxInstance inst;
  inst.f = MakeOracle(n1, n2, [s, n2, beta, lambda](const Bitset& x,
                                                    const Bitset& y) {
    double total = lambda * static_cast<double>(x.count());
    for (std::size_t v = 0; v < x.size(); ++v) {
      if (x.test(v)) continue;
      double best = 0.0;
      for (std::size_t u = 0; u < n2; ++u) {
        if (!y.test(u)) continue;
        best = std::max(best, s[v * n2 + u]);
        total += beta * s[v * n2 + u];
      }
      total += best;
    }
    return total;
  });
  inst.tags = {true, true, true};
  return inst;
}

MinimaxInstance RandomDisjointInstance(Rng& rng, std::size_t n1,
                                       std::size_t n2) {
  std::vector<std::pair<GroundFunction, GroundFunction>> products;
  const std::size_t terms = 2;
  for (std::size_t t = 0; t < terms; ++t) {
    const double a0 = UniformReal(rng, 0.0, 0.5);
    const double b0 = UniformReal(rng, 0.0, 0.5);
    products.emplace_back(
        Sum({RandomCoverage(rng, n1, 6, 0.4),
             GroundFunction{n1, [a0](const Bitset&) { return a0; }}}),
        Sum({RandomCoverage(rng, n2, 6, 0.4), RandomDirectedCut(rng, n2, 0.3),
             GroundFunction{n2, [b0](const Bitset&) { return b0; }}}));
  }
  GroundFunction cx = Sum({RandomDirectedCut(rng, n1, 0.3),
                           RandomModular(rng, n1, 0.0, 0.5)});
  GroundFunction dy = RandomCoverage(rng, n2, 6, 0.3);
  MinimaxInstance inst;
  inst.f = MakeOracle(n1, n2, [products, cx, dy](const Bitset& x,
                                                 const Bitset& y) {
    double total = cx(x) + dy(y);
    for (const auto& [a, b] : products) total += a(x) * b(y);
    return total;
  });
  inst.tags.disjointly_submodular = true;
  return inst;
}

GroundFunction RandomCutPlusModular(Rng& rng, std::size_t n) {
  return Sum({RandomDirectedCut(rng, n, 0.35), RandomModular(rng, n, -2.0, 1.0)});
}

GroundFunction RandomCoverageMinusModular(Rng& rng, std::size_t n) {
  return Sum({RandomCoverage(rng, n, 10, 0.3), RandomModular(rng, n, -1.0, 0.0)});
}

GroundFunction RandomNonnegativeSubmodular(Rng& rng, std::size_t n) {
  return Sum({RandomDirectedCut(rng, n, 0.35), RandomCoverage(rng, n, 8, 0.25),
              RandomModular(rng, n, 0.0, 0.2)});
}

FunctionFamily RandomFamily(Rng& rng, std::size_t m, std::size_t n2,
                            bool monotone_only) {
  FunctionFamily fam;
  fam.n2 = n2;
  for (std::size_t i = 0; i < m; ++i) {
    const std::uint64_t kind = UniformIndex(rng, monotone_only ? 3 : 4);
    switch (kind) {
      case 0:
        fam.g.push_back(RandomCoverage(rng, n2, 6, 0.4));
        break;
      case 1:
        fam.g.push_back(RandomModular(rng, n2, 0.0, 1.0));
        break;
      case 2: {
        std::vector<double> w(n2);
        for (double& v : w) v = UniformReal(rng, 0.0, 2.0);
        fam.g.push_back(SqrtModular(std::move(w)));
        break;
      }
      default:
        fam.g.push_back(RandomDirectedCut(rng, n2, 0.4));
        break;
    }
    fam.monotone.push_back(kind != 3);
  }
  return fam;
}

CnfFormula RandomCnf(Rng& rng, std::size_t num_vars, std::size_t num_clauses,
                     std::size_t max_width) {
  Require(num_vars >= 1 && max_width >= 1, ErrorCode::kDomain,
          "random CNF needs variables and a positive width");
  CnfFormula phi;
  phi.num_vars = num_vars;
  for (std::size_t j = 0; j < num_clauses; ++j) {
    const std::size_t width =
        1 + UniformIndex(rng, std::min(max_width, num_vars));
    const Bitset vars = UniformKSubset(rng, num_vars, width);
    std::vector<int> clause;
    for (std::size_t v : vars.Indices()) {
      const int lit = static_cast<int>(v + 1);
      clause.push_back(Coin(rng) ? lit : -lit);
    }
    phi.clauses.push_back(std::move(clause));
  }
  return phi;
}

SimilarityMatrix RandomSimilarity(Rng& rng, std::size_t n1, std::size_t n2,
                                  std::size_t anchors) {
  SimilarityMatrix s;
  for (std::size_t i = 0; i < n1; ++i) s.n1_ids.push_back("x" + std::to_string(i));
  for (std::size_t j = 0; j < n2; ++j) s.n2_ids.push_back("y" + std::to_string(j));
  for (std::size_t a = 0; a < anchors; ++a) {
    s.anchor_ids.push_back("a" + std::to_string(a));
  }
  auto fill = [&rng, n2](std::size_t rows) {
    DenseMatrix m(rows, n2);
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < n2; ++c) m(r, c) = UniformReal(rng);
    }
    return m;
  };
  s.cross = fill(n1);
  s.anchor = fill(anchors);
  s.block = DenseMatrix(n2, n2, 1.0);
  for (std::size_t u = 0; u < n2; ++u) {
    for (std::size_t v = u + 1; v < n2; ++v) {
      s.block(u, v) = s.block(v, u) = UniformReal(rng);
    }
  }
  return s;
}

MinimaxInstance RandomObjectiveInstance(Rng& rng, ObjectiveKind kind,
                                        std::size_t n1, std::size_t n2) {
  const std::size_t anchors = kind == ObjectiveKind::kDst ? 1 : 0;
  SimilarityMatrix s;
  if (Coin(rng)) {
    s = RandomSimilarity(rng, n1, n2, anchors);
  } else {
    PointSet points;
    auto draw = [&](PointSide side, std::size_t count, std::string_view tag) {
      for (std::size_t i = 0; i < count; ++i) {
        points.points.push_back({std::string(tag) + std::to_string(i), side,
                                 UniformReal(rng, 0.0, 0.02),
                                 UniformReal(rng, 0.0, 0.02)});
      }
    };
    draw(PointSide::kN1, n1, "x");
    draw(PointSide::kN2, n2, "y");
    draw(PointSide::kAnchor, anchors, "a");
    s = BuildConvenienceMatrix(points);
  }
  ObjectiveConfig cfg;
  cfg.lambda = UniformReal(rng, 0.0, 1.0);
  cfg.alpha_div = UniformReal(rng, 0.0, 1.0);
  cfg.beta_lin = UniformReal(rng, 0.0, 0.5);
  cfg.k_card = static_cast<double>(1 + UniformIndex(rng, std::max<std::size_t>(n2, 1)));
  MinimaxInstance inst;
  inst.f = MakeObjective(kind, s, cfg);
  inst.tags = ObjectiveTags(kind);
  return inst;
}

MinimaxInstance ToyInstance() {
  MinimaxInstance inst;
  inst.f = MakeOracle(1, 1, [](const Bitset& x, const Bitset& y) {
    static constexpr double kTable[2][2] = {{1.0, 0.5}, {2.0, 1.0}};
    return kTable[y.test(0)][x.test(0)];
  });
  inst.tags = {true, true, true};
  return inst;
}

}  // namespace smx
