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

#include "smx/objectives.h"

#include <algorithm>
#include <cmath>
#include <unordered_set>
#include <utility>

#include "smx/error.h"

namespace smx {

namespace {

void CheckShape(const DenseMatrix& m, std::size_t rows, std::size_t cols,
                std::string_view what) {
  // A default-constructed matrix stands for zero rows.
  if (rows == 0 && m.empty()) return;
  if (m.rows() != rows || m.cols() != cols) {
    Fail(ErrorCode::kValidation,
         std::string(what) + " matrix is " + std::to_string(m.rows()) + "x" +
             std::to_string(m.cols()) + ", expected " + std::to_string(rows) +
             "x" + std::to_string(cols));
  }
}

void CheckEntries(const DenseMatrix& m, double max_entry,
                  std::string_view what) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const double v = m(r, c);
      if (!std::isfinite(v) || v < 0.0 || v > max_entry) {
        Fail(ErrorCode::kValidation,
             std::string(what) + " entry (" + std::to_string(r) + ", " +
                 std::to_string(c) + ") = " + std::to_string(v) +
                 " is out of range");
      }
    }
  }
}

std::string ObjectiveKindLabel(ObjectiveKind kind) {
  return std::string(ObjectiveName(kind));
}

// Σ over the N2 columns in y of row r.
double RowSum(const DenseMatrix& m, std::size_t r, const Bitset& y,
              double power = 1.0) {
  double total = 0.0;
  for (std::size_t u = 0; u < m.cols(); ++u) {
    if (!y.test(u)) continue;
    total += power == 1.0 ? m(r, u) : std::pow(m(r, u), power);
  }
  return total;
}

double RowMax(const DenseMatrix& m, std::size_t r, const Bitset& y) {
  double best = 0.0;
  for (std::size_t u = 0; u < m.cols(); ++u) {
    if (y.test(u)) best = std::max(best, m(r, u));
  }
  return best;
}

// Σ_{u, v ∈ Y} block(u, v)^power.
double PairSum(const DenseMatrix& block, const Bitset& y, double power = 1.0) {
  double total = 0.0;
  for (std::size_t u = 0; u < block.rows(); ++u) {
    if (y.test(u)) total += RowSum(block, u, y, power);
  }
  return total;
}

double DiversityWeight(std::size_t n2) {
  return n2 == 0 ? 0.0 : 1.0 / static_cast<double>(n2);
}

}  // namespace

std::string_view PointSideName(PointSide side) {
  switch (side) {
    case PointSide::kN1:
      return "N1";
    case PointSide::kN2:
      return "N2";
    case PointSide::kAnchor:
      return "anchor";
  }
  return "?";
}

PointSide ParsePointSide(std::string_view name) {
  if (name == "N1") return PointSide::kN1;
  if (name == "N2") return PointSide::kN2;
  if (name == "anchor") return PointSide::kAnchor;
  Fail(ErrorCode::kParse, "unknown side '" + std::string(name) +
                              "' (expected N1, N2 or anchor)");
}

std::vector<Point> PointSet::OnSide(PointSide side) const {
  std::vector<Point> out;
  for (const Point& p : points) {
    if (p.side == side) out.push_back(p);
  }
  return out;
}

std::size_t PointSet::Count(PointSide side) const {
  return static_cast<std::size_t>(
      std::count_if(points.begin(), points.end(),
                    [side](const Point& p) { return p.side == side; }));
}

void PointSet::Validate() const {
  std::unordered_set<std::string> ids;
  for (const Point& p : points) {
    if (!ids.insert(p.id).second) {
      Fail(ErrorCode::kValidation, "duplicate point id '" + p.id + "'");
    }
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
      Fail(ErrorCode::kValidation, "point '" + p.id + "' is not finite");
    }
  }
}

void SimilarityMatrix::Validate(bool need_block, bool need_symmetric,
                                double max_entry) const {
  CheckShape(cross, n1(), n2(), "cross");
  CheckShape(anchor, anchor_ids.size(), n2(), "anchor");
  CheckEntries(cross, max_entry, "cross");
  CheckEntries(anchor, max_entry, "anchor");
  if (need_block && n2() > 0) {
    if (block.empty()) {
      Fail(ErrorCode::kValidation, "objective needs the N2 x N2 block");
    }
  }
  if (!block.empty()) {
    CheckShape(block, n2(), n2(), "N2 block");
    CheckEntries(block, max_entry, "N2 block");
    if (need_symmetric) {
      for (std::size_t u = 0; u < n2(); ++u) {
        for (std::size_t v = u + 1; v < n2(); ++v) {
          if (block(u, v) != block(v, u)) {
            Fail(ErrorCode::kValidation,
                 "N2 block is not symmetric at (" + n2_ids[u] + ", " +
                     n2_ids[v] + ")");
          }
        }
      }
    }
  }
}

SimilarityMatrix SimilarityMatrix::Scaled(double factor) const {
  SimilarityMatrix out = *this;
  for (DenseMatrix* m : {&out.cross, &out.anchor, &out.block}) {
    for (std::size_t r = 0; r < m->rows(); ++r) {
      for (std::size_t c = 0; c < m->cols(); ++c) (*m)(r, c) *= factor;
    }
  }
  return out;
}

double ConvenienceScore(const Point& u, const Point& v) {
  const double d = std::abs(u.x - v.x) + std::abs(u.y - v.y);
  // 2 - 2 / (1 + e) rewritten as 2e / (1 + e); the direct form cancels to 0
  // once e drops below machine epsilon.
  const double e = std::exp(-200.0 * d);
  return 2.0 * e / (1.0 + e);
}

SimilarityMatrix BuildConvenienceMatrix(const PointSet& points) {
  points.Validate();
  const std::vector<Point> n1 = points.OnSide(PointSide::kN1);
  const std::vector<Point> n2 = points.OnSide(PointSide::kN2);
  const std::vector<Point> anchors = points.OnSide(PointSide::kAnchor);
  SimilarityMatrix s;
  for (const Point& p : n1) s.n1_ids.push_back(p.id);
  for (const Point& p : n2) s.n2_ids.push_back(p.id);
  for (const Point& p : anchors) s.anchor_ids.push_back(p.id);
  auto fill = [&n2](const std::vector<Point>& rows) {
    DenseMatrix m(rows.size(), n2.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      for (std::size_t c = 0; c < n2.size(); ++c) {
        m(r, c) = ConvenienceScore(rows[r], n2[c]);
      }
    }
    return m;
  };
  s.cross = fill(n1);
  s.anchor = fill(anchors);
  s.block = fill(n2);
  return s;
}

void ObjectiveConfig::Validate() const {
  Require(std::isfinite(lambda) && lambda >= 0.0, ErrorCode::kDomain,
          "lambda must be >= 0");
  Require(alpha_div >= 0.0 && alpha_div <= 1.0, ErrorCode::kDomain,
          "alpha_div must lie in [0, 1]");
  Require(std::isfinite(beta_lin) && beta_lin >= 0.0, ErrorCode::kDomain,
          "beta_lin must be >= 0");
  Require(std::isfinite(k_card) && k_card >= 0.0, ErrorCode::kDomain,
          "k_card must be >= 0");
}

std::string_view ObjectiveName(ObjectiveKind kind) {
  switch (kind) {
    case ObjectiveKind::kFacility:
      return "facility";
    case ObjectiveKind::kRobustQa:
      return "qa";
    case ObjectiveKind::kDst:
      return "dst";
    case ObjectiveKind::kCubeNorm:
      return "cube-norm";
  }
  return "?";
}

ObjectiveKind ParseObjective(std::string_view name) {
  for (ObjectiveKind kind :
       {ObjectiveKind::kFacility, ObjectiveKind::kRobustQa, ObjectiveKind::kDst,
        ObjectiveKind::kCubeNorm}) {
    if (name == ObjectiveName(kind)) return kind;
  }
  Fail(ErrorCode::kUsage,
       "unknown objective '" + std::string(name) +
           "' (expected facility, qa, dst or cube-norm)");
}

OraclePtr MakeFacilityObjective(const SimilarityMatrix& s,
                                const ObjectiveConfig& cfg) {
  s.Validate(/*need_block=*/true, /*need_symmetric=*/true);
  cfg.Validate();
  const double div = DiversityWeight(s.n2());
  return MakeOracle(
      s.n1(), s.n2(), [s, cfg, div](const Bitset& x, const Bitset& y) {
        if (y.none()) return cfg.lambda * static_cast<double>(x.count());
        double cover = 0.0;
        for (std::size_t v = 0; v < s.n1(); ++v) {
          if (!x.test(v)) cover += RowMax(s.cross, v, y);
        }
        for (std::size_t v = 0; v < s.n2(); ++v) cover += RowMax(s.block, v, y);
        return cover - div * PairSum(s.block, y) +
               cfg.lambda * static_cast<double>(x.count());
      });
}

OraclePtr MakeRobustQaObjective(const SimilarityMatrix& s,
                                const ObjectiveConfig& cfg) {
  s.Validate(/*need_block=*/false, /*need_symmetric=*/false,
             /*max_entry=*/1.0);
  cfg.Validate();
  return MakeOracle(s.n1(), s.n2(), [s, cfg](const Bitset& x, const Bitset& y) {
    double cover = 0.0;
    double linear = 0.0;
    for (std::size_t v = 0; v < s.n1(); ++v) {
      if (x.test(v)) continue;
      cover += RowMax(s.cross, v, y);
      linear += RowSum(s.cross, v, y);
    }
    return cover + cfg.beta_lin * linear +
           cfg.lambda * static_cast<double>(x.count());
  });
}

OraclePtr MakeDstObjective(const SimilarityMatrix& s,
                           const ObjectiveConfig& cfg) {
  // Entries <= 1 and alpha <= 1 keep the diversity term below the n2 offset.
  s.Validate(/*need_block=*/true, /*need_symmetric=*/true, /*max_entry=*/1.0);
  cfg.Validate();
  const double div = cfg.alpha_div * DiversityWeight(s.n2());
  const double offset = static_cast<double>(s.n2());
  return MakeOracle(
      s.n1(), s.n2(), [s, cfg, div, offset](const Bitset& x, const Bitset& y) {
        double relevance = 0.0;
        for (std::size_t r = 0; r < s.anchor.rows(); ++r) {
          relevance += RowSum(s.anchor, r, y);
        }
        for (std::size_t u = 0; u < s.n1(); ++u) {
          if (!x.test(u)) relevance += RowSum(s.cross, u, y);
        }
        return relevance - div * PairSum(s.block, y) +
               cfg.lambda * static_cast<double>(x.count()) + offset;
      });
}

OraclePtr MakeCubeNormObjective(const SimilarityMatrix& m,
                                const ObjectiveConfig& cfg) {
  m.Validate(/*need_block=*/true, /*need_symmetric=*/true);
  cfg.Validate();
  const double div = DiversityWeight(m.n2());
  const double per_element = cfg.lambda * std::cbrt(cfg.k_card);
  return MakeOracle(
      m.n1(), m.n2(), [m, div, per_element](const Bitset& x, const Bitset& y) {
        double cover = 0.0;
        for (std::size_t v = 0; v < m.n1(); ++v) {
          if (!x.test(v)) cover += RowSum(m.cross, v, y, 3.0);
        }
        for (std::size_t v = 0; v < m.n2(); ++v) {
          cover += RowSum(m.block, v, y, 3.0);
        }
        return std::cbrt(cover) - div * std::cbrt(PairSum(m.block, y, 3.0)) +
               per_element * static_cast<double>(x.count());
      });
}

OraclePtr MakeObjective(ObjectiveKind kind, const SimilarityMatrix& s,
                        const ObjectiveConfig& cfg) {
  switch (kind) {
    case ObjectiveKind::kFacility:
      return MakeFacilityObjective(s, cfg);
    case ObjectiveKind::kRobustQa:
      return MakeRobustQaObjective(s, cfg);
    case ObjectiveKind::kDst:
      return MakeDstObjective(s, cfg);
    case ObjectiveKind::kCubeNorm:
      return MakeCubeNormObjective(s, cfg);
  }
  Fail(ErrorCode::kDomain, "unknown objective " + ObjectiveKindLabel(kind));
}

InstanceTags ObjectiveTags(ObjectiveKind kind) {
  InstanceTags tags;
  switch (kind) {
    case ObjectiveKind::kFacility:
    case ObjectiveKind::kDst:
      tags.jointly_submodular = true;
      tags.disjointly_submodular = true;
      break;
    case ObjectiveKind::kRobustQa:
      tags.jointly_submodular = true;
      tags.disjointly_submodular = true;
      tags.n2_monotone = true;
      break;
    case ObjectiveKind::kCubeNorm:
      break;
  }
  return tags;
}

}  // namespace smx
