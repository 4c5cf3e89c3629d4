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

#ifndef SMX_OBJECTIVES_H_
#define SMX_OBJECTIVES_H_

// Application objectives over similarity scores between N1 (plus fixed
// anchor rows) and N2.

#include <cstddef>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "smx/minimax.h"
#include "smx/oracle.h"

namespace smx {

enum class PointSide { kN1, kN2, kAnchor };

std::string_view PointSideName(PointSide side);
PointSide ParsePointSide(std::string_view name);

struct Point {
  std::string id;
  PointSide side = PointSide::kN1;
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

struct PointSet {
  std::vector<Point> points;

  std::vector<Point> OnSide(PointSide side) const;
  std::size_t Count(PointSide side) const;
  // Unique ids and finite coordinates.
  void Validate() const;
};

// Row-major dense matrix.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return data_.empty(); }
  double& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  double operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

// s_{u,v} between rows (N1, anchors, N2) and the N2 columns.
struct SimilarityMatrix {
  std::vector<std::string> n1_ids;
  std::vector<std::string> n2_ids;
  std::vector<std::string> anchor_ids;
  DenseMatrix cross;   // n1 x n2
  DenseMatrix anchor;  // anchors x n2
  DenseMatrix block;   // n2 x n2, or empty

  std::size_t n1() const { return n1_ids.size(); }
  std::size_t n2() const { return n2_ids.size(); }
  bool has_block() const { return n2() == 0 || !block.empty(); }

  // Shapes, nonnegative finite entries, optionally entries <= max_entry,
  // and a symmetric N2 block when required.
  void Validate(bool need_block, bool need_symmetric,
                double max_entry = std::numeric_limits<double>::infinity())
      const;
  SimilarityMatrix Scaled(double factor) const;
};

// 2 - 2 / (1 + exp(-200 d)) with d the Manhattan distance.
double ConvenienceScore(const Point& u, const Point& v);

// Scores for every (N1 or anchor, N2) pair and the N2 x N2 block.
SimilarityMatrix BuildConvenienceMatrix(const PointSet& points);

struct ObjectiveConfig {
  double lambda = 0.0;
  double alpha_div = 1.0;
  double beta_lin = 0.0;
  double k_card = 1.0;

  void Validate() const;
};

enum class ObjectiveKind { kFacility, kRobustQa, kDst, kCubeNorm };

std::string_view ObjectiveName(ObjectiveKind kind);
ObjectiveKind ParseObjective(std::string_view name);

// Σ_{v ∈ (N1 ⊎ N2) \ X} max_{u ∈ Y} s_{u,v}
//   - (1/n2) Σ_{u, v ∈ Y} s_{u,v} + λ|X|
OraclePtr MakeFacilityObjective(const SimilarityMatrix& s,
                                const ObjectiveConfig& cfg);
// Σ_{v ∈ N1 \ X} max_{u ∈ Y} s_{u,v} + β Σ_{u ∈ N1 \ X} Σ_{v ∈ Y} s_{u,v}
//   + λ|X|
OraclePtr MakeRobustQaObjective(const SimilarityMatrix& s,
                                const ObjectiveConfig& cfg);
// Σ_{u ∈ (N1 ∪ anchors) \ X} Σ_{v ∈ Y} s_{u,v}
//   - (α/n2) Σ_{u, v ∈ Y} s_{u,v} + λ|X| + n2
OraclePtr MakeDstObjective(const SimilarityMatrix& s,
                           const ObjectiveConfig& cfg);
// ∛(Σ_{v ∈ (N1 ⊎ N2) \ X} Σ_{u ∈ Y} M³_{u,v})
//   - (1/n2) ∛(Σ_{u, v ∈ Y} M³_{u,v}) + λ|X|∛k
OraclePtr MakeCubeNormObjective(const SimilarityMatrix& m,
                                const ObjectiveConfig& cfg);

OraclePtr MakeObjective(ObjectiveKind kind, const SimilarityMatrix& s,
                        const ObjectiveConfig& cfg);

// Properties the objective is known to have. The cube-norm objective is
// tagged only with what holds for every input.
InstanceTags ObjectiveTags(ObjectiveKind kind);

}  // namespace smx

#endif  // SMX_OBJECTIVES_H_
