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

#ifndef SMX_HARNESS_IO_H_
#define SMX_HARNESS_IO_H_

// CSV formats:
//   points   id,side,x,y with side in {N1, N2, anchor}; header optional.
//   matrix   header id,<N2 ids>; a row whose id is an N2 id belongs to the
//            N2 x N2 block, a row "anchor:<id>" is an anchor row, any other
//            row is an N1 row.
//   results  one ResultRow per line under kResultsHeader.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "smx/objectives.h"
#include "smx/oracle.h"

namespace smx::harness {

PointSet ParsePoints(std::istream& in);
PointSet ReadPoints(const std::string& path);
void WritePoints(std::ostream& out, const PointSet& points);
void WritePoints(const std::string& path, const PointSet& points);

SimilarityMatrix ParseMatrix(std::istream& in);
SimilarityMatrix ReadMatrix(const std::string& path);
void WriteMatrix(std::ostream& out, const SimilarityMatrix& s);
void WriteMatrix(const std::string& path, const SimilarityMatrix& s);

struct ResultRow {
  std::uint64_t seed = 0;
  std::string algorithm;
  double lambda = 0.0;
  std::size_t k = 0;
  // ε for the random-subsets estimators, β for X growing.
  std::optional<double> param;
  double value = 0.0;
  double tau_lower = 0.0;
  // Written as an empty cell when infinite (no certified upper bound).
  double tau_upper = 0.0;
  std::optional<double> brute_tau;
  std::uint64_t oracle_calls = 0;
  std::size_t iterations = 0;
  std::optional<double> millis;

  // Not written to CSV.
  Subset chosen;
  std::optional<std::string> error;
};

inline constexpr std::string_view kResultsHeader =
    "seed,algorithm,lambda,k,epsilon/beta,value,tau_lower,tau_upper,"
    "brute_tau,oracle_calls,iterations,millis";

// Shortest round-trip representation ("inf" for infinities).
std::string FormatNumber(double v);

void WriteResults(std::ostream& out, const std::vector<ResultRow>& rows);
void WriteResults(const std::string& path, const std::vector<ResultRow>& rows);

}  // namespace smx::harness

#endif  // SMX_HARNESS_IO_H_
