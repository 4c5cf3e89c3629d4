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

#include "smx/harness/io.h"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "smx/error.h"

namespace smx::harness {

namespace {

std::vector<std::string> SplitCsv(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

std::string StripCr(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

double ParseDouble(const std::string& text, std::size_t line_no) {
  double v = 0.0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end || text.empty()) {
    Fail(ErrorCode::kParse, "line " + std::to_string(line_no) +
                                ": bad number '" + text + "'");
  }
  return v;
}

std::ifstream OpenInput(const std::string& path) {
  std::ifstream in(path);
  if (!in) Fail(ErrorCode::kIo, "cannot open '" + path + "' for reading");
  return in;
}

std::ofstream OpenOutput(const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) Fail(ErrorCode::kIo, "cannot open '" + path + "' for writing");
  return out;
}

void CheckWritten(std::ostream& out, const std::string& path) {
  out.flush();
  if (!out) Fail(ErrorCode::kIo, "write to '" + path + "' failed");
}

constexpr std::string_view kAnchorPrefix = "anchor:";

}  // namespace

std::string FormatNumber(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

PointSet ParsePoints(std::istream& in) {
  PointSet points;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = StripCr(line);
    if (line.empty()) continue;
    if (line_no == 1 && line == "id,side,x,y") continue;
    const std::vector<std::string> cells = SplitCsv(line);
    if (cells.size() != 4 || cells[0].empty()) {
      Fail(ErrorCode::kParse, "line " + std::to_string(line_no) +
                                  ": expected id,side,x,y");
    }
    Point p;
    p.id = cells[0];
    try {
      p.side = ParsePointSide(cells[1]);
    } catch (const Error& e) {
      Fail(ErrorCode::kParse,
           "line " + std::to_string(line_no) + ": " + e.what());
    }
    p.x = ParseDouble(cells[2], line_no);
    p.y = ParseDouble(cells[3], line_no);
    points.points.push_back(std::move(p));
  }
  if (points.points.empty()) Fail(ErrorCode::kParse, "no points in input");
  points.Validate();
  return points;
}

PointSet ReadPoints(const std::string& path) {
  std::ifstream in = OpenInput(path);
  return ParsePoints(in);
}

void WritePoints(std::ostream& out, const PointSet& points) {
  out << "id,side,x,y\n";
  for (const Point& p : points.points) {
    out << p.id << ',' << PointSideName(p.side) << ',' << FormatNumber(p.x)
        << ',' << FormatNumber(p.y) << '\n';
  }
}

void WritePoints(const std::string& path, const PointSet& points) {
  std::ofstream out = OpenOutput(path);
  WritePoints(out, points);
  CheckWritten(out, path);
}

SimilarityMatrix ParseMatrix(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) Fail(ErrorCode::kParse, "empty matrix file");
  std::vector<std::string> header = SplitCsv(StripCr(line));
  if (header.empty() || header[0] != "id") {
    Fail(ErrorCode::kParse, "line 1: matrix header must start with 'id'");
  }
  SimilarityMatrix s;
  s.n2_ids.assign(header.begin() + 1, header.end());
  const std::size_t n2 = s.n2_ids.size();
  std::unordered_map<std::string, std::size_t> n2_index;
  for (std::size_t j = 0; j < n2; ++j) {
    if (!n2_index.emplace(s.n2_ids[j], j).second) {
      Fail(ErrorCode::kParse, "line 1: duplicate N2 id '" + s.n2_ids[j] + "'");
    }
  }

  std::vector<std::vector<double>> cross;
  std::vector<std::vector<double>> anchor;
  std::vector<std::optional<std::vector<double>>> block(n2);
  std::size_t block_rows = 0;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    line = StripCr(line);
    if (line.empty()) continue;
    const std::vector<std::string> cells = SplitCsv(line);
    if (cells.size() != n2 + 1) {
      Fail(ErrorCode::kParse, "line " + std::to_string(line_no) + ": expected " +
                                  std::to_string(n2 + 1) + " cells, found " +
                                  std::to_string(cells.size()));
    }
    std::vector<double> values;
    for (std::size_t j = 1; j < cells.size(); ++j) {
      values.push_back(ParseDouble(cells[j], line_no));
    }
    const std::string& id = cells[0];
    if (auto it = n2_index.find(id); it != n2_index.end()) {
      if (block[it->second]) {
        Fail(ErrorCode::kParse, "line " + std::to_string(line_no) +
                                    ": duplicate row '" + id + "'");
      }
      block[it->second] = std::move(values);
      ++block_rows;
    } else if (id.starts_with(kAnchorPrefix)) {
      s.anchor_ids.push_back(id.substr(kAnchorPrefix.size()));
      anchor.push_back(std::move(values));
    } else {
      s.n1_ids.push_back(id);
      cross.push_back(std::move(values));
    }
  }
  if (block_rows != 0 && block_rows != n2) {
    Fail(ErrorCode::kParse, "matrix has " + std::to_string(block_rows) +
                                " of the " + std::to_string(n2) +
                                " N2 rows; give all or none");
  }
  auto pack = [n2](const std::vector<std::vector<double>>& rows) {
    DenseMatrix m(rows.size(), n2);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      for (std::size_t c = 0; c < n2; ++c) m(r, c) = rows[r][c];
    }
    return m;
  };
  s.cross = pack(cross);
  s.anchor = pack(anchor);
  if (block_rows == n2 && n2 > 0) {
    std::vector<std::vector<double>> rows;
    for (auto& r : block) rows.push_back(std::move(*r));
    s.block = pack(rows);
  }
  s.Validate(/*need_block=*/false, /*need_symmetric=*/false);
  return s;
}

SimilarityMatrix ReadMatrix(const std::string& path) {
  std::ifstream in = OpenInput(path);
  return ParseMatrix(in);
}

void WriteMatrix(std::ostream& out, const SimilarityMatrix& s) {
  out << "id";
  for (const std::string& id : s.n2_ids) out << ',' << id;
  out << '\n';
  auto rows = [&out](const std::vector<std::string>& ids, const DenseMatrix& m,
                     std::string_view prefix) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
      out << prefix << ids[r];
      for (std::size_t c = 0; c < m.cols(); ++c) {
        out << ',' << FormatNumber(m(r, c));
      }
      out << '\n';
    }
  };
  rows(s.n1_ids, s.cross, "");
  rows(s.anchor_ids, s.anchor, kAnchorPrefix);
  if (!s.block.empty()) rows(s.n2_ids, s.block, "");
}

void WriteMatrix(const std::string& path, const SimilarityMatrix& s) {
  std::ofstream out = OpenOutput(path);
  WriteMatrix(out, s);
  CheckWritten(out, path);
}

void WriteResults(std::ostream& out, const std::vector<ResultRow>& rows) {
  out << kResultsHeader << '\n';
  auto opt = [](const std::optional<double>& v) {
    return v ? FormatNumber(*v) : std::string();
  };
  for (const ResultRow& r : rows) {
    out << r.seed << ',' << r.algorithm << ',' << FormatNumber(r.lambda) << ','
        << r.k << ',' << opt(r.param) << ',';
    if (r.error) {
      // Error rows keep the identifying columns and leave results empty.
      out << ",,,,,,\n";
      continue;
    }
    out << FormatNumber(r.value) << ',' << FormatNumber(r.tau_lower) << ','
        << (std::isfinite(r.tau_upper) ? FormatNumber(r.tau_upper) : "")
        << ',' << opt(r.brute_tau) << ','
        << r.oracle_calls << ',' << r.iterations << ',' << opt(r.millis)
        << '\n';
  }
}

void WriteResults(const std::string& path, const std::vector<ResultRow>& rows) {
  std::ofstream out = OpenOutput(path);
  WriteResults(out, rows);
  CheckWritten(out, path);
}

}  // namespace smx::harness
