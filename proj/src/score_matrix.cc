// Copyright 2026 The Authors.
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

#include "adselect/score_matrix.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <string>
#include <string_view>
#include <utility>

#include "adselect/errors.h"
#include "fmt/format.h"

namespace adselect {

ScoreMatrix::ScoreMatrix(std::size_t rows, std::size_t cols,
                         std::vector<double> values)
    : rows_(rows), cols_(cols), values_(std::move(values)) {
  if (rows_ == 0 || cols_ == 0) {
    throw MatrixError(
        fmt::format("score matrix must be non-empty, got {}x{}", rows_, cols_));
  }
  if (values_.size() != rows_ * cols_) {
    throw MatrixError(fmt::format("score matrix {}x{} needs {} values, got {}",
                                  rows_, cols_, rows_ * cols_,
                                  values_.size()));
  }
  for (std::size_t k = 0; k < values_.size(); ++k) {
    const double v = values_[k];
    if (!std::isfinite(v) || v < 0.0) {
      throw MatrixError(fmt::format(
          "score at row {}, column {} must be finite and nonnegative, got {}",
          k / cols_ + 1, k % cols_ + 1, v));
    }
  }
}

ScoreMatrix ScoreMatrix::FromRows(
    const std::vector<std::vector<double>>& rows) {
  const std::size_t n = rows.empty() ? 0 : rows.front().size();
  std::vector<double> flat;
  flat.reserve(rows.size() * n);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != n) {
      throw MatrixError(fmt::format("row {} has {} columns, expected {}", i + 1,
                                    rows[i].size(), n));
    }
    flat.insert(flat.end(), rows[i].begin(), rows[i].end());
  }
  return ScoreMatrix(rows.size(), n, std::move(flat));
}

double ScoreMatrix::ColumnSum(std::size_t col) const {
  double sum = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) sum += (*this)(i, col);
  return sum;
}

double ScoreMatrix::RowMaxSum() const {
  double sum = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) {
    const auto r = row(i);
    sum += *std::max_element(r.begin(), r.end());
  }
  return sum;
}

namespace {

std::string_view Trim(std::string_view s) {
  constexpr std::string_view kSpace = " \t\r";
  const auto first = s.find_first_not_of(kSpace);
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(kSpace);
  return s.substr(first, last - first + 1);
}

}  // namespace

ScoreMatrix ParseMatrixCsv(std::istream& in) {
  std::vector<double> values;
  std::size_t cols = 0;
  std::size_t rows = 0;
  std::string line;
  while (std::getline(in, line)) {
    if (Trim(line).empty()) continue;
    ++rows;
    std::size_t col = 0;
    std::string_view rest = line;
    while (true) {
      const auto comma = rest.find(',');
      const std::string_view cell = Trim(rest.substr(0, comma));
      ++col;
      double v = 0.0;
      const auto [ptr, ec] =
          std::from_chars(cell.data(), cell.data() + cell.size(), v);
      if (cell.empty() || ec != std::errc() ||
          ptr != cell.data() + cell.size()) {
        throw MatrixError(fmt::format("row {}, column {}: cannot parse '{}'",
                                      rows, col, cell));
      }
      if (!std::isfinite(v) || v < 0.0) {
        throw MatrixError(fmt::format(
            "row {}, column {}: score must be finite and nonnegative, got {}",
            rows, col, cell));
      }
      values.push_back(v);
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    if (rows == 1) {
      cols = col;
    } else if (col != cols) {
      throw MatrixError(fmt::format("row {} has {} columns, expected {}", rows,
                                    col, cols));
    }
  }
  if (rows == 0) throw MatrixError("score matrix file has no data rows");
  return ScoreMatrix(rows, cols, std::move(values));
}

ScoreMatrix LoadMatrixCsv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw MatrixError(fmt::format("cannot open matrix file {}", path.string()));
  }
  return ParseMatrixCsv(in);
}

}  // namespace adselect
