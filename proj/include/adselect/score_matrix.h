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

#ifndef ADSELECT_SCORE_MATRIX_H_
#define ADSELECT_SCORE_MATRIX_H_

#include <cstddef>
#include <filesystem>
#include <istream>
#include <span>
#include <vector>

namespace adselect {

// Dense keyword x creative score matrix. Rows are keywords, columns are
// creatives; every entry is a finite nonnegative real (clicks, pCTR or any
// other per-keyword payoff). Immutable once constructed, so a single
// instance can be shared by concurrent solvers.
class ScoreMatrix {
 public:
  // `values` is row-major with exactly rows * cols entries.
  // Throws MatrixError on an empty shape, a size mismatch, or an entry that
  // is negative or not finite.
  ScoreMatrix(std::size_t rows, std::size_t cols, std::vector<double> values);

  // Convenience for literals in tests and small tools. Rows must be
  // rectangular.
  static ScoreMatrix FromRows(const std::vector<std::vector<double>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double operator()(std::size_t row, std::size_t col) const {
    return values_[row * cols_ + col];
  }

  std::span<const double> row(std::size_t r) const {
    return {values_.data() + r * cols_, cols_};
  }

  std::span<const double> values() const { return values_; }

  // Sum of column `col` over all keywords.
  double ColumnSum(std::size_t col) const;

  // Sum over keywords of the largest entry in the row, i.e. the goal value
  // of selecting every creative.
  double RowMaxSum() const;

  friend bool operator==(const ScoreMatrix&, const ScoreMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> values_;
};

// Parses a headerless CSV: one keyword per line, comma separated decimal
// scores. Blank lines are ignored. Errors name the 1-based row and column of
// the offending cell.
ScoreMatrix ParseMatrixCsv(std::istream& in);
ScoreMatrix LoadMatrixCsv(const std::filesystem::path& path);

}  // namespace adselect

#endif  // ADSELECT_SCORE_MATRIX_H_
