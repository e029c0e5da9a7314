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

#include <limits>
#include <sstream>
#include <string>

#include "adselect/errors.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"

namespace adselect {
namespace {

using ::testing::HasSubstr;

std::string ErrorOf(const std::string& csv) {
  std::istringstream in(csv);
  try {
    ParseMatrixCsv(in);
  } catch (const MatrixError& e) {
    return e.what();
  }
  return "";
}

TEST(ScoreMatrixTest, StoresRowMajor) {
  const ScoreMatrix k = ScoreMatrix::FromRows({{1, 2, 3}, {4, 5, 6}});
  EXPECT_EQ(k.rows(), 2);
  EXPECT_EQ(k.cols(), 3);
  EXPECT_EQ(k(1, 0), 4.0);
  EXPECT_EQ(k.row(0)[2], 3.0);
  EXPECT_EQ(k.ColumnSum(1), 7.0);
  EXPECT_EQ(k.RowMaxSum(), 9.0);
}

TEST(ScoreMatrixTest, RejectsBadShapesAndEntries) {
  EXPECT_THROW(ScoreMatrix(0, 3, {}), MatrixError);
  EXPECT_THROW(ScoreMatrix(2, 2, {1, 2, 3}), MatrixError);
  EXPECT_THROW(ScoreMatrix(1, 2, {1, -0.5}), MatrixError);
  EXPECT_THROW(
      ScoreMatrix(1, 1, {std::numeric_limits<double>::quiet_NaN()}),
      MatrixError);
  EXPECT_THROW(ScoreMatrix::FromRows({{1, 2}, {3}}), MatrixError);
}

TEST(ParseMatrixCsvTest, ParsesHeaderlessRows) {
  std::istringstream in("6,4,0\n0, 4 ,4\r\n\n0,0,4.5\n");
  const ScoreMatrix k = ParseMatrixCsv(in);
  EXPECT_EQ(k, ScoreMatrix::FromRows({{6, 4, 0}, {0, 4, 4}, {0, 0, 4.5}}));
}

TEST(ParseMatrixCsvTest, DiagnosticsNameRowAndColumn) {
  EXPECT_THAT(ErrorOf("1,2\n3,x\n"), HasSubstr("row 2, column 2"));
  EXPECT_THAT(ErrorOf("1,2\n3,-1\n"), HasSubstr("row 2, column 2"));
  EXPECT_THAT(ErrorOf("1,2\n3\n"), HasSubstr("row 2 has 1 columns"));
  EXPECT_THAT(ErrorOf("1,,2\n"), HasSubstr("row 1, column 2"));
  EXPECT_THAT(ErrorOf("\n\n"), HasSubstr("no data rows"));
}

TEST(LoadMatrixCsvTest, MissingFile) {
  EXPECT_THROW(LoadMatrixCsv("/nonexistent/k.csv"), MatrixError);
}

}  // namespace
}  // namespace adselect
