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

#include "adselect/coverage.h"

#include <algorithm>

#include "adselect/errors.h"
#include "fmt/format.h"

namespace adselect {

bool Selection::contains(CreativeIndex j) const {
  return std::find(indices.begin(), indices.end(), j) != indices.end();
}

std::vector<CreativeIndex> Selection::Sorted() const {
  std::vector<CreativeIndex> out = indices;
  std::sort(out.begin(), out.end());
  return out;
}

void ValidateSelection(const ScoreMatrix& matrix, const Selection& selection) {
  if (selection.size() > selection.capacity) {
    throw InvalidSelectionError(
        fmt::format("selection holds {} creatives but capacity is {}",
                    selection.size(), selection.capacity));
  }
  std::vector<bool> seen(matrix.cols(), false);
  for (const CreativeIndex j : selection.indices) {
    if (j >= matrix.cols()) {
      throw InvalidSelectionError(fmt::format(
          "creative index {} out of range [0, {})", j, matrix.cols()));
    }
    if (seen[j]) {
      throw InvalidSelectionError(
          fmt::format("creative index {} selected twice", j));
    }
    seen[j] = true;
  }
}

double Goal(const ScoreMatrix& matrix, const Selection& selection) {
  ValidateSelection(matrix, selection);
  return Goal(matrix, std::span<const CreativeIndex>(selection.indices));
}

double Goal(const ScoreMatrix& matrix,
            std::span<const CreativeIndex> indices) {
  for (const CreativeIndex j : indices) {
    if (j >= matrix.cols()) {
      throw InvalidSelectionError(fmt::format(
          "creative index {} out of range [0, {})", j, matrix.cols()));
    }
  }
  double total = 0.0;
  for (std::size_t i = 0; i < matrix.rows(); ++i) {
    double best = 0.0;
    for (const CreativeIndex j : indices) best = std::max(best, matrix(i, j));
    total += best;
  }
  return total;
}

CoverageCache::CoverageCache(const ScoreMatrix& matrix)
    : matrix_(&matrix),
      best_(matrix.rows(), 0.0),
      selected_(matrix.cols(), false) {}

CoverageCache CoverageCache::Build(const ScoreMatrix& matrix,
                                   const Selection& selection) {
  ValidateSelection(matrix, selection);
  return Build(matrix, std::span<const CreativeIndex>(selection.indices));
}

CoverageCache CoverageCache::Build(const ScoreMatrix& matrix,
                                   std::span<const CreativeIndex> indices) {
  CoverageCache cache(matrix);
  for (const CreativeIndex j : indices) cache.Add(j);
  return cache;
}

void CoverageCache::CheckIndex(CreativeIndex j) const {
  if (j >= matrix_->cols()) {
    throw InvalidSelectionError(fmt::format(
        "creative index {} out of range [0, {})", j, matrix_->cols()));
  }
}

double CoverageCache::MarginalGain(CreativeIndex j) const {
  CheckIndex(j);
  const std::size_t n = matrix_->cols();
  const double* column = matrix_->values().data() + j;
  double gain = 0.0;
  for (std::size_t i = 0; i < best_.size(); ++i) {
    const double delta = column[i * n] - best_[i];
    if (delta > 0.0) gain += delta;
  }
  return gain;
}

void CoverageCache::Add(CreativeIndex j) {
  CheckIndex(j);
  if (selected_[j]) {
    throw InvalidSelectionError(
        fmt::format("creative index {} already selected", j));
  }
  selected_[j] = true;
  members_.push_back(j);
  for (std::size_t i = 0; i < best_.size(); ++i) {
    best_[i] = std::max(best_[i], (*matrix_)(i, j));
  }
}

double CoverageCache::Goal() const {
  double total = 0.0;
  for (const double b : best_) total += b;
  return total;
}

}  // namespace adselect
