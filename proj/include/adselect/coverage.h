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

//
// Goal function and incremental coverage bookkeeping
//
// The goal of a selection d is G(d) = sum over keywords i of
// max_{a in d} K(i, a), with G(empty) = 0. Every solver in the library
// evaluates it through a CoverageCache, which stores the per-keyword maximum
// so that marginal gains cost O(W).

#ifndef ADSELECT_COVERAGE_H_
#define ADSELECT_COVERAGE_H_

#include <cstddef>
#include <span>
#include <vector>

#include "adselect/score_matrix.h"

namespace adselect {

using CreativeIndex = std::size_t;

// Ordered, duplicate-free list of creative columns with a target size.
// Order is insertion order; solvers rely on it to address members by
// position.
struct Selection {
  std::vector<CreativeIndex> indices;
  std::size_t capacity = 0;

  std::size_t size() const { return indices.size(); }
  bool empty() const { return indices.empty(); }
  bool complete() const { return indices.size() == capacity; }
  bool contains(CreativeIndex j) const;

  // Indices in ascending order.
  std::vector<CreativeIndex> Sorted() const;

  friend bool operator==(const Selection&, const Selection&) = default;
};

// Throws InvalidSelectionError if an index is out of range for `matrix`, is
// repeated, or the selection exceeds its capacity.
void ValidateSelection(const ScoreMatrix& matrix, const Selection& selection);

// Sum over keywords of the best selected score. Zero for an empty selection.
double Goal(const ScoreMatrix& matrix, const Selection& selection);
double Goal(const ScoreMatrix& matrix, std::span<const CreativeIndex> indices);

class CoverageCache {
 public:
  // Empty selection: every keyword covered at 0.
  explicit CoverageCache(const ScoreMatrix& matrix);

  static CoverageCache Build(const ScoreMatrix& matrix,
                             const Selection& selection);
  static CoverageCache Build(const ScoreMatrix& matrix,
                             std::span<const CreativeIndex> indices);

  // Sum_i max(0, K(i, j) - best[i]), which equals
  // Goal(d + {j}) - Goal(d) for the cached selection d.
  double MarginalGain(CreativeIndex j) const;

  // best[i] <- max(best[i], K(i, j)). Throws on an out-of-range or already
  // cached column.
  void Add(CreativeIndex j);

  // Recomputed as a row-order sum on every call, so two caches over the
  // same set of columns report bit-identical goals regardless of the order
  // the columns were added in.
  double Goal() const;

  std::span<const double> best() const { return best_; }
  const std::vector<CreativeIndex>& members() const { return members_; }
  std::size_t rows() const { return matrix_->rows(); }
  std::size_t cols() const { return matrix_->cols(); }
  bool contains(CreativeIndex j) const { return selected_[j]; }

  friend bool operator==(const CoverageCache& a, const CoverageCache& b) {
    return a.best_ == b.best_ && a.selected_ == b.selected_;
  }

 private:
  void CheckIndex(CreativeIndex j) const;

  const ScoreMatrix* matrix_;
  std::vector<double> best_;
  std::vector<bool> selected_;
  std::vector<CreativeIndex> members_;
};

}  // namespace adselect

#endif  // ADSELECT_COVERAGE_H_
