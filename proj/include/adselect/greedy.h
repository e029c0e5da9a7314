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

#ifndef ADSELECT_GREEDY_H_
#define ADSELECT_GREEDY_H_

#include <cstddef>
#include <vector>

#include "adselect/coverage.h"
#include "adselect/score_matrix.h"

namespace adselect {

struct GreedyStep {
  CreativeIndex chosen;
  double gain;
  double goal_after;
};

struct GreedyTrace {
  std::vector<GreedyStep> steps;
};

struct GreedyResult {
  Selection selection;
  double goal = 0.0;
  GreedyTrace trace;
};

// Grows `start` to exactly `capacity` creatives, each step adding the
// unselected column with the largest marginal gain (lowest index on ties,
// including the all-zero-gain case). From an empty start the first pick is
// the column with the largest sum.
//
// Throws InfeasibleError if capacity > cols, InvalidSelectionError if
// `start` is invalid or larger than `capacity`.
GreedyResult GreedySelect(const ScoreMatrix& matrix, std::size_t capacity,
                          const Selection& start = {});

// Same as above but continues from a prepared cache; the cache is advanced
// in place. The returned selection lists the cache members followed by the
// added columns.
GreedyResult GreedyFill(CoverageCache& cache, std::size_t capacity);

}  // namespace adselect

#endif  // ADSELECT_GREEDY_H_
