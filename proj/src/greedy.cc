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

#include "adselect/greedy.h"

#include "adselect/errors.h"
#include "fmt/format.h"

namespace adselect {

GreedyResult GreedySelect(const ScoreMatrix& matrix, std::size_t capacity,
                          const Selection& start) {
  if (capacity > matrix.cols()) {
    throw InfeasibleError(fmt::format(
        "cannot select {} creatives out of {}", capacity, matrix.cols()));
  }
  if (start.size() > capacity) {
    throw InvalidSelectionError(
        fmt::format("warm start holds {} creatives, more than capacity {}",
                    start.size(), capacity));
  }
  ValidateSelection(matrix, Selection{start.indices, capacity});
  CoverageCache cache = CoverageCache::Build(matrix, start.indices);
  return GreedyFill(cache, capacity);
}

GreedyResult GreedyFill(CoverageCache& cache, std::size_t capacity) {
  if (capacity > cache.cols()) {
    throw InfeasibleError(fmt::format(
        "cannot select {} creatives out of {}", capacity, cache.cols()));
  }
  if (cache.members().size() > capacity) {
    throw InvalidSelectionError(
        fmt::format("warm start holds {} creatives, more than capacity {}",
                    cache.members().size(), capacity));
  }
  GreedyResult result;
  while (cache.members().size() < capacity) {
    bool found = false;
    CreativeIndex best_j = 0;
    double best_gain = 0.0;
    for (CreativeIndex j = 0; j < cache.cols(); ++j) {
      if (cache.contains(j)) continue;
      const double gain = cache.MarginalGain(j);
      if (!found || gain > best_gain) {
        found = true;
        best_j = j;
        best_gain = gain;
      }
    }
    cache.Add(best_j);
    result.trace.steps.push_back({best_j, best_gain, cache.Goal()});
  }
  result.selection = Selection{cache.members(), capacity};
  result.goal = cache.Goal();
  return result;
}

}  // namespace adselect
