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

#include "adselect/power.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>

#include "adselect/errors.h"
#include "adselect/greedy.h"
#include "fmt/format.h"

namespace adselect {

void ValidatePowerParams(const PowerParams& params, std::size_t capacity) {
  if (params.remove < 1 || params.remove > capacity) {
    throw DomainError(fmt::format("remove count r={} must lie in [1, M={}]",
                                  params.remove, capacity));
  }
  if (params.branches && *params.branches < 1) {
    throw DomainError("branch count f must be at least 1");
  }
  if (params.max_rounds && *params.max_rounds < 1) {
    throw DomainError("round count n must be at least 1");
  }
}

std::uint64_t Binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // result * (n - k + i) / i stays integral at every step; divide by the
    // gcd first to delay overflow.
    const std::uint64_t num = n - k + i;
    const std::uint64_t g = std::gcd(result, i);
    const std::uint64_t reduced = result / g;
    const std::uint64_t den = i / g;
    const std::uint64_t num_reduced = num / den;
    if (reduced > kMax / num_reduced) return kMax;
    result = reduced * num_reduced;
  }
  return result;
}

namespace {

// All r-subsets of {0..m-1} in lexicographic order.
std::vector<PositionSubset> EnumerateSubsets(std::size_t m, std::size_t r) {
  std::vector<PositionSubset> out;
  PositionSubset current(r);
  std::iota(current.begin(), current.end(), std::size_t{0});
  while (true) {
    out.push_back(current);
    std::size_t i = r;
    while (i > 0 && current[i - 1] == m - r + (i - 1)) --i;
    if (i == 0) break;
    ++current[i - 1];
    for (std::size_t k = i; k < r; ++k) current[k] = current[k - 1] + 1;
  }
  return out;
}

}  // namespace

std::vector<PositionSubset> SampleRemovalSubsets(std::size_t capacity,
                                                 std::size_t remove,
                                                 std::size_t branches,
                                                 Rng& rng) {
  if (remove < 1 || remove > capacity) {
    throw DomainError(fmt::format("remove count r={} must lie in [1, M={}]",
                                  remove, capacity));
  }
  if (branches < 1) throw DomainError("branch count f must be at least 1");

  const std::uint64_t total = Binomial(capacity, remove);
  if (branches >= total) return EnumerateSubsets(capacity, remove);

  std::vector<std::size_t> positions(capacity);
  std::iota(positions.begin(), positions.end(), std::size_t{0});
  std::set<PositionSubset> seen;
  std::vector<PositionSubset> out;
  out.reserve(branches);
  while (out.size() < branches) {
    PositionSubset subset;
    subset.reserve(remove);
    std::sample(positions.begin(), positions.end(), std::back_inserter(subset),
                remove, rng);
    if (seen.insert(subset).second) out.push_back(std::move(subset));
  }
  return out;
}

RefineCandidate RefineOnce(const ScoreMatrix& matrix,
                           const Selection& incumbent,
                           const PowerParams& params, Rng& rng) {
  ValidateSelection(matrix, incumbent);
  if (!incumbent.complete()) {
    throw InvalidSelectionError(
        fmt::format("refinement needs a complete incumbent, got {} of {}",
                    incumbent.size(), incumbent.capacity));
  }
  const std::size_t m = incumbent.capacity;
  ValidatePowerParams(params, m);
  const auto subsets =
      SampleRemovalSubsets(m, params.remove, params.BranchesFor(m), rng);

  RefineCandidate best;
  bool have_best = false;
  std::vector<CreativeIndex> kept;
  kept.reserve(m);
  for (std::size_t s = 0; s < subsets.size(); ++s) {
    kept.clear();
    const auto& removed = subsets[s];
    for (std::size_t pos = 0, k = 0; pos < m; ++pos) {
      if (k < removed.size() && removed[k] == pos) {
        ++k;
        continue;
      }
      kept.push_back(incumbent.indices[pos]);
    }
    CoverageCache cache = CoverageCache::Build(matrix, kept);
    GreedyResult refill = GreedyFill(cache, m);
    if (!have_best || refill.goal > best.goal) {
      have_best = true;
      best.selection = std::move(refill.selection);
      best.goal = refill.goal;
      best.subset_index = s;
    }
  }
  return best;
}

RefinementResult GreedyPower(const ScoreMatrix& matrix, std::size_t capacity,
                             const PowerParams& params, std::uint64_t seed) {
  if (capacity > matrix.cols()) {
    throw InfeasibleError(fmt::format(
        "cannot select {} creatives out of {}", capacity, matrix.cols()));
  }
  ValidatePowerParams(params, capacity);

  RefinementResult result;
  GreedyResult baseline = GreedySelect(matrix, capacity);
  result.baseline = baseline.selection;
  result.baseline_goal = baseline.goal;
  result.final = std::move(baseline.selection);
  result.final_goal = baseline.goal;
  result.iterations_run = 1;
  result.history.push_back({1, baseline.goal, true});

  for (std::size_t round = 2;
       !params.max_rounds || round <= *params.max_rounds; ++round) {
    Rng rng = MakeRng(DeriveSeed(seed, {round}));
    RefineCandidate candidate = RefineOnce(matrix, result.final, params, rng);
    result.iterations_run = round;
    const bool accepted = candidate.goal > result.final_goal;
    result.history.push_back({round, candidate.goal, accepted});
    if (!accepted) break;
    result.final = std::move(candidate.selection);
    result.final_goal = candidate.goal;
  }

  result.matched = !(result.final_goal > result.baseline_goal);
  result.improvement_ratio =
      result.matched ? 0.0 : result.final_goal / result.baseline_goal - 1.0;
  return result;
}

double SplitProbability(std::size_t capacity, std::size_t remove) {
  if (capacity < 2 || remove < 1 || remove >= capacity) {
    throw DomainError(fmt::format(
        "split probability needs M >= 2 and 1 <= r <= M-1, got M={}, r={}",
        capacity, remove));
  }
  return static_cast<double>(capacity - remove) /
         static_cast<double>(capacity - 1);
}

double SplitEstimate::StandardError(double p) const {
  if (conditioned == 0) return 0.0;
  return std::sqrt(p * (1.0 - p) / static_cast<double>(conditioned));
}

SplitEstimate EstimateSplitProbability(std::size_t capacity,
                                       std::size_t remove, std::size_t draws,
                                       Rng& rng) {
  SplitProbability(capacity, remove);  // domain check
  SplitEstimate est;
  est.draws = draws;
  for (std::size_t d = 0; d < draws; ++d) {
    const PositionSubset removed =
        SampleRemovalSubsets(capacity, remove, 1, rng).front();
    const bool first_removed =
        std::binary_search(removed.begin(), removed.end(), std::size_t{0});
    if (!first_removed) continue;
    ++est.conditioned;
    if (!std::binary_search(removed.begin(), removed.end(), std::size_t{1})) {
      ++est.split;
    }
  }
  return est;
}

}  // namespace adselect
