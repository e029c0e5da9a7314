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
// Greedy-Power refinement G^n(r, f; W, N, M)
//
// Round 1 is the plain greedy solution. Every later round takes the
// incumbent, removes r of its members in f different ways, greedily refills
// each partial selection back to M, and keeps the best refill if it strictly
// beats the incumbent. The first round without a strict improvement ends the
// search, so an unbounded round count always terminates.

#ifndef ADSELECT_POWER_H_
#define ADSELECT_POWER_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "adselect/coverage.h"
#include "adselect/random.h"
#include "adselect/score_matrix.h"

namespace adselect {

struct PowerParams {
  // r: members removed from the incumbent per candidate.
  std::size_t remove = 1;
  // f: removal subsets tried per round. Unset means M.
  std::optional<std::size_t> branches;
  // n: greedy rounds including the baseline. Unset means unbounded.
  std::optional<std::size_t> max_rounds = 2;

  std::size_t BranchesFor(std::size_t capacity) const {
    return branches.value_or(capacity);
  }
};

// Throws DomainError unless 1 <= r <= M, f >= 1 and n >= 1.
void ValidatePowerParams(const PowerParams& params, std::size_t capacity);

// C(n, k), saturating at UINT64_MAX.
std::uint64_t Binomial(std::uint64_t n, std::uint64_t k);

// Removal subsets are sets of positions into the incumbent, each sorted
// ascending.
using PositionSubset = std::vector<std::size_t>;

// min(f, C(M, r)) distinct r-subsets of {0..M-1}. When f covers every
// subset the full lexicographic enumeration is returned and `rng` is left
// untouched; otherwise subsets are drawn uniformly without replacement and
// returned in draw order.
std::vector<PositionSubset> SampleRemovalSubsets(std::size_t capacity,
                                                 std::size_t remove,
                                                 std::size_t branches,
                                                 Rng& rng);

struct RefineCandidate {
  Selection selection;
  double goal = 0.0;
  // Index into the sampled subset list that produced this candidate.
  std::size_t subset_index = 0;
};

// One refinement round over a complete incumbent. Removed creatives stay
// eligible during refill. Returns the best refill by goal; ties go to the
// earliest sampled subset.
RefineCandidate RefineOnce(const ScoreMatrix& matrix, const Selection& incumbent,
                           const PowerParams& params, Rng& rng);

struct RoundRecord {
  std::size_t round = 0;
  // Baseline goal for round 1, best candidate goal afterwards.
  double best_goal = 0.0;
  bool accepted = false;
};

struct RefinementResult {
  Selection baseline;
  Selection final;
  double baseline_goal = 0.0;
  double final_goal = 0.0;
  // Greedy rounds executed, baseline included.
  std::size_t iterations_run = 0;
  bool matched = true;
  // final_goal / baseline_goal - 1, zero when matched.
  double improvement_ratio = 0.0;
  std::vector<RoundRecord> history;
};

// Round `k` (k >= 2) draws its subsets from an engine seeded with
// DeriveSeed(seed, {k}), so changing n or f never alters the samples of
// earlier rounds.
RefinementResult GreedyPower(const ScoreMatrix& matrix, std::size_t capacity,
                             const PowerParams& params, std::uint64_t seed);

// Probability that a given member survives a uniformly random r-removal
// out of M, conditioned on another given member being removed:
// C(M-2, r-1) / C(M-1, r-1) = (M - r) / (M - 1).
// Throws DomainError unless M >= 2 and 1 <= r <= M - 1.
double SplitProbability(std::size_t capacity, std::size_t remove);

struct SplitEstimate {
  std::size_t draws = 0;
  // Draws in which member 0 was removed.
  std::size_t conditioned = 0;
  // Of those, draws in which member 1 survived.
  std::size_t split = 0;

  double frequency() const {
    return conditioned ? static_cast<double>(split) / conditioned : 0.0;
  }
  // Binomial standard error of frequency() around `p`.
  double StandardError(double p) const;
};

// Monte Carlo counterpart of SplitProbability using the same subset sampler
// as refinement (one uniformly drawn r-subset per draw).
SplitEstimate EstimateSplitProbability(std::size_t capacity,
                                       std::size_t remove, std::size_t draws,
                                       Rng& rng);

}  // namespace adselect

#endif  // ADSELECT_POWER_H_
