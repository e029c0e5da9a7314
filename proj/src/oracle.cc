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

#include "adselect/oracle.h"

#include <numeric>
#include <vector>

#include "adselect/errors.h"
#include "adselect/greedy.h"
#include "adselect/random.h"
#include "adselect/sim.h"
#include "fmt/format.h"

namespace adselect {

namespace {

void CheckBudget(std::size_t cols, std::size_t capacity,
                 const OracleBudget& budget) {
  if (capacity > cols) {
    throw InfeasibleError(
        fmt::format("cannot select {} creatives out of {}", capacity, cols));
  }
  const std::uint64_t count = Binomial(cols, capacity);
  if (count > budget.max_subsets) {
    throw BudgetExceededError(fmt::format(
        "exact enumeration refused: C({}, {}) = {} subsets exceeds budget {}",
        cols, capacity, count, budget.max_subsets));
  }
}

}  // namespace

ExactResult ExactSelect(const ScoreMatrix& matrix, std::size_t capacity,
                        const OracleBudget& budget) {
  const std::size_t n = matrix.cols();
  const std::size_t w = matrix.rows();
  CheckBudget(n, capacity, budget);

  // prefix[d][i] holds the row maxima of the first d chosen columns, so
  // advancing the last position only recomputes one level.
  std::vector<std::vector<double>> prefix(capacity + 1,
                                          std::vector<double>(w, 0.0));
  std::vector<CreativeIndex> current(capacity);
  std::iota(current.begin(), current.end(), CreativeIndex{0});

  auto fill_from = [&](std::size_t depth) {
    for (std::size_t d = depth; d < capacity; ++d) {
      const CreativeIndex j = current[d];
      for (std::size_t i = 0; i < w; ++i) {
        prefix[d + 1][i] = std::max(prefix[d][i], matrix(i, j));
      }
    }
  };

  ExactResult best;
  bool have_best = false;
  fill_from(0);
  while (true) {
    double goal = 0.0;
    for (const double v : prefix[capacity]) goal += v;
    ++best.subsets_examined;
    if (!have_best || goal > best.goal) {
      have_best = true;
      best.goal = goal;
      best.selection = Selection{current, capacity};
    }
    std::size_t i = capacity;
    while (i > 0 && current[i - 1] == n - capacity + (i - 1)) --i;
    if (i == 0) break;
    ++current[i - 1];
    for (std::size_t k = i; k < capacity; ++k) current[k] = current[k - 1] + 1;
    fill_from(i - 1);
  }
  return best;
}

OptimalityStats CompareWithOracle(std::size_t rows, std::size_t cols,
                                  std::size_t capacity, std::size_t trials,
                                  std::uint64_t seed,
                                  const PowerParams& params,
                                  const OracleBudget& budget) {
  CheckBudget(cols, capacity, budget);
  ValidatePowerParams(params, capacity);
  OptimalityStats stats;
  double sum_exact = 0.0;
  double sum_greedy = 0.0;
  double sum_power = 0.0;
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng = MakeRng(DeriveSeed(seed, {t}));
    const ScoreMatrix matrix = GenerateHalfNormalMatrix(rows, cols, rng);
    const ExactResult exact = ExactSelect(matrix, capacity, budget);
    const RefinementResult power =
        GreedyPower(matrix, capacity, params, DeriveSeed(seed, {t, 1}));
    const double greedy_goal = power.baseline_goal;

    ++stats.instances;
    if (greedy_goal == exact.goal) ++stats.greedy_optimal;
    if (power.final_goal == exact.goal) ++stats.power_optimal;
    if (power.final_goal > greedy_goal) ++stats.power_improved;
    if (!(exact.goal >= power.final_goal && power.final_goal >= greedy_goal)) {
      stats.chain_violated = true;
    }
    sum_exact += exact.goal;
    sum_greedy += greedy_goal;
    sum_power += power.final_goal;
  }
  if (trials > 0) {
    stats.mean_exact_goal = sum_exact / trials;
    stats.mean_greedy_goal = sum_greedy / trials;
    stats.mean_power_goal = sum_power / trials;
  }
  return stats;
}

double GreedyOptimalityRate(std::size_t rows, std::size_t cols,
                            std::size_t capacity, std::size_t trials,
                            std::uint64_t seed, const OracleBudget& budget) {
  CheckBudget(cols, capacity, budget);
  if (trials == 0) return 0.0;
  std::size_t hits = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng = MakeRng(DeriveSeed(seed, {t}));
    const ScoreMatrix matrix = GenerateHalfNormalMatrix(rows, cols, rng);
    if (GreedySelect(matrix, capacity).goal ==
        ExactSelect(matrix, capacity, budget).goal) {
      ++hits;
    }
  }
  return static_cast<double>(hits) / static_cast<double>(trials);
}

}  // namespace adselect
