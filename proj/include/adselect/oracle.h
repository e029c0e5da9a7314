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

#ifndef ADSELECT_ORACLE_H_
#define ADSELECT_ORACLE_H_

#include <cstddef>
#include <cstdint>

#include "adselect/coverage.h"
#include "adselect/power.h"
#include "adselect/score_matrix.h"

namespace adselect {

struct OracleBudget {
  std::uint64_t max_subsets = 5'000'000;
};

struct ExactResult {
  Selection selection;  // ascending
  double goal = 0.0;
  std::uint64_t subsets_examined = 0;
};

// Global optimum by enumerating all C(N, M) subsets in lexicographic order,
// keeping the first strict maximizer. Throws BudgetExceededError (with the
// count) if C(N, M) > budget.max_subsets and InfeasibleError if M > N.
ExactResult ExactSelect(const ScoreMatrix& matrix, std::size_t capacity,
                        const OracleBudget& budget = {});

struct OptimalityStats {
  std::size_t instances = 0;
  std::size_t greedy_optimal = 0;
  std::size_t power_optimal = 0;
  // Instances where power strictly beat its greedy baseline.
  std::size_t power_improved = 0;
  double mean_exact_goal = 0.0;
  double mean_greedy_goal = 0.0;
  double mean_power_goal = 0.0;
  // Set if any instance broke exact >= power >= greedy.
  bool chain_violated = false;

  double greedy_rate() const {
    return instances ? static_cast<double>(greedy_optimal) / instances : 0.0;
  }
  double power_rate() const {
    return instances ? static_cast<double>(power_optimal) / instances : 0.0;
  }
};

// Runs greedy, Greedy-Power and the exact oracle on `trials` half-normal
// instances. Instance t uses DeriveSeed(seed, {t}) for its matrix and
// DeriveSeed(seed, {t, 1}) for the refinement.
OptimalityStats CompareWithOracle(std::size_t rows, std::size_t cols,
                                  std::size_t capacity, std::size_t trials,
                                  std::uint64_t seed,
                                  const PowerParams& params,
                                  const OracleBudget& budget = {});

// Fraction of `trials` random instances where greedy reaches the optimum.
double GreedyOptimalityRate(std::size_t rows, std::size_t cols,
                            std::size_t capacity, std::size_t trials,
                            std::uint64_t seed,
                            const OracleBudget& budget = {});

}  // namespace adselect

#endif  // ADSELECT_ORACLE_H_
