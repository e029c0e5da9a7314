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

// Test-only reference routines. Nothing here calls into the library's
// goal, cache, greedy or oracle code, so they can serve as independent
// checks on it.

#ifndef ADSELECT_TESTS_TEST_UTIL_H_
#define ADSELECT_TESTS_TEST_UTIL_H_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "adselect/score_matrix.h"

namespace adselect::testing {

// The 3x3 instance used throughout: greedy picks {1, 2} (goal 12) while the
// optimum is {0, 2} (goal 14).
inline ScoreMatrix TrapMatrix() {
  return ScoreMatrix::FromRows({{6, 4, 0}, {0, 4, 4}, {0, 0, 4}});
}

// Straight from the definition, no caching.
inline double NaiveGoal(const ScoreMatrix& k,
                        const std::vector<std::size_t>& cols) {
  double total = 0.0;
  for (std::size_t i = 0; i < k.rows(); ++i) {
    double best = 0.0;
    for (std::size_t j : cols) best = k(i, j) > best ? k(i, j) : best;
    total += best;
  }
  return total;
}

inline std::vector<std::size_t> MaskToCols(std::uint32_t mask) {
  std::vector<std::size_t> cols;
  for (std::size_t j = 0; mask != 0; ++j, mask >>= 1) {
    if (mask & 1u) cols.push_back(j);
  }
  return cols;
}

struct BruteForceResult {
  double goal = -1.0;
  std::vector<std::vector<std::size_t>> maximizers;  // all optimal sets
};

// Every M-subset via bitmasks (N <= 20).
inline BruteForceResult BruteForceBest(const ScoreMatrix& k, std::size_t m) {
  BruteForceResult out;
  const std::uint32_t limit = 1u << k.cols();
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) != m) continue;
    const auto cols = MaskToCols(mask);
    const double g = NaiveGoal(k, cols);
    if (g > out.goal) {
      out.goal = g;
      out.maximizers = {cols};
    } else if (g == out.goal) {
      out.maximizers.push_back(cols);
    }
  }
  return out;
}

// Small nonnegative integers: every sum and difference is exact in double.
inline ScoreMatrix RandomIntMatrix(std::size_t w, std::size_t n,
                                   std::mt19937& rng, int max_value = 9) {
  std::uniform_int_distribution<int> dist(0, max_value);
  std::vector<double> v(w * n);
  for (double& x : v) x = dist(rng);
  return ScoreMatrix(w, n, std::move(v));
}

inline ScoreMatrix RandomRealMatrix(std::size_t w, std::size_t n,
                                    std::mt19937& rng) {
  std::exponential_distribution<double> dist(1.0);
  std::vector<double> v(w * n);
  for (double& x : v) x = dist(rng);
  return ScoreMatrix(w, n, std::move(v));
}

}  // namespace adselect::testing

#endif  // ADSELECT_TESTS_TEST_UTIL_H_
