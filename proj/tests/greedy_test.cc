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

#include <algorithm>
#include <cmath>
#include <random>

#include "adselect/errors.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace adselect {
namespace {

using testing::BruteForceBest;
using testing::TrapMatrix;

std::vector<CreativeIndex> Chosen(const GreedyResult& r) {
  std::vector<CreativeIndex> out;
  for (const auto& s : r.trace.steps) out.push_back(s.chosen);
  return out;
}

TEST(GreedySelectTest, TrapsOnTheThreeByThreeExample) {
  const GreedyResult r = GreedySelect(TrapMatrix(), 2);
  // Column sums 6, 8, 8: tie goes to 1; then gains 2 (col 0) vs 4 (col 2).
  EXPECT_EQ(Chosen(r), (std::vector<CreativeIndex>{1, 2}));
  EXPECT_EQ(r.trace.steps[0].gain, 8.0);
  EXPECT_EQ(r.trace.steps[1].gain, 4.0);
  EXPECT_EQ(r.goal, 12.0);
  EXPECT_EQ(BruteForceBest(TrapMatrix(), 2).goal, 14.0);
}

TEST(GreedySelectTest, FullCapacityTakesEverything) {
  const ScoreMatrix k = TrapMatrix();
  const GreedyResult r = GreedySelect(k, 3);
  EXPECT_EQ(r.selection.Sorted(), (std::vector<CreativeIndex>{0, 1, 2}));
  EXPECT_EQ(r.goal, k.RowMaxSum());
}

TEST(GreedySelectTest, WarmStart) {
  const GreedyResult r = GreedySelect(TrapMatrix(), 2, Selection{{2}, 1});
  EXPECT_EQ(r.selection.indices, (std::vector<CreativeIndex>{2, 0}));
  EXPECT_EQ(r.trace.steps.size(), 1);
  EXPECT_EQ(r.trace.steps[0].gain, 6.0);
  EXPECT_EQ(r.goal, 14.0);
}

TEST(GreedySelectTest, ZeroGainStepsStillFill) {
  const ScoreMatrix k = ScoreMatrix::FromRows({{0, 5, 0, 0}, {0, 5, 0, 0}});
  const GreedyResult r = GreedySelect(k, 3);
  EXPECT_EQ(r.selection.indices, (std::vector<CreativeIndex>{1, 0, 2}));
  EXPECT_EQ(r.goal, 10.0);
}

TEST(GreedySelectTest, Errors) {
  EXPECT_THROW(GreedySelect(TrapMatrix(), 4), InfeasibleError);
  EXPECT_THROW(GreedySelect(TrapMatrix(), 1, Selection{{0, 1}, 2}),
               InvalidSelectionError);
  EXPECT_THROW(GreedySelect(TrapMatrix(), 2, Selection{{7}, 1}),
               InvalidSelectionError);
  EXPECT_THROW(GreedySelect(TrapMatrix(), 2, Selection{{1, 1}, 2}),
               InvalidSelectionError);
}

TEST(GreedyProperty, FirstStepIsLargestColumnSum) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const ScoreMatrix k = testing::RandomIntMatrix(4, 6, rng, 3);
    std::size_t best = 0;
    for (std::size_t j = 1; j < k.cols(); ++j) {
      if (k.ColumnSum(j) > k.ColumnSum(best)) best = j;
    }
    EXPECT_EQ(GreedySelect(k, 1).selection.indices.front(), best);
  }
}

TEST(GreedyProperty, TraceShapeAndDeterminism) {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    const ScoreMatrix k = testing::RandomRealMatrix(7, 15, rng);
    const std::size_t m = 1 + rng() % 8;
    const GreedyResult a = GreedySelect(k, m, Selection{{3}, 1});
    const GreedyResult b = GreedySelect(k, m, Selection{{3}, 1});
    ASSERT_EQ(a.selection, b.selection);
    ASSERT_EQ(a.goal, b.goal);
    ASSERT_EQ(a.selection.size(), m);
    ASSERT_EQ(a.selection.indices.front(), 3u);
    auto sorted = a.selection.Sorted();
    ASSERT_EQ(std::adjacent_find(sorted.begin(), sorted.end()), sorted.end());
    double prev = 0.0;
    for (const auto& step : a.trace.steps) {
      ASSERT_GE(step.goal_after, prev);
      prev = step.goal_after;
    }
    // Never below the best single column.
    double best_single = 0.0;
    for (std::size_t j = 0; j < k.cols(); ++j) {
      best_single = std::max(best_single, k.ColumnSum(j));
    }
    ASSERT_GE(GreedySelect(k, m).goal, best_single);
  }
}

// Against exhaustive search: greedy never beats the optimum and stays
// within the (1 - 1/e) guarantee of monotone submodular maximization.
TEST(GreedyProperty, WithinApproximationBoundOfBruteForce) {
  std::mt19937 rng(2026);
  const double bound = 1.0 - 1.0 / std::exp(1.0);
  for (int trial = 0; trial < 250; ++trial) {
    const std::size_t w = 1 + rng() % 10;
    const std::size_t n = 1 + rng() % 12;
    const std::size_t m = 1 + rng() % std::min<std::size_t>(4, n);
    const ScoreMatrix k = testing::RandomRealMatrix(w, n, rng);
    const double exact = BruteForceBest(k, m).goal;
    const double greedy = GreedySelect(k, m).goal;
    ASSERT_LE(greedy, exact);
    ASSERT_GE(greedy, bound * exact);
  }
}

}  // namespace
}  // namespace adselect
