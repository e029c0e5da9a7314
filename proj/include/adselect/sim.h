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
// Monte Carlo harness
//
// A configuration is run as R repeats of T trajectories. Each trajectory
// draws a fresh half-normal W x N matrix and runs Greedy-Power on it. The
// per-repeat rows report how often refinement matched the greedy baseline
// and how much it gained when it did not.
//
// Seeding: trajectory (repeat k, index t) uses
//   s = DeriveSeed(base_seed, {k, t})
//   matrix  <- DeriveSeed(s, {0})
//   refine  <- DeriveSeed(s, {1})
// so any trajectory can be replayed alone and the report does not depend on
// how trajectories are spread over workers.

#ifndef ADSELECT_SIM_H_
#define ADSELECT_SIM_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "adselect/power.h"
#include "adselect/random.h"
#include "adselect/score_matrix.h"
#include "json.hpp"

namespace adselect {

inline constexpr std::string_view kHalfNormal = "abs-normal";

// Entries are |z| with z ~ N(0, 1), drawn row-major from `rng`.
ScoreMatrix GenerateHalfNormalMatrix(std::size_t rows, std::size_t cols,
                                     Rng& rng);

struct ExperimentConfig {
  std::optional<std::string> preset;
  std::size_t rows = 30;
  std::size_t cols = 300;
  std::size_t capacity = 6;
  PowerParams params;
  std::size_t trajectories = 500;
  std::size_t repeats = 3;
  std::uint64_t base_seed = 42;
  std::string distribution = std::string(kHalfNormal);
};

// Throws DomainError/InfeasibleError on an unusable configuration.
void ValidateConfig(const ExperimentConfig& config);

// Reference configurations: base-r1, base-r2, base-r3,
// f2-r3, f3-r3, m10-r1, m10-r3, k100-r1, n1000-r1.
std::optional<ExperimentConfig> FindPreset(std::string_view name);
std::vector<std::string> PresetNames();

RefinementResult RunTrajectory(const ExperimentConfig& config,
                               std::size_t repeat, std::size_t index);

struct RepeatRow {
  std::size_t repeat = 0;  // 1-based
  std::size_t trajectories = 0;
  std::size_t matched_count = 0;
  // Trajectories whose refined goal fell below the baseline. Always zero
  // unless the never-worse guarantee is broken.
  std::size_t worse_count = 0;
  double matched_pct = 0.0;
  // Mean of 100 * (final - baseline) / baseline over unmatched trajectories.
  double improvement_pct = 0.0;
  // Same mean over all trajectories.
  double improvement_pct_unconditional = 0.0;
  double mean_baseline_goal = 0.0;
  double mean_final_goal = 0.0;
  double max_improvement_pct = 0.0;
};

struct ExperimentReport {
  ExperimentConfig config;
  std::vector<RepeatRow> rows;
  double runtime_seconds = 0.0;
  std::size_t workers = 1;

  double MeanMatchedPct() const;
  double MeanImprovementPct() const;
  std::size_t TotalWorse() const;
  std::size_t TotalTrajectories() const;
};

// Runs every repeat; trajectories within a repeat are spread over `workers`
// threads. Output is identical for any worker count.
ExperimentReport RunExperiment(const ExperimentConfig& config,
                               std::size_t workers = 1);

// Config <-> JSON. Keys mirror the command-line flags: preset, rows, cols,
// select, remove, branches, power (0 = unbounded), trajectories, repeats,
// seed, distribution. Missing keys keep the values already in `config`.
nlohmann::json ConfigToJson(const ExperimentConfig& config);
void MergeConfigJson(const nlohmann::json& j, ExperimentConfig& config);

// Header plus one line per repeat:
// repeat,matched_pct,improvement_pct,improvement_pct_unconditional,
// mean_baseline_goal,mean_final_goal
void WriteReportCsv(const ExperimentReport& report, std::ostream& out);

// {"config": ..., "rows": [...], "timing": {...}}. Only "timing" varies
// between identical runs.
nlohmann::json ReportToJson(const ExperimentReport& report);

}  // namespace adselect

#endif  // ADSELECT_SIM_H_
