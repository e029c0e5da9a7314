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

#include "adselect/sim.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <mutex>
#include <random>
#include <thread>
#include <utility>

#include "adselect/errors.h"
#include "fmt/format.h"

namespace adselect {

ScoreMatrix GenerateHalfNormalMatrix(std::size_t rows, std::size_t cols,
                                     Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<double> values(rows * cols);
  for (double& v : values) v = std::abs(normal(rng));
  return ScoreMatrix(rows, cols, std::move(values));
}

void ValidateConfig(const ExperimentConfig& config) {
  if (config.rows == 0 || config.cols == 0) {
    throw DomainError(fmt::format("matrix dimensions must be positive, got {}x{}",
                                  config.rows, config.cols));
  }
  if (config.capacity > config.cols) {
    throw InfeasibleError(fmt::format("cannot select {} creatives out of {}",
                                      config.capacity, config.cols));
  }
  if (config.trajectories == 0) throw DomainError("trajectories must be >= 1");
  if (config.repeats == 0) throw DomainError("repeats must be >= 1");
  if (config.distribution != kHalfNormal) {
    throw DomainError(fmt::format("unsupported score distribution '{}'",
                                  config.distribution));
  }
  ValidatePowerParams(config.params, config.capacity);
}

namespace {

struct PresetSpec {
  std::string_view name;
  std::size_t rows, cols, capacity, remove, branches;
};

// Reference configurations; all run G^2 with T = 500 and 3 repeats.
constexpr PresetSpec kPresets[] = {
    {"base-r1", 30, 300, 6, 1, 6},   {"base-r2", 30, 300, 6, 2, 6},
    {"base-r3", 30, 300, 6, 3, 6},   {"f2-r3", 30, 300, 6, 3, 12},
    {"f3-r3", 30, 300, 6, 3, 18},    {"m10-r1", 30, 300, 10, 1, 10},
    {"m10-r3", 30, 300, 10, 3, 10},  {"k100-r1", 100, 300, 6, 1, 6},
    {"n1000-r1", 30, 1000, 6, 1, 6},
};

}  // namespace

std::optional<ExperimentConfig> FindPreset(std::string_view name) {
  for (const auto& p : kPresets) {
    if (p.name != name) continue;
    ExperimentConfig config;
    config.preset = std::string(p.name);
    config.rows = p.rows;
    config.cols = p.cols;
    config.capacity = p.capacity;
    config.params.remove = p.remove;
    config.params.branches = p.branches;
    config.params.max_rounds = 2;
    return config;
  }
  return std::nullopt;
}

std::vector<std::string> PresetNames() {
  std::vector<std::string> names;
  for (const auto& p : kPresets) names.emplace_back(p.name);
  return names;
}

RefinementResult RunTrajectory(const ExperimentConfig& config,
                               std::size_t repeat, std::size_t index) {
  ValidateConfig(config);
  const std::uint64_t seed = DeriveSeed(config.base_seed, {repeat, index});
  Rng matrix_rng = MakeRng(DeriveSeed(seed, {0}));
  const ScoreMatrix matrix =
      GenerateHalfNormalMatrix(config.rows, config.cols, matrix_rng);
  return GreedyPower(matrix, config.capacity, config.params,
                     DeriveSeed(seed, {1}));
}

namespace {

// Runs fn(i) for i in [0, count) on up to `workers` threads; the first
// exception thrown by any job is rethrown on the caller.
template <typename Fn>
void ParallelFor(std::size_t count, std::size_t workers, Fn fn) {
  workers = std::max<std::size_t>(1, std::min(workers, count));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        while (true) {
          const std::size_t i = next.fetch_add(1);
          if (i >= count) return;
          try {
            fn(i);
          } catch (...) {
            std::lock_guard<std::mutex> lock(error_mu);
            if (!error) error = std::current_exception();
            next.store(count);
            return;
          }
        }
      });
    }
  }
  if (error) std::rethrow_exception(error);
}

RepeatRow Aggregate(std::size_t repeat,
                    const std::vector<RefinementResult>& results) {
  RepeatRow row;
  row.repeat = repeat + 1;
  row.trajectories = results.size();
  double sum_improvement = 0.0;
  double sum_baseline = 0.0;
  double sum_final = 0.0;
  for (const RefinementResult& r : results) {
    const double pct =
        r.baseline_goal > 0.0
            ? 100.0 * (r.final_goal - r.baseline_goal) / r.baseline_goal
            : 0.0;
    if (r.matched) {
      ++row.matched_count;
    } else {
      sum_improvement += pct;
    }
    if (r.final_goal < r.baseline_goal) ++row.worse_count;
    row.max_improvement_pct = std::max(row.max_improvement_pct, pct);
    sum_baseline += r.baseline_goal;
    sum_final += r.final_goal;
  }
  const double n = static_cast<double>(results.size());
  const std::size_t escaped = results.size() - row.matched_count;
  row.matched_pct = 100.0 * static_cast<double>(row.matched_count) / n;
  row.improvement_pct =
      escaped > 0 ? sum_improvement / static_cast<double>(escaped) : 0.0;
  row.improvement_pct_unconditional = sum_improvement / n;
  row.mean_baseline_goal = sum_baseline / n;
  row.mean_final_goal = sum_final / n;
  return row;
}

}  // namespace

ExperimentReport RunExperiment(const ExperimentConfig& config,
                               std::size_t workers) {
  ValidateConfig(config);
  const auto start = std::chrono::steady_clock::now();
  ExperimentReport report;
  report.config = config;
  report.workers = std::max<std::size_t>(1, workers);
  std::vector<RefinementResult> results(config.trajectories);
  for (std::size_t repeat = 0; repeat < config.repeats; ++repeat) {
    ParallelFor(config.trajectories, report.workers, [&](std::size_t t) {
      results[t] = RunTrajectory(config, repeat, t);
    });
    report.rows.push_back(Aggregate(repeat, results));
  }
  report.runtime_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return report;
}

double ExperimentReport::MeanMatchedPct() const {
  if (rows.empty()) return 0.0;
  double sum = 0.0;
  for (const auto& r : rows) sum += r.matched_pct;
  return sum / static_cast<double>(rows.size());
}

double ExperimentReport::MeanImprovementPct() const {
  if (rows.empty()) return 0.0;
  double sum = 0.0;
  for (const auto& r : rows) sum += r.improvement_pct;
  return sum / static_cast<double>(rows.size());
}

std::size_t ExperimentReport::TotalWorse() const {
  std::size_t total = 0;
  for (const auto& r : rows) total += r.worse_count;
  return total;
}

std::size_t ExperimentReport::TotalTrajectories() const {
  std::size_t total = 0;
  for (const auto& r : rows) total += r.trajectories;
  return total;
}

nlohmann::json ConfigToJson(const ExperimentConfig& config) {
  nlohmann::json j;
  j["preset"] = config.preset ? nlohmann::json(*config.preset) : nullptr;
  j["rows"] = config.rows;
  j["cols"] = config.cols;
  j["select"] = config.capacity;
  j["remove"] = config.params.remove;
  j["branches"] = config.params.BranchesFor(config.capacity);
  j["power"] = config.params.max_rounds.value_or(0);
  j["trajectories"] = config.trajectories;
  j["repeats"] = config.repeats;
  j["seed"] = config.base_seed;
  j["distribution"] = config.distribution;
  return j;
}

void MergeConfigJson(const nlohmann::json& j, ExperimentConfig& config) {
  if (!j.is_object()) throw DomainError("config must be a JSON object");
  auto count = [&](const char* key, std::size_t& field) {
    if (j.contains(key)) field = j.at(key).get<std::size_t>();
  };
  if (j.contains("preset")) {
    config.preset = j.at("preset").is_null()
                        ? std::nullopt
                        : std::optional(j.at("preset").get<std::string>());
  }
  count("rows", config.rows);
  count("cols", config.cols);
  count("select", config.capacity);
  count("remove", config.params.remove);
  if (j.contains("branches")) {
    config.params.branches = j.at("branches").get<std::size_t>();
  }
  if (j.contains("power")) {
    const auto n = j.at("power").get<std::size_t>();
    config.params.max_rounds =
        n == 0 ? std::nullopt : std::optional<std::size_t>(n);
  }
  count("trajectories", config.trajectories);
  count("repeats", config.repeats);
  if (j.contains("seed")) config.base_seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("distribution")) {
    config.distribution = j.at("distribution").get<std::string>();
  }
}

void WriteReportCsv(const ExperimentReport& report, std::ostream& out) {
  out << "repeat,matched_pct,improvement_pct,improvement_pct_unconditional,"
         "mean_baseline_goal,mean_final_goal\n";
  for (const RepeatRow& r : report.rows) {
    out << fmt::format("{},{:.2f},{:.4f},{:.4f},{:.6f},{:.6f}\n", r.repeat,
                       r.matched_pct, r.improvement_pct,
                       r.improvement_pct_unconditional, r.mean_baseline_goal,
                       r.mean_final_goal);
  }
}

nlohmann::json ReportToJson(const ExperimentReport& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (const RepeatRow& r : report.rows) {
    rows.push_back({
        {"repeat", r.repeat},
        {"trajectories", r.trajectories},
        {"matched_count", r.matched_count},
        {"worse_count", r.worse_count},
        {"matched_pct", r.matched_pct},
        {"improvement_pct", r.improvement_pct},
        {"improvement_pct_unconditional", r.improvement_pct_unconditional},
        {"max_improvement_pct", r.max_improvement_pct},
        {"mean_baseline_goal", r.mean_baseline_goal},
        {"mean_final_goal", r.mean_final_goal},
    });
  }
  return {
      {"config", ConfigToJson(report.config)},
      {"rows", std::move(rows)},
      {"timing",
       {{"runtime_seconds", report.runtime_seconds},
        {"workers", report.workers},
        {"note", "timing fields are not reproducible"}}},
  };
}

}  // namespace adselect
