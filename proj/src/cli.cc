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

#include "adselect/cli.h"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "adselect/errors.h"
#include "adselect/oracle.h"
#include "adselect/power.h"
#include "adselect/score_matrix.h"
#include "adselect/sim.h"
#include "fmt/format.h"
#include "fmt/ranges.h"
#include "json.hpp"

namespace adselect {
namespace {

// Flags shared by several subcommands. Unset optionals mean "not given on
// the command line".
struct Flags {
  std::string matrix_path;
  std::string preset;
  std::string config_path;
  std::optional<std::size_t> rows, cols, select, remove, branches, power;
  std::optional<std::size_t> trajectories, repeats, draws;
  std::optional<std::uint64_t> seed;
  std::size_t workers = 1;
  std::string output;
  std::string format;
};

std::uint64_t ResolveSeed(const std::optional<std::uint64_t>& seed) {
  if (seed) return *seed;
  std::random_device rd;
  return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

std::optional<std::size_t> RoundsFromFlag(std::size_t power) {
  return power == 0 ? std::nullopt : std::optional<std::size_t>(power);
}

std::string RoundsLabel(const std::optional<std::size_t>& rounds) {
  return rounds ? std::to_string(*rounds) : std::string("unbounded");
}

// Writes to --output when given, otherwise to `out`.
void Emit(const Flags& flags, const std::string& text, std::ostream& out) {
  if (flags.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(flags.output);
  if (!file) {
    throw std::runtime_error(
        fmt::format("cannot open output file {}", flags.output));
  }
  file << text;
}

int Solve(const Flags& flags, std::ostream& out) {
  const ScoreMatrix matrix = LoadMatrixCsv(flags.matrix_path);
  const std::size_t m = *flags.select;
  PowerParams params;
  params.remove = flags.remove.value_or(1);
  params.branches = flags.branches;
  params.max_rounds = RoundsFromFlag(flags.power.value_or(2));
  const std::uint64_t seed = ResolveSeed(flags.seed);
  const RefinementResult result = GreedyPower(matrix, m, params, seed);

  std::string text;
  if (flags.format == "json") {
    nlohmann::json j = {
        {"selected", result.final.Sorted()},
        {"baseline_selected", result.baseline.Sorted()},
        {"baseline_goal", result.baseline_goal},
        {"final_goal", result.final_goal},
        {"matched", result.matched},
        {"improvement_ratio", result.improvement_ratio},
        {"iterations_run", result.iterations_run},
        {"remove", params.remove},
        {"branches", params.BranchesFor(m)},
        {"power", params.max_rounds.value_or(0)},
        {"seed", seed},
    };
    text = j.dump(2) + "\n";
  } else {
    text = fmt::format(
        "selected: {}\nbaseline_goal: {}\nfinal_goal: {}\nmatched: {}\n"
        "improvement_ratio: {}\niterations_run: {}\nremove: {}\nbranches: {}\n"
        "power: {}\nseed: {}\n",
        fmt::join(result.final.Sorted(), ","), result.baseline_goal,
        result.final_goal, result.matched, result.improvement_ratio,
        result.iterations_run, params.remove, params.BranchesFor(m),
        RoundsLabel(params.max_rounds), seed);
  }
  Emit(flags, text, out);
  return 0;
}

ExperimentConfig ResolveExperiment(const Flags& flags) {
  const bool has_dims = flags.rows || flags.cols || flags.select;
  if (!flags.preset.empty() && has_dims) {
    throw CLI::ValidationError(
        "--preset", "conflicts with --rows/--cols/--select");
  }
  if (!flags.preset.empty() && !flags.config_path.empty()) {
    throw CLI::ValidationError("--preset", "conflicts with --config");
  }

  ExperimentConfig config;
  bool seed_known = false;
  if (!flags.preset.empty()) {
    auto preset = FindPreset(flags.preset);
    if (!preset) {
      throw CLI::ValidationError(
          "--preset", fmt::format("unknown preset '{}'; known: {}",
                                  flags.preset,
                                  fmt::join(PresetNames(), ", ")));
    }
    config = *preset;
  } else if (!flags.config_path.empty()) {
    std::ifstream in(flags.config_path);
    if (!in) {
      throw std::runtime_error(
          fmt::format("cannot open config file {}", flags.config_path));
    }
    nlohmann::json j = nlohmann::json::parse(in);
    // A saved JSON report can be fed back as-is.
    if (j.contains("config")) j = j.at("config");
    MergeConfigJson(j, config);
    seed_known = j.contains("seed");
  } else {
    if (!(flags.rows && flags.cols && flags.select)) {
      throw CLI::ValidationError(
          "simulate", "needs --preset, --config, or all of --rows/--cols/--select");
    }
    config.preset.reset();
  }

  if (flags.rows) config.rows = *flags.rows;
  if (flags.cols) config.cols = *flags.cols;
  if (flags.select) config.capacity = *flags.select;
  if (flags.remove) config.params.remove = *flags.remove;
  if (flags.branches) config.params.branches = *flags.branches;
  if (flags.power) config.params.max_rounds = RoundsFromFlag(*flags.power);
  if (flags.trajectories) config.trajectories = *flags.trajectories;
  if (flags.repeats) config.repeats = *flags.repeats;
  if (flags.seed || !seed_known) config.base_seed = ResolveSeed(flags.seed);
  return config;
}

int Simulate(const Flags& flags, std::ostream& out, std::ostream& err) {
  const ExperimentConfig config = ResolveExperiment(flags);
  ValidateConfig(config);
  err << "resolved config: " << ConfigToJson(config).dump() << "\n";
  const ExperimentReport report = RunExperiment(config, flags.workers);
  std::string text;
  if (flags.format == "json") {
    text = ReportToJson(report).dump(2) + "\n";
  } else {
    std::ostringstream csv;
    WriteReportCsv(report, csv);
    text = csv.str();
  }
  Emit(flags, text, out);
  return 0;
}

int OracleCheck(const Flags& flags, std::ostream& out) {
  const std::size_t m = *flags.select;
  PowerParams params;
  params.remove = flags.remove.value_or(std::max<std::size_t>(1, m - 1));
  params.branches =
      flags.branches.value_or(static_cast<std::size_t>(std::min<std::uint64_t>(
          Binomial(m, params.remove), 1'000'000)));
  params.max_rounds = RoundsFromFlag(flags.power.value_or(0));
  const std::size_t trials = flags.trajectories.value_or(200);
  const std::uint64_t seed = ResolveSeed(flags.seed);
  const OptimalityStats stats = CompareWithOracle(
      *flags.rows, *flags.cols, m, trials, seed, params);

  std::string text;
  if (flags.format == "json") {
    nlohmann::json j = {
        {"instances", stats.instances},
        {"greedy_optimality_rate", stats.greedy_rate()},
        {"power_optimality_rate", stats.power_rate()},
        {"power_improved", stats.power_improved},
        {"mean_exact_goal", stats.mean_exact_goal},
        {"mean_greedy_goal", stats.mean_greedy_goal},
        {"mean_power_goal", stats.mean_power_goal},
        {"chain_violated", stats.chain_violated},
        {"rows", *flags.rows},
        {"cols", *flags.cols},
        {"select", m},
        {"remove", params.remove},
        {"branches", *params.branches},
        {"power", params.max_rounds.value_or(0)},
        {"seed", seed},
    };
    text = j.dump(2) + "\n";
  } else {
    text = fmt::format(
        "instances: {}\ngreedy_optimality_rate: {}\npower_optimality_rate: {}\n"
        "power_improved: {}\nmean_exact_goal: {}\nmean_greedy_goal: {}\n"
        "mean_power_goal: {}\nchain_violated: {}\nparams: W={} N={} M={} r={} "
        "f={} n={}\nseed: {}\n",
        stats.instances, stats.greedy_rate(), stats.power_rate(),
        stats.power_improved, stats.mean_exact_goal, stats.mean_greedy_goal,
        stats.mean_power_goal, stats.chain_violated, *flags.rows, *flags.cols,
        m, params.remove, *params.branches, RoundsLabel(params.max_rounds),
        seed);
  }
  Emit(flags, text, out);
  return stats.chain_violated ? 1 : 0;
}

int SplitProb(const Flags& flags, std::ostream& out) {
  const std::size_t m = *flags.select;
  const std::size_t r = *flags.remove;
  const double p = SplitProbability(m, r);
  std::string text = fmt::format("split_probability: {}\n", p);
  const std::size_t draws = flags.draws.value_or(0);
  if (draws > 0) {
    const std::uint64_t seed = ResolveSeed(flags.seed);
    Rng rng = MakeRng(seed);
    const SplitEstimate est = EstimateSplitProbability(m, r, draws, rng);
    text += fmt::format(
        "empirical: {}\nconditioned_draws: {}\nstandard_error: {}\nseed: {}\n",
        est.frequency(), est.conditioned, est.StandardError(p), seed);
  }
  Emit(flags, text, out);
  return 0;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Ad creative selection: greedy, Greedy-Power and benchmarks",
               "adselect"};
  app.require_subcommand(1);
  Flags flags;

  auto add_output = [&](CLI::App* sub, const std::string& default_format,
                        std::vector<std::string> formats) {
    sub->add_option("--output", flags.output, "Write the report to PATH");
    flags.format = default_format;
    sub->add_option("--format", flags.format, "Report format")
        ->check(CLI::IsMember(std::move(formats)));
  };

  CLI::App* solve = app.add_subcommand("solve", "Solve one matrix file");
  solve->add_option("--matrix", flags.matrix_path, "Headerless CSV matrix")
      ->required();
  solve->add_option("--select", flags.select, "Creatives to select (M)")
      ->required();
  solve->add_option("--remove", flags.remove, "Creatives removed (r), default 1");
  solve->add_option("--branches", flags.branches,
                    "Removal subsets per round (f), default M");
  solve->add_option("--power", flags.power,
                    "Greedy rounds (n) incl. baseline, 0 = unbounded; "
                    "default 2");
  solve->add_option("--seed", flags.seed, "Random seed");
  add_output(solve, "text", {"text", "json"});

  CLI::App* simulate =
      app.add_subcommand("simulate", "Run a Monte Carlo experiment");
  simulate->add_option("--preset", flags.preset,
                       fmt::format("One of: {}", fmt::join(PresetNames(), ", ")));
  simulate->add_option("--config", flags.config_path,
                       "JSON config or saved JSON report; flags override it");
  simulate->add_option("--rows", flags.rows, "Keywords (W)");
  simulate->add_option("--cols", flags.cols, "Creatives (N)");
  simulate->add_option("--select", flags.select, "Creatives to select (M)");
  simulate->add_option("--remove", flags.remove, "Creatives removed (r)");
  simulate->add_option("--branches", flags.branches, "Removal subsets (f)");
  simulate->add_option("--power", flags.power, "Greedy rounds (n), 0 = unbounded");
  simulate->add_option("--trajectories", flags.trajectories,
                       "Trajectories per repeat (T)");
  simulate->add_option("--repeats", flags.repeats, "Repeats (R)");
  simulate->add_option("--seed", flags.seed, "Base seed");
  simulate->add_option("--workers", flags.workers, "Worker threads")
      ->check(CLI::PositiveNumber);
  add_output(simulate, "csv", {"csv", "json"});

  CLI::App* oracle =
      app.add_subcommand("oracle-check", "Compare greedy and Greedy-Power "
                                         "against exhaustive search");
  oracle->add_option("--rows", flags.rows, "Keywords (W)")->required();
  oracle->add_option("--cols", flags.cols, "Creatives (N)")->required();
  oracle->add_option("--select", flags.select, "Creatives to select (M)")
      ->required();
  oracle->add_option("--trajectories", flags.trajectories,
                     "Random instances, default 200");
  oracle->add_option("--remove", flags.remove, "Creatives removed, default M-1");
  oracle->add_option("--branches", flags.branches,
                     "Removal subsets, default C(M, r)");
  oracle->add_option("--power", flags.power,
                     "Greedy rounds, default 0 = unbounded");
  oracle->add_option("--seed", flags.seed, "Random seed");
  add_output(oracle, "text", {"text", "json"});

  CLI::App* split = app.add_subcommand(
      "split-prob", "Probability a pair is separated by an r-removal");
  split->add_option("--select", flags.select, "Selection size (M)")
      ->required();
  split->add_option("--remove", flags.remove, "Creatives removed (r)")
      ->required();
  split->add_option("--draws", flags.draws,
                    "Monte Carlo draws to check the closed form against");
  split->add_option("--seed", flags.seed, "Random seed");
  split->add_option("--output", flags.output, "Write the result to PATH");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
    if (app.got_subcommand(solve)) return Solve(flags, out);
    if (app.got_subcommand(simulate)) return Simulate(flags, out, err);
    if (app.got_subcommand(oracle)) return OracleCheck(flags, out);
    return SplitProb(flags, out);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace adselect
