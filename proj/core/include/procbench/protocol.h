// Copyright 2026 The procbench Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#ifndef PROCBENCH_PROTOCOL_H_
#define PROCBENCH_PROTOCOL_H_

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "procbench/agents.h"
#include "procbench/vecenv.h"

namespace procbench {

// Number of training levels; nullopt is the unbounded regime.
using TrainSize = std::optional<std::uint64_t>;

std::string train_size_label(const TrainSize& size);  // "100", "inf"

// PPO settings published with the benchmark, for external trainers.
struct TrainingPreset {
  double gamma = 0.999;
  double lambda = 0.95;
  int timesteps_per_rollout = 256;
  int epochs_per_rollout = 3;
  int minibatches_per_epoch = 8;
  double entropy_bonus = 0.01;
  double learning_rate = 5e-4;
  int envs_per_worker = 32;
  int workers = 8;
  bool use_memory = false;
};

TrainingPreset training_preset(Game game);
std::string training_preset_json(Game game);

struct ProtocolConfig {
  Game game = Game::kCoinRun;
  std::vector<TrainSize> train_sizes;
  std::uint64_t test_size = 10'000;
  int episodes_per_eval = 10'000;
  int runs = 1;
  std::uint32_t master_seed = 0;

  void validate() const;
};

// Train-set sizes, run counts and defaults of the published tables.
ProtocolConfig preset_protocol(Game game);

struct LevelSplit {
  LevelSet train = LevelSet::unbounded();
  LevelSet test = LevelSet::unbounded();
};

// Train: train_size distinct seeds from a per-run stream. Test: test_size
// distinct seeds, rejecting any train seed. An unbounded train size gives the
// whole seed space minus the test seeds. Throws ConfigError when the two
// cannot fit in the 32-bit seed space.
LevelSplit build_level_sets(const ProtocolConfig& config, const TrainSize& train_size,
                            int run_index);

struct EvalResult {
  int episodes = 0;
  double mean_return = 0.0;
  double std_return = 0.0;  // across episodes
  double success_rate_percent = 0.0;
  double success_std_percent = 0.0;  // across episodes
  double mean_episode_length = 0.0;
  bool privileged = false;
};

// Zero-shot evaluation: every episode on a freshly sampled level, with no
// cutout and no epsilon-greedy. Frames are rendered only for agents that read
// them. Agent exceptions are rethrown with episode
// context.
EvalResult evaluate(Agent& agent, Game game, const LevelSet& level_set,
                    int episodes, std::uint32_t master_seed);

// Success percentage for CoinRun and mazes, mean return for Platforms.
double headline_metric(Game game, const EvalResult& result);
double headline_episode_std(Game game, const EvalResult& result);

struct RunResult {
  TrainSize size;
  int run = 0;
  EvalResult train;
  EvalResult test;
};

struct SplitRow {
  TrainSize size;
  std::string run;    // run index, or "all" for the across-run summary
  std::string split;  // "train" or "test"
  double mean = 0.0;
  double std = 0.0;
  double success_pct = 0.0;
  std::int64_t episodes = 0;

  friend bool operator==(const SplitRow&, const SplitRow&) = default;
};

struct GapRow {
  TrainSize size;
  double train_mean = 0.0;
  double train_std = 0.0;  // across runs
  double test_mean = 0.0;
  double test_std = 0.0;
  double success_rate_percent = 0.0;  // test split
  std::int64_t episodes = 0;
  double gap = 0.0;

  friend bool operator==(const GapRow&, const GapRow&) = default;
};

struct EvalReport {
  Game game = Game::kCoinRun;
  std::vector<SplitRow> rows;
  std::vector<GapRow> gaps;

  friend bool operator==(const EvalReport&, const EvalReport&) = default;
};

// Aggregates runs per train size. Throws InvalidArgument if any result came
// from a privileged agent.
EvalReport gap_report(Game game, const std::vector<RunResult>& results);

// Single-split report of one evaluation (split "eval", run "0"); privileged
// agents are allowed. size is the level-set size, "inf" when unbounded.
EvalReport eval_report(Game game, const LevelSet& level_set, const EvalResult& result);

// Rebuilds the gap rows from the train/test summary rows.
std::vector<GapRow> summarize(const std::vector<SplitRow>& rows);

inline constexpr std::string_view kReportCsvHeader =
    "game,size,run,split,mean,std,success_pct,episodes";

std::string report_csv(const EvalReport& report);
std::string report_json(const EvalReport& report);
// Throws ParseError.
EvalReport report_from_csv(std::string_view csv);
EvalReport report_from_json(std::string_view json);

// Plain-text table "# Levels | Train | Test | Gap" with mean +- std cells.
std::string format_table(const EvalReport& report);
// Two decimals, trailing zeros removed: 95.70 -> "95.7".
std::string format_value(double v);

using AgentFactory = std::function<std::unique_ptr<Agent>(int run_index)>;

// Full protocol: for each size and run build the split, evaluate on both
// halves, then aggregate.
EvalReport run_protocol(const ProtocolConfig& config, const AgentFactory& factory);

}  // namespace procbench

#endif  // PROCBENCH_PROTOCOL_H_
