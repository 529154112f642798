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


#include "procbench/agents.h"

#include <string>

#include <gtest/gtest.h>

#include "procbench/coinrun_gen.h"
#include "procbench/env.h"
#include "procbench/error.h"
#include "procbench/maze_gen.h"
#include "procbench/search_oracle.h"
#include "procbench/validate.h"

namespace procbench {
namespace {

// Plays one episode on a fixed level and returns the final episode record.
EpisodeInfo play(Agent& agent, Game game, LevelSeed seed) {
  EnvOptions options;
  options.render = agent.needs_observation();
  Env env(game, options);
  env.reset(seed);
  const EnvView view = env.view();
  agent.reset(view);
  while (!env.done()) {
    env.step(agent.act(env.observation(), agent.privileged() ? &view : nullptr));
  }
  return env.episode();
}

TEST(Agents, Factory) {
  EXPECT_EQ(make_agent("random", Game::kCoinRun, 1)->name(), "random");
  EXPECT_EQ(make_agent("noop", Game::kMazes, 1)->name(), "constant");
  EXPECT_TRUE(make_agent("bfs-oracle", Game::kMazes, 1)->privileged());
  EXPECT_TRUE(make_agent("scripted-runner", Game::kCoinRun, 1)->privileged());
  EXPECT_THROW(make_agent("bfs-oracle", Game::kCoinRun, 1), InvalidArgument);
  EXPECT_THROW(make_agent("scripted-runner", Game::kMazes, 1), InvalidArgument);
  EXPECT_THROW(make_agent("ppo", Game::kMazes, 1), InvalidArgument);
  EXPECT_FALSE(make_agent("random", Game::kMazes, 1)->privileged());
}

TEST(Agents, RandomAgentInRangeAndSeeded) {
  RandomAgent a(4, 9), b(4, 9);
  Observation obs;
  for (int i = 0; i < 1000; ++i) {
    const int x = a.act(obs.span(), nullptr);
    EXPECT_GE(x, 0);
    EXPECT_LT(x, 4);
    EXPECT_EQ(x, b.act(obs.span(), nullptr));
  }
}

TEST(Agents, ReplayAgentHoldsLastAction) {
  ReplayAgent agent({2, 5});
  Observation obs;
  EXPECT_EQ(agent.act(obs.span(), nullptr), 2);
  EXPECT_EQ(agent.act(obs.span(), nullptr), 5);
  EXPECT_EQ(agent.act(obs.span(), nullptr), 5);
  agent.reset(EnvView{});
  EXPECT_EQ(agent.act(obs.span(), nullptr), 2);
}

TEST(Agents, BfsOracleTakesTheShortestPath) {
  MazeBfsOracle oracle;
  for (LevelSeed s = 0; s < 300; ++s) {
    const MazeLevel m = generate_maze(s);
    const EpisodeInfo info = play(oracle, Game::kMazes, s);
    EXPECT_EQ(info.outcome, EpisodeOutcome::kSuccess) << "seed " << s;
    EXPECT_EQ(info.episode_steps, shortest_path_length(m, m.agent_start, m.goal()));
    EXPECT_EQ(info.episode_return, 10.0);
  }
}

TEST(Agents, ScriptedRunnerClearsEasyLevels) {
  CoinRunScriptedRunner runner;
  int easy = 0, wins = 0;
  for (LevelSeed s = 0; easy < 100; ++s) {
    if (sample_difficulty(s) != 1) continue;
    ++easy;
    wins += play(runner, Game::kCoinRun, s).outcome == EpisodeOutcome::kSuccess;
  }
  EXPECT_GE(wins, 95);
}

TEST(SearchOracle, CoinRunWitnessesReplay) {
  for (LevelSeed s = 0; s < 30; ++s) {
    const PlatformerLevel level = generate_coinrun(s);
    const SearchResult r = physics_search_oracle(level);
    ASSERT_TRUE(r.solved()) << "seed " << s;
    EXPECT_EQ(r.total_return, 10.0);
    const ReplayResult replay = replay_trace(level, r.trace);
    EXPECT_FALSE(replay.finished_early);
    EXPECT_EQ(replay.final_state, r.final_state);
    EXPECT_EQ(replay.total_return, 10.0);
    EXPECT_EQ(replay.final_state.outcome, physics::Outcome::kCoinAll);
    EXPECT_LE(r.trace.size(), 1000u);
  }
}

TEST(SearchOracle, ReplayFlagsTrailingActions) {
  const PlatformerLevel level = generate_coinrun(0);
  SearchResult r = physics_search_oracle(level);
  ASSERT_TRUE(r.solved());
  r.trace.push_back(physics::Action::kNoop);
  EXPECT_TRUE(replay_trace(level, r.trace).finished_early);
}

TEST(SearchOracle, PlatformsClearedWithFullReturn) {
  for (LevelSeed s = 0; s < 5; ++s) {
    const PlatformerLevel level = generate_platforms(s);
    const SearchResult r = physics_search_oracle(level);
    ASSERT_TRUE(r.solved()) << "seed " << s;
    const double expected = static_cast<double>(level.coin_positions.size()) + 9.0;
    EXPECT_EQ(r.total_return, expected);
    EXPECT_EQ(replay_trace(level, r.trace).total_return, expected);
  }
}

TEST(SearchOracle, EachPlatformsCoinReachable) {
  const PlatformerLevel level = generate_platforms(3);
  for (std::size_t i = 0; i < level.coin_positions.size(); ++i) {
    const SearchResult r = search_coin(level, i);
    ASSERT_TRUE(r.solved()) << "coin " << i;
    EXPECT_EQ(r.final_state.coins_remaining & (1ULL << i), 0u);
  }
}

TEST(SearchOracle, BudgetExhaustionIsInconclusive) {
  SearchOptions tiny;
  tiny.max_states = 10;
  const SearchResult r = physics_search_oracle(generate_coinrun(5), tiny);
  EXPECT_EQ(r.verdict, SearchVerdict::kInconclusive);
}

TEST(Validate, MazesPass) {
  const ValidationReport report = validate_levels(Game::kMazes, 0, 300, 2);
  EXPECT_TRUE(report.ok());
  EXPECT_EQ(report.check("tree").passed, 300);
  EXPECT_EQ(report.check("oracle_success").total, 300);
  const std::string text = format_validation(report);
  EXPECT_NE(text.find("check=tree passed=300/300"), std::string::npos) << text;
}

TEST(Validate, CoinRunPass) {
  const ValidationReport report = validate_levels(Game::kCoinRun, 100, 20);
  EXPECT_TRUE(report.ok());
  EXPECT_EQ(report.check("witness_replay").passed, 20);
  EXPECT_THROW(report.check("nope"), InvalidArgument);
}

}  // namespace
}  // namespace procbench
