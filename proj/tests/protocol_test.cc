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


#include "procbench/protocol.h"

#include <memory>
#include <string>
#include <unordered_set>

#include <gtest/gtest.h>
#include <json.hpp>

#include "procbench/error.h"

namespace procbench {
namespace {

class ThrowingAgent final : public Agent {
 public:
  void reset(const EnvView&) override {}
  int act(ConstObsSpan, const EnvView*) override {
    if (++calls_ == 3) throw Error("boom");
    return 0;
  }
  std::string name() const override { return "thrower"; }
  bool needs_observation() const override { return false; }

 private:
  int calls_ = 0;
};

SplitRow all_row(TrainSize size, const char* split, double mean, double std) {
  return SplitRow{size, "all", split, mean, std, mean, 10000};
}

TEST(Protocol, PresetsFollowThePublishedGrids) {
  const ProtocolConfig coinrun = preset_protocol(Game::kCoinRun);
  EXPECT_EQ(coinrun.train_sizes,
            (std::vector<TrainSize>{100, 500, 1000, 2000, 4000, 8000, 12000, 16000,
                                    std::nullopt}));
  EXPECT_EQ(coinrun.runs, 5);
  EXPECT_EQ(coinrun.episodes_per_eval, 10000);
  EXPECT_EQ(preset_protocol(Game::kPlatforms).train_sizes.back(), std::nullopt);
  EXPECT_EQ(preset_protocol(Game::kMazes).train_sizes.front(), TrainSize{1000});
}

TEST(Protocol, TrainingPresetValues) {
  for (Game game : {Game::kCoinRun, Game::kPlatforms, Game::kMazes}) {
    const TrainingPreset p = training_preset(game);
    EXPECT_EQ(p.gamma, 0.999);
    EXPECT_EQ(p.lambda, 0.95);
    EXPECT_EQ(p.timesteps_per_rollout, 256);
    EXPECT_EQ(p.epochs_per_rollout, 3);
    EXPECT_EQ(p.minibatches_per_epoch, 8);
    EXPECT_EQ(p.entropy_bonus, 0.01);
    EXPECT_EQ(p.learning_rate, 5e-4);
    EXPECT_EQ(p.workers, 8);
    const auto j = nlohmann::json::parse(training_preset_json(game));
    EXPECT_EQ(j["gamma"].get<double>(), 0.999);
    EXPECT_EQ(j["learning_rate"].get<double>(), 5e-4);
  }
  EXPECT_EQ(training_preset(Game::kCoinRun).envs_per_worker, 32);
  EXPECT_EQ(training_preset(Game::kPlatforms).envs_per_worker, 96);
  EXPECT_EQ(training_preset(Game::kMazes).envs_per_worker, 32);
  EXPECT_FALSE(training_preset(Game::kCoinRun).use_memory);
  EXPECT_TRUE(training_preset(Game::kPlatforms).use_memory);
  EXPECT_TRUE(training_preset(Game::kMazes).use_memory);
}

TEST(Protocol, SplitsAreDisjointAndSized) {
  ProtocolConfig c = preset_protocol(Game::kCoinRun);
  c.test_size = 2000;
  for (const TrainSize& size : c.train_sizes) {
    const LevelSplit split = build_level_sets(c, size, 0);
    ASSERT_EQ(split.test.size(), 2000u);
    if (size) {
      ASSERT_EQ(split.train.size(), *size);
    } else {
      EXPECT_TRUE(split.train.is_unbounded());
      EXPECT_EQ(split.train.size(), (1ULL << 32) - 2000);
    }
    for (LevelSeed s : split.test.seeds()) ASSERT_FALSE(split.train.contains(s));
  }
}

TEST(Protocol, RunsDrawDifferentTrainSets) {
  const ProtocolConfig c = preset_protocol(Game::kCoinRun);
  const LevelSplit a = build_level_sets(c, 100, 0);
  const LevelSplit b = build_level_sets(c, 100, 1);
  EXPECT_NE(a.train.seeds(), b.train.seeds());
  EXPECT_EQ(build_level_sets(c, 100, 0).train, a.train);
  ProtocolConfig other = c;
  other.master_seed = 1;
  EXPECT_NE(build_level_sets(other, 100, 0).train.seeds(), a.train.seeds());
}

TEST(Protocol, SeedSpaceOverflow) {
  ProtocolConfig c = preset_protocol(Game::kCoinRun);
  c.test_size = (1ULL << 32);
  EXPECT_THROW(build_level_sets(c, 1, 0), ConfigError);
}

TEST(Protocol, ConfigValidation) {
  ProtocolConfig c;
  EXPECT_THROW(c.validate(), ConfigError);
  c.train_sizes = {0};
  EXPECT_THROW(c.validate(), ConfigError);
  c.train_sizes = {10};
  c.runs = 0;
  EXPECT_THROW(c.validate(), ConfigError);
}

TEST(Protocol, EvaluateIsDeterministicAndTrainEqualsTestGivesZeroGap) {
  const LevelSet set = LevelSet::parse("range:100:50");
  RandomAgent a(7, 3), b(7, 3);
  const EvalResult train = evaluate(a, Game::kCoinRun, set, 200, 4);
  const EvalResult test = evaluate(b, Game::kCoinRun, set, 200, 4);
  EXPECT_EQ(train.mean_return, test.mean_return);
  EXPECT_EQ(train.mean_episode_length, test.mean_episode_length);
  const EvalReport report = gap_report(Game::kCoinRun, {RunResult{50, 0, train, test}});
  ASSERT_EQ(report.gaps.size(), 1u);
  EXPECT_EQ(report.gaps[0].gap, 0.0);
}

TEST(Protocol, OracleSolvesEveryMaze) {
  MazeBfsOracle oracle;
  const EvalResult r = evaluate(oracle, Game::kMazes, LevelSet::unbounded(), 300, 0);
  EXPECT_EQ(r.success_rate_percent, 100.0);
  EXPECT_EQ(r.success_std_percent, 0.0);
  EXPECT_EQ(r.mean_return, 10.0);
  EXPECT_TRUE(r.privileged);
}

TEST(Protocol, NoopNeverWinsCoinRun) {
  ConstantAgent noop(0);
  const EvalResult r = evaluate(noop, Game::kCoinRun, LevelSet::unbounded(), 50, 0);
  EXPECT_EQ(r.success_rate_percent, 0.0);
  EXPECT_EQ(r.mean_episode_length, 1000.0);
}

TEST(Protocol, AgentFailuresCarryContext) {
  ThrowingAgent agent;
  try {
    evaluate(agent, Game::kMazes, LevelSet::unbounded(), 5, 0);
    FAIL() << "expected an exception";
  } catch (const Error& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("agent 'thrower'"), std::string::npos) << msg;
    EXPECT_NE(msg.find("episode 0"), std::string::npos) << msg;
    EXPECT_NE(msg.find("boom"), std::string::npos) << msg;
  }
}

TEST(Protocol, PrivilegedAgentsRefused) {
  EvalResult priv;
  priv.privileged = true;
  EXPECT_THROW(gap_report(Game::kMazes, {RunResult{100, 0, priv, EvalResult{}}}),
               InvalidArgument);
  EXPECT_NO_THROW(eval_report(Game::kMazes, LevelSet::unbounded(), priv));
}

TEST(Protocol, StdAcrossRunsIsSampleStd) {
  EvalResult r1, r2, r3;
  r1.success_rate_percent = 90;
  r2.success_rate_percent = 92;
  r3.success_rate_percent = 94;
  const EvalReport report = gap_report(
      Game::kCoinRun, {RunResult{100, 0, r1, r1}, RunResult{100, 1, r2, r1}, RunResult{100, 2, r3, r1}});
  ASSERT_EQ(report.gaps.size(), 1u);
  EXPECT_DOUBLE_EQ(report.gaps[0].train_mean, 92.0);
  EXPECT_DOUBLE_EQ(report.gaps[0].train_std, 2.0);
  EXPECT_DOUBLE_EQ(report.gaps[0].test_std, 0.0);
  EXPECT_DOUBLE_EQ(report.gaps[0].gap, 2.0);
  EXPECT_EQ(report.rows.size(), 8u);
}

TEST(Protocol, PlatformsHeadlineIsMeanReturn) {
  EvalResult r;
  r.mean_return = 7.5;
  r.success_rate_percent = 20;
  EXPECT_EQ(headline_metric(Game::kPlatforms, r), 7.5);
  EXPECT_EQ(headline_metric(Game::kCoinRun, r), 20.0);
}

TEST(Format, Values) {
  EXPECT_EQ(format_value(95.70), "95.7");
  EXPECT_EQ(format_value(90.04), "90.04");
  EXPECT_EQ(format_value(0.9), "0.9");
  EXPECT_EQ(format_value(100.0), "100");
  EXPECT_EQ(format_value(0.0), "0");
  EXPECT_EQ(format_value(-0.001), "0");
  EXPECT_EQ(format_value(-1.25), "-1.25");
}

// Rows of the published CoinRun table reproduce its cell layout.
TEST(Format, PublishedTableLayout) {
  EvalReport report;
  report.game = Game::kCoinRun;
  report.rows = {all_row(100, "train", 99.45, 0.09), all_row(100, "test", 66.79, 1.09),
                 all_row(1000, "train", 95.7, 0.65), all_row(1000, "test", 72.51, 0.68),
                 all_row(std::nullopt, "train", 90.87, 0.53),
                 all_row(std::nullopt, "test", 90.04, 0.9)};
  report.gaps = summarize(report.rows);
  const std::string expected =
      "# Levels  | Train           | Test            | Gap\n"
      "100       | 99.45 ± 0.09    | 66.79 ± 1.09    | 32.66\n"
      "1000      | 95.7 ± 0.65     | 72.51 ± 0.68    | 23.19\n"
      "∞         | 90.87 ± 0.53    | 90.04 ± 0.9     | 0.83\n";
  EXPECT_EQ(format_table(report), expected);
}

EvalReport sample_report() {
  EvalResult a, b;
  a.success_rate_percent = 99.45;
  a.success_std_percent = 7.4;
  a.episodes = 100;
  b.success_rate_percent = 66.79 + 1e-13;
  b.success_std_percent = 47.1;
  b.episodes = 100;
  return gap_report(Game::kCoinRun,
                    {RunResult{100, 0, a, b}, RunResult{100, 1, b, a},
                     RunResult{std::nullopt, 0, a, a}});
}

TEST(Report, CsvRoundTripIsExact) {
  const EvalReport report = sample_report();
  const std::string csv = report_csv(report);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), kReportCsvHeader);
  EXPECT_EQ(report_from_csv(csv), report);
  EXPECT_NE(csv.find("coinrun,inf,all,test,"), std::string::npos);
}

TEST(Report, JsonRoundTripIsExact) {
  const EvalReport report = sample_report();
  EXPECT_EQ(report_from_json(report_json(report)), report);
}

TEST(Report, ParseErrors) {
  EXPECT_THROW(report_from_csv("bad,header\n"), ParseError);
  EXPECT_THROW(report_from_csv(std::string(kReportCsvHeader) + "\ncoinrun,100,0,train,x,0,0,1\n"),
               ParseError);
  EXPECT_THROW(report_from_csv(std::string(kReportCsvHeader) + "\ncoinrun,100,0,dev,1,0,0,1\n"),
               ParseError);
  EXPECT_THROW(report_from_json("{"), ParseError);
}

TEST(Protocol, RunProtocolEndToEnd) {
  ProtocolConfig c;
  c.game = Game::kMazes;
  c.train_sizes = {10, std::nullopt};
  c.test_size = 50;
  c.episodes_per_eval = 40;
  c.runs = 2;
  int made = 0;
  const EvalReport report = run_protocol(c, [&](int run) {
    ++made;
    return std::make_unique<RandomAgent>(4, static_cast<std::uint64_t>(run));
  });
  EXPECT_EQ(made, 8);
  ASSERT_EQ(report.gaps.size(), 2u);
  EXPECT_EQ(report.gaps[0].size, TrainSize{10});
  EXPECT_EQ(report.gaps[1].size, std::nullopt);
  EXPECT_EQ(report.gaps[0].episodes, 80);
  EXPECT_EQ(report.rows.size(), 12u);
}

}  // namespace
}  // namespace procbench
