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

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>
#include <unordered_set>

#include "json.hpp"
#include "procbench/error.h"

namespace procbench {
namespace {

using nlohmann::ordered_json;

constexpr std::uint64_t kSeedSpace = 1ULL << 32;

double sample_std(const std::vector<double>& values) {
  if (values.size() < 2) return 0.0;
  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= static_cast<double>(values.size());
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  return std::sqrt(ss / static_cast<double>(values.size() - 1));
}

double mean_of(const std::vector<double>& values) {
  double sum = 0.0;
  for (double v : values) sum += v;
  return values.empty() ? 0.0 : sum / static_cast<double>(values.size());
}

std::string exact(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

TrainSize parse_size(std::string_view text) {
  if (text == "inf") return std::nullopt;
  try {
    std::size_t used = 0;
    const std::string s(text);
    const auto v = std::stoull(s, &used);
    if (used != s.size()) throw ParseError("");
    return v;
  } catch (const std::exception&) {
    throw ParseError("report: bad size '" + std::string(text) + "'");
  }
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream is(line);
  while (std::getline(is, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

double parse_double(const std::string& text, std::size_t line_no) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  throw ParseError("report line " + std::to_string(line_no) + ": bad number '" + text + "'");
}

}  // namespace

std::string train_size_label(const TrainSize& size) {
  return size ? std::to_string(*size) : "inf";
}

TrainingPreset training_preset(Game game) {
  TrainingPreset p;
  if (game == Game::kPlatforms) p.envs_per_worker = 96;
  p.use_memory = game != Game::kCoinRun;
  return p;
}

std::string training_preset_json(Game game) {
  const TrainingPreset p = training_preset(game);
  ordered_json j{{"game", game_name(game)},
                 {"gamma", p.gamma},
                 {"lambda", p.lambda},
                 {"timesteps_per_rollout", p.timesteps_per_rollout},
                 {"epochs_per_rollout", p.epochs_per_rollout},
                 {"minibatches_per_epoch", p.minibatches_per_epoch},
                 {"entropy_bonus", p.entropy_bonus},
                 {"learning_rate", p.learning_rate},
                 {"envs_per_worker", p.envs_per_worker},
                 {"workers", p.workers},
                 {"use_memory", p.use_memory}};
  return j.dump(2);
}

void ProtocolConfig::validate() const {
  if (train_sizes.empty()) throw ConfigError("protocol: no train sizes");
  for (const TrainSize& s : train_sizes) {
    if (s && *s == 0) throw ConfigError("protocol: train size must be >= 1");
  }
  if (test_size == 0) throw ConfigError("protocol: test size must be >= 1");
  if (episodes_per_eval < 1) throw ConfigError("protocol: episodes must be >= 1");
  if (runs < 1) throw ConfigError("protocol: runs must be >= 1");
}

ProtocolConfig preset_protocol(Game game) {
  ProtocolConfig c;
  c.game = game;
  switch (game) {
    case Game::kCoinRun:
      c.train_sizes = {100, 500, 1000, 2000, 4000, 8000, 12000, 16000, std::nullopt};
      c.runs = 5;
      break;
    case Game::kPlatforms:
      c.train_sizes = {100, 400, 1600, 6400, 25600, 102400, 409600, std::nullopt};
      c.runs = 3;
      break;
    case Game::kMazes:
      c.train_sizes = {1000,  2000,   4000,   8000,   16000,
                       32000, 64000, 128000, 256000, std::nullopt};
      c.runs = 3;
      break;
  }
  return c;
}

LevelSplit build_level_sets(const ProtocolConfig& config, const TrainSize& train_size,
                            int run_index) {
  // The unbounded regime needs at least one seed left for training.
  const std::uint64_t n_train = train_size.value_or(1);
  if (train_size && *train_size == 0) throw ConfigError("train size must be >= 1");
  if (n_train + config.test_size > kSeedSpace) {
    throw ConfigError("train size " + train_size_label(train_size) + " plus test size " +
                      std::to_string(config.test_size) + " exceeds the 2^32 seed space");
  }
  // Independent train and test streams per run.
  const std::uint64_t run_mix = Rng(static_cast<std::uint64_t>(run_index)).next_u64();
  Rng train_rng(derive_stream(config.master_seed, StreamTag::kProtocol).state() ^ run_mix);
  Rng test_rng(train_rng.next_u64() ^ 0xA5A5A5A5A5A5A5A5ULL);

  LevelSplit split;
  std::unordered_set<LevelSeed> train_seen;
  if (train_size) {
    std::vector<LevelSeed> train;
    train.reserve(n_train);
    train_seen.reserve(n_train);
    while (train.size() < n_train) {
      const auto s = static_cast<LevelSeed>(train_rng.next_u64() >> 32);
      if (train_seen.insert(s).second) train.push_back(s);
    }
    split.train = LevelSet::explicit_seeds(std::move(train));
  }
  std::vector<LevelSeed> test;
  std::unordered_set<LevelSeed> test_seen;
  test.reserve(config.test_size);
  test_seen.reserve(config.test_size);
  while (test.size() < config.test_size) {
    const auto s = static_cast<LevelSeed>(test_rng.next_u64() >> 32);
    if (train_seen.contains(s)) continue;
    if (test_seen.insert(s).second) test.push_back(s);
  }
  if (!train_size) split.train = LevelSet::unbounded_excluding(test);
  split.test = LevelSet::explicit_seeds(std::move(test));
  return split;
}

EvalResult evaluate(Agent& agent, Game game, const LevelSet& level_set, int episodes,
                    std::uint32_t master_seed) {
  if (episodes < 1) throw InvalidArgument("evaluate: episodes must be >= 1");
  EnvOptions options;
  options.render = agent.needs_observation();
  Env env(game, options);
  Rng sampler = derive_stream(master_seed, StreamTag::kEpisode);

  EvalResult r;
  r.privileged = agent.privileged();
  r.episodes = episodes;
  double sum = 0.0, sum_sq = 0.0, length = 0.0;
  int successes = 0;
  for (int e = 0; e < episodes; ++e) {
    const LevelSeed seed = sample_level(level_set, sampler);
    env.reset(seed);
    const EnvView view = env.view();
    try {
      agent.reset(agent.privileged() ? view : EnvView{});
      while (!env.done()) {
        const int action =
            agent.act(env.observation(), agent.privileged() ? &view : nullptr);
        env.step(action);
      }
    } catch (const std::exception& ex) {
      throw Error("agent '" + agent.name() + "' failed in episode " + std::to_string(e) +
                  " (level seed " + std::to_string(seed) + ", step " +
                  std::to_string(env.episode().episode_steps) + "): " + ex.what());
    }
    const EpisodeInfo& info = env.episode();
    sum += info.episode_return;
    sum_sq += info.episode_return * info.episode_return;
    length += info.episode_steps;
    if (info.outcome == EpisodeOutcome::kSuccess) ++successes;
  }
  const double n = episodes;
  r.mean_return = sum / n;
  r.std_return = std::sqrt(std::max(0.0, sum_sq / n - r.mean_return * r.mean_return));
  const double p = successes / n;
  r.success_rate_percent = 100.0 * p;
  r.success_std_percent = 100.0 * std::sqrt(p * (1.0 - p));
  r.mean_episode_length = length / n;
  return r;
}

double headline_metric(Game game, const EvalResult& result) {
  return game == Game::kPlatforms ? result.mean_return : result.success_rate_percent;
}

double headline_episode_std(Game game, const EvalResult& result) {
  return game == Game::kPlatforms ? result.std_return : result.success_std_percent;
}

std::vector<GapRow> summarize(const std::vector<SplitRow>& rows) {
  std::vector<GapRow> gaps;
  auto find = [&](const TrainSize& size) -> GapRow& {
    for (GapRow& g : gaps) {
      if (g.size == size) return g;
    }
    gaps.push_back(GapRow{size});
    return gaps.back();
  };
  for (const SplitRow& row : rows) {
    if (row.run != "all" || (row.split != "train" && row.split != "test")) continue;
    GapRow& g = find(row.size);
    if (row.split == "train") {
      g.train_mean = row.mean;
      g.train_std = row.std;
    } else {
      g.test_mean = row.mean;
      g.test_std = row.std;
      g.success_rate_percent = row.success_pct;
      g.episodes = row.episodes;
    }
  }
  for (GapRow& g : gaps) g.gap = g.train_mean - g.test_mean;
  return gaps;
}

EvalReport gap_report(Game game, const std::vector<RunResult>& results) {
  if (results.empty()) throw InvalidArgument("gap_report: no results");
  std::vector<TrainSize> order;
  for (const RunResult& r : results) {
    if (r.train.privileged || r.test.privileged) {
      throw InvalidArgument(
          "gap_report: privileged agents cannot appear in generalization reports");
    }
    if (std::find(order.begin(), order.end(), r.size) == order.end()) order.push_back(r.size);
  }
  EvalReport report;
  report.game = game;
  for (const TrainSize& size : order) {
    std::vector<double> metric[2], success[2];
    std::int64_t episodes[2] = {0, 0};
    for (const RunResult& r : results) {
      if (r.size != size) continue;
      const EvalResult* halves[2] = {&r.train, &r.test};
      for (int h = 0; h < 2; ++h) {
        const EvalResult& e = *halves[h];
        report.rows.push_back(SplitRow{size, std::to_string(r.run), h == 0 ? "train" : "test",
                                       headline_metric(game, e), headline_episode_std(game, e),
                                       e.success_rate_percent, e.episodes});
        metric[h].push_back(headline_metric(game, e));
        success[h].push_back(e.success_rate_percent);
        episodes[h] += e.episodes;
      }
    }
    for (int h = 0; h < 2; ++h) {
      report.rows.push_back(SplitRow{size, "all", h == 0 ? "train" : "test",
                                     mean_of(metric[h]), sample_std(metric[h]),
                                     mean_of(success[h]), episodes[h]});
    }
  }
  report.gaps = summarize(report.rows);
  return report;
}

EvalReport eval_report(Game game, const LevelSet& level_set, const EvalResult& result) {
  EvalReport report;
  report.game = game;
  const TrainSize size =
      level_set.is_unbounded() ? TrainSize{} : TrainSize{level_set.size()};
  report.rows.push_back(SplitRow{size, "0", "eval", headline_metric(game, result),
                                 headline_episode_std(game, result), result.success_rate_percent,
                                 result.episodes});
  return report;
}

std::string report_csv(const EvalReport& report) {
  std::string out(kReportCsvHeader);
  out += '\n';
  for (const SplitRow& r : report.rows) {
    out += std::string(game_name(report.game)) + ',' + train_size_label(r.size) + ',' + r.run +
           ',' + r.split + ',' + exact(r.mean) + ',' + exact(r.std) + ',' +
           exact(r.success_pct) + ',' + std::to_string(r.episodes) + '\n';
  }
  return out;
}

std::string report_json(const EvalReport& report) {
  ordered_json rows = ordered_json::array();
  for (const SplitRow& r : report.rows) {
    rows.push_back(ordered_json{{"size", train_size_label(r.size)},
                                {"run", r.run},
                                {"split", r.split},
                                {"mean", r.mean},
                                {"std", r.std},
                                {"success_pct", r.success_pct},
                                {"episodes", r.episodes}});
  }
  ordered_json gaps = ordered_json::array();
  for (const GapRow& g : report.gaps) {
    gaps.push_back(ordered_json{{"size", train_size_label(g.size)},
                                {"train_mean", g.train_mean},
                                {"train_std", g.train_std},
                                {"test_mean", g.test_mean},
                                {"test_std", g.test_std},
                                {"success_rate_percent", g.success_rate_percent},
                                {"episodes", g.episodes},
                                {"gap", g.gap}});
  }
  ordered_json doc{{"game", game_name(report.game)}, {"rows", rows}, {"gaps", gaps}};
  return doc.dump(2) + "\n";
}

EvalReport report_from_csv(std::string_view csv) {
  std::istringstream is{std::string(csv)};
  std::string line;
  if (!std::getline(is, line) || line != kReportCsvHeader) {
    throw ParseError("report: missing or unexpected CSV header");
  }
  EvalReport report;
  bool have_game = false;
  std::size_t line_no = 1;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto f = split_csv_line(line);
    if (f.size() != 8) {
      throw ParseError("report line " + std::to_string(line_no) + ": expected 8 fields");
    }
    Game game;
    try {
      game = parse_game(f[0]);
    } catch (const InvalidArgument& e) {
      throw ParseError("report line " + std::to_string(line_no) + ": " + e.what());
    }
    if (have_game && game != report.game) {
      throw ParseError("report line " + std::to_string(line_no) + ": mixed games");
    }
    report.game = game;
    have_game = true;
    SplitRow row;
    row.size = parse_size(f[1]);
    row.run = f[2];
    row.split = f[3];
    if (row.split != "train" && row.split != "test" && row.split != "eval") {
      throw ParseError("report line " + std::to_string(line_no) + ": bad split '" +
                       row.split + "'");
    }
    row.mean = parse_double(f[4], line_no);
    row.std = parse_double(f[5], line_no);
    row.success_pct = parse_double(f[6], line_no);
    row.episodes = static_cast<std::int64_t>(parse_double(f[7], line_no));
    report.rows.push_back(row);
  }
  report.gaps = summarize(report.rows);
  return report;
}

EvalReport report_from_json(std::string_view text) {
  try {
    const auto doc = nlohmann::json::parse(text.begin(), text.end());
    EvalReport report;
    report.game = parse_game(doc.at("game").get<std::string>());
    for (const auto& r : doc.at("rows")) {
      SplitRow row;
      row.size = parse_size(r.at("size").get<std::string>());
      row.run = r.at("run").get<std::string>();
      row.split = r.at("split").get<std::string>();
      row.mean = r.at("mean").get<double>();
      row.std = r.at("std").get<double>();
      row.success_pct = r.at("success_pct").get<double>();
      row.episodes = r.at("episodes").get<std::int64_t>();
      report.rows.push_back(row);
    }
    report.gaps = summarize(report.rows);
    return report;
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(std::string("report: ") + e.what());
  }
}

std::string format_value(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  std::string s(buf);
  if (s.find('.') != std::string::npos) {
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
  }
  if (s == "-0") s = "0";
  return s;
}

std::string format_table(const EvalReport& report) {
  auto cell = [](double mean, double std) {
    return format_value(mean) + " ± " + format_value(std);
  };
  auto pad = [](std::string s, std::size_t width, std::size_t visible) {
    if (visible < width) s.append(width - visible, ' ');
    return s;
  };
  // "±" and "∞" are multi-byte; pad by visible width.
  auto visible = [](const std::string& s) {
    std::size_t n = 0;
    for (unsigned char c : s) n += (c & 0xC0) != 0x80;
    return n;
  };
  std::ostringstream os;
  os << pad("# Levels", 10, 8) << "| " << pad("Train", 16, 5) << "| " << pad("Test", 16, 4)
     << "| Gap\n";
  for (const GapRow& g : report.gaps) {
    const std::string label = g.size ? std::to_string(*g.size) : "∞";
    const std::string train = cell(g.train_mean, g.train_std);
    const std::string test = cell(g.test_mean, g.test_std);
    os << pad(label, 10, visible(label)) << "| " << pad(train, 16, visible(train)) << "| "
       << pad(test, 16, visible(test)) << "| " << format_value(g.gap) << '\n';
  }
  return os.str();
}

EvalReport run_protocol(const ProtocolConfig& config, const AgentFactory& factory) {
  config.validate();
  std::vector<RunResult> results;
  for (const TrainSize& size : config.train_sizes) {
    for (int run = 0; run < config.runs; ++run) {
      const LevelSplit split = build_level_sets(config, size, run);
      const std::uint32_t eval_seed = config.master_seed ^ static_cast<std::uint32_t>(run);
      RunResult r;
      r.size = size;
      r.run = run;
      auto agent = factory(run);
      r.train = evaluate(*agent, config.game, split.train, config.episodes_per_eval, eval_seed);
      agent = factory(run);
      r.test = evaluate(*agent, config.game, split.test, config.episodes_per_eval, eval_seed);
      results.push_back(r);
    }
  }
  return gap_report(config.game, results);
}

}  // namespace procbench
