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

#include "cli.h"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <memory>
#include <sstream>
#include <string_view>

#include "CLI11.hpp"
#include "json.hpp"
#include "procbench/agents.h"
#include "procbench/error.h"
#include "procbench/level_io.h"
#include "procbench/protocol.h"
#include "procbench/render.h"
#include "procbench/validate.h"
#include "procbench/vecenv.h"

namespace procbench::cli {
namespace {

// JSON config files: {"eval": {"game": "mazes", "episodes": 100}, "jobs": 4}.
class JsonConfig : public CLI::Config {
 public:
  std::string to_config(const CLI::App*, bool, bool, std::string) const override {
    throw CLI::ConversionError("writing JSON config files is not supported");
  }

  std::vector<CLI::ConfigItem> from_config(std::istream& input) const override {
    nlohmann::json doc;
    try {
      input >> doc;
    } catch (const nlohmann::json::exception& e) {
      throw CLI::ConversionError(std::string("invalid JSON config: ") + e.what());
    }
    if (!doc.is_object()) throw CLI::ConversionError("JSON config must be an object");
    std::vector<CLI::ConfigItem> items;
    flatten(doc, {}, items);
    return items;
  }

 private:
  static void flatten(const nlohmann::json& obj, const std::vector<std::string>& parents,
                      std::vector<CLI::ConfigItem>& items) {
    for (const auto& [key, value] : obj.items()) {
      if (value.is_object()) {
        std::vector<std::string> nested = parents;
        nested.push_back(key);
        flatten(value, nested, items);
        continue;
      }
      CLI::ConfigItem item;
      item.parents = parents;
      item.name = key;
      if (value.is_array()) {
        for (const auto& v : value) item.inputs.push_back(scalar(v, key));
      } else {
        item.inputs.push_back(scalar(value, key));
      }
      items.push_back(std::move(item));
    }
  }

  static std::string scalar(const nlohmann::json& v, const std::string& key) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_number()) return v.dump();
    throw CLI::ConversionError("unsupported value for '" + key + "' in JSON config");
  }
};

const std::vector<std::string> kGames = {"coinrun", "platforms", "mazes"};

struct Common {
  int jobs = 1;
  std::string config_path;
};

// Command-line --seed beats PROCBENCH_SEED, which beats config files and the
// default.
std::uint32_t resolve_seed(std::uint32_t parsed, bool on_command_line) {
  if (on_command_line) return parsed;
  const char* env = std::getenv("PROCBENCH_SEED");
  if (env == nullptr || *env == '\0') return parsed;
  const std::string text(env);
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(text, &used, 0);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text.front() == '-' || v > 0xFFFFFFFFULL) {
    throw ConfigError("PROCBENCH_SEED must be an integer in [0, 2^32): '" + text + "'");
  }
  return static_cast<std::uint32_t>(v);
}

bool has_flag(const std::vector<std::string>& args, std::string_view flag) {
  return std::any_of(args.begin(), args.end(), [&](const std::string& a) {
    return a == flag || a.rfind(std::string(flag) + "=", 0) == 0;
  });
}

class ConfigLine {
 public:
  explicit ConfigLine(std::string sub) : text_("config: procbench " + std::move(sub)) {}
  template <typename T>
  ConfigLine& add(std::string_view flag, const T& value) {
    std::ostringstream os;
    os << value;
    text_ += " --" + std::string(flag) + " " + os.str();
    return *this;
  }
  std::string str() const { return text_; }

 private:
  std::string text_;
};

std::string bool_text(bool b) { return b ? "true" : "false"; }

EnvOptions options_with_velocity(const std::string& mode) {
  EnvOptions options;
  if (mode == "on") options.paint_velocity = true;
  if (mode == "off") options.paint_velocity = false;
  return options;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open '" + path.string() + "' for writing");
  f << text;
  if (!f) throw IoError("failed writing '" + path.string() + "'");
}

// --- gen ------------------------------------------------------------------

struct GenArgs {
  std::string game;
  std::uint32_t seed = 0;
  std::string out = "-";
};

int cmd_gen(const GenArgs& a, std::ostream& out, std::ostream& err) {
  err << ConfigLine("gen").add("game", a.game).add("seed", a.seed).add("out", a.out).str()
      << '\n';
  const std::string json = serialize_level(generate_level(parse_game(a.game), a.seed));
  if (a.out == "-") {
    out << json;
  } else {
    write_text(a.out, json);
  }
  return kExitOk;
}

// --- render ---------------------------------------------------------------

struct RenderArgs {
  std::string game;
  std::uint32_t seed = 0;
  int steps = 100;
  std::vector<int> actions;
  std::uint64_t policy_seed = 0;
  std::string out_dir;
  std::string paint_velocity = "auto";
};

int cmd_render(RenderArgs a, bool policy_seed_given, std::ostream& out, std::ostream& err) {
  const Game game = parse_game(a.game);
  if (!policy_seed_given) a.policy_seed = a.seed;
  ConfigLine line("render");
  line.add("game", a.game).add("seed", a.seed).add("out-dir", a.out_dir);
  line.add("paint-velocity", a.paint_velocity);
  if (a.actions.empty()) {
    line.add("steps", a.steps).add("policy-seed", a.policy_seed);
  } else {
    std::string list;
    for (std::size_t i = 0; i < a.actions.size(); ++i) {
      list += (i ? "," : "") + std::to_string(a.actions[i]);
    }
    line.add("actions", list);
  }
  err << line.str() << '\n';

  std::filesystem::create_directories(a.out_dir);
  Env env(game, options_with_velocity(a.paint_velocity));
  env.reset(a.seed);
  for (int action : a.actions) {
    if (action < 0 || action >= env.action_space()) {
      throw InvalidArgument("--actions: " + std::to_string(action) + " outside [0, " +
                            std::to_string(env.action_space()) + ")");
    }
  }
  RandomAgent policy(env.action_space(), a.policy_seed);
  auto frame_path = [&](int i) {
    char name[32];
    std::snprintf(name, sizeof name, "frame_%05d.ppm", i);
    return std::filesystem::path(a.out_dir) / name;
  };
  write_ppm(env.observation(), frame_path(0));
  const int steps = a.actions.empty() ? a.steps : static_cast<int>(a.actions.size());
  int frames = 1;
  for (int t = 0; t < steps && !env.done(); ++t) {
    const int action = a.actions.empty() ? policy.act(env.observation(), nullptr)
                                         : a.actions[static_cast<std::size_t>(t)];
    env.step(action);
    write_ppm(env.observation(), frame_path(frames++));
  }
  out << "frames=" << frames << " outcome=" << outcome_name(game, env.episode().outcome)
      << " return=" << env.episode().episode_return << '\n';
  return kExitOk;
}

// --- validate -------------------------------------------------------------

struct ValidateArgs {
  std::string game;
  std::uint32_t seed = 0;
  int seeds = 100;
};

int cmd_validate(const ValidateArgs& a, const Common& c, std::ostream& out, std::ostream& err) {
  err << ConfigLine("validate")
             .add("game", a.game)
             .add("seed", a.seed)
             .add("seeds", a.seeds)
             .add("jobs", c.jobs)
             .str()
      << '\n';
  const ValidationReport report = validate_levels(parse_game(a.game), a.seed, a.seeds, c.jobs);
  out << format_validation(report) << "result=" << (report.ok() ? "ok" : "FAILED") << '\n';
  return report.ok() ? kExitOk : kExitCheckFailed;
}

// --- eval -----------------------------------------------------------------

struct EvalArgs {
  std::string game;
  std::string agent = "random";
  std::string level_set = "unbounded";
  int episodes = 1000;
  std::uint32_t seed = 0;
  std::uint64_t agent_seed = 0;
  std::string out;
};

int cmd_eval(EvalArgs a, bool agent_seed_given, std::ostream& out, std::ostream& err) {
  const Game game = parse_game(a.game);
  if (!agent_seed_given) a.agent_seed = a.seed;
  ConfigLine line("eval");
  line.add("game", a.game).add("agent", a.agent).add("level-set", a.level_set);
  line.add("episodes", a.episodes).add("seed", a.seed).add("agent-seed", a.agent_seed);
  if (!a.out.empty()) line.add("out", a.out);
  err << line.str() << '\n';

  const LevelSet set = LevelSet::parse(a.level_set);
  auto agent = make_agent(a.agent, game, a.agent_seed);
  const EvalResult r = evaluate(*agent, game, set, a.episodes, a.seed);
  const EvalReport report = eval_report(game, set, r);
  if (!a.out.empty()) {
    write_text(a.out + ".csv", report_csv(report));
    write_text(a.out + ".json", report_json(report));
  }
  out << "game=" << a.game << " agent=" << a.agent << " episodes=" << r.episodes
      << " success_pct=" << format_value(r.success_rate_percent)
      << " mean_return=" << format_value(r.mean_return)
      << " mean_length=" << format_value(r.mean_episode_length) << '\n';
  return kExitOk;
}

// --- bench-throughput -----------------------------------------------------

struct BenchArgs {
  std::string game;
  int batch = 64;
  int steps = 200;
  std::string render = "both";
  std::uint32_t seed = 0;
};

double measure(Game game, int batch, int steps, bool render, std::uint32_t seed, int jobs) {
  VecEnvConfig config;
  config.game = game;
  config.batch = batch;
  config.master_seed = seed;
  config.options.render = render;
  config.jobs = jobs;
  VecEnv env(config);
  Rng rng(seed);
  std::vector<int> actions(static_cast<std::size_t>(batch));
  const auto start = std::chrono::steady_clock::now();
  for (int t = 0; t < steps; ++t) {
    for (int& x : actions) x = static_cast<int>(rng.uniform_int(0, env.action_space() - 1));
    env.step(actions);
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return static_cast<double>(batch) * steps / std::max(secs, 1e-9);
}

int cmd_bench(const BenchArgs& a, const Common& c, std::ostream& out, std::ostream& err) {
  err << ConfigLine("bench-throughput")
             .add("game", a.game)
             .add("batch", a.batch)
             .add("steps", a.steps)
             .add("render", a.render)
             .add("seed", a.seed)
             .add("jobs", c.jobs)
             .str()
      << '\n';
  const Game game = parse_game(a.game);
  std::vector<bool> modes;
  if (a.render != "true") modes.push_back(false);
  if (a.render != "false") modes.push_back(true);
  for (const bool render : modes) {
    const double sps = measure(game, a.batch, a.steps, render, a.seed, c.jobs);
    out << "game=" << a.game << " batch=" << a.batch << " render=" << bool_text(render)
        << " steps_per_sec=" << std::fixed << std::setprecision(1) << sps << '\n';
    out.unsetf(std::ios::floatfield);
  }
  return kExitOk;
}

std::string config_path_in(const std::vector<std::string>& args) {
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) return args[i + 1];
    if (args[i].rfind("--config=", 0) == 0) return args[i].substr(9);
  }
  return {};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Procedurally generated RL benchmark environments", "procbench"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.set_config("--config", "", "Read options from a TOML or JSON file");
  const std::string config_path = config_path_in(args);
  if (config_path.size() >= 5 && config_path.substr(config_path.size() - 5) == ".json") {
    app.config_formatter(std::make_shared<JsonConfig>());
  }
  app.add_option("--jobs", common.jobs, "Worker threads")->check(CLI::PositiveNumber);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a level and write it as JSON");
  gen_cmd->add_option("--game", gen.game)->required()->check(CLI::IsMember(kGames));
  gen_cmd->add_option("--seed", gen.seed, "Level seed");
  gen_cmd->add_option("--out", gen.out, "Output path, - for stdout");

  RenderArgs render;
  auto* render_cmd = app.add_subcommand("render", "Write observation frames as PPM files");
  render_cmd->add_option("--game", render.game)->required()->check(CLI::IsMember(kGames));
  render_cmd->add_option("--seed", render.seed, "Level seed");
  auto* steps_opt = render_cmd->add_option("--steps", render.steps)->check(CLI::NonNegativeNumber);
  auto* actions_opt =
      render_cmd->add_option("--actions", render.actions, "Comma-separated action list")
          ->delimiter(',');
  auto* policy_seed_opt =
      render_cmd->add_option("--policy-seed", render.policy_seed, "Random policy seed");
  actions_opt->excludes(steps_opt)->excludes(policy_seed_opt);
  render_cmd->add_option("--out-dir", render.out_dir)->required();
  render_cmd->add_option("--paint-velocity", render.paint_velocity)
      ->check(CLI::IsMember({"auto", "on", "off"}));

  ValidateArgs validate;
  auto* validate_cmd = app.add_subcommand("validate", "Run the level invariant suite");
  validate_cmd->add_option("--game", validate.game)->required()->check(CLI::IsMember(kGames));
  validate_cmd->add_option("--seed", validate.seed, "First seed");
  validate_cmd->add_option("--seeds", validate.seeds, "Number of seeds")
      ->check(CLI::PositiveNumber);

  EvalArgs eval;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a built-in agent");
  eval_cmd->add_option("--game", eval.game)->required()->check(CLI::IsMember(kGames));
  eval_cmd->add_option("--agent", eval.agent)
      ->check(CLI::IsMember({"random", "noop", "bfs-oracle", "scripted-runner"}));
  eval_cmd->add_option("--level-set", eval.level_set,
                       "unbounded, seeds:A,B,... or range:START:COUNT");
  eval_cmd->add_option("--episodes", eval.episodes)->check(CLI::PositiveNumber);
  eval_cmd->add_option("--seed", eval.seed, "Master seed for level sampling");
  auto* agent_seed_opt = eval_cmd->add_option("--agent-seed", eval.agent_seed);
  eval_cmd->add_option("--out", eval.out, "Write <out>.csv and <out>.json");

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench-throughput", "Measure batched steps per second");
  bench_cmd->add_option("--game", bench.game)->required()->check(CLI::IsMember(kGames));
  bench_cmd->add_option("--batch", bench.batch)->check(CLI::PositiveNumber);
  bench_cmd->add_option("--steps", bench.steps)->check(CLI::PositiveNumber);
  bench_cmd->add_option("--render", bench.render)->check(CLI::IsMember({"true", "false", "both"}));
  bench_cmd->add_option("--seed", bench.seed);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\nRun with --help for usage.\n";
    return kExitUsage;
  }

  const bool seed_flag = has_flag(args, "--seed");
  try {
    if (*gen_cmd) {
      gen.seed = resolve_seed(gen.seed, seed_flag);
      return cmd_gen(gen, out, err);
    }
    if (*render_cmd) {
      render.seed = resolve_seed(render.seed, seed_flag);
      return cmd_render(render, policy_seed_opt->count() > 0, out, err);
    }
    if (*validate_cmd) {
      validate.seed = resolve_seed(validate.seed, seed_flag);
      return cmd_validate(validate, common, out, err);
    }
    if (*eval_cmd) {
      eval.seed = resolve_seed(eval.seed, seed_flag);
      return cmd_eval(eval, agent_seed_opt->count() > 0, out, err);
    }
    if (*bench_cmd) {
      bench.seed = resolve_seed(bench.seed, seed_flag);
      return cmd_bench(bench, common, out, err);
    }
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitCheckFailed;
  }
  return kExitUsage;
}

}  // namespace procbench::cli
