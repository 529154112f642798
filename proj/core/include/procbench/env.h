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
#ifndef PROCBENCH_ENV_H_
#define PROCBENCH_ENV_H_

#include <cstdint>
#include <optional>
#include <string_view>

#include "procbench/level.h"
#include "procbench/maze_sim.h"
#include "procbench/physics.h"
#include "procbench/render.h"
#include "procbench/wrappers.h"

namespace procbench {

enum class EpisodeOutcome : std::uint8_t { kRunning = 0, kSuccess, kDeath, kTimeout };

// "coin" for platformer success, "goal" for mazes.
std::string_view outcome_name(Game game, EpisodeOutcome outcome);

int action_space_size(Game game);
int max_episode_steps(Game game);

struct EnvOptions {
  // Defaults to on for CoinRun and off for the other games.
  std::optional<bool> paint_velocity;
  // When false observations are left untouched (throughput measurement).
  bool render = true;
  CutoutConfig cutout;
  EpsilonGreedyConfig epsilon_greedy;
  FrameStackConfig frame_stack;

  bool velocity_painting(Game game) const {
    return paint_velocity.value_or(game == Game::kCoinRun);
  }
  // Throws ConfigError.
  void validate() const;
};

// Parses {"paint_velocity", "render", "cutout": {...}, "epsilon",
// "frame_stack"}. Unknown keys throw ConfigError, except "jobs" when jobs is
// non-null. An empty string yields the defaults.
EnvOptions parse_env_options(std::string_view json, int* jobs = nullptr);

struct EpisodeInfo {
  LevelSeed level_seed = 0;
  std::int32_t episode_steps = 0;
  double episode_return = 0.0;
  EpisodeOutcome outcome = EpisodeOutcome::kRunning;

  friend bool operator==(const EpisodeInfo&, const EpisodeInfo&) = default;
};

struct EnvStep {
  double reward = 0.0;
  bool done = false;
  bool action_overridden = false;
};

// Read-only view of the simulation handed to privileged agents.
struct EnvView {
  const Level* level = nullptr;
  const physics::PlatformerState* platformer = nullptr;
  const maze::MazeState* maze = nullptr;
};

// One environment without auto-reset. The caller resets it explicitly; a
// step on a finished episode throws EpisodeFinished.
class Env {
 public:
  // augmentation drives cutout and epsilon-greedy; untouched when both are off.
  Env(Game game, EnvOptions options, Rng augmentation = Rng());

  void reset(LevelSeed seed);
  void reset(Level level);
  // Throws InvalidAction or EpisodeFinished.
  EnvStep step(int action);

  Game game() const { return game_; }
  const EnvOptions& options() const { return options_; }
  int action_space() const { return action_space_size(game_); }
  const Level& level() const { return level_; }
  EnvView view() const;
  const EpisodeInfo& episode() const { return episode_; }
  bool done() const { return episode_.outcome != EpisodeOutcome::kRunning; }

  // Current frame, including cutout when enabled.
  ConstObsSpan observation() const { return obs_.span(); }
  // Renders the current frame into out without any augmentation.
  void render_clean(ObsSpan out) const;

  const physics::PlatformerState& platformer_state() const { return platformer_; }
  const maze::MazeState& maze_state() const { return maze_; }

 private:
  void render_current();

  Game game_;
  EnvOptions options_;
  Rng augmentation_;
  Level level_;
  physics::PlatformerState platformer_;
  maze::MazeState maze_;
  EpisodeInfo episode_;
  Observation obs_;
};

}  // namespace procbench

#endif  // PROCBENCH_ENV_H_
