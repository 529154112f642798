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
#include "procbench/env.h"

#include <string>
#include <utility>

#include "json.hpp"

#include "procbench/error.h"

namespace procbench {

std::string_view outcome_name(Game game, EpisodeOutcome outcome) {
  switch (outcome) {
    case EpisodeOutcome::kRunning:
      return "running";
    case EpisodeOutcome::kSuccess:
      return game == Game::kMazes ? "goal" : "coin";
    case EpisodeOutcome::kDeath:
      return "death";
    case EpisodeOutcome::kTimeout:
      return "timeout";
  }
  return "unknown";
}

int action_space_size(Game game) {
  return game == Game::kMazes ? maze::kNumActions : physics::kNumActions;
}

int max_episode_steps(Game game) {
  return game == Game::kMazes ? maze::kMaxSteps : physics::max_steps(game);
}

void EnvOptions::validate() const {
  if (cutout.enabled) cutout.validate();
  epsilon_greedy.validate();
  frame_stack.validate();
}

EnvOptions parse_env_options(std::string_view text, int* jobs) {
  EnvOptions o;
  if (text.find_first_not_of(" \t\r\n") == std::string_view::npos) return o;
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("options: invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("options: expected an object");
  auto get = [](const nlohmann::json& v, const std::string& path, auto& out) {
    try {
      v.get_to(out);
    } catch (const nlohmann::json::exception&) {
      throw ConfigError("options: bad type for " + path);
    }
  };
  for (const auto& [key, value] : doc.items()) {
    if (key == "paint_velocity") {
      bool b = false;
      get(value, key, b);
      o.paint_velocity = b;
    } else if (key == "render") {
      get(value, key, o.render);
    } else if (key == "epsilon") {
      get(value, key, o.epsilon_greedy.epsilon);
    } else if (key == "frame_stack") {
      get(value, key, o.frame_stack.k);
    } else if (key == "jobs" && jobs != nullptr) {
      get(value, key, *jobs);
    } else if (key == "cutout") {
      if (value.is_boolean()) {
        o.cutout.enabled = value.get<bool>();
        continue;
      }
      if (!value.is_object()) throw ConfigError("options: bad type for cutout");
      for (const auto& [ck, cv] : value.items()) {
        const std::string path = "cutout." + ck;
        if (ck == "enabled") {
          get(cv, path, o.cutout.enabled);
        } else if (ck == "n_rects_max") {
          get(cv, path, o.cutout.n_rects_max);
        } else if (ck == "rect_w_max") {
          get(cv, path, o.cutout.rect_w_max);
        } else if (ck == "rect_h_max") {
          get(cv, path, o.cutout.rect_h_max);
        } else {
          throw ConfigError("options: unknown key " + path);
        }
      }
    } else {
      throw ConfigError("options: unknown key " + key);
    }
  }
  o.validate();
  return o;
}

namespace {

EpisodeOutcome to_outcome(physics::Outcome o) {
  switch (o) {
    case physics::Outcome::kRunning:
      return EpisodeOutcome::kRunning;
    case physics::Outcome::kCoinAll:
      return EpisodeOutcome::kSuccess;
    case physics::Outcome::kDeath:
      return EpisodeOutcome::kDeath;
    case physics::Outcome::kTimeout:
      return EpisodeOutcome::kTimeout;
  }
  return EpisodeOutcome::kRunning;
}

EpisodeOutcome to_outcome(maze::Outcome o) {
  switch (o) {
    case maze::Outcome::kRunning:
      return EpisodeOutcome::kRunning;
    case maze::Outcome::kGoal:
      return EpisodeOutcome::kSuccess;
    case maze::Outcome::kTimeout:
      return EpisodeOutcome::kTimeout;
  }
  return EpisodeOutcome::kRunning;
}

}  // namespace

Env::Env(Game game, EnvOptions options, Rng augmentation)
    : game_(game), options_(std::move(options)), augmentation_(augmentation) {
  options_.validate();
}

void Env::reset(LevelSeed seed) { reset(generate_level(game_, seed)); }

void Env::reset(Level level) {
  if (level_game(level) != game_) {
    throw InvalidArgument("Env::reset: level belongs to another game");
  }
  level_ = std::move(level);
  if (const auto* p = std::get_if<PlatformerLevel>(&level_)) {
    platformer_ = physics::reset(*p);
  } else {
    maze_ = maze::reset(std::get<MazeLevel>(level_));
  }
  episode_ = EpisodeInfo{level_seed(level_), 0, 0.0, EpisodeOutcome::kRunning};
  render_current();
}

EnvStep Env::step(int action) {
  if (action < 0 || action >= action_space()) {
    throw InvalidAction("action " + std::to_string(action) + " outside [0, " +
                        std::to_string(action_space()) + ") for " +
                        std::string(game_name(game_)));
  }
  if (done()) {
    throw EpisodeFinished("step() called on a finished episode");
  }
  EnvStep out;
  const double epsilon = options_.epsilon_greedy.epsilon;
  if (epsilon > 0.0) {
    const auto r = apply_epsilon_greedy(action, action_space(), epsilon, augmentation_);
    action = r.action;
    out.action_overridden = r.overridden;
  }
  if (const auto* p = std::get_if<PlatformerLevel>(&level_)) {
    const auto r = physics::step(*p, platformer_, static_cast<physics::Action>(action));
    out.reward = r.reward;
    out.done = r.done;
    episode_.outcome = to_outcome(platformer_.outcome);
  } else {
    const auto r = maze::step(std::get<MazeLevel>(level_), maze_,
                              static_cast<maze::Action>(action));
    out.reward = r.reward;
    out.done = r.done;
    episode_.outcome = to_outcome(maze_.outcome);
  }
  ++episode_.episode_steps;
  episode_.episode_return += out.reward;
  render_current();
  return out;
}

EnvView Env::view() const {
  EnvView v;
  v.level = &level_;
  if (std::holds_alternative<PlatformerLevel>(level_)) {
    v.platformer = &platformer_;
  } else {
    v.maze = &maze_;
  }
  return v;
}

void Env::render_clean(ObsSpan out) const {
  if (const auto* p = std::get_if<PlatformerLevel>(&level_)) {
    render_platformer(*p, platformer_, options_.velocity_painting(game_), out);
  } else {
    render_maze(std::get<MazeLevel>(level_), maze_, out);
  }
}

void Env::render_current() {
  if (!options_.render) return;
  render_clean(obs_.span());
  if (options_.cutout.enabled) apply_cutout(obs_.span(), options_.cutout, augmentation_);
}

}  // namespace procbench
