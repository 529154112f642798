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
#ifndef PROCBENCH_AGENTS_H_
#define PROCBENCH_AGENTS_H_

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "procbench/env.h"
#include "procbench/rng.h"

namespace procbench {

// Policy interface used by the evaluation harness. Non-privileged agents see
// observations only; privileged agents also receive an EnvView and are kept
// out of generalization reports.
class Agent {
 public:
  virtual ~Agent() = default;

  // Called at the start of every episode. view.level is null for agents
  // without privileged access.
  virtual void reset(const EnvView& view) = 0;
  // view is null for agents without privileged access.
  virtual int act(ConstObsSpan observation, const EnvView* view) = 0;
  virtual bool privileged() const { return false; }
  // False for agents that never read pixels; evaluation then skips rendering.
  virtual bool needs_observation() const { return !privileged(); }
  virtual std::string name() const = 0;
};

class RandomAgent final : public Agent {
 public:
  RandomAgent(int action_space, std::uint64_t seed);
  void reset(const EnvView&) override {}
  int act(ConstObsSpan, const EnvView*) override;
  std::string name() const override { return "random"; }
  bool needs_observation() const override { return false; }

 private:
  int action_space_;
  Rng rng_;
};

class ConstantAgent final : public Agent {
 public:
  explicit ConstantAgent(int action) : action_(action) {}
  void reset(const EnvView&) override {}
  int act(ConstObsSpan, const EnvView*) override { return action_; }
  std::string name() const override { return "constant"; }
  bool needs_observation() const override { return false; }

 private:
  int action_;
};

// Replays a fixed action list, then repeats the last action (or 0).
class ReplayAgent final : public Agent {
 public:
  explicit ReplayAgent(std::vector<int> actions) : actions_(std::move(actions)) {}
  void reset(const EnvView&) override { next_ = 0; }
  int act(ConstObsSpan, const EnvView*) override;
  std::string name() const override { return "replay"; }
  bool needs_observation() const override { return false; }

 private:
  std::vector<int> actions_;
  std::size_t next_ = 0;
};

// Follows the unique corridor path to the goal using a distance field
// computed at reset.
class MazeBfsOracle final : public Agent {
 public:
  void reset(const EnvView& view) override;
  int act(ConstObsSpan, const EnvView* view) override;
  bool privileged() const override { return true; }
  std::string name() const override { return "bfs-oracle"; }

 private:
  int dim_ = 0;
  std::vector<int> dist_;  // moves to the goal, -1 for walls
};

// Runs right and jumps at gaps, ledges, hazards and monsters using the level
// geometry. A short simulated lookahead vetoes moves after which neither
// stopping, pausing nor jumping avoids death.
class CoinRunScriptedRunner final : public Agent {
 public:
  void reset(const EnvView&) override {}
  int act(ConstObsSpan, const EnvView* view) override;
  bool privileged() const override { return true; }
  std::string name() const override { return "scripted-runner"; }

 private:
  static int propose(const PlatformerLevel& level, const physics::PlatformerState& s);
  static bool survives(const PlatformerLevel& level, physics::PlatformerState s, int wait,
                       int jump_at);
  static bool safe_after(const PlatformerLevel& level, physics::PlatformerState s,
                         physics::Action first);
};

// Built-in agents: "random", "noop", "bfs-oracle" (mazes), "scripted-runner"
// (coinrun). Throws InvalidArgument for an unknown name or game mismatch.
std::unique_ptr<Agent> make_agent(std::string_view name, Game game,
                                  std::uint64_t seed);

}  // namespace procbench

#endif  // PROCBENCH_AGENTS_H_
