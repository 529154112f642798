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
#ifndef PROCBENCH_MAZE_SIM_H_
#define PROCBENCH_MAZE_SIM_H_

#include <cstdint>
#include <string_view>

#include "procbench/level.h"

namespace procbench::maze {

inline constexpr int kMaxSteps = 500;
inline constexpr double kGoalReward = 10.0;

enum class Action : std::uint8_t { kUp = 0, kDown = 1, kLeft = 2, kRight = 3 };
inline constexpr int kNumActions = 4;

// Throws InvalidAction unless 0 <= index < kNumActions.
Action action_from_index(int index);
std::string_view action_name(Action action);

enum class Outcome : std::uint8_t { kRunning = 0, kGoal, kTimeout };
std::string_view outcome_name(Outcome outcome);

struct MazeState {
  CellCoord agent;
  std::int32_t step_count = 0;
  Outcome outcome = Outcome::kRunning;

  bool done() const { return outcome != Outcome::kRunning; }
  friend bool operator==(const MazeState&, const MazeState&) = default;
};

struct StepOutcome {
  double reward = 0.0;
  bool done = false;
};

MazeState reset(const MazeLevel& level);

// Moves into EMPTY or GOAL cells; walls and the border leave the agent in
// place. Throws EpisodeFinished if state.done().
StepOutcome step(const MazeLevel& level, MazeState& state, Action action);

CellCoord neighbour(CellCoord cell, Action action);

}  // namespace procbench::maze

#endif  // PROCBENCH_MAZE_SIM_H_
