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
#include "procbench/maze_sim.h"

#include <string>

#include "procbench/error.h"

namespace procbench::maze {

Action action_from_index(int index) {
  if (index < 0 || index >= kNumActions) {
    throw InvalidAction("maze action " + std::to_string(index) +
                        " outside [0, " + std::to_string(kNumActions) + ")");
  }
  return static_cast<Action>(index);
}

std::string_view action_name(Action action) {
  switch (action) {
    case Action::kUp:
      return "up";
    case Action::kDown:
      return "down";
    case Action::kLeft:
      return "left";
    case Action::kRight:
      return "right";
  }
  return "unknown";
}

std::string_view outcome_name(Outcome outcome) {
  switch (outcome) {
    case Outcome::kRunning:
      return "running";
    case Outcome::kGoal:
      return "goal";
    case Outcome::kTimeout:
      return "timeout";
  }
  return "unknown";
}

CellCoord neighbour(CellCoord cell, Action action) {
  switch (action) {
    case Action::kUp:
      return {cell.x, cell.y - 1};
    case Action::kDown:
      return {cell.x, cell.y + 1};
    case Action::kLeft:
      return {cell.x - 1, cell.y};
    case Action::kRight:
      return {cell.x + 1, cell.y};
  }
  return cell;
}

MazeState reset(const MazeLevel& level) {
  MazeState s;
  s.agent = level.agent_start;
  return s;
}

StepOutcome step(const MazeLevel& level, MazeState& s, Action action) {
  if (s.done()) {
    throw EpisodeFinished("step() called on a finished maze episode (" +
                          std::string(outcome_name(s.outcome)) + ")");
  }
  StepOutcome out;
  const CellCoord target = neighbour(s.agent, action);
  if (level.is_corridor(target)) s.agent = target;
  ++s.step_count;
  if (level.at(s.agent) == CellKind::kGoal) {
    s.outcome = Outcome::kGoal;
    out.reward = kGoalReward;
  } else if (s.step_count >= kMaxSteps) {
    s.outcome = Outcome::kTimeout;
  }
  out.done = s.done();
  return out;
}

}  // namespace procbench::maze
