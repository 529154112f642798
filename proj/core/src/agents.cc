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

#include <deque>
#include <limits>
#include <string>

#include "procbench/error.h"

namespace procbench {

RandomAgent::RandomAgent(int action_space, std::uint64_t seed)
    : action_space_(action_space), rng_(seed) {
  if (action_space < 1) throw InvalidArgument("RandomAgent: empty action space");
}

int RandomAgent::act(ConstObsSpan, const EnvView*) {
  return static_cast<int>(rng_.uniform_int(0, action_space_ - 1));
}

int ReplayAgent::act(ConstObsSpan, const EnvView*) {
  if (actions_.empty()) return 0;
  if (next_ < actions_.size()) return actions_[next_++];
  return actions_.back();
}

void MazeBfsOracle::reset(const EnvView& view) {
  if (view.level == nullptr || !std::holds_alternative<MazeLevel>(*view.level)) {
    throw InvalidArgument("bfs-oracle needs a maze level");
  }
  const auto& level = std::get<MazeLevel>(*view.level);
  dim_ = level.dim;
  dist_.assign(static_cast<std::size_t>(dim_ * dim_), -1);
  const CellCoord goal = level.goal();
  std::deque<CellCoord> queue{goal};
  dist_[static_cast<std::size_t>(goal.y * dim_ + goal.x)] = 0;
  while (!queue.empty()) {
    const CellCoord c = queue.front();
    queue.pop_front();
    const int d = dist_[static_cast<std::size_t>(c.y * dim_ + c.x)];
    for (int a = 0; a < maze::kNumActions; ++a) {
      const CellCoord nb = maze::neighbour(c, static_cast<maze::Action>(a));
      if (!level.is_corridor(nb)) continue;
      int& nd = dist_[static_cast<std::size_t>(nb.y * dim_ + nb.x)];
      if (nd >= 0) continue;
      nd = d + 1;
      queue.push_back(nb);
    }
  }
}

int MazeBfsOracle::act(ConstObsSpan, const EnvView* view) {
  if (view == nullptr || view->maze == nullptr) {
    throw InvalidArgument("bfs-oracle needs the maze state");
  }
  const CellCoord here = view->maze->agent;
  const int d = dist_[static_cast<std::size_t>(here.y * dim_ + here.x)];
  for (int a = 0; a < maze::kNumActions; ++a) {
    const CellCoord nb = maze::neighbour(here, static_cast<maze::Action>(a));
    if (nb.x < 0 || nb.y < 0 || nb.x >= dim_ || nb.y >= dim_) continue;
    if (dist_[static_cast<std::size_t>(nb.y * dim_ + nb.x)] == d - 1) return a;
  }
  return 0;
}

namespace {

using namespace physics;

// Top of the ground stack in a column (units), or -1 for a pit.
std::int32_t ground_top(const TileGrid& grid, int col) {
  if (col < 0 || col >= grid.width()) return std::numeric_limits<std::int32_t>::max();
  for (int r = grid.height() - 1; r >= 0; --r) {
    if (is_solid(grid.at(col, r))) return (r + 1) * kUnitsPerTile;
  }
  return -1;
}

int column_of(std::int32_t units) {
  return units >= 0 ? units / kUnitsPerTile : -1;
}

}  // namespace

int CoinRunScriptedRunner::propose(const PlatformerLevel& level, const PlatformerState& s) {
  const TileGrid& grid = level.grid;
  constexpr int kRight = static_cast<int>(Action::kRight);
  constexpr int kRightJump = static_cast<int>(Action::kRightJump);
  if (!s.on_ground) return kRight;

  const std::int32_t feet = s.y - kAgentHalf;
  const int feet_row = feet / kUnitsPerTile;

  // Gap or lava under the next position; plain drops are walked off.
  const std::int32_t next_x = s.x + std::min(s.vx + kRunAccel, kMaxVx);
  bool supported = false;
  bool hazard = false;
  for (int c = column_of(next_x - kAgentHalf); c <= column_of(next_x + kAgentHalf - 1); ++c) {
    const bool lava =
        grid.in_bounds(c, feet_row - 1) && grid.at(c, feet_row - 1) == TileKind::kLava;
    const std::int32_t top = ground_top(grid, c);
    if (top == feet && !lava) supported = true;
    if (top < 0 || lava) hazard = true;
  }
  if (!supported && hazard) return kRightJump;

  // Ledge within reach of the front face. Crates are passable from the side.
  for (int c = column_of(s.x + kAgentHalf); c <= column_of(s.x + kAgentHalf + 60); ++c) {
    if (ground_top(grid, c) > feet) return kRightJump;
  }

  for (int c = column_of(s.x); c <= column_of(s.x) + 2; ++c) {
    if (!grid.in_bounds(c, feet_row) || grid.at(c, feet_row) != TileKind::kSaw) continue;
    const std::int32_t gap = c * kUnitsPerTile - (s.x + kAgentHalf);
    // Too close to clear it: back up for a run-up.
    if (gap >= 0 && gap < 30) return static_cast<int>(Action::kLeft);
    if (gap >= 0 && gap < 200 - kAgentHalf) return kRightJump;
  }

  for (const MonsterSpec& spec : level.monsters) {
    const MonsterTrack t = make_track(spec);
    if (t.y - kMonsterHalf != feet) continue;
    const std::int32_t mx = t.x_at(s.step_count + 1);
    const std::int32_t gap = (mx - kMonsterHalf) - (s.x + kAgentHalf);
    if (gap >= 40 && gap < 120) return kRightJump;
  }
  return kRight;
}

namespace {

constexpr int kLookahead = 30;
constexpr int kMaxJumpDelay = 12;
constexpr int kMaxWait = 12;

}  // namespace

// Alive (or holding the coin) after a pause of wait steps (negative: stand
// still throughout) or a forced jump at jump_at, with the heuristic driving
// every other step.
bool CoinRunScriptedRunner::survives(const PlatformerLevel& level, PlatformerState s, int wait,
                                     int jump_at) {
  for (int t = 0; t < kLookahead; ++t) {
    if (s.outcome == Outcome::kCoinAll || s.outcome == Outcome::kTimeout) return true;
    if (s.outcome != Outcome::kRunning) return false;
    Action a;
    if (wait < 0 || t < wait) {
      a = Action::kNoop;
    } else if (t == jump_at) {
      a = Action::kRightJump;
    } else {
      a = static_cast<Action>(propose(level, s));
    }
    step(level, s, a);
  }
  return s.outcome != Outcome::kDeath;
}

bool CoinRunScriptedRunner::safe_after(const PlatformerLevel& level, PlatformerState s,
                                       Action first) {
  step(level, s, first);
  if (s.outcome != Outcome::kRunning) return s.outcome != Outcome::kDeath;
  if (survives(level, s, 0, -1) || survives(level, s, -1, -1)) return true;
  for (int jump_at = 0; jump_at < kMaxJumpDelay; ++jump_at) {
    if (survives(level, s, 0, jump_at)) return true;
  }
  for (int wait = 1; wait <= kMaxWait; ++wait) {
    if (survives(level, s, wait, -1)) return true;
  }
  return false;
}

int CoinRunScriptedRunner::act(ConstObsSpan, const EnvView* view) {
  if (view == nullptr || view->platformer == nullptr || view->level == nullptr) {
    throw InvalidArgument("scripted-runner needs the platformer state");
  }
  const auto& level = std::get<PlatformerLevel>(*view->level);
  const PlatformerState& s = *view->platformer;
  const int proposal = propose(level, s);
  // Short simulated lookahead vetoes proposals that lead to certain death.
  const int fallbacks[] = {proposal,
                           static_cast<int>(Action::kRight),
                           static_cast<int>(Action::kRightJump),
                           static_cast<int>(Action::kNoop),
                           static_cast<int>(Action::kLeft),
                           static_cast<int>(Action::kLeftJump)};
  for (int a : fallbacks) {
    if (safe_after(level, s, static_cast<Action>(a))) return a;
  }
  return proposal;
}

std::unique_ptr<Agent> make_agent(std::string_view name, Game game,
                                  std::uint64_t seed) {
  if (name == "random") return std::make_unique<RandomAgent>(action_space_size(game), seed);
  if (name == "noop") return std::make_unique<ConstantAgent>(0);
  if (name == "bfs-oracle") {
    if (game != Game::kMazes) throw InvalidArgument("bfs-oracle only plays mazes");
    return std::make_unique<MazeBfsOracle>();
  }
  if (name == "scripted-runner") {
    if (game != Game::kCoinRun) {
      throw InvalidArgument("scripted-runner only plays coinrun");
    }
    return std::make_unique<CoinRunScriptedRunner>();
  }
  throw InvalidArgument("unknown agent '" + std::string(name) +
                        "' (expected random, noop, bfs-oracle or scripted-runner)");
}

}  // namespace procbench
