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
#include "procbench/physics.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <string>

#include "procbench/error.h"

namespace procbench::physics {
namespace {

constexpr std::int32_t kMaxChunk = 40;  // < 2 * kAgentHalf, so no tunnelling

constexpr std::int32_t floor_div(std::int32_t a, std::int32_t b) {
  const std::int32_t q = a / b;
  return (a % b != 0 && ((a < 0) != (b < 0))) ? q - 1 : q;
}

struct Box {
  std::int32_t x0, x1, y0, y1;  // half-open [x0, x1) x [y0, y1)
};

Box agent_box(std::int32_t x, std::int32_t y) {
  return {x - kAgentHalf, x + kAgentHalf, y - kAgentHalf, y + kAgentHalf};
}

bool overlaps(const Box& a, const Box& b) {
  return a.x0 < b.x1 && b.x0 < a.x1 && a.y0 < b.y1 && b.y0 < a.y1;
}

// Columns outside the grid are walls; rows outside are open air.
bool solid_at(const TileGrid& grid, int col, int row) {
  if (col < 0 || col >= grid.width()) return true;
  if (row < 0 || row >= grid.height()) return false;
  return is_solid(grid.at(col, row));
}

bool crate_at(const TileGrid& grid, int col, int row) {
  return grid.in_bounds(col, row) && grid.at(col, row) == TileKind::kCrate;
}

void move_x(const TileGrid& grid, PlatformerState& s) {
  std::int32_t remaining = s.vx;
  while (remaining != 0) {
    const std::int32_t chunk = std::clamp(remaining, -kMaxChunk, kMaxChunk);
    const std::int32_t nx = s.x + chunk;
    const Box b = agent_box(nx, s.y);
    const int c0 = floor_div(b.x0, kUnitsPerTile);
    const int c1 = floor_div(b.x1 - 1, kUnitsPerTile);
    const int r0 = floor_div(b.y0, kUnitsPerTile);
    const int r1 = floor_div(b.y1 - 1, kUnitsPerTile);
    int hit = chunk > 0 ? std::numeric_limits<int>::max()
                        : std::numeric_limits<int>::min();
    bool blocked = false;
    for (int c = c0; c <= c1; ++c) {
      for (int r = r0; r <= r1; ++r) {
        if (!solid_at(grid, c, r)) continue;
        blocked = true;
        hit = chunk > 0 ? std::min(hit, c) : std::max(hit, c);
      }
    }
    if (blocked) {
      s.x = chunk > 0 ? hit * kUnitsPerTile - kAgentHalf
                      : (hit + 1) * kUnitsPerTile + kAgentHalf;
      s.vx = 0;
      return;
    }
    s.x = nx;
    remaining -= chunk;
  }
}

void move_y(const TileGrid& grid, PlatformerState& s, std::int32_t dy,
            bool drop_through) {
  s.on_ground = false;
  std::int32_t remaining = dy;
  while (remaining != 0) {
    const std::int32_t chunk = std::clamp(remaining, -kMaxChunk, kMaxChunk);
    const std::int32_t ny = s.y + chunk;
    const Box b = agent_box(s.x, ny);
    const int c0 = floor_div(b.x0, kUnitsPerTile);
    const int c1 = floor_div(b.x1 - 1, kUnitsPerTile);
    const int r0 = floor_div(b.y0, kUnitsPerTile);
    const int r1 = floor_div(b.y1 - 1, kUnitsPerTile);
    if (chunk < 0) {
      const std::int32_t old_bottom = s.y - kAgentHalf;
      int best_row = std::numeric_limits<int>::min();
      for (int c = c0; c <= c1; ++c) {
        for (int r = r0; r <= r1; ++r) {
          const std::int32_t top = (r + 1) * kUnitsPerTile;
          const bool lands =
              solid_at(grid, c, r) ||
              (!drop_through && crate_at(grid, c, r) && old_bottom >= top);
          if (lands) best_row = std::max(best_row, r);
        }
      }
      if (best_row != std::numeric_limits<int>::min()) {
        s.y = (best_row + 1) * kUnitsPerTile + kAgentHalf;
        s.vy = 0;
        s.on_ground = true;
        return;
      }
    } else {
      int best_row = std::numeric_limits<int>::max();
      for (int c = c0; c <= c1; ++c) {
        for (int r = r0; r <= r1; ++r) {
          if (solid_at(grid, c, r)) best_row = std::min(best_row, r);
        }
      }
      if (best_row != std::numeric_limits<int>::max()) {
        s.y = best_row * kUnitsPerTile - kAgentHalf;
        s.vy = 0;
        return;
      }
    }
    s.y = ny;
    remaining -= chunk;
  }
}

bool supported(const TileGrid& grid, const PlatformerState& s) {
  PlatformerState probe = s;
  move_y(grid, probe, -1, false);
  return probe.on_ground;
}

bool touches_coin(const Box& agent, TileCoord coin) {
  const Box tile{coin.x * kUnitsPerTile, (coin.x + 1) * kUnitsPerTile,
                 coin.y * kUnitsPerTile, (coin.y + 1) * kUnitsPerTile};
  return overlaps(agent, tile);
}

}  // namespace

bool is_solid(TileKind kind) {
  return kind == TileKind::kGround || kind == TileKind::kWall;
}

std::string_view action_name(Action action) {
  switch (action) {
    case Action::kNoop:
      return "noop";
    case Action::kLeft:
      return "left";
    case Action::kRight:
      return "right";
    case Action::kJump:
      return "jump";
    case Action::kLeftJump:
      return "left_jump";
    case Action::kRightJump:
      return "right_jump";
    case Action::kDown:
      return "down";
  }
  return "unknown";
}

Action action_from_index(int index) {
  if (index < 0 || index >= kNumActions) {
    throw InvalidAction("platformer action " + std::to_string(index) +
                        " outside [0, " + std::to_string(kNumActions) + ")");
  }
  return static_cast<Action>(index);
}

std::string_view outcome_name(Outcome outcome) {
  switch (outcome) {
    case Outcome::kRunning:
      return "running";
    case Outcome::kCoinAll:
      return "coin";
    case Outcome::kDeath:
      return "death";
    case Outcome::kTimeout:
      return "timeout";
  }
  return "unknown";
}

int PlatformerState::coins_left() const { return std::popcount(coins_remaining); }

std::int32_t MonsterTrack::x_at(std::int32_t step_count) const {
  if (length == 0 || speed == 0) return start_x;
  const std::int64_t cycle = 2 * static_cast<std::int64_t>(length);
  const std::int64_t s =
      (offset0 + static_cast<std::int64_t>(speed) * step_count) % cycle;
  const std::int64_t along = s < length ? s : cycle - s;
  return start_x + static_cast<std::int32_t>(along);
}

MonsterTrack make_track(const MonsterSpec& spec) {
  MonsterTrack t;
  t.start_x = spec.patrol_start.x * kUnitsPerTile + kUnitsPerTile / 2;
  t.y = spec.patrol_start.y * kUnitsPerTile + kMonsterHalf;
  t.length = (spec.patrol_end.x - spec.patrol_start.x) * kUnitsPerTile;
  t.speed = static_cast<std::int32_t>(std::lround(spec.speed * kUnitsPerTile));
  if (t.length > 0) {
    const std::int64_t cycle = 2 * static_cast<std::int64_t>(t.length);
    t.offset0 = static_cast<std::int32_t>(
        std::llround(spec.initial_phase * static_cast<double>(cycle)) % cycle);
  }
  return t;
}

TilePoint monster_position(const MonsterSpec& spec, double phase) {
  double p = phase - std::floor(phase);
  const double tri = p < 0.5 ? 2.0 * p : 2.0 - 2.0 * p;
  const double x = spec.patrol_start.x +
                   (spec.patrol_end.x - spec.patrol_start.x) * tri;
  return {x, static_cast<double>(spec.patrol_start.y)};
}

double monster_phase(const PlatformerLevel& level, std::size_t monster_index,
                     const PlatformerState& state) {
  const MonsterTrack t = make_track(level.monsters.at(monster_index));
  if (t.length == 0) return level.monsters[monster_index].initial_phase;
  const std::int64_t cycle = 2 * static_cast<std::int64_t>(t.length);
  const std::int64_t s =
      (t.offset0 + static_cast<std::int64_t>(t.speed) * state.step_count) % cycle;
  return static_cast<double>(s) / static_cast<double>(cycle);
}

int max_steps(Game game) {
  return game == Game::kPlatforms ? kPlatformsMaxSteps : kCoinRunMaxSteps;
}

PlatformerState reset(const PlatformerLevel& level) {
  PlatformerState s;
  s.x = level.agent_spawn.x * kUnitsPerTile + kUnitsPerTile / 2;
  s.y = level.agent_spawn.y * kUnitsPerTile + kAgentHalf;
  const std::size_t n = level.coin_positions.size();
  s.coins_remaining = n >= 64 ? ~0ULL : (1ULL << n) - 1;
  s.on_ground = supported(level.grid, s);
  return s;
}

bool death_check(const PlatformerLevel& level, const PlatformerState& state) {
  if (state.y + kAgentHalf <= 0) return true;
  const Box agent = agent_box(state.x, state.y);
  const TileGrid& grid = level.grid;
  const int c0 = std::max(0, floor_div(agent.x0, kUnitsPerTile));
  const int c1 = std::min(grid.width() - 1, floor_div(agent.x1 - 1, kUnitsPerTile));
  const int r0 = std::max(0, floor_div(agent.y0, kUnitsPerTile));
  const int r1 = std::min(grid.height() - 1, floor_div(agent.y1 - 1, kUnitsPerTile));
  for (int c = c0; c <= c1; ++c) {
    for (int r = r0; r <= r1; ++r) {
      const TileKind k = grid.at(c, r);
      if (k == TileKind::kSaw || k == TileKind::kLava) return true;
    }
  }
  for (const MonsterSpec& spec : level.monsters) {
    const MonsterTrack t = make_track(spec);
    const std::int32_t mx = t.x_at(state.step_count);
    const Box monster{mx - kMonsterHalf, mx + kMonsterHalf, t.y - kMonsterHalf,
                      t.y + kMonsterHalf};
    if (overlaps(agent, monster)) return true;
  }
  return false;
}

StepOutcome step(const PlatformerLevel& level, PlatformerState& s,
                 Action action) {
  if (s.done()) {
    throw EpisodeFinished("step() called on a finished platformer episode (" +
                          std::string(outcome_name(s.outcome)) + ")");
  }
  int dir = 0;
  bool jump = false;
  switch (action) {
    case Action::kLeft:
      dir = -1;
      break;
    case Action::kRight:
      dir = 1;
      break;
    case Action::kJump:
      jump = true;
      break;
    case Action::kLeftJump:
      dir = -1;
      jump = true;
      break;
    case Action::kRightJump:
      dir = 1;
      jump = true;
      break;
    case Action::kNoop:
    case Action::kDown:
      break;
  }

  if (dir != 0) {
    s.vx += dir * kRunAccel;
  } else if (s.vx > 0) {
    s.vx = std::max(0, s.vx - kFriction);
  } else {
    s.vx = std::min(0, s.vx + kFriction);
  }
  s.vx = std::clamp(s.vx, -kMaxVx, kMaxVx);

  if (jump && s.on_ground) s.vy = kJumpVy;

  // Exact constant-acceleration update: dy = vy - g/2, then vy -= g.
  const std::int32_t dy = std::max(s.vy - kGravity / 2, -kMaxFallVy);
  s.vy = std::max(s.vy - kGravity, -kMaxFallVy);

  move_x(level.grid, s);
  move_y(level.grid, s, dy, action == Action::kDown);
  // A fall that ends exactly on a surface counts as landing.
  if (!s.on_ground && dy <= 0) s.on_ground = supported(level.grid, s);

  StepOutcome out;
  const std::int32_t next_count = s.step_count + 1;
  PlatformerState probe = s;
  probe.step_count = next_count;
  if (death_check(level, probe)) {
    s.outcome = Outcome::kDeath;
  } else {
    const Box agent = agent_box(s.x, s.y);
    for (std::size_t i = 0; i < level.coin_positions.size() && i < 64; ++i) {
      const std::uint64_t bit = 1ULL << i;
      if ((s.coins_remaining & bit) == 0) continue;
      if (!touches_coin(agent, level.coin_positions[i])) continue;
      s.coins_remaining &= ~bit;
      if (level.game == Game::kCoinRun) {
        out.reward += kCoinReward;
        s.outcome = Outcome::kCoinAll;
        break;
      }
      out.reward += kPlatformsCoinReward;
    }
    if (level.game == Game::kPlatforms && s.coins_remaining == 0 &&
        !level.coin_positions.empty()) {
      out.reward += kPlatformsClearBonus;
      s.outcome = Outcome::kCoinAll;
    }
  }
  s.step_count = next_count;
  if (s.outcome == Outcome::kRunning && s.step_count >= max_steps(level.game)) {
    s.outcome = Outcome::kTimeout;
  }
  out.done = s.done();
  return out;
}

}  // namespace procbench::physics
