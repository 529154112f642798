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
#ifndef PROCBENCH_PHYSICS_H_
#define PROCBENCH_PHYSICS_H_

#include <array>
#include <cstdint>
#include <string_view>

#include "procbench/level.h"

// Platformer dynamics shared by CoinRun and CoinRun-Platforms.
//
// Positions and velocities are fixed point: one tile is kUnitsPerTile units,
// so every trajectory is bit-exact on every platform. The agent is an axis
// aligned box of half extent kAgentHalf centred on (x, y). Boxes are half-open,
// so touching faces do not overlap.
namespace procbench::physics {

inline constexpr std::int32_t kUnitsPerTile = 100;

inline constexpr std::int32_t kGravity = 20;    // 0.2 tiles/step^2
inline constexpr std::int32_t kJumpVy = 100;    // 1.0 tiles/step
inline constexpr std::int32_t kRunAccel = 10;   // 0.1 tiles/step^2
inline constexpr std::int32_t kMaxVx = 50;      // 0.5 tiles/step
inline constexpr std::int32_t kFriction = 5;    // 0.05 tiles/step^2
inline constexpr std::int32_t kAgentHalf = 45;  // 0.45 tiles
inline constexpr std::int32_t kMaxFallVy = 2 * kJumpVy;
inline constexpr std::int32_t kMonsterHalf = 40;

inline constexpr int kMaxGap = 4;     // tiles
inline constexpr int kMaxStepUp = 2;  // tiles

inline constexpr int kCoinRunMaxSteps = 1000;
inline constexpr int kPlatformsMaxSteps = 1000;
inline constexpr double kCoinReward = 10.0;
inline constexpr double kPlatformsCoinReward = 1.0;
inline constexpr double kPlatformsClearBonus = 9.0;

// Solvability contract with the level generators. Vertical motion is
// integrated exactly for constant acceleration, so the discrete apex and the
// airborne range equal the continuous formulas.
inline constexpr std::int32_t kJumpApex =
    kJumpVy * kJumpVy / (2 * kGravity);                           // 2.5 tiles
inline constexpr std::int32_t kAirborneRange = (2 * kJumpVy / kGravity) * kMaxVx;  // 5 tiles
static_assert(kJumpApex > kMaxStepUp * kUnitsPerTile);
static_assert(kAirborneRange > kMaxGap * kUnitsPerTile);
static_assert(kGravity % 2 == 0);

constexpr double to_tiles(std::int32_t units) {
  return static_cast<double>(units) / kUnitsPerTile;
}

enum class Action : std::uint8_t {
  kNoop = 0,
  kLeft = 1,
  kRight = 2,
  kJump = 3,
  kLeftJump = 4,
  kRightJump = 5,
  kDown = 6,
};
inline constexpr int kNumActions = 7;

std::string_view action_name(Action action);
// Throws InvalidAction unless 0 <= index < kNumActions.
Action action_from_index(int index);

enum class Outcome : std::uint8_t { kRunning = 0, kCoinAll, kDeath, kTimeout };
std::string_view outcome_name(Outcome outcome);

// Per-episode state. Monster positions are a pure function of the level and
// step_count, so they are not stored.
struct PlatformerState {
  std::int32_t x = 0;
  std::int32_t y = 0;
  std::int32_t vx = 0;
  std::int32_t vy = 0;
  bool on_ground = false;
  std::uint64_t coins_remaining = 0;  // bit i set while coin i is uncollected
  std::int32_t step_count = 0;
  Outcome outcome = Outcome::kRunning;

  bool done() const { return outcome != Outcome::kRunning; }
  int coins_left() const;

  friend bool operator==(const PlatformerState&, const PlatformerState&) = default;
};

struct StepOutcome {
  double reward = 0.0;
  bool done = false;
};

// Precomputed integer patrol parameters for one monster.
struct MonsterTrack {
  std::int32_t start_x = 0;   // centre x at phase 0, units
  std::int32_t y = 0;         // centre y, units
  std::int32_t length = 0;    // patrol length, units
  std::int32_t speed = 0;     // units per step
  std::int32_t offset0 = 0;   // initial position along the 2*length cycle

  // Centre x after step_count steps.
  std::int32_t x_at(std::int32_t step_count) const;
};

MonsterTrack make_track(const MonsterSpec& spec);

// Triangular wave between the patrol endpoints, in tiles. phase 0 gives
// patrol_start, phase 0.5 gives patrol_end.
struct TilePoint {
  double x = 0.0;
  double y = 0.0;
};
TilePoint monster_position(const MonsterSpec& spec, double phase);

// Fraction of the patrol cycle for monster i at the state's step count.
double monster_phase(const PlatformerLevel& level, std::size_t monster_index,
                     const PlatformerState& state);

int max_steps(Game game);

PlatformerState reset(const PlatformerLevel& level);

// Throws EpisodeFinished if state.done().
StepOutcome step(const PlatformerLevel& level, PlatformerState& state,
                 Action action);

// True when the agent overlaps a hazard tile or monster, or has fallen out of
// the bottom of the grid.
bool death_check(const PlatformerLevel& level, const PlatformerState& state);

// Solid tiles block from every side; crates only from above.
bool is_solid(TileKind kind);

}  // namespace procbench::physics

#endif  // PROCBENCH_PHYSICS_H_
