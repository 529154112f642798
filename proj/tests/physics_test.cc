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
#include <vector>

#include <gtest/gtest.h>

#include "procbench/error.h"
#include "procbench/search_oracle.h"

namespace procbench {
namespace {

using physics::Action;
using physics::Outcome;

// Walled corridor with ground rows [0, floor) and the agent on the left.
PlatformerLevel flat_level(Game game, int width, int floor = 2) {
  PlatformerLevel level;
  level.game = game;
  level.grid = TileGrid(width, 12);
  for (int y = 0; y < 12; ++y) {
    level.grid.set(0, y, TileKind::kWall);
    level.grid.set(width - 1, y, TileKind::kWall);
  }
  for (int x = 1; x < width - 1; ++x) {
    for (int y = 0; y < floor; ++y) level.grid.set(x, y, TileKind::kGround);
  }
  level.agent_spawn = {1, floor};
  return level;
}

void add_coin(PlatformerLevel& level, TileCoord c) {
  level.coin_positions.push_back(c);
  level.grid.set(c.x, c.y, TileKind::kCoin);
}

void dig(PlatformerLevel& level, int x0, int x1) {
  for (int x = x0; x <= x1; ++x) {
    for (int y = 0; y < level.grid.height(); ++y) level.grid.set(x, y, TileKind::kEmpty);
  }
}

struct Rollout {
  double ret = 0.0;
  int steps = 0;
  physics::PlatformerState state;
};

Rollout hold(const PlatformerLevel& level, Action a) {
  Rollout r;
  r.state = physics::reset(level);
  while (!r.state.done()) {
    r.ret += physics::step(level, r.state, a).reward;
    ++r.steps;
  }
  return r;
}

TEST(Physics, JumpEnvelopeFromConstants) {
  // Discrete heights climbed per step are vy - g/2 while rising.
  std::int32_t apex = 0;
  int airborne = 0;
  std::int32_t height = 0;
  for (std::int32_t vy = physics::kJumpVy;; vy -= physics::kGravity) {
    height += vy - physics::kGravity / 2;
    apex = std::max(apex, height);
    ++airborne;
    if (height <= 0) break;
  }
  EXPECT_EQ(apex, physics::kJumpApex);
  EXPECT_EQ(airborne * physics::kMaxVx, physics::kAirborneRange);
  EXPECT_GT(apex, physics::kMaxStepUp * physics::kUnitsPerTile);
  EXPECT_GT(physics::kAirborneRange, physics::kMaxGap * physics::kUnitsPerTile);
}

TEST(Physics, StandingJumpReachesApex) {
  const PlatformerLevel level = flat_level(Game::kCoinRun, 10);
  auto s = physics::reset(level);
  const std::int32_t y0 = s.y;
  ASSERT_TRUE(s.on_ground);
  std::int32_t top = y0;
  physics::step(level, s, Action::kJump);
  int steps = 1;
  while (!s.on_ground) {
    top = std::max(top, s.y);
    physics::step(level, s, Action::kNoop);
    ++steps;
  }
  EXPECT_EQ(top - y0, physics::kJumpApex);
  EXPECT_EQ(s.y, y0);
  EXPECT_EQ(steps, 2 * physics::kJumpVy / physics::kGravity);
}

TEST(Physics, NoopTimesOutAt1000) {
  PlatformerLevel level = flat_level(Game::kCoinRun, 12);
  add_coin(level, {10, 2});
  const Rollout r = hold(level, Action::kNoop);
  EXPECT_EQ(r.steps, 1000);
  EXPECT_EQ(r.state.outcome, Outcome::kTimeout);
  EXPECT_EQ(r.ret, 0.0);
  EXPECT_EQ(r.state.coins_left(), 1);
}

TEST(Physics, RunningRightCollectsCoin) {
  PlatformerLevel level = flat_level(Game::kCoinRun, 12);
  add_coin(level, {10, 2});
  Rollout r = hold(level, Action::kRight);
  EXPECT_EQ(r.state.outcome, Outcome::kCoinAll);
  EXPECT_EQ(r.ret, physics::kCoinReward);
  EXPECT_LT(r.steps, 40);
  EXPECT_THROW(physics::step(level, r.state, Action::kNoop), EpisodeFinished);
}

TEST(Physics, SawKills) {
  PlatformerLevel level = flat_level(Game::kCoinRun, 12);
  add_coin(level, {10, 2});
  level.grid.set(5, 2, TileKind::kSaw);
  const Rollout r = hold(level, Action::kRight);
  EXPECT_EQ(r.state.outcome, Outcome::kDeath);
  EXPECT_EQ(r.ret, 0.0);
  EXPECT_LT(r.state.x, 6 * physics::kUnitsPerTile);
}

TEST(Physics, LavaKills) {
  PlatformerLevel level = flat_level(Game::kCoinRun, 12);
  add_coin(level, {10, 2});
  level.grid.set(5, 1, TileKind::kLava);
  const Rollout r = hold(level, Action::kRight);
  EXPECT_EQ(r.state.outcome, Outcome::kDeath);
}

TEST(Physics, FallingOutKills) {
  PlatformerLevel level = flat_level(Game::kCoinRun, 14);
  add_coin(level, {12, 2});
  dig(level, 4, 6);
  const Rollout r = hold(level, Action::kRight);
  EXPECT_EQ(r.state.outcome, Outcome::kDeath);
  EXPECT_LE(r.state.y + physics::kAgentHalf, 0);
}

TEST(Physics, WallsBlock) {
  PlatformerLevel level = flat_level(Game::kCoinRun, 8);
  add_coin(level, {6, 8});
  auto s = physics::reset(level);
  for (int i = 0; i < 50; ++i) physics::step(level, s, Action::kLeft);
  EXPECT_EQ(s.x - physics::kAgentHalf, physics::kUnitsPerTile);
  EXPECT_FALSE(s.done());
}

TEST(Physics, LedgeOfTwoClimbableThreeNot) {
  for (int rise : {2, 3}) {
    PlatformerLevel level = flat_level(Game::kCoinRun, 16);
    for (int x = 8; x < 15; ++x) {
      for (int y = 2; y < 2 + rise; ++y) level.grid.set(x, y, TileKind::kGround);
    }
    add_coin(level, {13, 2 + rise});
    const SearchResult r = physics_search_oracle(level);
    EXPECT_EQ(r.verdict, rise <= physics::kMaxStepUp ? SearchVerdict::kSolved
                                                     : SearchVerdict::kUnsolvable)
        << "rise " << rise;
  }
}

// Widest gap a running jump clears: horizontal motion is applied before the
// fall on the first step below take-off height, and the agent may overhang
// either edge by just under its half width.
constexpr int kWidestGap =
    ((2 * physics::kJumpVy / physics::kGravity + 1) * physics::kMaxVx + 2 * (physics::kAgentHalf - 1)) /
    physics::kUnitsPerTile;

TEST(Physics, GapsUpToWidestJumpable) {
  static_assert(kWidestGap >= physics::kMaxGap);
  for (int gap : {physics::kMaxGap, kWidestGap, kWidestGap + 1}) {
    PlatformerLevel level = flat_level(Game::kCoinRun, 24);
    dig(level, 6, 5 + gap);
    add_coin(level, {21, 2});
    const SearchResult r = physics_search_oracle(level);
    EXPECT_EQ(r.verdict, gap <= kWidestGap ? SearchVerdict::kSolved : SearchVerdict::kUnsolvable)
        << "gap " << gap;
  }
}

TEST(Physics, CratesAreOneWay) {
  PlatformerLevel level = flat_level(Game::kCoinRun, 12);
  add_coin(level, {10, 8});
  for (int x = 1; x <= 4; ++x) level.grid.set(x, 3, TileKind::kCrate);
  auto s = physics::reset(level);
  physics::step(level, s, Action::kJump);
  while (!s.on_ground) physics::step(level, s, Action::kNoop);
  // Jumped up through the crate row and landed on top of it.
  EXPECT_EQ(s.y, 4 * physics::kUnitsPerTile + physics::kAgentHalf);
  physics::step(level, s, Action::kDown);
  while (!s.on_ground) physics::step(level, s, Action::kNoop);
  EXPECT_EQ(s.y, 2 * physics::kUnitsPerTile + physics::kAgentHalf);
}

TEST(Physics, PlatformsRewardIsCoinsPlusNine) {
  PlatformerLevel level = flat_level(Game::kPlatforms, 14);
  add_coin(level, {5, 2});
  add_coin(level, {8, 2});
  add_coin(level, {12, 2});
  auto s = physics::reset(level);
  std::vector<double> rewards;
  while (!s.done()) {
    const double r = physics::step(level, s, Action::kRight).reward;
    if (r != 0.0) rewards.push_back(r);
  }
  EXPECT_EQ(rewards, (std::vector<double>{1.0, 1.0, 10.0}));
  EXPECT_EQ(s.outcome, Outcome::kCoinAll);
}

TEST(Physics, PlatformsTimeoutAt1000) {
  PlatformerLevel level = flat_level(Game::kPlatforms, 14);
  add_coin(level, {12, 2});
  EXPECT_EQ(hold(level, Action::kNoop).steps, 1000);
}

TEST(Physics, MonsterPatrolEndpoints) {
  MonsterSpec m;
  m.patrol_start = {3, 2};
  m.patrol_end = {7, 2};
  m.speed = 0.04;
  const auto p0 = physics::monster_position(m, 0.0);
  const auto half = physics::monster_position(m, 0.5);
  const auto quarter = physics::monster_position(m, 0.25);
  EXPECT_DOUBLE_EQ(p0.x, 3.0);
  EXPECT_DOUBLE_EQ(half.x, 7.0);
  EXPECT_DOUBLE_EQ(quarter.x, 5.0);
  EXPECT_DOUBLE_EQ(physics::monster_position(m, 1.0).x, 3.0);

  const physics::MonsterTrack t = physics::make_track(m);
  EXPECT_EQ(t.speed, 4);
  const std::int32_t period = 2 * t.length / t.speed;
  std::int32_t lo = t.x_at(0), hi = t.x_at(0);
  for (std::int32_t k = 0; k < period; ++k) {
    lo = std::min(lo, t.x_at(k));
    hi = std::max(hi, t.x_at(k));
    EXPECT_EQ(t.x_at(k), t.x_at(k + period));
  }
  EXPECT_EQ(lo, 3 * physics::kUnitsPerTile + physics::kUnitsPerTile / 2);
  EXPECT_EQ(hi, 7 * physics::kUnitsPerTile + physics::kUnitsPerTile / 2);
}

TEST(Physics, MonsterTouchKills) {
  PlatformerLevel level = flat_level(Game::kCoinRun, 14);
  add_coin(level, {12, 2});
  level.monsters.push_back({{6, 2}, {10, 2}, 0.02, 0.0});
  const Rollout r = hold(level, Action::kRight);
  EXPECT_EQ(r.state.outcome, Outcome::kDeath);
}

TEST(Physics, ActionIndices) {
  for (int a = 0; a < physics::kNumActions; ++a) {
    EXPECT_EQ(static_cast<int>(physics::action_from_index(a)), a);
  }
  EXPECT_THROW(physics::action_from_index(7), InvalidAction);
  EXPECT_THROW(physics::action_from_index(-1), InvalidAction);
}

TEST(Physics, SolidKinds) {
  EXPECT_TRUE(physics::is_solid(TileKind::kGround));
  EXPECT_TRUE(physics::is_solid(TileKind::kWall));
  EXPECT_FALSE(physics::is_solid(TileKind::kCrate));
  EXPECT_FALSE(physics::is_solid(TileKind::kCoin));
  EXPECT_FALSE(physics::is_solid(TileKind::kSaw));
}

}  // namespace
}  // namespace procbench
