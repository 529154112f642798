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
#include "procbench/coinrun_gen.h"

#include <algorithm>
#include <cstdlib>
#include <vector>

#include "procbench/physics.h"

namespace procbench {
namespace {

using physics::kMaxGap;
using physics::kMaxStepUp;

constexpr int kCrateRetries = 8;
constexpr int kPlatformRetries = 64;

struct Section {
  int start = 0;  // first ground column
  int end = 0;    // one past the last ground column
  int floor = 0;  // rows [0, floor) are ground
  bool hazard = false;
  bool monster = false;
};

// Monster speeds are multiples of 0.02 tiles/step so they are exact in
// fixed point.
MonsterSpec make_monster(Rng& rng, TileCoord start, TileCoord end) {
  MonsterSpec m;
  m.patrol_start = start;
  m.patrol_end = end;
  m.speed = 0.02 * static_cast<double>(rng.uniform_int(1, 4));
  const std::int64_t cycle =
      2 * static_cast<std::int64_t>(end.x - start.x) * physics::kUnitsPerTile;
  if (cycle > 0) {
    const std::int64_t offset = rng.uniform_int(0, cycle - 1);
    m.initial_phase = static_cast<double>(offset) / static_cast<double>(cycle);
  }
  return m;
}

}  // namespace

int sample_difficulty(LevelSeed seed) {
  Rng layout = derive_stream(seed, StreamTag::kLayout);
  return static_cast<int>(layout.uniform_int(1, 3));
}

PlatformerLevel generate_coinrun(LevelSeed seed) {
  Rng layout = derive_stream(seed, StreamTag::kLayout);
  Rng entities = derive_stream(seed, StreamTag::kEntities);
  Rng palette = derive_stream(seed, StreamTag::kPalette);

  const int difficulty = static_cast<int>(layout.uniform_int(1, 3));
  const int n_sections =
      static_cast<int>(layout.uniform_int(1 + difficulty, 2 + 2 * difficulty));
  int floor = static_cast<int>(layout.uniform_int(2, 4));

  std::vector<Section> sections;
  int x = 1;  // column 0 is the left wall
  for (int i = 0; i < n_sections; ++i) {
    if (i > 0 && layout.bernoulli(0.2 * difficulty)) {
      x += static_cast<int>(layout.uniform_int(1, kMaxGap));
    }
    const int length =
        static_cast<int>(layout.uniform_int(5, 4 + 3 * difficulty));
    if (i > 0) {
      const int delta =
          static_cast<int>(layout.uniform_int(-kMaxStepUp, kMaxStepUp));
      floor = std::clamp(floor + delta, 2, kCoinRunHeight - 8);
    }
    sections.push_back({x, x + length, floor});
    x += length;
  }
  const int width = x + 1;

  PlatformerLevel level;
  level.game = Game::kCoinRun;
  level.seed = seed;
  level.difficulty = difficulty;
  level.grid = TileGrid(width, kCoinRunHeight);
  TileGrid& grid = level.grid;
  for (int y = 0; y < kCoinRunHeight; ++y) {
    grid.set(0, y, TileKind::kWall);
    grid.set(width - 1, y, TileKind::kWall);
  }
  for (const Section& s : sections) {
    for (int c = s.start; c < s.end; ++c) {
      for (int y = 0; y < s.floor; ++y) grid.set(c, y, TileKind::kGround);
    }
  }

  for (std::size_t i = 0; i < sections.size(); ++i) {
    Section& s = sections[i];
    int hazard_col = -1;
    // The first section stays clear so the spawn is always safe.
    if (i > 0 && entities.bernoulli(0.15 * difficulty)) {
      const bool lava = entities.bernoulli(0.5);
      hazard_col = static_cast<int>(entities.uniform_int(s.start + 2, s.end - 3));
      if (lava) {
        grid.set(hazard_col, s.floor - 1, TileKind::kLava);
      } else {
        grid.set(hazard_col, s.floor, TileKind::kSaw);
      }
      s.hazard = true;
    }
    if (entities.bernoulli(0.2)) {
      const int height = static_cast<int>(entities.uniform_int(1, kMaxStepUp));
      for (int attempt = 0; attempt < kCrateRetries; ++attempt) {
        const int col =
            static_cast<int>(entities.uniform_int(s.start + 1, s.end - 2));
        if (hazard_col >= 0 && std::abs(col - hazard_col) <= 1) continue;
        for (int h = 0; h < height; ++h) grid.set(col, s.floor + h, TileKind::kCrate);
        break;
      }
    }
  }

  const int n_monsters = static_cast<int>(entities.uniform_int(0, difficulty));
  for (int m = 0; m < n_monsters; ++m) {
    std::vector<std::size_t> eligible;
    for (std::size_t i = 1; i < sections.size(); ++i) {
      const Section& s = sections[i];
      if (!s.hazard && !s.monster && s.end - s.start >= 4) eligible.push_back(i);
    }
    if (eligible.empty()) break;
    const auto pick = static_cast<std::size_t>(
        entities.uniform_int(0, static_cast<std::int64_t>(eligible.size()) - 1));
    Section& s = sections[eligible[pick]];
    s.monster = true;
    level.monsters.push_back(
        make_monster(entities, {s.start + 1, s.floor}, {s.end - 2, s.floor}));
  }

  const Section& first = sections.front();
  const Section& last = sections.back();
  level.agent_spawn = {first.start, first.floor};
  const TileCoord coin{last.end - 1, last.floor};
  level.coin_positions.push_back(coin);
  grid.set(coin.x, coin.y, TileKind::kCoin);
  level.palette_hue = static_cast<int>(palette.uniform_int(0, 359));
  return level;
}

PlatformerLevel generate_platforms(LevelSeed seed) {
  Rng layout = derive_stream(seed, StreamTag::kLayout);
  Rng entities = derive_stream(seed, StreamTag::kEntities);
  Rng palette = derive_stream(seed, StreamTag::kPalette);

  constexpr int W = kPlatformsWidth;
  constexpr int H = kPlatformsHeight;
  PlatformerLevel level;
  level.game = Game::kPlatforms;
  level.seed = seed;
  level.grid = TileGrid(W, H);
  TileGrid& grid = level.grid;
  for (int y = 0; y < H; ++y) {
    grid.set(0, y, TileKind::kWall);
    grid.set(W - 1, y, TileKind::kWall);
  }
  for (int c = 1; c < W - 1; ++c) {
    grid.set(c, 0, TileKind::kGround);
    grid.set(c, 1, TileKind::kGround);
  }

  // A surface is a horizontal run of standable tiles; row is the tile row
  // whose top the agent stands on.
  struct Surface {
    int x0, x1, row;  // inclusive columns
  };
  std::vector<Surface> surfaces{{1, W - 2, 1}};

  const int n_platforms = static_cast<int>(layout.uniform_int(10, 16));
  for (int p = 0; p < n_platforms; ++p) {
    for (int attempt = 0; attempt < kPlatformRetries; ++attempt) {
      const int length = static_cast<int>(layout.uniform_int(3, 8));
      const Surface& support = surfaces[static_cast<std::size_t>(
          layout.uniform_int(0, static_cast<std::int64_t>(surfaces.size()) - 1))];
      const int row = support.row + static_cast<int>(layout.uniform_int(1, kMaxStepUp));
      const int lo = std::max(1, support.x0 - kMaxGap - length + 1);
      const int hi = std::min(W - 1 - length, support.x1 + kMaxGap + 1);
      if (lo > hi) continue;
      const int x0 = static_cast<int>(layout.uniform_int(lo, hi));
      if (row + 2 >= H) continue;
      bool clear = true;
      for (int c = x0 - 1; c <= x0 + length && clear; ++c) {
        for (int r = row - 1; r <= row + 1; ++r) {
          if (c < 1 || c > W - 2 || grid.at(c, r) != TileKind::kEmpty) {
            // Neighbouring ground below the lowest platforms is fine.
            if (r == row - 1 && r <= 1 && c >= 1 && c <= W - 2) continue;
            clear = false;
            break;
          }
        }
      }
      if (!clear) continue;
      for (int c = x0; c < x0 + length; ++c) grid.set(c, row, TileKind::kCrate);
      surfaces.push_back({x0, x0 + length - 1, row});
      break;
    }
  }

  level.agent_spawn = {1, 2};

  std::vector<TileCoord> candidates;
  for (const Surface& s : surfaces) {
    for (int c = s.x0; c <= s.x1; ++c) {
      const TileCoord cell{c, s.row + 1};
      if (cell == level.agent_spawn) continue;
      if (grid.at(cell.x, cell.y) != TileKind::kEmpty) continue;
      candidates.push_back(cell);
    }
  }
  const int coin_count = static_cast<int>(
      entities.uniform_int(kPlatformsMinCoins, kPlatformsMaxCoins));
  const auto n_candidates = static_cast<std::int64_t>(candidates.size());
  for (int k = 0; k < coin_count && k < n_candidates; ++k) {
    const auto j = static_cast<std::size_t>(entities.uniform_int(k, n_candidates - 1));
    std::swap(candidates[static_cast<std::size_t>(k)], candidates[j]);
    const TileCoord coin = candidates[static_cast<std::size_t>(k)];
    level.coin_positions.push_back(coin);
    grid.set(coin.x, coin.y, TileKind::kCoin);
  }

  const int n_monsters = static_cast<int>(entities.uniform_int(2, 6));
  std::vector<std::size_t> eligible;
  for (std::size_t i = 1; i < surfaces.size(); ++i) {
    if (surfaces[i].x1 - surfaces[i].x0 + 1 >= 4) eligible.push_back(i);
  }
  for (int m = 0; m < n_monsters && !eligible.empty(); ++m) {
    const auto pick = static_cast<std::size_t>(
        entities.uniform_int(0, static_cast<std::int64_t>(eligible.size()) - 1));
    const Surface s = surfaces[eligible[pick]];
    eligible.erase(eligible.begin() + static_cast<std::ptrdiff_t>(pick));
    level.monsters.push_back(
        make_monster(entities, {s.x0, s.row + 1}, {s.x1, s.row + 1}));
  }

  level.palette_hue = static_cast<int>(palette.uniform_int(0, 359));
  return level;
}

int obstacle_count(const PlatformerLevel& level) {
  int count = static_cast<int>(level.monsters.size());
  for (TileKind k : level.grid.cells()) {
    if (k == TileKind::kSaw || k == TileKind::kLava) ++count;
  }
  return count;
}

}  // namespace procbench
