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
#ifndef PROCBENCH_LEVEL_H_
#define PROCBENCH_LEVEL_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "procbench/rng.h"

namespace procbench {

enum class Game { kCoinRun, kPlatforms, kMazes };

std::string_view game_name(Game game);
// Accepts "coinrun", "platforms", "mazes". Throws InvalidArgument otherwise.
Game parse_game(std::string_view name);

enum class TileKind : std::uint8_t {
  kEmpty = 0,
  kGround,
  kWall,
  kSaw,
  kLava,
  kCoin,
  kCrate,
};
inline constexpr int kNumTileKinds = 7;

char tile_char(TileKind kind);
std::optional<TileKind> tile_from_char(char c);

struct TileCoord {
  int x = 0;
  int y = 0;
  friend bool operator==(const TileCoord&, const TileCoord&) = default;
};

// Platformer tile grid. Row 0 is the bottom row; y grows upward.
class TileGrid {
 public:
  TileGrid() = default;
  TileGrid(int width, int height, TileKind fill = TileKind::kEmpty);

  int width() const { return width_; }
  int height() const { return height_; }
  bool in_bounds(int x, int y) const {
    return x >= 0 && y >= 0 && x < width_ && y < height_;
  }
  TileKind at(int x, int y) const { return cells_[index(x, y)]; }
  void set(int x, int y, TileKind kind) { cells_[index(x, y)] = kind; }
  const std::vector<TileKind>& cells() const { return cells_; }

  friend bool operator==(const TileGrid&, const TileGrid&) = default;

 private:
  std::size_t index(int x, int y) const {
    return static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) +
           static_cast<std::size_t>(x);
  }

  int width_ = 0;
  int height_ = 0;
  std::vector<TileKind> cells_;
};

// A monster walks back and forth between two tiles of the same row.
// initial_phase is a fraction of the full out-and-back cycle.
struct MonsterSpec {
  TileCoord patrol_start;
  TileCoord patrol_end;
  double speed = 0.0;  // tiles per step
  double initial_phase = 0.0;

  friend bool operator==(const MonsterSpec&, const MonsterSpec&) = default;
};

// CoinRun and CoinRun-Platforms levels. difficulty is set for CoinRun only.
struct PlatformerLevel {
  Game game = Game::kCoinRun;
  LevelSeed seed = 0;
  std::optional<int> difficulty;
  TileGrid grid;
  TileCoord agent_spawn;
  std::vector<TileCoord> coin_positions;
  std::vector<MonsterSpec> monsters;
  int palette_hue = 0;  // degrees, [0, 360)

  friend bool operator==(const PlatformerLevel&, const PlatformerLevel&) = default;
};

enum class CellKind : std::uint8_t { kWall = 0, kEmpty, kGoal };

struct CellCoord {
  int x = 0;  // column
  int y = 0;  // row, 0 at the top
  friend bool operator==(const CellCoord&, const CellCoord&) = default;
};

struct MazeLevel {
  LevelSeed seed = 0;
  int dim = 0;
  std::vector<CellKind> cells;  // row-major, dim * dim
  CellCoord agent_start;

  bool in_bounds(CellCoord c) const {
    return c.x >= 0 && c.y >= 0 && c.x < dim && c.y < dim;
  }
  CellKind at(CellCoord c) const {
    return cells[static_cast<std::size_t>(c.y * dim + c.x)];
  }
  bool is_corridor(CellCoord c) const {
    return in_bounds(c) && at(c) != CellKind::kWall;
  }
  CellCoord goal() const;

  friend bool operator==(const MazeLevel&, const MazeLevel&) = default;
};

using Level = std::variant<PlatformerLevel, MazeLevel>;

Game level_game(const Level& level);
LevelSeed level_seed(const Level& level);

// Generates the level for any game from its seed.
Level generate_level(Game game, LevelSeed seed);

}  // namespace procbench

#endif  // PROCBENCH_LEVEL_H_
