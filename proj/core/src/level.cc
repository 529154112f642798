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
#include "procbench/level.h"

#include <string>

#include "procbench/coinrun_gen.h"
#include "procbench/error.h"
#include "procbench/maze_gen.h"

namespace procbench {

std::string_view game_name(Game game) {
  switch (game) {
    case Game::kCoinRun:
      return "coinrun";
    case Game::kPlatforms:
      return "platforms";
    case Game::kMazes:
      return "mazes";
  }
  return "unknown";
}

Game parse_game(std::string_view name) {
  if (name == "coinrun") return Game::kCoinRun;
  if (name == "platforms") return Game::kPlatforms;
  if (name == "mazes") return Game::kMazes;
  throw InvalidArgument("unknown game '" + std::string(name) +
                        "' (expected coinrun, platforms or mazes)");
}

namespace {
constexpr char kTileChars[kNumTileKinds] = {'.', '#', 'W', '^', '~', '$', '='};
}  // namespace

char tile_char(TileKind kind) {
  return kTileChars[static_cast<int>(kind)];
}

std::optional<TileKind> tile_from_char(char c) {
  for (int i = 0; i < kNumTileKinds; ++i) {
    if (kTileChars[i] == c) return static_cast<TileKind>(i);
  }
  return std::nullopt;
}

TileGrid::TileGrid(int width, int height, TileKind fill)
    : width_(width), height_(height) {
  if (width <= 0 || height <= 0) {
    throw InvalidArgument("TileGrid: non-positive size " +
                          std::to_string(width) + "x" + std::to_string(height));
  }
  cells_.assign(static_cast<std::size_t>(width) * static_cast<std::size_t>(height),
                fill);
}

CellCoord MazeLevel::goal() const {
  for (int y = 0; y < dim; ++y) {
    for (int x = 0; x < dim; ++x) {
      if (at({x, y}) == CellKind::kGoal) return {x, y};
    }
  }
  throw InvalidArgument("maze has no goal cell");
}

Game level_game(const Level& level) {
  if (const auto* p = std::get_if<PlatformerLevel>(&level)) return p->game;
  return Game::kMazes;
}

LevelSeed level_seed(const Level& level) {
  return std::visit([](const auto& l) { return l.seed; }, level);
}

Level generate_level(Game game, LevelSeed seed) {
  switch (game) {
    case Game::kCoinRun:
      return generate_coinrun(seed);
    case Game::kPlatforms:
      return generate_platforms(seed);
    case Game::kMazes:
      return generate_maze(seed);
  }
  throw InvalidArgument("generate_level: unknown game");
}

}  // namespace procbench
