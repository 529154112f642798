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

#include "procbench/level_io.h"

#include <string>
#include <vector>

#include "json.hpp"
#include "procbench/error.h"

namespace procbench {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

constexpr std::string_view kFormatName = "procbench-level";

ordered_json streams_json() {
  return ordered_json{{"layout", static_cast<int>(StreamTag::kLayout)},
                      {"entities", static_cast<int>(StreamTag::kEntities)},
                      {"palette", static_cast<int>(StreamTag::kPalette)},
                      {"episode", static_cast<int>(StreamTag::kEpisode)},
                      {"augmentation", static_cast<int>(StreamTag::kAugmentation)}};
}

ordered_json coord_json(int x, int y) { return ordered_json{{"x", x}, {"y", y}}; }

char cell_char(CellKind kind) {
  switch (kind) {
    case CellKind::kWall:
      return '#';
    case CellKind::kEmpty:
      return '.';
    case CellKind::kGoal:
      return 'G';
  }
  return '?';
}

// Typed field access that reports the JSON path on failure.
class Reader {
 public:
  Reader(const json& node, std::string path) : node_(node), path_(std::move(path)) {}

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(path_ + ": " + what);
  }

  Reader field(const std::string& key) const {
    if (!node_.is_object()) fail("expected object");
    const auto it = node_.find(key);
    if (it == node_.end()) throw ParseError(path_ + "." + key + ": missing field");
    return Reader(*it, path_ + "." + key);
  }

  bool has(const std::string& key) const {
    return node_.is_object() && node_.contains(key);
  }

  Reader element(std::size_t i) const {
    return Reader(node_.at(i), path_ + "[" + std::to_string(i) + "]");
  }

  std::size_t array_size() const {
    if (!node_.is_array()) fail("expected array");
    return node_.size();
  }

  std::int64_t integer(std::int64_t lo, std::int64_t hi) const {
    if (!node_.is_number_integer()) fail("expected integer");
    const auto v = node_.get<std::int64_t>();
    if (v < lo || v > hi) {
      fail("value " + std::to_string(v) + " outside [" + std::to_string(lo) +
           ", " + std::to_string(hi) + "]");
    }
    return v;
  }

  double number() const {
    if (!node_.is_number()) fail("expected number");
    return node_.get<double>();
  }

  std::string string() const {
    if (!node_.is_string()) fail("expected string");
    return node_.get<std::string>();
  }

  const std::string& path() const { return path_; }

 private:
  const json& node_;
  std::string path_;
};

template <typename Coord>
Coord read_coord(const Reader& r, int width, int height) {
  Coord c;
  c.x = static_cast<int>(r.field("x").integer(0, width - 1));
  c.y = static_cast<int>(r.field("y").integer(0, height - 1));
  return c;
}

std::vector<std::string> read_rows(const Reader& r, std::size_t height,
                                   std::size_t width) {
  if (r.array_size() != height) {
    r.fail("expected " + std::to_string(height) + " rows, got " +
           std::to_string(r.array_size()));
  }
  std::vector<std::string> rows;
  for (std::size_t i = 0; i < height; ++i) {
    Reader row = r.element(i);
    std::string s = row.string();
    if (s.size() != width) {
      row.fail("expected " + std::to_string(width) + " characters, got " +
               std::to_string(s.size()));
    }
    rows.push_back(std::move(s));
  }
  return rows;
}

PlatformerLevel read_platformer(const Reader& root, Game game) {
  PlatformerLevel level;
  level.game = game;
  level.seed = static_cast<LevelSeed>(root.field("seed").integer(0, 0xFFFFFFFFLL));
  if (game == Game::kCoinRun) {
    level.difficulty = static_cast<int>(root.field("difficulty").integer(1, 3));
  } else if (root.has("difficulty")) {
    root.field("difficulty").fail("platforms levels have no difficulty");
  }
  const int width = static_cast<int>(root.field("width").integer(1, 1 << 16));
  const int height = static_cast<int>(root.field("height").integer(1, 1 << 16));
  level.grid = TileGrid(width, height);
  const Reader rows_reader = root.field("rows");
  const auto rows = read_rows(rows_reader, static_cast<std::size_t>(height),
                              static_cast<std::size_t>(width));
  for (int i = 0; i < height; ++i) {
    const int y = height - 1 - i;
    for (int x = 0; x < width; ++x) {
      const auto kind = tile_from_char(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(x)]);
      if (!kind) {
        rows_reader.element(static_cast<std::size_t>(i))
            .fail("unknown tile character at column " + std::to_string(x));
      }
      level.grid.set(x, y, *kind);
    }
  }
  level.agent_spawn = read_coord<TileCoord>(root.field("agent_spawn"), width, height);
  const Reader coins = root.field("coins");
  for (std::size_t i = 0; i < coins.array_size(); ++i) {
    level.coin_positions.push_back(read_coord<TileCoord>(coins.element(i), width, height));
  }
  const Reader monsters = root.field("monsters");
  for (std::size_t i = 0; i < monsters.array_size(); ++i) {
    const Reader m = monsters.element(i);
    MonsterSpec spec;
    spec.patrol_start = read_coord<TileCoord>(m.field("patrol_start"), width, height);
    spec.patrol_end = read_coord<TileCoord>(m.field("patrol_end"), width, height);
    if (spec.patrol_start.y != spec.patrol_end.y ||
        spec.patrol_start.x > spec.patrol_end.x) {
      m.fail("patrol endpoints must share a row with start.x <= end.x");
    }
    spec.speed = m.field("speed").number();
    if (!(spec.speed > 0.0)) m.field("speed").fail("speed must be positive");
    spec.initial_phase = m.field("initial_phase").number();
    if (!(spec.initial_phase >= 0.0 && spec.initial_phase < 1.0)) {
      m.field("initial_phase").fail("phase must lie in [0, 1)");
    }
    level.monsters.push_back(spec);
  }
  level.palette_hue = static_cast<int>(root.field("palette_hue").integer(0, 359));
  return level;
}

MazeLevel read_maze(const Reader& root) {
  MazeLevel level;
  level.seed = static_cast<LevelSeed>(root.field("seed").integer(0, 0xFFFFFFFFLL));
  level.dim = static_cast<int>(root.field("dim").integer(1, 1 << 12));
  const auto dim = static_cast<std::size_t>(level.dim);
  const Reader rows_reader = root.field("rows");
  const auto rows = read_rows(rows_reader, dim, dim);
  level.cells.reserve(dim * dim);
  int goals = 0;
  for (std::size_t y = 0; y < dim; ++y) {
    for (std::size_t x = 0; x < dim; ++x) {
      switch (rows[y][x]) {
        case '#':
          level.cells.push_back(CellKind::kWall);
          break;
        case '.':
          level.cells.push_back(CellKind::kEmpty);
          break;
        case 'G':
          level.cells.push_back(CellKind::kGoal);
          ++goals;
          break;
        default:
          rows_reader.element(y).fail("unknown cell character at column " +
                                      std::to_string(x));
      }
    }
  }
  if (goals != 1) rows_reader.fail("expected exactly one goal cell");
  const Reader start = root.field("agent_start");
  level.agent_start = read_coord<CellCoord>(start, level.dim, level.dim);
  if (level.at(level.agent_start) != CellKind::kEmpty) {
    start.fail("agent_start must be an empty cell");
  }
  return level;
}

}  // namespace

std::string serialize_level(const PlatformerLevel& level) {
  ordered_json doc;
  doc["format"] = kFormatName;
  doc["version"] = kLevelFormatVersion;
  doc["game"] = game_name(level.game);
  doc["seed"] = level.seed;
  if (level.difficulty) doc["difficulty"] = *level.difficulty;
  const TileGrid& grid = level.grid;
  doc["width"] = grid.width();
  doc["height"] = grid.height();
  ordered_json rows = ordered_json::array();
  for (int y = grid.height() - 1; y >= 0; --y) {
    std::string row(static_cast<std::size_t>(grid.width()), '.');
    for (int x = 0; x < grid.width(); ++x) {
      row[static_cast<std::size_t>(x)] = tile_char(grid.at(x, y));
    }
    rows.push_back(std::move(row));
  }
  doc["rows"] = std::move(rows);
  doc["agent_spawn"] = coord_json(level.agent_spawn.x, level.agent_spawn.y);
  ordered_json coins = ordered_json::array();
  for (const TileCoord& c : level.coin_positions) coins.push_back(coord_json(c.x, c.y));
  doc["coins"] = std::move(coins);
  ordered_json monsters = ordered_json::array();
  for (const MonsterSpec& m : level.monsters) {
    monsters.push_back(ordered_json{
        {"patrol_start", coord_json(m.patrol_start.x, m.patrol_start.y)},
        {"patrol_end", coord_json(m.patrol_end.x, m.patrol_end.y)},
        {"speed", m.speed},
        {"initial_phase", m.initial_phase}});
  }
  doc["monsters"] = std::move(monsters);
  doc["palette_hue"] = level.palette_hue;
  doc["streams"] = streams_json();
  return doc.dump(2) + "\n";
}

std::string serialize_level(const MazeLevel& level) {
  ordered_json doc;
  doc["format"] = kFormatName;
  doc["version"] = kLevelFormatVersion;
  doc["game"] = game_name(Game::kMazes);
  doc["seed"] = level.seed;
  doc["dim"] = level.dim;
  ordered_json rows = ordered_json::array();
  for (int y = 0; y < level.dim; ++y) {
    std::string row(static_cast<std::size_t>(level.dim), '#');
    for (int x = 0; x < level.dim; ++x) {
      row[static_cast<std::size_t>(x)] = cell_char(level.at({x, y}));
    }
    rows.push_back(std::move(row));
  }
  doc["rows"] = std::move(rows);
  doc["agent_start"] = coord_json(level.agent_start.x, level.agent_start.y);
  doc["streams"] = streams_json();
  return doc.dump(2) + "\n";
}

std::string serialize_level(const Level& level) {
  return std::visit([](const auto& l) { return serialize_level(l); }, level);
}

Level deserialize_level(std::string_view document) {
  json doc;
  try {
    doc = json::parse(document.begin(), document.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("$: invalid JSON: ") + e.what());
  }
  const Reader root(doc, "$");
  if (root.field("format").string() != kFormatName) {
    root.field("format").fail("expected \"procbench-level\"");
  }
  root.field("version").integer(kLevelFormatVersion, kLevelFormatVersion);
  Game game;
  try {
    game = parse_game(root.field("game").string());
  } catch (const InvalidArgument& e) {
    root.field("game").fail(e.what());
  }
  if (game == Game::kMazes) return read_maze(root);
  return read_platformer(root, game);
}

}  // namespace procbench
