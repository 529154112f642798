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
#include "procbench/render.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iterator>
#include <sstream>

#include "procbench/error.h"

namespace procbench {
namespace {

using physics::kUnitsPerTile;

constexpr std::int32_t kViewUnits = kViewTiles * kUnitsPerTile;
constexpr std::int32_t kUnitsPerPixel = kUnitsPerTile / kPixelsPerTile;
constexpr std::string_view kPpmHeader = "P6\n64 64\n255\n";

constexpr std::int32_t floor_div(std::int32_t a, std::int32_t b) {
  const std::int32_t q = a / b;
  return (a % b != 0 && ((a < 0) != (b < 0))) ? q - 1 : q;
}

void put(ObsSpan out, int row, int col, Rgb c) {
  std::uint8_t* p = out.data() + (row * kObsWidth + col) * kObsChannels;
  p[0] = c.r;
  p[1] = c.g;
  p[2] = c.b;
}

std::int32_t camera_origin(std::int32_t centre, std::int32_t extent) {
  if (extent <= kViewUnits) return (extent - kViewUnits) / 2;
  return std::clamp(centre - kViewUnits / 2, 0, extent - kViewUnits);
}

// Fills pixels whose sample point lies inside the half-open box.
void fill_box(ObsSpan out, std::int32_t cam_x, std::int32_t cam_top,
              std::int32_t x0, std::int32_t x1, std::int32_t y0,
              std::int32_t y1, Rgb color) {
  for (int row = 0; row < kObsHeight; ++row) {
    const std::int32_t wy = cam_top - row * kUnitsPerPixel - kUnitsPerPixel / 2;
    if (wy < y0 || wy >= y1) continue;
    for (int col = 0; col < kObsWidth; ++col) {
      const std::int32_t wx = cam_x + col * kUnitsPerPixel + kUnitsPerPixel / 2;
      if (wx >= x0 && wx < x1) put(out, row, col, color);
    }
  }
}

void fill_square(ObsSpan out, int row0, int col0, std::uint8_t gray) {
  for (int r = row0; r < row0 + kVelocitySquare; ++r) {
    for (int c = col0; c < col0 + kVelocitySquare; ++c) put(out, r, c, {gray, gray, gray});
  }
}

}  // namespace

namespace palette {

Rgb tile(TileKind kind) {
  switch (kind) {
    case TileKind::kEmpty:
      return {0, 0, 0};
    case TileKind::kGround:
      return {120, 80, 40};
    case TileKind::kWall:
      return {70, 70, 80};
    case TileKind::kSaw:
      return {235, 40, 40};
    case TileKind::kLava:
      return {255, 120, 0};
    case TileKind::kCoin:
      return {255, 210, 0};
    case TileKind::kCrate:
      return {170, 120, 50};
  }
  return {0, 0, 0};
}

// Integer HSV to RGB at saturation 89/255 and value 242/255.
Rgb background(int hue_degrees) {
  constexpr int s = 89;
  constexpr int v = 242;
  const int h = ((hue_degrees % 360) + 360) % 360;
  const int region = h / 60;
  const int rem = (h % 60) * 255 / 60;
  const auto p = static_cast<std::uint8_t>(v * (255 - s) / 255);
  const auto q = static_cast<std::uint8_t>(v * (255 - s * rem / 255) / 255);
  const auto t = static_cast<std::uint8_t>(v * (255 - s * (255 - rem) / 255) / 255);
  const auto vv = static_cast<std::uint8_t>(v);
  switch (region) {
    case 0:
      return {vv, t, p};
    case 1:
      return {q, vv, p};
    case 2:
      return {p, vv, t};
    case 3:
      return {p, q, vv};
    case 4:
      return {t, p, vv};
    default:
      return {vv, p, q};
  }
}

}  // namespace palette

std::uint8_t velocity_gray(std::int32_t v, std::int32_t limit) {
  const std::int64_t clamped = std::clamp(v, -limit, limit);
  const std::int64_t num = 255 * (clamped + limit) + limit;
  return static_cast<std::uint8_t>(num / (2 * static_cast<std::int64_t>(limit)));
}

std::uint8_t encode_velocity(double v, double limit) {
  const double clamped = std::clamp(v, -limit, limit);
  // The tolerance keeps exact halves such as 25.5 from rounding down after
  // representation error.
  return static_cast<std::uint8_t>(
      std::floor(255.0 * (clamped + limit) / (2.0 * limit) + 0.5 + 1e-9));
}

double decode_velocity(std::uint8_t gray, double limit) {
  return static_cast<double>(gray) / 255.0 * (2.0 * limit) - limit;
}

void render_platformer(const PlatformerLevel& level,
                       const physics::PlatformerState& state,
                       bool paint_velocity, ObsSpan out) {
  const TileGrid& grid = level.grid;
  const std::int32_t cam_x = camera_origin(state.x, grid.width() * kUnitsPerTile);
  const std::int32_t cam_y = camera_origin(state.y, grid.height() * kUnitsPerTile);
  const std::int32_t cam_top = cam_y + kViewUnits;
  const Rgb background = palette::background(level.palette_hue);

  std::array<int, kObsWidth> col_tile{};
  for (int col = 0; col < kObsWidth; ++col) {
    col_tile[static_cast<std::size_t>(col)] = floor_div(
        cam_x + col * kUnitsPerPixel + kUnitsPerPixel / 2, kUnitsPerTile);
  }
  for (int row = 0; row < kObsHeight; ++row) {
    const int ty = floor_div(cam_top - row * kUnitsPerPixel - kUnitsPerPixel / 2,
                             kUnitsPerTile);
    for (int col = 0; col < kObsWidth; ++col) {
      const int tx = col_tile[static_cast<std::size_t>(col)];
      Rgb color = background;
      if (tx < 0 || tx >= grid.width()) {
        color = palette::tile(TileKind::kWall);
      } else if (ty >= 0 && ty < grid.height()) {
        const TileKind kind = grid.at(tx, ty);
        if (kind == TileKind::kCoin) {
          for (std::size_t i = 0; i < level.coin_positions.size() && i < 64; ++i) {
            if (level.coin_positions[i] == TileCoord{tx, ty} &&
                (state.coins_remaining >> i & 1ULL)) {
              color = palette::tile(kind);
            }
          }
        } else if (kind != TileKind::kEmpty) {
          color = palette::tile(kind);
        }
      }
      put(out, row, col, color);
    }
  }

  for (const MonsterSpec& spec : level.monsters) {
    const physics::MonsterTrack t = physics::make_track(spec);
    const std::int32_t mx = t.x_at(state.step_count);
    fill_box(out, cam_x, cam_top, mx - physics::kMonsterHalf,
             mx + physics::kMonsterHalf, t.y - physics::kMonsterHalf,
             t.y + physics::kMonsterHalf, palette::kMonster);
  }
  fill_box(out, cam_x, cam_top, state.x - physics::kAgentHalf,
           state.x + physics::kAgentHalf, state.y - physics::kAgentHalf,
           state.y + physics::kAgentHalf, palette::kAgent);

  if (paint_velocity) {
    fill_square(out, kVelocityRow0, kVxCol0,
                velocity_gray(state.vx, physics::kMaxVx));
    fill_square(out, kVelocityRow0, kVyCol0,
                velocity_gray(state.vy, 2 * physics::kJumpVy));
  }
}

Observation render_platformer(const PlatformerLevel& level,
                              const physics::PlatformerState& state,
                              bool paint_velocity) {
  Observation obs;
  render_platformer(level, state, paint_velocity, obs.span());
  return obs;
}

void render_maze(const MazeLevel& level, const maze::MazeState& state,
                 ObsSpan out) {
  constexpr int kPatchPixels = kMazePatch * kMazeCellPixels;  // 63
  constexpr int kHalf = kMazePatch / 2;
  std::array<Rgb, kMazePatch * kMazePatch> patch{};
  for (int dy = 0; dy < kMazePatch; ++dy) {
    for (int dx = 0; dx < kMazePatch; ++dx) {
      const CellCoord c{state.agent.x + dx - kHalf, state.agent.y + dy - kHalf};
      Rgb color = palette::kMazeWall;
      if (dx == kHalf && dy == kHalf) {
        color = palette::kMazeAgent;
      } else if (level.in_bounds(c)) {
        switch (level.at(c)) {
          case CellKind::kWall:
            color = palette::kMazeWall;
            break;
          case CellKind::kEmpty:
            color = palette::kMazeEmpty;
            break;
          case CellKind::kGoal:
            color = palette::kMazeGoal;
            break;
        }
      }
      patch[static_cast<std::size_t>(dy * kMazePatch + dx)] = color;
    }
  }
  for (int row = 0; row < kObsHeight; ++row) {
    const int pr = std::min(row, kPatchPixels - 1) / kMazeCellPixels;
    for (int col = 0; col < kObsWidth; ++col) {
      const int pc = std::min(col, kPatchPixels - 1) / kMazeCellPixels;
      put(out, row, col, patch[static_cast<std::size_t>(pr * kMazePatch + pc)]);
    }
  }
}

Observation render_maze(const MazeLevel& level, const maze::MazeState& state) {
  Observation obs;
  render_maze(level, state, obs.span());
  return obs;
}

std::string ppm_bytes(ConstObsSpan obs) {
  std::string out(kPpmHeader);
  out.append(reinterpret_cast<const char*>(obs.data()), obs.size());
  return out;
}

void write_ppm(ConstObsSpan obs, const std::filesystem::path& path) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open '" + path.string() + "' for writing");
  const std::string bytes = ppm_bytes(obs);
  f.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!f) throw IoError("write failed for '" + path.string() + "'");
}

Observation read_ppm(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open '" + path.string() + "'");
  const std::string bytes((std::istreambuf_iterator<char>(f)),
                          std::istreambuf_iterator<char>());
  if (bytes.size() != kPpmHeader.size() + kObsBytes ||
      bytes.compare(0, kPpmHeader.size(), kPpmHeader) != 0) {
    throw IoError("'" + path.string() + "' is not a 64x64 P6 image");
  }
  Observation obs;
  std::copy(bytes.begin() + static_cast<std::ptrdiff_t>(kPpmHeader.size()),
            bytes.end(), obs.bytes.begin());
  return obs;
}

}  // namespace procbench
