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
#ifndef PROCBENCH_RENDER_H_
#define PROCBENCH_RENDER_H_

#include <array>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>

#include "procbench/level.h"
#include "procbench/maze_sim.h"
#include "procbench/physics.h"

namespace procbench {

inline constexpr int kObsWidth = 64;
inline constexpr int kObsHeight = 64;
inline constexpr int kObsChannels = 3;
inline constexpr std::size_t kObsBytes = kObsWidth * kObsHeight * kObsChannels;

using ObsSpan = std::span<std::uint8_t, kObsBytes>;
using ConstObsSpan = std::span<const std::uint8_t, kObsBytes>;

// 64x64 RGB image, row-major, top row first.
struct Observation {
  std::array<std::uint8_t, kObsBytes> bytes{};

  ObsSpan span() { return ObsSpan(bytes); }
  ConstObsSpan span() const { return ConstObsSpan(bytes); }
  const std::uint8_t* pixel(int row, int col) const {
    return bytes.data() + (row * kObsWidth + col) * kObsChannels;
  }
  friend bool operator==(const Observation&, const Observation&) = default;
};

struct Rgb {
  std::uint8_t r = 0, g = 0, b = 0;
  friend bool operator==(const Rgb&, const Rgb&) = default;
};

namespace palette {
Rgb tile(TileKind kind);  // kEmpty is drawn with background(hue) instead
Rgb background(int hue_degrees);
inline constexpr Rgb kAgent{40, 80, 230};
inline constexpr Rgb kMonster{140, 20, 160};
inline constexpr Rgb kMazeWall{40, 40, 40};
inline constexpr Rgb kMazeEmpty{160, 220, 160};
inline constexpr Rgb kMazeGoal{220, 60, 60};
inline constexpr Rgb kMazeAgent{60, 60, 220};
}  // namespace palette

inline constexpr int kViewTiles = 16;
inline constexpr int kPixelsPerTile = kObsWidth / kViewTiles;
inline constexpr int kMazePatch = 9;
inline constexpr int kMazeCellPixels = 7;

// Velocity squares: rows 2-5, columns 2-5 (vx) and 8-11 (vy).
inline constexpr int kVelocityRow0 = 2;
inline constexpr int kVelocityRow1 = 5;
inline constexpr int kVxCol0 = 2;
inline constexpr int kVyCol0 = 8;
inline constexpr int kVelocitySquare = 4;

// Gray level round-half-up(255 * (v + limit) / (2 * limit)) with v clamped to
// [-limit, limit]. Integer version used by the rasteriser.
std::uint8_t velocity_gray(std::int32_t v, std::int32_t limit);
std::uint8_t encode_velocity(double v, double limit);
double decode_velocity(std::uint8_t gray, double limit);

// Agent-centred 16x16 tile window, clamped to the level, 4 px per tile.
void render_platformer(const PlatformerLevel& level,
                       const physics::PlatformerState& state,
                       bool paint_velocity, ObsSpan out);
Observation render_platformer(const PlatformerLevel& level,
                              const physics::PlatformerState& state,
                              bool paint_velocity);

// 9x9 cells around the agent at 7 px per cell; cells beyond the border are
// drawn as wall and the last pixel row/column is replicated.
void render_maze(const MazeLevel& level, const maze::MazeState& state,
                 ObsSpan out);
Observation render_maze(const MazeLevel& level, const maze::MazeState& state);

// Binary P6 with header "P6\n64 64\n255\n". Throws IoError.
std::string ppm_bytes(ConstObsSpan obs);
void write_ppm(ConstObsSpan obs, const std::filesystem::path& path);
Observation read_ppm(const std::filesystem::path& path);

}  // namespace procbench

#endif  // PROCBENCH_RENDER_H_
