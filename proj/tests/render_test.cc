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

#include <cmath>
#include <filesystem>
#include <fstream>
#include <set>
#include <tuple>

#include <gtest/gtest.h>

#include "procbench/coinrun_gen.h"
#include "procbench/error.h"
#include "procbench/maze_gen.h"
#include "procbench/physics.h"

namespace procbench {
namespace {

const std::filesystem::path kTestData = PROCBENCH_TESTDATA_DIR;

Rgb pixel_rgb(const Observation& obs, int row, int col) {
  const std::uint8_t* p = obs.pixel(row, col);
  return {p[0], p[1], p[2]};
}

double distance(Rgb a, Rgb b) {
  const double dr = a.r - b.r, dg = a.g - b.g, db = a.b - b.b;
  return std::sqrt(dr * dr + dg * dg + db * db);
}

TEST(Render, GoldenCoinRunSeed42) {
  const PlatformerLevel level = generate_coinrun(42);
  const Observation obs = render_platformer(level, physics::reset(level), true);
  const Observation golden = read_ppm(kTestData / "coinrun_seed42_reset.ppm");
  EXPECT_EQ(obs.bytes, golden.bytes);
}

TEST(Render, Deterministic) {
  for (LevelSeed s = 0; s < 20; ++s) {
    const PlatformerLevel level = generate_platforms(s);
    auto state = physics::reset(level);
    for (int i = 0; i < 30 && !state.done(); ++i) {
      physics::step(level, state, physics::Action::kRightJump);
    }
    EXPECT_EQ(render_platformer(level, state, true).bytes,
              render_platformer(level, state, true).bytes);
  }
}

TEST(Render, PpmLayout) {
  const PlatformerLevel level = generate_coinrun(1);
  const Observation obs = render_platformer(level, physics::reset(level), false);
  const std::string bytes = ppm_bytes(obs.span());
  const std::string header = "P6\n64 64\n255\n";
  ASSERT_EQ(bytes.size(), header.size() + 64 * 64 * 3);
  EXPECT_EQ(bytes.size(), 12301u);
  EXPECT_EQ(bytes.substr(0, header.size()), header);

  const auto path = std::filesystem::temp_directory_path() / "procbench_render_test.ppm";
  write_ppm(obs.span(), path);
  EXPECT_EQ(std::filesystem::file_size(path), 12301u);
  EXPECT_EQ(read_ppm(path).bytes, obs.bytes);
  std::filesystem::remove(path);
}

TEST(Render, PpmErrors) {
  EXPECT_THROW(read_ppm("/nonexistent/dir/x.ppm"), IoError);
  Observation obs;
  EXPECT_THROW(write_ppm(obs.span(), "/nonexistent/dir/x.ppm"), IoError);
  const auto path = std::filesystem::temp_directory_path() / "procbench_bad.ppm";
  std::ofstream(path) << "P6\n32 32\n255\n";
  EXPECT_THROW(read_ppm(path), IoError);
  std::filesystem::remove(path);
}

TEST(Render, VelocityGrayEndpointsAndMidpoint) {
  const std::int32_t lim = physics::kMaxVx;
  EXPECT_EQ(velocity_gray(-lim, lim), 0);
  EXPECT_EQ(velocity_gray(lim, lim), 255);
  EXPECT_EQ(velocity_gray(0, lim), 128);
  EXPECT_EQ(velocity_gray(10 * lim, lim), 255);
  EXPECT_EQ(velocity_gray(-10 * lim, lim), 0);
  EXPECT_EQ(encode_velocity(0.0, 0.5), 128);
  EXPECT_EQ(encode_velocity(0.5, 0.5), 255);
  EXPECT_EQ(encode_velocity(-0.5, 0.5), 0);
  // Integer and floating paths agree on every representable velocity.
  for (std::int32_t v = -lim; v <= lim; ++v) {
    EXPECT_EQ(velocity_gray(v, lim), encode_velocity(physics::to_tiles(v), 0.5)) << v;
  }
  const std::int32_t vlim = 2 * physics::kJumpVy;
  for (std::int32_t v = -vlim; v <= vlim; ++v) {
    EXPECT_EQ(velocity_gray(v, vlim), encode_velocity(v, vlim)) << v;
  }
}

TEST(Render, VelocitySquaresPainted) {
  const PlatformerLevel level = generate_coinrun(5);
  auto state = physics::reset(level);
  for (int i = 0; i < 8; ++i) physics::step(level, state, physics::Action::kRight);
  const Observation painted = render_platformer(level, state, true);
  const Observation plain = render_platformer(level, state, false);
  const std::uint8_t gx = velocity_gray(state.vx, physics::kMaxVx);
  const std::uint8_t gy = velocity_gray(state.vy, 2 * physics::kJumpVy);
  int differing = 0;
  for (int r = 0; r < kObsHeight; ++r) {
    for (int c = 0; c < kObsWidth; ++c) {
      const bool in_vx = r >= kVelocityRow0 && r <= kVelocityRow1 && c >= kVxCol0 &&
                         c < kVxCol0 + kVelocitySquare;
      const bool in_vy = r >= kVelocityRow0 && r <= kVelocityRow1 && c >= kVyCol0 &&
                         c < kVyCol0 + kVelocitySquare;
      if (in_vx) {
        EXPECT_EQ(pixel_rgb(painted, r, c), (Rgb{gx, gx, gx}));
      }
      if (in_vy) {
        EXPECT_EQ(pixel_rgb(painted, r, c), (Rgb{gy, gy, gy}));
      }
      if (!in_vx && !in_vy) {
        EXPECT_EQ(pixel_rgb(painted, r, c), pixel_rgb(plain, r, c));
      } else {
        differing += !(pixel_rgb(painted, r, c) == pixel_rgb(plain, r, c));
      }
    }
  }
  EXPECT_GT(differing, 0);
}

TEST(Render, PaletteSeparatedFromEveryBackground) {
  const std::vector<Rgb> fg = {palette::tile(TileKind::kGround), palette::tile(TileKind::kWall),
                               palette::tile(TileKind::kSaw),    palette::tile(TileKind::kLava),
                               palette::tile(TileKind::kCoin),   palette::tile(TileKind::kCrate),
                               palette::kAgent,                  palette::kMonster};
  for (int hue = 0; hue < 360; ++hue) {
    const Rgb bg = palette::background(hue);
    for (const Rgb& c : fg) EXPECT_GE(distance(c, bg), 30.0) << "hue " << hue;
  }
  for (std::size_t i = 0; i < fg.size(); ++i) {
    for (std::size_t j = i + 1; j < fg.size(); ++j) EXPECT_GE(distance(fg[i], fg[j]), 30.0);
  }
}

TEST(Render, BackgroundVariesWithHue) {
  std::set<std::tuple<int, int, int>> colors;
  for (int hue = 0; hue < 360; hue += 10) {
    const Rgb c = palette::background(hue);
    colors.emplace(c.r, c.g, c.b);
  }
  EXPECT_GE(colors.size(), 30u);
  EXPECT_EQ(palette::background(0), palette::background(360));
}

TEST(Render, AgentVisibleAtSpawn) {
  for (LevelSeed s = 0; s < 50; ++s) {
    const PlatformerLevel level = generate_coinrun(s);
    const Observation obs = render_platformer(level, physics::reset(level), false);
    int agent_pixels = 0;
    for (int r = 0; r < kObsHeight; ++r)
      for (int c = 0; c < kObsWidth; ++c) agent_pixels += pixel_rgb(obs, r, c) == palette::kAgent;
    // 0.9 tiles at 4 px per tile.
    EXPECT_GE(agent_pixels, 9) << "seed " << s;
  }
}

TEST(RenderMaze, CentreBlockIsAgent) {
  for (LevelSeed s = 0; s < 50; ++s) {
    const MazeLevel m = generate_maze(s);
    const Observation obs = render_maze(m, maze::reset(m));
    for (int r = 28; r < 35; ++r)
      for (int c = 28; c < 35; ++c) EXPECT_EQ(pixel_rgb(obs, r, c), palette::kMazeAgent);
  }
}

TEST(RenderMaze, CornerShowsOutOfBoundsAsWall) {
  const MazeLevel m = generate_maze(11);
  maze::MazeState s = maze::reset(m);
  s.agent = {0, 0};
  const Observation obs = render_maze(m, s);
  // Cells left of and above the agent are outside the grid.
  for (int r = 0; r < 28; ++r)
    for (int c = 0; c < 64; ++c) EXPECT_EQ(pixel_rgb(obs, r, c), palette::kMazeWall);
  // Final row and column replicate the 63rd.
  for (int i = 0; i < 64; ++i) {
    EXPECT_EQ(pixel_rgb(obs, 63, i), pixel_rgb(obs, 62, i));
    EXPECT_EQ(pixel_rgb(obs, i, 63), pixel_rgb(obs, i, 62));
  }
}

TEST(RenderMaze, PartialObservability) {
  int checked = 0;
  for (LevelSeed s = 0; s < 300 && checked < 30; ++s) {
    MazeLevel m = generate_maze(s);
    const maze::MazeState st = maze::reset(m);
    const CellCoord g = m.goal();
    if (std::abs(g.x - st.agent.x) <= 4 && std::abs(g.y - st.agent.y) <= 4) continue;
    ++checked;
    const Observation before = render_maze(m, st);
    for (std::size_t i = 0; i < before.bytes.size(); i += 3) {
      const Rgb c{before.bytes[i], before.bytes[i + 1], before.bytes[i + 2]};
      EXPECT_FALSE(c == palette::kMazeGoal);
    }
    // Flipping every cell outside the patch leaves the frame unchanged.
    for (int y = 0; y < m.dim; ++y) {
      for (int x = 0; x < m.dim; ++x) {
        if (std::abs(x - st.agent.x) <= 4 && std::abs(y - st.agent.y) <= 4) continue;
        auto& cell = m.cells[static_cast<std::size_t>(y * m.dim + x)];
        cell = cell == CellKind::kWall ? CellKind::kEmpty : CellKind::kWall;
      }
    }
    EXPECT_EQ(render_maze(m, st).bytes, before.bytes);
  }
  EXPECT_EQ(checked, 30);
}

}  // namespace
}  // namespace procbench
