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
#include "procbench/maze_gen.h"

#include <deque>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "procbench/error.h"

namespace procbench {
namespace {

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(static_cast<std::size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int a) {
    while (parent_[static_cast<std::size_t>(a)] != a) {
      auto& p = parent_[static_cast<std::size_t>(a)];
      p = parent_[static_cast<std::size_t>(p)];
      a = p;
    }
    return a;
  }

  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[static_cast<std::size_t>(b)] = a;
    return true;
  }

 private:
  std::vector<int> parent_;
};

}  // namespace

MazeLevel generate_maze(LevelSeed seed) {
  Rng layout = derive_stream(seed, StreamTag::kLayout);
  Rng entities = derive_stream(seed, StreamTag::kEntities);

  MazeLevel level;
  level.seed = seed;
  level.dim = static_cast<int>(layout.uniform_int(kMazeMinDim, kMazeMaxDim));
  const int dim = level.dim;
  const int n = (dim + 1) / 2;
  level.cells.assign(static_cast<std::size_t>(dim * dim), CellKind::kWall);
  auto cell = [&](int x, int y) -> CellKind& {
    return level.cells[static_cast<std::size_t>(y * dim + x)];
  };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) cell(2 * j, 2 * i) = CellKind::kEmpty;
  }

  // Edges between lattice nodes, row-major, right edge before down edge.
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (j + 1 < n) edges.emplace_back(i * n + j, i * n + j + 1);
      if (i + 1 < n) edges.emplace_back(i * n + j, (i + 1) * n + j);
    }
  }
  for (std::size_t k = edges.size(); k > 1; --k) {
    const auto r = static_cast<std::size_t>(
        layout.uniform_int(0, static_cast<std::int64_t>(k) - 1));
    std::swap(edges[k - 1], edges[r]);
  }
  DisjointSets sets(n * n);
  for (const auto& [a, b] : edges) {
    if (!sets.unite(a, b)) continue;
    const int ax = 2 * (a % n), ay = 2 * (a / n);
    const int bx = 2 * (b % n), by = 2 * (b / n);
    cell((ax + bx) / 2, (ay + by) / 2) = CellKind::kEmpty;
  }

  const std::vector<CellCoord> corridor = corridor_cells(level);
  const auto count = static_cast<std::int64_t>(corridor.size());
  const auto goal = static_cast<std::size_t>(entities.uniform_int(0, count - 1));
  auto start = static_cast<std::size_t>(entities.uniform_int(0, count - 2));
  if (start >= goal) ++start;
  cell(corridor[goal].x, corridor[goal].y) = CellKind::kGoal;
  level.agent_start = corridor[start];
  return level;
}

std::vector<CellCoord> corridor_cells(const MazeLevel& level) {
  std::vector<CellCoord> out;
  for (int y = 0; y < level.dim; ++y) {
    for (int x = 0; x < level.dim; ++x) {
      if (level.at({x, y}) != CellKind::kWall) out.push_back({x, y});
    }
  }
  return out;
}

int shortest_path_length(const MazeLevel& level, CellCoord from, CellCoord to) {
  for (const CellCoord c : {from, to}) {
    if (!level.is_corridor(c)) {
      throw InvalidArgument("shortest_path_length: (" + std::to_string(c.x) +
                            ", " + std::to_string(c.y) +
                            ") is not a corridor cell");
    }
  }
  const int dim = level.dim;
  std::vector<int> dist(static_cast<std::size_t>(dim * dim), -1);
  std::deque<CellCoord> queue{from};
  dist[static_cast<std::size_t>(from.y * dim + from.x)] = 0;
  constexpr int kDx[4] = {0, 0, -1, 1};
  constexpr int kDy[4] = {-1, 1, 0, 0};
  while (!queue.empty()) {
    const CellCoord c = queue.front();
    queue.pop_front();
    const int d = dist[static_cast<std::size_t>(c.y * dim + c.x)];
    if (c == to) return d;
    for (int k = 0; k < 4; ++k) {
      const CellCoord nb{c.x + kDx[k], c.y + kDy[k]};
      if (!level.is_corridor(nb)) continue;
      int& nd = dist[static_cast<std::size_t>(nb.y * dim + nb.x)];
      if (nd >= 0) continue;
      nd = d + 1;
      queue.push_back(nb);
    }
  }
  throw InvalidArgument("shortest_path_length: cells are not connected");
}

}  // namespace procbench
