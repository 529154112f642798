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
#ifndef PROCBENCH_MAZE_GEN_H_
#define PROCBENCH_MAZE_GEN_H_

#include "procbench/level.h"

namespace procbench {

inline constexpr int kMazeMinDim = 3;
inline constexpr int kMazeMaxDim = 25;

// Perfect maze on a dim x dim grid, dim uniform in [3, 25]. Nodes sit at even
// coordinates; Kruskal over a Fisher-Yates shuffle of the lattice edges
// carves the wall cell between two nodes whenever it joins two components.
// When dim is even the last row and column stay wall.
//
// Layout stream: dim, then the shuffle. Entities stream: goal index, then
// start index among the remaining corridor cells.
MazeLevel generate_maze(LevelSeed seed);

// BFS distance in moves between two corridor cells. Throws InvalidArgument
// if either cell is a wall or out of bounds.
int shortest_path_length(const MazeLevel& level, CellCoord from, CellCoord to);

// Corridor cells (EMPTY or GOAL) in row-major order.
std::vector<CellCoord> corridor_cells(const MazeLevel& level);

}  // namespace procbench

#endif  // PROCBENCH_MAZE_GEN_H_
