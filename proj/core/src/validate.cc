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

#include "procbench/validate.h"

#include <algorithm>
#include <atomic>
#include <deque>
#include <sstream>
#include <thread>

#include "procbench/agents.h"
#include "procbench/coinrun_gen.h"
#include "procbench/env.h"
#include "procbench/error.h"
#include "procbench/maze_gen.h"

namespace procbench {
namespace {

constexpr std::size_t kMaxListedFailures = 8;

std::vector<std::string> check_names(Game game) {
  switch (game) {
    case Game::kMazes:
      return {"tree", "goal_reachable", "oracle_success"};
    case Game::kCoinRun:
      return {"corridor_scan", "search_solved", "witness_replay"};
    case Game::kPlatforms:
      return {"coin_count", "search_solved", "witness_return"};
  }
  return {};
}

std::vector<bool> check_maze(LevelSeed seed) {
  const MazeLevel m = generate_maze(seed);
  const std::vector<CellCoord> cells = corridor_cells(m);
  int edges = 0;
  for (const CellCoord c : cells) {
    if (m.is_corridor({c.x + 1, c.y})) ++edges;
    if (m.is_corridor({c.x, c.y + 1})) ++edges;
  }
  // Connected with C - 1 edges is a tree.
  std::vector<char> seen(static_cast<std::size_t>(m.dim * m.dim), 0);
  std::deque<CellCoord> queue{m.agent_start};
  seen[static_cast<std::size_t>(m.agent_start.y * m.dim + m.agent_start.x)] = 1;
  std::size_t reached = 0;
  while (!queue.empty()) {
    const CellCoord c = queue.front();
    queue.pop_front();
    ++reached;
    for (const CellCoord n : {CellCoord{c.x + 1, c.y}, CellCoord{c.x - 1, c.y},
                              CellCoord{c.x, c.y + 1}, CellCoord{c.x, c.y - 1}}) {
      if (!m.is_corridor(n)) continue;
      char& s = seen[static_cast<std::size_t>(n.y * m.dim + n.x)];
      if (s) continue;
      s = 1;
      queue.push_back(n);
    }
  }
  const bool tree = reached == cells.size() && edges + 1 == static_cast<int>(cells.size());

  const int path = shortest_path_length(m, m.agent_start, m.goal());
  const bool reachable = path > 0 && path < maze::kMaxSteps;

  EnvOptions options;
  options.render = false;
  Env env(Game::kMazes, options);
  env.reset(Level(m));
  MazeBfsOracle oracle;
  const EnvView view = env.view();
  oracle.reset(view);
  while (!env.done()) env.step(oracle.act(env.observation(), &view));
  const bool solved = env.episode().outcome == EpisodeOutcome::kSuccess &&
                      env.episode().episode_steps == path;
  return {tree, reachable, solved};
}

// Left-to-right scan of the solid ground line from the spawn to the coin.
bool corridor_scan(const PlatformerLevel& level) {
  const TileGrid& g = level.grid;
  auto top = [&](int col) {
    for (int r = g.height() - 1; r >= 0; --r) {
      if (physics::is_solid(g.at(col, r))) return r + 1;
    }
    return -1;
  };
  const int goal = level.coin_positions.at(0).x;
  int last_top = top(level.agent_spawn.x);
  int pit = 0;
  for (int c = level.agent_spawn.x + 1; c <= goal; ++c) {
    const int t = top(c);
    if (t < 0) {
      if (++pit > physics::kMaxGap) return false;
      continue;
    }
    if (t - last_top > physics::kMaxStepUp) return false;
    last_top = t;
    pit = 0;
  }
  return pit == 0;
}

std::vector<bool> check_platformer(Game game, LevelSeed seed, const SearchOptions& search) {
  const auto level = std::get<PlatformerLevel>(generate_level(game, seed));
  std::vector<bool> out;
  if (game == Game::kCoinRun) {
    out.push_back(corridor_scan(level));
  } else {
    std::vector<TileCoord> coins = level.coin_positions;
    std::sort(coins.begin(), coins.end(), [](TileCoord a, TileCoord b) {
      return std::pair(a.x, a.y) < std::pair(b.x, b.y);
    });
    const bool unique = std::adjacent_find(coins.begin(), coins.end()) == coins.end();
    const auto n = static_cast<int>(coins.size());
    out.push_back(unique && n >= kPlatformsMinCoins && n <= kPlatformsMaxCoins);
  }
  const SearchResult r = physics_search_oracle(level, search);
  out.push_back(r.solved());
  bool witness = false;
  if (r.solved()) {
    const ReplayResult replay = replay_trace(level, r.trace);
    const double expected =
        game == Game::kCoinRun ? 10.0 : static_cast<double>(level.coin_positions.size()) + 9.0;
    witness = !replay.finished_early &&
              replay.final_state.outcome == physics::Outcome::kCoinAll &&
              replay.total_return == expected;
  }
  out.push_back(witness);
  return out;
}

}  // namespace

bool ValidationReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckCount& c) { return c.ok(); });
}

const CheckCount& ValidationReport::check(const std::string& name) const {
  for (const CheckCount& c : checks) {
    if (c.name == name) return c;
  }
  throw InvalidArgument("no check named '" + name + "'");
}

ValidationReport validate_levels(Game game, LevelSeed first_seed, int n_seeds, int jobs,
                                 const SearchOptions& search) {
  if (n_seeds < 1) throw InvalidArgument("validate: n_seeds must be >= 1");
  if (jobs < 1) throw InvalidArgument("validate: jobs must be >= 1");
  std::vector<std::vector<bool>> results(static_cast<std::size_t>(n_seeds));
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next++; i < n_seeds; i = next++) {
      const LevelSeed seed = first_seed + static_cast<LevelSeed>(i);
      results[static_cast<std::size_t>(i)] =
          game == Game::kMazes ? check_maze(seed) : check_platformer(game, seed, search);
    }
  };
  {
    std::vector<std::jthread> pool;
    for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
  }

  ValidationReport report;
  report.game = game;
  report.first_seed = first_seed;
  report.n_seeds = n_seeds;
  for (const std::string& name : check_names(game)) report.checks.push_back(CheckCount{name, 0, 0, {}});
  for (int i = 0; i < n_seeds; ++i) {
    for (std::size_t k = 0; k < report.checks.size(); ++k) {
      CheckCount& c = report.checks[k];
      ++c.total;
      if (results[static_cast<std::size_t>(i)][k]) {
        ++c.passed;
      } else if (c.failures.size() < kMaxListedFailures) {
        c.failures.push_back(first_seed + static_cast<LevelSeed>(i));
      }
    }
  }
  return report;
}

std::string format_validation(const ValidationReport& report) {
  std::ostringstream os;
  for (const CheckCount& c : report.checks) {
    os << "check=" << c.name << " passed=" << c.passed << '/' << c.total;
    if (!c.failures.empty()) {
      os << " failing_seeds=";
      for (std::size_t i = 0; i < c.failures.size(); ++i) os << (i ? "," : "") << c.failures[i];
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace procbench
