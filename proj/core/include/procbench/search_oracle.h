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
#ifndef PROCBENCH_SEARCH_ORACLE_H_
#define PROCBENCH_SEARCH_ORACLE_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "procbench/level.h"
#include "procbench/physics.h"

namespace procbench {

// Breadth-first search over the real simulator. States are merged when they
// agree after quantising position to 1/4 tile and velocity to 1/10 tile/step
// (and, on levels with monsters, the step count to time_bucket steps). The
// merge makes the search incomplete but every witness it returns is an exact
// simulator trajectory.
struct SearchOptions {
  int horizon = 1000;
  std::size_t max_states = 3'000'000;
  int time_bucket = 4;
};

enum class SearchVerdict { kSolved, kUnsolvable, kInconclusive };

struct SearchResult {
  SearchVerdict verdict = SearchVerdict::kInconclusive;
  std::vector<physics::Action> trace;
  physics::PlatformerState final_state;
  double total_return = 0.0;
  std::size_t states = 0;

  bool solved() const { return verdict == SearchVerdict::kSolved; }
};

// CoinRun: reach the coin. Platforms: collect every coin by chaining searches
// to the next coin. Horizon is capped at the episode limit.
SearchResult physics_search_oracle(const PlatformerLevel& level,
                                   const SearchOptions& options = {});

// Searches from the reset state until coin coin_index has been collected.
SearchResult search_coin(const PlatformerLevel& level, std::size_t coin_index,
                         const SearchOptions& options = {});

struct ReplayResult {
  physics::PlatformerState final_state;
  double total_return = 0.0;
  bool finished_early = false;  // trace continued after the episode ended
};

ReplayResult replay_trace(const PlatformerLevel& level,
                          const std::vector<physics::Action>& trace);

}  // namespace procbench

#endif  // PROCBENCH_SEARCH_ORACLE_H_
