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

#ifndef PROCBENCH_VALIDATE_H_
#define PROCBENCH_VALIDATE_H_

#include <string>
#include <vector>

#include "procbench/level.h"
#include "procbench/search_oracle.h"

namespace procbench {

struct CheckCount {
  std::string name;
  int passed = 0;
  int total = 0;
  std::vector<LevelSeed> failures;  // first few failing seeds

  bool ok() const { return passed == total; }
};

// Per-game invariant suite over seeds first_seed .. first_seed + n_seeds - 1.
//   mazes:     tree, goal_reachable, oracle_success
//   coinrun:   corridor_scan, search_solved, witness_replay
//   platforms: coin_count, search_solved, witness_return
struct ValidationReport {
  Game game = Game::kCoinRun;
  LevelSeed first_seed = 0;
  int n_seeds = 0;
  std::vector<CheckCount> checks;

  bool ok() const;
  const CheckCount& check(const std::string& name) const;
};

// Throws InvalidArgument for n_seeds < 1 or jobs < 1.
ValidationReport validate_levels(Game game, LevelSeed first_seed, int n_seeds, int jobs = 1,
                                 const SearchOptions& search = {});

// One "check=<name> passed=<p>/<n>" line per check.
std::string format_validation(const ValidationReport& report);

}  // namespace procbench

#endif  // PROCBENCH_VALIDATE_H_
