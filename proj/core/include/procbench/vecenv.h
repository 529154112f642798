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
#ifndef PROCBENCH_VECENV_H_
#define PROCBENCH_VECENV_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "procbench/env.h"
#include "procbench/level.h"
#include "procbench/rng.h"

namespace procbench {

// The universe episodes are sampled from: an explicit duplicate-free list of
// seeds, or the whole 32-bit seed space.
class LevelSet {
 public:
  static LevelSet unbounded() { return LevelSet(); }
  // The full seed space minus the given seeds, e.g. a held-out test set.
  // Throws ConfigError on duplicates or when nothing would be left.
  static LevelSet unbounded_excluding(std::vector<LevelSeed> excluded);
  // Throws ConfigError on duplicates.
  static LevelSet explicit_seeds(std::vector<LevelSeed> seeds);

  bool is_unbounded() const { return unbounded_; }
  const std::vector<LevelSeed>& seeds() const { return seeds_; }
  const std::vector<LevelSeed>& excluded() const { return excluded_; }
  // Number of distinct levels; 2^32 minus exclusions when unbounded.
  std::uint64_t size() const;
  bool contains(LevelSeed seed) const;

  // "unbounded", "seeds:1,2,3" or "range:START:COUNT".
  static LevelSet parse(std::string_view spec);
  std::string describe() const;

  friend bool operator==(const LevelSet&, const LevelSet&) = default;

 private:
  LevelSet() = default;

  bool unbounded_ = true;
  std::vector<LevelSeed> excluded_;  // sorted
  std::vector<LevelSeed> seeds_;
  std::vector<LevelSeed> sorted_;
};

// Uniform over the explicit list, or over [0, 2^32). Throws ConfigError for
// an empty explicit list.
LevelSeed sample_level(const LevelSet& set, Rng& rng);

struct VecEnvConfig {
  Game game = Game::kCoinRun;
  int batch = 1;
  LevelSet level_set = LevelSet::unbounded();
  std::uint32_t master_seed = 0;
  EnvOptions options;
  int jobs = 1;  // worker threads used by step()

  void validate() const;
};

struct StepResult {
  // batch x obs_bytes_per_env, row-major H x W x C per frame.
  std::vector<std::uint8_t> observations;
  std::vector<double> rewards;
  std::vector<std::uint8_t> dones;
  std::vector<EpisodeInfo> infos;
};

// B independent environments with auto-reset. When dones[i] is set,
// observations[i] already shows the next episode and infos[i] describes the
// one that just finished.
class VecEnv {
 public:
  // Throws ConfigError.
  explicit VecEnv(VecEnvConfig config);

  // Throws InvalidAction naming the env index.
  const StepResult& step(std::span<const int> actions);

  const VecEnvConfig& config() const { return config_; }
  int batch() const { return config_.batch; }
  int action_space() const { return action_space_size(config_.game); }
  std::size_t obs_bytes_per_env() const;
  // Current observations, same layout as StepResult::observations.
  std::span<const std::uint8_t> observations() const { return result_.observations; }
  const StepResult& last() const { return result_; }
  const Env& env(int index) const { return slots_.at(static_cast<std::size_t>(index)).env; }

  // Per-env streams; batch size does not change any single env's sequence.
  static Rng episode_stream(std::uint32_t master_seed, int env_index);
  static Rng augmentation_stream(std::uint32_t master_seed, int env_index);

 private:
  struct Slot {
    Env env;
    Rng episode_rng;
    FrameStack stack;
  };

  void start_episode(std::size_t i);
  void step_one(std::size_t i, int action);
  void write_obs(std::size_t i);

  VecEnvConfig config_;
  std::vector<Slot> slots_;
  StepResult result_;
};

}  // namespace procbench

#endif  // PROCBENCH_VECENV_H_
