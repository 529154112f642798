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
#include "procbench/vecenv.h"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <thread>

#include "procbench/error.h"

namespace procbench {
namespace {

std::uint64_t parse_u64(std::string_view text, std::string_view what) {
  std::uint64_t v = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw ConfigError("level set: bad " + std::string(what) + " '" +
                      std::string(text) + "'");
  }
  return v;
}

}  // namespace

LevelSet LevelSet::explicit_seeds(std::vector<LevelSeed> seeds) {
  LevelSet set;
  set.unbounded_ = false;
  set.sorted_ = seeds;
  std::sort(set.sorted_.begin(), set.sorted_.end());
  if (std::adjacent_find(set.sorted_.begin(), set.sorted_.end()) != set.sorted_.end()) {
    throw ConfigError("level set contains duplicate seeds");
  }
  set.seeds_ = std::move(seeds);
  return set;
}

LevelSet LevelSet::unbounded_excluding(std::vector<LevelSeed> excluded) {
  std::sort(excluded.begin(), excluded.end());
  if (std::adjacent_find(excluded.begin(), excluded.end()) != excluded.end()) {
    throw ConfigError("excluded seeds contain duplicates");
  }
  if (excluded.size() >= (1ULL << 32)) throw ConfigError("every seed is excluded");
  LevelSet set;
  set.excluded_ = std::move(excluded);
  return set;
}

std::uint64_t LevelSet::size() const {
  return unbounded_ ? (1ULL << 32) - excluded_.size() : seeds_.size();
}

bool LevelSet::contains(LevelSeed seed) const {
  if (unbounded_) return !std::binary_search(excluded_.begin(), excluded_.end(), seed);
  return std::binary_search(sorted_.begin(), sorted_.end(), seed);
}

LevelSet LevelSet::parse(std::string_view spec) {
  if (spec == "unbounded") return unbounded();
  if (spec.starts_with("seeds:")) {
    std::vector<LevelSeed> seeds;
    std::string_view rest = spec.substr(6);
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      const std::string_view tok = rest.substr(0, comma);
      const auto v = parse_u64(tok, "seed");
      if (v > 0xFFFFFFFFULL) throw ConfigError("level set: seed out of range");
      seeds.push_back(static_cast<LevelSeed>(v));
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
    if (seeds.empty()) throw ConfigError("level set: empty seed list");
    return explicit_seeds(std::move(seeds));
  }
  if (spec.starts_with("range:")) {
    const std::string_view rest = spec.substr(6);
    const auto colon = rest.find(':');
    if (colon == std::string_view::npos) {
      throw ConfigError("level set: expected range:START:COUNT");
    }
    const auto start = parse_u64(rest.substr(0, colon), "range start");
    const auto count = parse_u64(rest.substr(colon + 1), "range count");
    if (count == 0 || start + count - 1 > 0xFFFFFFFFULL) {
      throw ConfigError("level set: range outside the 32-bit seed space");
    }
    std::vector<LevelSeed> seeds;
    seeds.reserve(count);
    for (std::uint64_t s = start; s < start + count; ++s) {
      seeds.push_back(static_cast<LevelSeed>(s));
    }
    return explicit_seeds(std::move(seeds));
  }
  throw ConfigError("level set: unknown spec '" + std::string(spec) +
                    "' (expected unbounded, seeds:A,B,... or range:START:COUNT)");
}

std::string LevelSet::describe() const {
  if (unbounded_ && excluded_.empty()) return "unbounded";
  if (unbounded_) return "unbounded(-" + std::to_string(excluded_.size()) + ")";
  std::ostringstream os;
  os << "explicit(" << seeds_.size() << ")";
  return os.str();
}

LevelSeed sample_level(const LevelSet& set, Rng& rng) {
  if (set.is_unbounded()) {
    for (;;) {
      const auto s = static_cast<LevelSeed>(rng.next_u64() >> 32);
      if (set.contains(s)) return s;
    }
  }
  if (set.seeds().empty()) throw ConfigError("cannot sample from an empty level set");
  const auto i = rng.uniform_int(0, static_cast<std::int64_t>(set.seeds().size()) - 1);
  return set.seeds()[static_cast<std::size_t>(i)];
}

void VecEnvConfig::validate() const {
  if (batch < 1) throw ConfigError("batch must be >= 1, got " + std::to_string(batch));
  if (jobs < 1) throw ConfigError("jobs must be >= 1, got " + std::to_string(jobs));
  if (!level_set.is_unbounded() && level_set.seeds().empty()) {
    throw ConfigError("explicit level set is empty");
  }
  options.validate();
}

Rng VecEnv::episode_stream(std::uint32_t master_seed, int env_index) {
  return derive_stream(master_seed ^ static_cast<std::uint32_t>(env_index),
                       StreamTag::kEpisode);
}

Rng VecEnv::augmentation_stream(std::uint32_t master_seed, int env_index) {
  return derive_stream(master_seed ^ static_cast<std::uint32_t>(env_index),
                       StreamTag::kAugmentation);
}

VecEnv::VecEnv(VecEnvConfig config) : config_(std::move(config)) {
  config_.validate();
  const auto b = static_cast<std::size_t>(config_.batch);
  slots_.reserve(b);
  for (int i = 0; i < config_.batch; ++i) {
    slots_.push_back(Slot{
        Env(config_.game, config_.options, augmentation_stream(config_.master_seed, i)),
        episode_stream(config_.master_seed, i),
        FrameStack(config_.options.frame_stack.k)});
  }
  result_.observations.assign(b * obs_bytes_per_env(), 0);
  result_.rewards.assign(b, 0.0);
  result_.dones.assign(b, 0);
  result_.infos.assign(b, EpisodeInfo{});
  for (std::size_t i = 0; i < b; ++i) {
    start_episode(i);
    result_.infos[i] = slots_[i].env.episode();
  }
}

std::size_t VecEnv::obs_bytes_per_env() const {
  return static_cast<std::size_t>(config_.options.frame_stack.k) * kObsBytes;
}

void VecEnv::start_episode(std::size_t i) {
  Slot& slot = slots_[i];
  slot.env.reset(sample_level(config_.level_set, slot.episode_rng));
  if (!config_.options.render) return;
  slot.stack.reset(slot.env.observation());
  write_obs(i);
}

void VecEnv::write_obs(std::size_t i) {
  const std::size_t n = obs_bytes_per_env();
  slots_[i].stack.write(std::span<std::uint8_t>(result_.observations).subspan(i * n, n));
}

void VecEnv::step_one(std::size_t i, int action) {
  Slot& slot = slots_[i];
  const EnvStep s = slot.env.step(action);
  result_.rewards[i] = s.reward;
  result_.dones[i] = s.done ? 1 : 0;
  result_.infos[i] = slot.env.episode();
  if (s.done) {
    start_episode(i);
  } else if (config_.options.render) {
    slot.stack.push(slot.env.observation());
    write_obs(i);
  }
}

const StepResult& VecEnv::step(std::span<const int> actions) {
  if (actions.size() != slots_.size()) {
    throw InvalidAction("expected " + std::to_string(slots_.size()) +
                        " actions, got " + std::to_string(actions.size()));
  }
  const int space = action_space();
  for (std::size_t i = 0; i < actions.size(); ++i) {
    if (actions[i] < 0 || actions[i] >= space) {
      throw InvalidAction("env " + std::to_string(i) + ": action " +
                          std::to_string(actions[i]) + " outside [0, " +
                          std::to_string(space) + ")");
    }
  }
  const std::size_t b = slots_.size();
  const auto jobs = std::min<std::size_t>(static_cast<std::size_t>(config_.jobs), b);
  if (jobs <= 1) {
    for (std::size_t i = 0; i < b; ++i) step_one(i, actions[i]);
    return result_;
  }
  // Contiguous chunks; each env is touched by exactly one worker.
  std::vector<std::jthread> workers;
  workers.reserve(jobs);
  for (std::size_t w = 0; w < jobs; ++w) {
    const std::size_t lo = b * w / jobs, hi = b * (w + 1) / jobs;
    workers.emplace_back([this, lo, hi, actions] {
      for (std::size_t i = lo; i < hi; ++i) step_one(i, actions[i]);
    });
  }
  workers.clear();
  return result_;
}

}  // namespace procbench
