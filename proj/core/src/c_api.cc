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

#include "procbench/c_api.h"

#include <algorithm>
#include <cstring>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_set>
#include <vector>

#include "procbench/error.h"
#include "procbench/protocol.h"
#include "procbench/vecenv.h"

struct pb_env {
  explicit pb_env(procbench::VecEnvConfig config) : vec(std::move(config)) {}
  procbench::VecEnv vec;
};

namespace {

std::mutex registry_mutex;
std::unordered_set<const pb_env*>& registry() {
  static std::unordered_set<const pb_env*> live;
  return live;
}

bool is_live(const pb_env* env) {
  std::lock_guard lock(registry_mutex);
  return env != nullptr && registry().contains(env);
}

int fail(int code, const std::string& message, char* err, std::size_t errlen) {
  if (err != nullptr && errlen > 0) {
    const std::size_t n = std::min(message.size(), errlen - 1);
    std::memcpy(err, message.data(), n);
    err[n] = '\0';
  }
  return code;
}

}  // namespace

extern "C" {

int pb_abi_version(void) { return PROCBENCH_ABI_VERSION; }

pb_env* pb_env_create(const char* game, int batch, const char* level_set, uint32_t master_seed,
                      const char* options_json, char* err, size_t errlen) {
  try {
    if (game == nullptr) throw procbench::InvalidArgument("game is null");
    procbench::VecEnvConfig config;
    config.game = procbench::parse_game(game);
    config.batch = batch;
    config.level_set =
        procbench::LevelSet::parse(level_set != nullptr ? level_set : "unbounded");
    config.master_seed = master_seed;
    config.options =
        procbench::parse_env_options(options_json != nullptr ? options_json : "", &config.jobs);
    auto env = std::make_unique<pb_env>(std::move(config));
    std::lock_guard lock(registry_mutex);
    registry().insert(env.get());
    return env.release();
  } catch (const std::exception& e) {
    fail(PB_E_INVALID_ARGUMENT, e.what(), err, errlen);
    return nullptr;
  }
}

int pb_env_step(pb_env* env, const int32_t* actions, size_t n, double* rewards, uint8_t* dones,
                pb_episode_info* infos, char* err, size_t errlen) {
  if (!is_live(env)) return fail(PB_E_BAD_HANDLE, "invalid or closed handle", err, errlen);
  const auto batch = static_cast<std::size_t>(env->vec.batch());
  if (actions == nullptr || n != batch) {
    return fail(PB_E_INVALID_ARGUMENT,
                "expected " + std::to_string(batch) + " actions, got " + std::to_string(n), err,
                errlen);
  }
  try {
    const std::vector<int> acts(actions, actions + n);
    const procbench::StepResult& r = env->vec.step(acts);
    for (std::size_t i = 0; i < batch; ++i) {
      if (rewards != nullptr) rewards[i] = r.rewards[i];
      if (dones != nullptr) dones[i] = r.dones[i];
      if (infos != nullptr) {
        infos[i] = pb_episode_info{r.infos[i].level_seed, r.infos[i].episode_steps,
                                   r.infos[i].episode_return,
                                   static_cast<int32_t>(r.infos[i].outcome)};
      }
    }
    return PB_OK;
  } catch (const procbench::InvalidAction& e) {
    return fail(PB_E_INVALID_ACTION, e.what(), err, errlen);
  } catch (const std::exception& e) {
    return fail(PB_E_INTERNAL, e.what(), err, errlen);
  }
}

const uint8_t* pb_env_observations(const pb_env* env) {
  return is_live(env) ? env->vec.observations().data() : nullptr;
}

size_t pb_env_obs_bytes(const pb_env* env) {
  return is_live(env) ? env->vec.obs_bytes_per_env() : 0;
}

int pb_env_batch(const pb_env* env) { return is_live(env) ? env->vec.batch() : PB_E_BAD_HANDLE; }

int pb_env_action_space(const pb_env* env) {
  return is_live(env) ? env->vec.action_space() : PB_E_BAD_HANDLE;
}

int pb_env_close(pb_env* env) {
  {
    std::lock_guard lock(registry_mutex);
    if (env == nullptr || registry().erase(env) == 0) return PB_E_BAD_HANDLE;
  }
  delete env;
  return PB_OK;
}

size_t pb_live_handles(void) {
  std::lock_guard lock(registry_mutex);
  return registry().size();
}

int pb_training_preset_json(const char* game, char* out, size_t outlen) {
  try {
    if (game == nullptr) return PB_E_INVALID_ARGUMENT;
    const std::string json = procbench::training_preset_json(procbench::parse_game(game));
    fail(PB_OK, json, out, outlen);
    return static_cast<int>(json.size());
  } catch (const std::exception&) {
    return PB_E_INVALID_ARGUMENT;
  }
}

}  // extern "C"
