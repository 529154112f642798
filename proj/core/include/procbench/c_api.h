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

// Flat C interface over VecEnv for foreign-function bindings.
//
// Functions returning int use 0 for success and a negative PB_E_* code on
// failure; when err is non-null the message is copied into it, truncated to
// errlen - 1 bytes and always NUL-terminated.

#ifndef PROCBENCH_C_API_H_
#define PROCBENCH_C_API_H_

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#define PROCBENCH_ABI_VERSION 1

#define PB_OK 0
#define PB_E_INVALID_ARGUMENT (-1)
#define PB_E_INVALID_ACTION (-2)
#define PB_E_BAD_HANDLE (-3)
#define PB_E_INTERNAL (-4)

typedef struct pb_env pb_env;

typedef struct pb_episode_info {
  uint32_t level_seed;
  int32_t episode_steps;
  double episode_return;
  // 0 running, 1 success, 2 death, 3 timeout.
  int32_t outcome;
} pb_episode_info;

int pb_abi_version(void);

// game: "coinrun", "platforms" or "mazes". level_set: "unbounded",
// "seeds:1,2,3" or "range:START:COUNT". options_json may be NULL or "".
// Returns NULL on failure.
pb_env* pb_env_create(const char* game, int batch, const char* level_set, uint32_t master_seed,
                      const char* options_json, char* err, size_t errlen);

// actions has n == batch entries. rewards, dones and infos may be NULL;
// otherwise they receive batch entries each.
int pb_env_step(pb_env* env, const int32_t* actions, size_t n, double* rewards, uint8_t* dones,
                pb_episode_info* infos, char* err, size_t errlen);

// Row-major batch x obs_bytes buffer, valid until the next step or close.
// NULL for a bad handle.
const uint8_t* pb_env_observations(const pb_env* env);
// Bytes per environment (64 * 64 * 3 times the frame stack depth); 0 for a bad handle.
size_t pb_env_obs_bytes(const pb_env* env);
int pb_env_batch(const pb_env* env);
int pb_env_action_space(const pb_env* env);

// Returns PB_E_BAD_HANDLE on double close or an unknown pointer.
int pb_env_close(pb_env* env);

// Number of handles created and not yet closed.
size_t pb_live_handles(void);

// Writes the PPO preset for game as JSON. Returns the full length needed
// (excluding NUL), or a negative code.
int pb_training_preset_json(const char* game, char* out, size_t outlen);

#ifdef __cplusplus
}  // extern "C"
#endif

#endif  // PROCBENCH_C_API_H_
