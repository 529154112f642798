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
#ifndef PROCBENCH_COINRUN_GEN_H_
#define PROCBENCH_COINRUN_GEN_H_

#include "procbench/level.h"

namespace procbench {

inline constexpr int kCoinRunHeight = 20;
inline constexpr int kPlatformsWidth = 64;
inline constexpr int kPlatformsHeight = 32;
inline constexpr int kPlatformsMinCoins = 8;
inline constexpr int kPlatformsMaxCoins = 14;

// First draw of the layout stream; generate_coinrun() uses the same draw.
int sample_difficulty(LevelSeed seed);

// CoinRun level built from left-to-right sections. Gaps never exceed
// physics::kMaxGap and ledges never rise more than physics::kMaxStepUp, so
// every level is solvable by construction.
//
// Draw order. Layout stream: difficulty, section count, first floor height,
// then per section [gap flag, gap width], length, [height delta]. Entities
// stream: per section [hazard flag, hazard kind, hazard column],
// [crate flag, crate height, crate column...], then monster count and per
// monster section index, speed, initial offset. Palette stream: hue.
PlatformerLevel generate_coinrun(LevelSeed seed);

// CoinRun-Platforms: a 64x32 canvas with base ground and floating one-way
// platforms, each reachable from an earlier surface.
PlatformerLevel generate_platforms(LevelSeed seed);

// Hazard tiles plus monsters.
int obstacle_count(const PlatformerLevel& level);

}  // namespace procbench

#endif  // PROCBENCH_COINRUN_GEN_H_
