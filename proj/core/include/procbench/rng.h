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
#ifndef PROCBENCH_RNG_H_
#define PROCBENCH_RNG_H_

#include <cstdint>

namespace procbench {

using LevelSeed = std::uint32_t;

// Purpose tags for derive_stream(). Each generation phase draws from its own
// stream so that adding a draw to one phase never shifts another.
enum class StreamTag : std::uint32_t {
  kLayout = 0,
  kEntities = 1,
  kPalette = 2,
  kEpisode = 3,
  kAugmentation = 4,
  kProtocol = 5,
};

// 64-bit add-and-mix generator. The constants and the mixing recipe are part
// of the level format: changing them changes every level.
class Rng {
 public:
  static constexpr std::uint64_t kIncrement = 0x9E3779B97F4A7C15ULL;

  constexpr Rng() noexcept = default;
  explicit constexpr Rng(std::uint64_t state) noexcept : state_(state) {}

  constexpr std::uint64_t next_u64() noexcept {
    state_ += kIncrement;
    std::uint64_t z = state_;
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ULL;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return z;
  }

  // Uniform over [lo, hi] inclusive. Rejection sampling, no modulo bias.
  // Throws InvalidArgument when lo > hi.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

  // True with probability p. Throws InvalidArgument for p outside [0, 1].
  bool bernoulli(double p);

  constexpr std::uint64_t state() const noexcept { return state_; }

  friend constexpr bool operator==(const Rng&, const Rng&) = default;

 private:
  std::uint64_t state_ = 0;
};

// state = seed * 0x100000001 + tag, then advanced once.
constexpr Rng derive_stream(LevelSeed seed, std::uint32_t purpose_tag) noexcept {
  Rng rng(static_cast<std::uint64_t>(seed) * 0x100000001ULL + purpose_tag);
  rng.next_u64();
  return rng;
}

constexpr Rng derive_stream(LevelSeed seed, StreamTag tag) noexcept {
  return derive_stream(seed, static_cast<std::uint32_t>(tag));
}

}  // namespace procbench

#endif  // PROCBENCH_RNG_H_
