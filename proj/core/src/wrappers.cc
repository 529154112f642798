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
#include "procbench/wrappers.h"

#include <algorithm>
#include <string>

#include "procbench/error.h"

namespace procbench {

void CutoutConfig::validate() const {
  if (n_rects_max < 1 || n_rects_max > 10) {
    throw ConfigError("cutout: n_rects_max must be in [1, 10], got " +
                      std::to_string(n_rects_max));
  }
  if (rect_w_max < 1 || rect_h_max < 1) {
    throw ConfigError("cutout: rectangle limits must be >= 1");
  }
}

std::vector<CutoutRect> sample_cutout_rects(const CutoutConfig& config, Rng& rng) {
  config.validate();
  const auto n = rng.uniform_int(1, config.n_rects_max);
  std::vector<CutoutRect> rects;
  rects.reserve(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) {
    CutoutRect r;
    r.x = static_cast<int>(rng.uniform_int(0, kObsWidth - 1));
    r.y = static_cast<int>(rng.uniform_int(0, kObsHeight - 1));
    r.w = static_cast<int>(rng.uniform_int(1, config.rect_w_max));
    r.h = static_cast<int>(rng.uniform_int(1, config.rect_h_max));
    r.color.r = static_cast<std::uint8_t>(rng.uniform_int(0, 255));
    r.color.g = static_cast<std::uint8_t>(rng.uniform_int(0, 255));
    r.color.b = static_cast<std::uint8_t>(rng.uniform_int(0, 255));
    rects.push_back(r);
  }
  return rects;
}

void fill_rects(ObsSpan obs, std::span<const CutoutRect> rects) {
  for (const CutoutRect& r : rects) {
    const int x0 = std::max(0, r.x), x1 = std::min(kObsWidth, r.x + r.w);
    const int y0 = std::max(0, r.y), y1 = std::min(kObsHeight, r.y + r.h);
    for (int row = y0; row < y1; ++row) {
      for (int col = x0; col < x1; ++col) {
        std::uint8_t* p = obs.data() + (row * kObsWidth + col) * kObsChannels;
        p[0] = r.color.r;
        p[1] = r.color.g;
        p[2] = r.color.b;
      }
    }
  }
}

void apply_cutout(ObsSpan obs, const CutoutConfig& config, Rng& rng) {
  const auto rects = sample_cutout_rects(config, rng);
  fill_rects(obs, rects);
}

void EpsilonGreedyConfig::validate() const {
  if (!(epsilon >= 0.0 && epsilon <= 1.0)) {
    throw ConfigError("epsilon must be in [0, 1], got " + std::to_string(epsilon));
  }
}

EpsilonGreedyResult apply_epsilon_greedy(int action, int action_space_size,
                                         double epsilon, Rng& rng) {
  if (action < 0 || action >= action_space_size) {
    throw InvalidAction("action " + std::to_string(action) + " outside [0, " +
                        std::to_string(action_space_size) + ")");
  }
  if (!rng.bernoulli(epsilon)) return {action, false};
  return {static_cast<int>(rng.uniform_int(0, action_space_size - 1)), true};
}

void FrameStackConfig::validate() const {
  if (k < 1) throw ConfigError("frame stack depth must be >= 1");
}

FrameStack::FrameStack(int k) : k_(k) { FrameStackConfig{k}.validate(); }

void FrameStack::reset(ConstObsSpan first) {
  frames_.clear();
  Observation obs;
  std::copy(first.begin(), first.end(), obs.bytes.begin());
  frames_.assign(static_cast<std::size_t>(k_), obs);
}

void FrameStack::push(ConstObsSpan frame) {
  if (frames_.empty()) {
    reset(frame);
    return;
  }
  Observation obs;
  std::copy(frame.begin(), frame.end(), obs.bytes.begin());
  frames_.push_back(obs);
  while (frames_.size() > static_cast<std::size_t>(k_)) frames_.pop_front();
}

void FrameStack::write(std::span<std::uint8_t> out) const {
  if (out.size() != stacked_bytes()) {
    throw InvalidArgument("frame stack output buffer has the wrong size");
  }
  auto it = out.begin();
  for (const Observation& f : frames_) it = std::copy(f.bytes.begin(), f.bytes.end(), it);
}

std::vector<std::uint8_t> FrameStack::stacked() const {
  std::vector<std::uint8_t> out(stacked_bytes());
  write(out);
  return out;
}

}  // namespace procbench
