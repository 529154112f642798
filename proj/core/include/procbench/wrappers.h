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
#ifndef PROCBENCH_WRAPPERS_H_
#define PROCBENCH_WRAPPERS_H_

#include <cstdint>
#include <deque>
#include <span>
#include <vector>

#include "procbench/render.h"
#include "procbench/rng.h"

namespace procbench {

// Modified Cutout: a random number of rectangles, each filled with its own
// random colour.
struct CutoutConfig {
  bool enabled = false;
  int n_rects_max = 5;
  int rect_w_max = 16;
  int rect_h_max = 16;

  // Throws ConfigError.
  void validate() const;
};

struct CutoutRect {
  int x = 0;  // column of the top-left corner
  int y = 0;  // row of the top-left corner
  int w = 1;
  int h = 1;
  Rgb color;
};

// n = uniform_int(1, n_rects_max); per rectangle: x, y, w, h, r, g, b.
std::vector<CutoutRect> sample_cutout_rects(const CutoutConfig& config, Rng& rng);

// Paints the rectangles, clipped to the image.
void fill_rects(ObsSpan obs, std::span<const CutoutRect> rects);

void apply_cutout(ObsSpan obs, const CutoutConfig& config, Rng& rng);

struct EpsilonGreedyConfig {
  double epsilon = 0.0;

  void validate() const;
};

struct EpsilonGreedyResult {
  int action = 0;
  bool overridden = false;
};

// With probability epsilon replaces the action by a uniform one; overridden
// is true even when the replacement equals the original. Throws
// InvalidAction for an action outside [0, action_space_size).
EpsilonGreedyResult apply_epsilon_greedy(int action, int action_space_size,
                                         double epsilon, Rng& rng);

struct FrameStackConfig {
  int k = 1;

  void validate() const;
};

// Keeps the last k frames. Stacked output is k frames laid out one after the
// other, oldest first; reset() pads by repeating the first frame.
class FrameStack {
 public:
  explicit FrameStack(int k);

  void reset(ConstObsSpan first);
  void push(ConstObsSpan frame);
  int k() const { return k_; }
  std::size_t stacked_bytes() const { return static_cast<std::size_t>(k_) * kObsBytes; }
  void write(std::span<std::uint8_t> out) const;
  std::vector<std::uint8_t> stacked() const;

 private:
  int k_;
  std::deque<Observation> frames_;
};

}  // namespace procbench

#endif  // PROCBENCH_WRAPPERS_H_
