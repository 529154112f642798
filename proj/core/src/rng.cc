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
#include "procbench/rng.h"

#include <cmath>
#include <limits>
#include <string>

#include "procbench/error.h"

namespace procbench {

std::int64_t Rng::uniform_int(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) {
    throw InvalidArgument("uniform_int: invalid range [" + std::to_string(lo) +
                          ", " + std::to_string(hi) + "]");
  }
  // span is hi - lo + 1 in modular arithmetic; 0 means the full 64-bit range.
  const std::uint64_t span = static_cast<std::uint64_t>(hi) -
                             static_cast<std::uint64_t>(lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(next_u64());
  // Accept draws below the largest multiple of span.
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t draw;
  do {
    draw = next_u64();
  } while (draw >= limit);
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + draw % span);
}

bool Rng::bernoulli(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw InvalidArgument("bernoulli: probability " + std::to_string(p) +
                          " outside [0, 1]");
  }
  const std::uint64_t draw = next_u64();
  if (p >= 1.0) return true;
  // p * 2^64 is exactly representable as a long double scale of p; p < 1
  // keeps the threshold below 2^64.
  const auto threshold =
      static_cast<std::uint64_t>(std::ldexp(static_cast<long double>(p), 64));
  return draw < threshold;
}

}  // namespace procbench
