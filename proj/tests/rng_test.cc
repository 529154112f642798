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

#include <array>
#include <cstdint>

#include <gtest/gtest.h>

#include "procbench/error.h"

namespace procbench {
namespace {

// Expected outputs were computed with a standalone Python script of the
// splitmix64 step, not with this library.
TEST(Rng, FirstOutputsFromZero) {
  Rng rng(0);
  EXPECT_EQ(rng.next_u64(), 0xE220A8397B1DCDAFULL);
  EXPECT_EQ(rng.next_u64(), 0x6E789E6AA1B965F4ULL);
}

TEST(Rng, ConstexprEvaluation) {
  constexpr std::uint64_t v = [] {
    Rng r(0);
    return r.next_u64();
  }();
  static_assert(v == 0xE220A8397B1DCDAFULL);
}

TEST(Rng, DeriveStreamMatchesReference) {
  EXPECT_EQ(derive_stream(5, 0).next_u64(), 0xbf4a525fc3f7a888ULL);
  EXPECT_EQ(derive_stream(5, 1).next_u64(), 0x213005929233900cULL);
  EXPECT_EQ(derive_stream(5, StreamTag::kEpisode).next_u64(), 0x9855c64d8fc1af72ULL);
}

TEST(Rng, DerivedStreamsDiffer) {
  for (LevelSeed seed : {0u, 1u, 5u, 0xFFFFFFFFu}) {
    std::array<std::uint64_t, 6> first{};
    for (std::uint32_t tag = 0; tag < 6; ++tag) first[tag] = derive_stream(seed, tag).next_u64();
    for (std::size_t i = 0; i < first.size(); ++i) {
      for (std::size_t j = i + 1; j < first.size(); ++j) EXPECT_NE(first[i], first[j]);
    }
  }
}

TEST(Rng, UniformIntBucketsAndChiSquare) {
  Rng rng(12345);
  constexpr int kDraws = 1'000'000;
  std::array<int, 10> counts{};
  for (int i = 0; i < kDraws; ++i) ++counts[static_cast<std::size_t>(rng.uniform_int(0, 9))];
  double chi2 = 0.0;
  for (int c : counts) {
    EXPECT_NEAR(static_cast<double>(c) / kDraws, 0.1, 0.002);
    const double d = c - kDraws / 10.0;
    chi2 += d * d / (kDraws / 10.0);
  }
  // 9 degrees of freedom, p = 0.001.
  EXPECT_LT(chi2, 27.88);
}

TEST(Rng, UniformIntBounds) {
  Rng rng(3);
  for (int i = 0; i < 10000; ++i) {
    const auto v = rng.uniform_int(-2, 2);
    EXPECT_GE(v, -2);
    EXPECT_LE(v, 2);
  }
  EXPECT_EQ(rng.uniform_int(7, 7), 7);
  const auto wide = rng.uniform_int(INT64_MIN, INT64_MAX);
  (void)wide;
  EXPECT_THROW(rng.uniform_int(1, 0), InvalidArgument);
}

TEST(Rng, Bernoulli) {
  Rng rng(99);
  constexpr int kDraws = 1'000'000;
  int hits = 0;
  for (int i = 0; i < kDraws; ++i) hits += rng.bernoulli(0.2);
  EXPECT_NEAR(static_cast<double>(hits) / kDraws, 0.2, 0.002);
  for (int i = 0; i < 100; ++i) {
    EXPECT_FALSE(rng.bernoulli(0.0));
    EXPECT_TRUE(rng.bernoulli(1.0));
  }
  EXPECT_THROW(rng.bernoulli(-0.1), InvalidArgument);
  EXPECT_THROW(rng.bernoulli(1.5), InvalidArgument);
}

TEST(Rng, CopiesReplay) {
  Rng a(77);
  a.next_u64();
  Rng b = a;
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.next_u64(), b.next_u64());
  EXPECT_EQ(a, b);
}

}  // namespace
}  // namespace procbench
