// Copyright 2026 The nashlab Authors
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

#include <gtest/gtest.h>

#include <set>

#include "nashlab/rng.h"

namespace nashlab {
namespace {

TEST(CounterRng, SameCoordinatesSameDraws) {
  CounterRng a(42, 3), b(42, 3);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.next_u64(), b.next_u64());
  EXPECT_EQ(a.counter(), 100u);
}

TEST(CounterRng, StreamsAndSeedsDiffer) {
  CounterRng a(42, 0), b(42, 1), c(43, 0);
  std::set<std::uint64_t> seen;
  for (int i = 0; i < 50; ++i) {
    seen.insert(a.next_u64());
    seen.insert(b.next_u64());
    seen.insert(c.next_u64());
  }
  EXPECT_EQ(seen.size(), 150u);
}

TEST(CounterRng, UniformRanges) {
  CounterRng r(7);
  double sum = 0.0;
  for (int i = 0; i < 20000; ++i) {
    const double u = r.uniform01();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    sum += u;
    const auto k = r.uniform_int(-3, 4);
    ASSERT_GE(k, -3);
    ASSERT_LE(k, 4);
    ASSERT_GT(r.exponential(), 0.0);
  }
  EXPECT_NEAR(sum / 20000, 0.5, 0.01);
}

TEST(CounterRng, NormalMoments) {
  CounterRng r(11);
  double m = 0.0, v = 0.0;
  const int n = 40000;
  for (int i = 0; i < n; ++i) {
    const double z = r.normal();
    m += z;
    v += z * z;
  }
  EXPECT_NEAR(m / n, 0.0, 0.03);
  EXPECT_NEAR(v / n, 1.0, 0.03);
}

TEST(CounterRng, DeriveIsPureFunction) {
  CounterRng a(5, 2);
  a.next_u64();
  CounterRng c1 = a.derive(9);
  CounterRng c2 = CounterRng(5, 2).derive(9);
  EXPECT_EQ(c1.next_u64(), c2.next_u64());
  EXPECT_NE(a.derive(1).next_u64(), a.derive(2).next_u64());
}

}  // namespace
}  // namespace nashlab
