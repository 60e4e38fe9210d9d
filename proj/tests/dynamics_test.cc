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

#include <algorithm>
#include <cmath>

#include "nashlab/dynamics.h"
#include "nashlab/equilibria.h"
#include "nashlab/simplex.h"

namespace nashlab {
namespace {

using R = Rational;

FloatProfile f22(double a, double b, double c, double d) {
  return FloatProfile({2, 2}, {a, b, c, d});
}

void expect_block_sums(const FloatProfile& x) {
  for (int i = 0; i < x.num_players(); ++i) {
    double s = 0.0;
    for (double c : x.block(i)) s += c;
    EXPECT_NEAR(s, 1.0, 1e-12);
  }
}

TEST(Type1, MatchingPenniesHandEvaluation) {
  const Game g = builtin::matching_pennies();
  Type1Dynamic d(enumerate_nash(g), 0, 10.0);
  const auto x = f22(1, 0, 1, 0);
  const auto y = d.step(x);
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_NEAR(y[i], (i % 2 ? 0.05 : 0.95), 1e-15);
  }
  EXPECT_NEAR(d.lyapunov(x), 1.0, 1e-15);
  EXPECT_EQ(d.lyapunov(to_float(d.target())), 0.0);
}

TEST(Type1, EquilibriaAreFixed) {
  const Game g = builtin::battle_of_sexes();
  const auto set = enumerate_nash(g);
  Type1Dynamic d(set, 0, 10.0);
  for (const auto& e : set.members) {
    const auto x = to_float(e.profile);
    EXPECT_EQ(d.step(x), x);
    EXPECT_EQ(d.step_exact(e.profile), e.profile);
  }
}

TEST(Type1, StepsTowardTargetAndNeverOvershoots) {
  const Game g = random_nondegenerate_game(3, 3, 3);
  const auto set = enumerate_nash(g);
  CounterRng rng(2);
  for (std::size_t target = 0; target < set.size(); ++target) {
    Type1Dynamic d(set, target, 1.5);
    const auto z = to_float(d.target());
    for (int t = 0; t < 200; ++t) {
      const auto x = random_profile({3, 3}, rng);
      const auto y = d.step(x);
      expect_block_sums(y);
      EXPECT_TRUE(in_profile_space(y, 1e-12));
      // y - x is a nonnegative multiple (at most 1) of z - x.
      double c = -1.0;
      for (std::size_t i = 0; i < 6; ++i) {
        if (std::abs(z[i] - x[i]) > 1e-3) {
          c = (y[i] - x[i]) / (z[i] - x[i]);
          break;
        }
      }
      EXPECT_GT(c, 0.0);
      EXPECT_LE(c, 1.0 + 1e-12);
      EXPECT_LT(d.lyapunov(y), d.lyapunov(x));
    }
  }
}

TEST(Type1, ExactStepIsOnTheSegment) {
  const Game g = random_nondegenerate_game(3, 3, 5);
  const auto set = enumerate_nash(g);
  Type1Dynamic d(set, set.size() - 1, 10.0);
  CounterRng rng(3);
  for (int t = 0; t < 50; ++t) {
    const auto x = to_rational_normalized(random_profile({3, 3}, rng));
    const auto y = d.step_exact(x);
    EXPECT_NO_THROW(check_profile(y, {3, 3}));
    const R c = (y[0] - x[0]) / (d.target()[0] - x[0]);
    for (std::size_t i = 0; i < 6; ++i) {
      EXPECT_EQ(y[i] - x[i], c * (d.target()[i] - x[i]));
    }
    EXPECT_NEAR(to_float(y)[0], d.step(to_float(x))[0], 1e-12);
  }
}

TEST(Type1, RejectsBadConfig) {
  const auto set = enumerate_nash(builtin::matching_pennies());
  EXPECT_THROW(Type1Dynamic(set, 1), ArgumentError);
  EXPECT_THROW(Type1Dynamic(set, 0, 1.0), ArgumentError);
  EXPECT_THROW(Type1Dynamic(EquilibriumSet{}, 0), ArgumentError);
}

TEST(Type2, SingleEquilibriumPointsAtIt) {
  const Game g = builtin::matching_pennies();
  Type2Dynamic d(enumerate_nash(g), 1);
  const auto z = f22(0.5, 0.5, 0.5, 0.5);
  for (const auto& x : {f22(1, 0, 1, 0), f22(0, 1, 1, 0), f22(0.9, 0.1, 0.3, 0.7)}) {
    const auto y = d.step(x);
    double ip = 0.0;
    for (std::size_t i = 0; i < 4; ++i) ip += (y[i] - x[i]) * (z[i] - x[i]);
    EXPECT_GT(ip, 0.0);
    EXPECT_NEAR(d.lyapunov(x), distance(x, z), 1e-15);
  }
  EXPECT_EQ(d.step(z), z);
}

TEST(Type2, OrderingAndFixedPoints) {
  const Game g = builtin::battle_of_sexes();
  Type2Dynamic d(enumerate_nash(g), 7);
  const auto& t = d.projections();
  ASSERT_EQ(t.size(), 3u);
  EXPECT_LT(t[0], t[1]);
  EXPECT_LT(t[1], t[2]);
  const auto& w = d.direction();
  EXPECT_NEAR(w[0] + w[1], 0.0, 1e-15);
  EXPECT_NEAR(w[2] + w[3], 0.0, 1e-15);
  for (const auto& e : d.sorted_equilibria()) {
    const auto x = to_float(e.profile);
    EXPECT_EQ(d.step(x), x);
    EXPECT_EQ(d.lyapunov(x), 0.0);
    EXPECT_EQ(d.step_exact(e.profile), e.profile);
  }
  EXPECT_THROW(Type2Dynamic(enumerate_nash(g), 7, 1.0), ArgumentError);
}

TEST(Type2, SliceStepContractsTowardItsEquilibrium) {
  int checked = 0;
  int games = 0;
  for (std::uint64_t s = 0; s < 400 && games < 5; ++s) {
    const Game g = random_nondegenerate_game(3, 3, s);
    const auto set = enumerate_nash(g);
    if (set.size() < 3) continue;
    Type2Dynamic d(set, s);
    const auto& zs = d.sorted_equilibria()[1].profile;
    R low = 1;
    for (const auto& c : zs.coords()) low = std::min(low, c);
    if (low == 0) continue;  // need room to move inside the simplex
    ++games;
    // Two exact tangent vectors a, b combine into v = (b.w) a - (a.w) b,
    // which is tangent and exactly orthogonal to w, so z_s + eps v stays
    // on the slice.
    std::vector<R> w;
    for (double c : d.direction()) w.push_back(rational_from_double(c));
    const std::vector<R> a = {1, -1, 0, 0, 1, -1};
    const std::vector<R> b = {0, 1, -1, 1, 0, -1};
    R aw = 0, bw = 0;
    for (std::size_t i = 0; i < 6; ++i) aw += a[i] * w[i], bw += b[i] * w[i];
    std::vector<R> v(6);
    R vmax = 0;
    for (std::size_t i = 0; i < 6; ++i) {
      v[i] = bw * a[i] - aw * b[i];
      vmax = std::max(vmax, R(abs(v[i])));
    }
    ASSERT_GT(vmax, 0);
    for (R frac : {R(1, 2), R(-1, 2), R(1, 1000), R(-1, 1000)}) {
      const R eps = frac * low / vmax;
      RationalProfile x = zs;
      for (std::size_t i = 0; i < 6; ++i) x[i] += eps * v[i];
      const auto y = d.step_exact(x);
      for (std::size_t i = 0; i < 6; ++i) {
        EXPECT_EQ(y[i], x[i] + R(1, 2) * (zs[i] - x[i])) << "seed " << s;
      }
      ++checked;
    }
  }
  EXPECT_GT(games, 0);
  EXPECT_EQ(checked, 4 * games);
}

TEST(Type2, StepsStayInProfileSpace) {
  CounterRng rng(9);
  for (std::uint64_t s = 0; s < 5; ++s) {
    const Game g = random_nondegenerate_game(3, 3, 10 + s);
    Type2Dynamic d(enumerate_nash(g), s);
    for (int t = 0; t < 200; ++t) {
      const auto x = random_profile({3, 3}, rng);
      const auto y = d.step(x);
      EXPECT_TRUE(in_profile_space(y, 1e-12));
      expect_block_sums(y);
      const auto ye = d.step_exact(to_rational_normalized(x));
      R s0 = ye[0] + ye[1] + ye[2], s1 = ye[3] + ye[4] + ye[5];
      EXPECT_EQ(s0, 1);
      EXPECT_EQ(s1, 1);
    }
  }
}

TEST(Type2, BoundaryPointsAreNotStuck) {
  // Faces of X are where a step leaving X and clamped back would stall.
  CounterRng rng(19);
  int games = 0;
  for (std::uint64_t s = 5000; games < 4; ++s) {
    const Game g = random_nondegenerate_game(3, 3, s);
    auto set = enumerate_nash(g);
    if (set.size() < 3) continue;
    ++games;
    Type2Dynamic d(std::move(set), s);
    for (int t = 0; t < 500; ++t) {
      auto x = random_profile({3, 3}, rng);
      for (int b = 0; b < 2; ++b) {
        const int drop = static_cast<int>(rng.uniform_int(0, 2));
        const double mass = x[3 * b + drop];
        x[3 * b + drop] = 0.0;
        x[3 * b + (drop + 1) % 3] += mass;
      }
      if (regret(g, x) <= 1e-9) continue;
      const auto y = d.step(x);
      EXPECT_TRUE(in_profile_space(y, 1e-12));
      EXPECT_GT(distance(x, y), 1e-12) << "seed " << s;
    }
  }
}

TEST(Type2, LineKeepsEquilibriaApart) {
  // The chosen line beats the first candidate direction on the closest gap.
  for (std::uint64_t s = 5000; s < 5010; ++s) {
    const Game g = random_nondegenerate_game(3, 3, s);
    auto set = enumerate_nash(g);
    if (set.size() < 3) continue;
    Type2Dynamic d(set, s);
    const auto& t = d.projections();
    double gap = 1e9;
    for (std::size_t i = 1; i < t.size(); ++i) gap = std::min(gap, t[i] - t[i - 1]);
    CounterRng rng(s, 0);
    const auto w0 = random_tangent_direction({3, 3}, rng);
    std::vector<double> t0;
    for (const auto& z : set.float_profiles()) t0.push_back(dot(z.coords(), w0));
    std::sort(t0.begin(), t0.end());
    double gap0 = 1e9;
    for (std::size_t i = 1; i < t0.size(); ++i) gap0 = std::min(gap0, t0[i] - t0[i - 1]);
    EXPECT_GE(gap, gap0 - 1e-12);
    EXPECT_GT(gap, 0.0);
  }
}

TEST(Type2, EvenEquilibriumCountRejected) {
  auto set = enumerate_nash(builtin::battle_of_sexes());
  set.members.pop_back();
  EXPECT_THROW(Type2Dynamic(set, 0), DomainError);
}

TEST(Bnn, MatchingPenniesHandEvaluation) {
  const Game g = builtin::matching_pennies();
  const auto x = RationalProfile::pure({2, 2}, {0, 0});
  EXPECT_EQ(bnn_field(g, x), (std::vector<R>{0, 0, -1, 1}));
  const auto y = bnn_step(g, to_float(x), 0.1);
  EXPECT_EQ(y[0], 1.0);
  EXPECT_EQ(y[1], 0.0);
  EXPECT_NEAR(y[2], 0.9, 1e-15);
  EXPECT_NEAR(y[3], 0.1, 1e-15);
  EXPECT_EQ(bnn_field(g, RationalProfile::uniform({2, 2})),
            (std::vector<R>(4, 0)));
  EXPECT_THROW(bnn_step(g, to_float(x), 0.0), ArgumentError);
}

TEST(Bnn, ZeroExactlyAtEquilibriaAndMassConserving) {
  CounterRng rng(1);
  for (std::uint64_t s = 0; s < 10; ++s) {
    const Game g = random_nondegenerate_game(3, 3, 200 + s);
    for (const auto& e : enumerate_nash(g).members) {
      for (const auto& c : bnn_field(g, e.profile)) EXPECT_EQ(c, 0);
      const auto x = to_float(e.profile);
      EXPECT_EQ(bnn_step(g, x, 0.01), x);
    }
    for (int t = 0; t < 20; ++t) {
      const auto x = random_profile({3, 3}, rng);
      const auto f = bnn_field(g, x);
      EXPECT_NEAR(f[0] + f[1] + f[2], 0.0, 1e-15);
      EXPECT_NEAR(f[3] + f[4] + f[5], 0.0, 1e-15);
      const auto y = bnn_step(g, x, 1e-6);
      for (std::size_t i = 0; i < 6; ++i) {
        EXPECT_NEAR((y[i] - x[i]) / 1e-6, f[i], 1e-8);
      }
    }
  }
}

TEST(FixedPoints, StepEqualsXIffRegretTiny) {
  CounterRng rng(11);
  for (std::uint64_t s = 0; s < 5; ++s) {
    const Game g = random_nondegenerate_game(3, 3, 300 + s);
    const auto set = enumerate_nash(g);
    Type1Dynamic t1(set, 0);
    Type2Dynamic t2(set, s);
    const std::vector<StepFn> steps = {
        t1.step_fn(), t2.step_fn(),
        [&g](const FloatProfile& x) { return bnn_step(g, x, 0.01); }};
    for (const auto& phi : steps) {
      for (const auto& z : set.float_profiles()) {
        EXPECT_LE(distance(phi(z), z), 1e-12);
      }
      for (int t = 0; t < 100; ++t) {
        const auto x = random_profile({3, 3}, rng);
        if (regret(g, x) <= 1e-9) continue;
        EXPECT_GT(distance(phi(x), x), 1e-12);
      }
    }
  }
}

TEST(Descend, Type1MatchingPennies) {
  const Game g = builtin::matching_pennies();
  Type1Dynamic d(enumerate_nash(g), 0, 10.0);
  const auto r = descend(d.step_fn(), d.lyapunov_fn(), f22(1, 0, 1, 0), 1e-9,
                         100000);
  EXPECT_LE(linf_distance(r.x, f22(0.5, 0.5, 0.5, 0.5)), 1e-6);
  EXPECT_LE(r.steps, static_cast<std::int64_t>(10 * std::log(1e9) * 10));
  EXPECT_LT(r.final_displacement, 1e-9);
}

TEST(Descend, StartAtEquilibriumTakesOneStep) {
  const Game g = builtin::matching_pennies();
  Type1Dynamic d(enumerate_nash(g), 0);
  const auto z = f22(0.5, 0.5, 0.5, 0.5);
  const auto r = descend(d.step_fn(), d.lyapunov_fn(), z, 1e-9, 10);
  EXPECT_EQ(r.steps, 1);
  EXPECT_EQ(r.x, z);
}

TEST(Descend, CorruptedLyapunovCaughtAtStepOne) {
  const Game g = builtin::matching_pennies();
  Type1Dynamic d(enumerate_nash(g), 0);
  const auto bad = [&d](const FloatProfile& x) { return -d.lyapunov(x); };
  try {
    descend(d.step_fn(), bad, f22(1, 0, 1, 0), 1e-9, 1000);
    FAIL() << "no violation raised";
  } catch (const LyapunovViolation& v) {
    EXPECT_EQ(v.step(), 1);
    EXPECT_GT(v.after(), v.before());
    EXPECT_EQ(v.x(), f22(1, 0, 1, 0));
  }
}

TEST(Descend, StepLimit) {
  const Game g = builtin::matching_pennies();
  Type1Dynamic d(enumerate_nash(g), 0);
  EXPECT_THROW(descend(d.step_fn(), d.lyapunov_fn(), f22(1, 0, 1, 0), 1e-9, 3),
               DomainError);
}

}  // namespace
}  // namespace nashlab
