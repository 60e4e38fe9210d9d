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

#include <filesystem>

#include "nashlab/equilibria.h"
#include "nashlab/game.h"
#include "nashlab/game_io.h"
#include "nashlab/rng.h"
#include "oracles.h"

namespace nashlab {
namespace {

RationalProfile prof(std::vector<Rational> c) {
  return RationalProfile({2, 2}, std::move(c));
}

RationalProfile random_rational_profile(const std::vector<int>& sizes,
                                        CounterRng& rng) {
  RationalProfile x(sizes);
  for (int i = 0; i < x.num_players(); ++i) {
    Rational total = 0;
    for (auto& c : x.block(i)) {
      c = Rational(rng.uniform_int(0, 20));
      total += c;
    }
    if (total == 0) {
      x.block(i)[0] = 1;
      continue;
    }
    for (auto& c : x.block(i)) c /= total;
  }
  return x;
}

TEST(Game, MatchingPenniesUniformUtility) {
  const Game g = builtin::matching_pennies();
  const auto x = RationalProfile::uniform({2, 2});
  EXPECT_EQ(expected_utility(g, x, 0), Rational(1, 2));
  EXPECT_EQ(oracle::brute_utility(g, x, 0), Rational(1, 2));
  EXPECT_EQ(pure_deviation_payoff(g, x, 0, 1), Rational(1, 2));
  EXPECT_EQ(regret(g, x), 0);
  EXPECT_TRUE(is_nash(g, x, Rational(0)));
}

TEST(Game, MatchingPenniesPureCorner) {
  const Game g = builtin::matching_pennies();
  const auto x = RationalProfile::pure({2, 2}, {0, 0});
  EXPECT_EQ(regret(g, x), 1);
  EXPECT_EQ(oracle::brute_regret(g, x), 1);
  EXPECT_FALSE(is_nash(g, x, Rational(0)));
  EXPECT_THROW(is_nash(g, x, Rational(-1)), ArgumentError);
}

TEST(Game, BattleOfTheSexesExamples) {
  const Game g = builtin::battle_of_sexes();
  const auto x = prof({Rational(2, 3), Rational(1, 3), Rational(1, 3),
                       Rational(2, 3)});
  EXPECT_EQ(expected_utility(g, x, 0), Rational(1, 3));
  EXPECT_EQ(oracle::brute_utility(g, x, 0), Rational(1, 3));
  EXPECT_EQ(pure_deviation_payoff(g, x, 0, 0), Rational(1, 3));
  EXPECT_EQ(regret(g, x), 0);
}

TEST(Game, PureProfileGivesTensorEntry) {
  const Game g = random_nondegenerate_game(3, 4, 9);
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 4; ++c) {
      const auto x = RationalProfile::pure({3, 4}, {r, c});
      EXPECT_EQ(expected_utility(g, x, 0), g.a(r, c));
      EXPECT_EQ(expected_utility(g, x, 1), g.b(r, c));
      EXPECT_EQ(pure_deviation_payoff(g, x, 0, r), g.a(r, c));
    }
  }
}

TEST(Game, ThreePlayerUtilityMatchesBruteForce) {
  CounterRng rng(3);
  std::vector<std::vector<Rational>> t(3);
  for (auto& ti : t) {
    for (int c = 0; c < 2 * 3 * 2; ++c) ti.push_back(Rational(rng.uniform_int(0, 9), 9));
  }
  const Game g({2, 3, 2}, t);
  for (int trial = 0; trial < 20; ++trial) {
    const auto x = random_rational_profile({2, 3, 2}, rng);
    for (int i = 0; i < 3; ++i) {
      EXPECT_EQ(expected_utility(g, x, i), oracle::brute_utility(g, x, i));
    }
    EXPECT_EQ(regret(g, x), oracle::brute_regret(g, x));
  }
}

TEST(Game, UtilityIsMultilinear) {
  const Game g = random_nondegenerate_game(3, 3, 4);
  CounterRng rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    auto x = random_rational_profile({3, 3}, rng);
    auto y = x;
    const auto z = random_rational_profile({3, 3}, rng);
    const int free = trial % 2;
    for (int a = 0; a < 3; ++a) y.block(free)[a] = z.block(free)[a];
    Rational t(rng.uniform_int(0, 10), 10);
    t.canonicalize();
    auto mix = x;
    for (int a = 0; a < 3; ++a) {
      mix.block(free)[a] = (1 - t) * x.block(free)[a] + t * y.block(free)[a];
    }
    for (int i = 0; i < 2; ++i) {
      EXPECT_EQ(expected_utility(g, mix, i),
                (1 - t) * expected_utility(g, x, i) +
                    t * expected_utility(g, y, i));
    }
  }
}

TEST(Game, RegretInUnitIntervalAndZeroIffSupportIsBest) {
  CounterRng rng(12);
  for (int s = 0; s < 10; ++s) {
    const Game g = random_nondegenerate_game(3, 3, 100 + s);
    for (int trial = 0; trial < 10; ++trial) {
      const auto x = random_rational_profile({3, 3}, rng);
      const Rational r = regret(g, x);
      EXPECT_GE(r, 0);
      EXPECT_LE(r, 1);
    }
    for (const auto& e : enumerate_nash(g).members) {
      EXPECT_EQ(regret(g, e.profile), 0);
      for (int i = 0; i < 2; ++i) {
        const auto br = best_responses(g, e.profile, i);
        for (int a : e.support[i]) {
          EXPECT_NE(std::find(br.begin(), br.end(), a), br.end());
        }
      }
    }
  }
}

TEST(Game, FloatModeAgreesWithExact) {
  const Game g = random_nondegenerate_game(4, 3, 2);
  CounterRng rng(1);
  for (int trial = 0; trial < 20; ++trial) {
    const auto x = random_rational_profile({4, 3}, rng);
    EXPECT_NEAR(regret(g, to_float(x)), regret(g, x).get_d(), 1e-12);
  }
}

TEST(Game, RejectsBadShapesAndUtilities) {
  EXPECT_THROW(Game::bimatrix({{Rational(2)}, {Rational(0)}},
                              {{Rational(0)}, {Rational(0)}}),
               ArgumentError);
  const std::vector<std::vector<Rational>> ok = {{0, 1}, {1, 0}};
  const std::vector<std::vector<Rational>> big = {{0, 2}, {1, 0}};
  const std::vector<std::vector<Rational>> neg = {{0, Rational(-1, 2)}, {1, 0}};
  EXPECT_NO_THROW(Game::bimatrix(ok, ok));
  EXPECT_THROW(Game::bimatrix(big, ok), ArgumentError);
  EXPECT_THROW(Game::bimatrix(ok, neg), ArgumentError);
  const Game g = builtin::matching_pennies();
  EXPECT_THROW(regret(g, RationalProfile({3, 2})), DimensionError);
  EXPECT_THROW(pure_deviation_payoff(g, RationalProfile::uniform({2, 2}), 0, 2),
               DimensionError);
}

TEST(Profile, Validation) {
  EXPECT_NO_THROW(check_profile(RationalProfile::uniform({2, 3}), {2, 3}));
  EXPECT_THROW(check_profile(RationalProfile({2, 2}, {1, 1, 0, 1}), {2, 2}),
               ArgumentError);
  EXPECT_THROW(check_profile(RationalProfile({2, 2}, {2, -1, 0, 1}), {2, 2}),
               ArgumentError);
  EXPECT_THROW(check_profile(RationalProfile::uniform({2, 3}), {3, 2}),
               DimensionError);
  EXPECT_NO_THROW(check_profile(FloatProfile({2}, {0.5, 0.5 + 1e-13}), {2}));
  EXPECT_THROW(check_profile(FloatProfile({2}, {0.5, 0.5 + 1e-9}), {2}),
               ArgumentError);
  const auto s = support_of(RationalProfile({3, 2}, {0, 1, 0, Rational(1, 2),
                                                     Rational(1, 2)}));
  EXPECT_EQ(s, (Support{{1}, {0, 1}}));
}

TEST(GameIo, JsonRoundTripIsExact) {
  const Game g = random_nondegenerate_game(3, 2, 5);
  const Json j = game_to_json(g);
  EXPECT_EQ(j["players"], 2);
  EXPECT_EQ(j["strategies"], Json::array({3, 2}));
  EXPECT_TRUE(j["utilities"][0][0][0].is_string());
  EXPECT_EQ(game_from_json(j), g);
  EXPECT_EQ(game_from_json(j).fingerprint(), g.fingerprint());

  const auto dir = std::filesystem::temp_directory_path() / "nashlab_game_io";
  std::filesystem::create_directories(dir);
  write_game(g, dir / "g.json");
  EXPECT_EQ(read_game(dir / "g.json"), g);
  std::filesystem::remove_all(dir);
}

TEST(GameIo, MatchingPenniesCanonicalJson) {
  const Json j = game_to_json(builtin::matching_pennies());
  EXPECT_EQ(j.dump(),
            R"({"players":2,"strategies":[2,2],"utilities":[[["1/1","0/1"],)"
            R"(["0/1","1/1"]],[["0/1","1/1"],["1/1","0/1"]]]})");
}

TEST(GameIo, RejectsMalformedFiles) {
  Json j = game_to_json(builtin::matching_pennies());
  j["utilities"][0][0][0] = "2/4";
  EXPECT_THROW(game_from_json(j), ArgumentError);
  j = game_to_json(builtin::matching_pennies());
  j["utilities"][0][0][0] = "3/2";
  EXPECT_THROW(game_from_json(j), ArgumentError);
  j = game_to_json(builtin::matching_pennies());
  j["strategies"] = Json::array({2, 3});
  EXPECT_THROW(game_from_json(j), ArgumentError);
}

TEST(GameIo, ProfilesRoundTrip) {
  const auto x = RationalProfile({2, 3}, {Rational(1, 3), Rational(2, 3), 0,
                                          Rational(1, 2), Rational(1, 2)});
  EXPECT_EQ(rational_profile_from_json(profile_to_json(x)), x);
  const FloatProfile f = to_float(x);
  EXPECT_EQ(float_profile_from_json(profile_to_json(f)), f);
}

}  // namespace
}  // namespace nashlab
