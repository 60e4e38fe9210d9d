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

#ifndef NASHLAB_GAME_H_
#define NASHLAB_GAME_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "nashlab/profile.h"
#include "nashlab/rational.h"

namespace nashlab {

inline constexpr int kMaxPlayers = 3;

// A finite normal-form game with exact rational utilities in [0, 1].
//
// Utilities are stored as one flat row-major tensor per player, player 1's
// strategy index outermost. A double copy is kept for float-mode
// evaluation. Games are immutable once built.
class Game {
 public:
  Game(std::vector<int> strategy_counts,
       std::vector<std::vector<Rational>> utilities);

  // Two-player convenience: a[i][j] and b[i][j] are the row and column
  // players' utilities when row i meets column j.
  static Game bimatrix(const std::vector<std::vector<Rational>>& a,
                       const std::vector<std::vector<Rational>>& b);

  int num_players() const { return static_cast<int>(counts_.size()); }
  int num_strategies(int player) const { return counts_.at(player); }
  const std::vector<int>& strategy_counts() const { return counts_; }
  // n = sum of n_i.
  int total_strategies() const;
  std::size_t num_pure_profiles() const { return tensors_.at(0).size(); }

  const Rational& utility(int player, std::span<const int> pure) const;
  const std::vector<Rational>& tensor(int player) const {
    return tensors_.at(player);
  }
  const std::vector<double>& tensor_f(int player) const {
    return tensors_f_.at(player);
  }

  // Bimatrix accessors (p = 2 only).
  const Rational& a(int row, int col) const {
    return tensors_[0][static_cast<std::size_t>(row * counts_[1] + col)];
  }
  const Rational& b(int row, int col) const {
    return tensors_[1][static_cast<std::size_t>(row * counts_[1] + col)];
  }

  std::size_t flat_index(std::span<const int> pure) const;

  // 16 hex digits of FNV-1a over the canonical JSON encoding.
  std::string fingerprint() const;

  friend bool operator==(const Game& x, const Game& y) {
    return x.counts_ == y.counts_ && x.tensors_ == y.tensors_;
  }

 private:
  std::vector<int> counts_;
  std::vector<std::vector<Rational>> tensors_;
  std::vector<std::vector<double>> tensors_f_;
};

// u_i(a, x_{-i}) for every strategy a of `player`. One pass over the tensor.
template <class T>
std::vector<T> deviation_payoffs(const Game& g, const Profile<T>& x,
                                 int player);

template <class T>
T expected_utility(const Game& g, const Profile<T>& x, int player);

template <class T>
T pure_deviation_payoff(const Game& g, const Profile<T>& x, int player,
                        int strategy);

// max over players and pure strategies of u_i(a, x_{-i}) - u_i(x).
template <class T>
T regret(const Game& g, const Profile<T>& x);

bool is_nash(const Game& g, const RationalProfile& x, const Rational& eps);
bool is_nash(const Game& g, const FloatProfile& x, double eps);

// Pure strategies of `player` attaining the maximal deviation payoff.
std::vector<int> best_responses(const Game& g, const RationalProfile& x,
                                int player);

namespace builtin {
// A = [[1,0],[0,1]], B = [[0,1],[1,0]].
Game matching_pennies();
// A = [[1,0],[0,1/2]], B = [[1/2,0],[0,1]].
Game battle_of_sexes();
// A = [[1,1],[1,1]], B = [[1,0],[0,1]]: every column mix leaves the row
// player indifferent.
Game degenerate_2x2();
}  // namespace builtin

}  // namespace nashlab

#endif  // NASHLAB_GAME_H_
