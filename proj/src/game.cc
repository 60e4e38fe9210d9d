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

#include "nashlab/game.h"

#include <algorithm>
#include <cstdio>

#include "nashlab/errors.h"
#include "nashlab/game_io.h"

namespace nashlab {

FloatProfile to_float(const RationalProfile& x) {
  std::vector<double> c(x.coords().size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = x[i].get_d();
  return FloatProfile(x.sizes(), std::move(c));
}

RationalProfile to_rational(const FloatProfile& x) {
  std::vector<Rational> c(x.coords().size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = rational_from_double(x[i]);
  return RationalProfile(x.sizes(), std::move(c));
}

Support support_of(const RationalProfile& x) {
  Support s(static_cast<std::size_t>(x.num_players()));
  for (int i = 0; i < x.num_players(); ++i) {
    const auto blk = x.block(i);
    for (int a = 0; a < static_cast<int>(blk.size()); ++a) {
      if (sgn(blk[a]) != 0) s[i].push_back(a);
    }
  }
  return s;
}

void check_profile(const RationalProfile& x, const std::vector<int>& sizes) {
  if (x.sizes() != sizes) throw DimensionError("profile shape mismatch");
  for (int i = 0; i < x.num_players(); ++i) {
    Rational sum = 0;
    for (const auto& c : x.block(i)) {
      if (sgn(c) < 0) throw ArgumentError("negative probability in profile");
      sum += c;
    }
    if (sum != 1) {
      throw ArgumentError("probabilities of player " + std::to_string(i + 1) +
                          " sum to " + to_string(sum) + ", not 1");
    }
  }
}

bool in_profile_space(const FloatProfile& x, double tol) {
  for (int i = 0; i < x.num_players(); ++i) {
    double sum = 0.0;
    for (double c : x.block(i)) {
      if (!(c >= -tol)) return false;
      sum += c;
    }
    if (!(std::abs(sum - 1.0) <= tol)) return false;
  }
  return true;
}

void check_profile(const FloatProfile& x, const std::vector<int>& sizes,
                   double tol) {
  if (x.sizes() != sizes) throw DimensionError("profile shape mismatch");
  if (!in_profile_space(x, tol)) {
    throw ArgumentError("float profile is not in the profile space");
  }
}

Game::Game(std::vector<int> strategy_counts,
           std::vector<std::vector<Rational>> utilities)
    : counts_(std::move(strategy_counts)), tensors_(std::move(utilities)) {
  const int p = static_cast<int>(counts_.size());
  if (p < 2 || p > kMaxPlayers) {
    throw ArgumentError("games must have between 2 and 3 players");
  }
  std::size_t cells = 1;
  for (int n : counts_) {
    if (n < 2) throw ArgumentError("every player needs at least 2 strategies");
    cells *= static_cast<std::size_t>(n);
  }
  if (static_cast<int>(tensors_.size()) != p) {
    throw DimensionError("need one utility tensor per player");
  }
  tensors_f_.resize(tensors_.size());
  for (int i = 0; i < p; ++i) {
    if (tensors_[i].size() != cells) {
      throw DimensionError("utility tensor of player " + std::to_string(i + 1) +
                           " has the wrong shape");
    }
    tensors_f_[i].reserve(cells);
    for (auto& u : tensors_[i]) {
      u.canonicalize();
      if (sgn(u) < 0 || u > 1) {
        throw ArgumentError("utility " + to_string(u) + " outside [0,1]");
      }
      tensors_f_[i].push_back(u.get_d());
    }
  }
}

Game Game::bimatrix(const std::vector<std::vector<Rational>>& a,
                    const std::vector<std::vector<Rational>>& b) {
  const int m = static_cast<int>(a.size());
  if (m == 0 || b.size() != a.size()) {
    throw DimensionError("bimatrix: row counts differ");
  }
  const int n = static_cast<int>(a[0].size());
  std::vector<Rational> ta, tb;
  for (int i = 0; i < m; ++i) {
    if (static_cast<int>(a[i].size()) != n ||
        static_cast<int>(b[i].size()) != n) {
      throw DimensionError("bimatrix: ragged rows");
    }
    ta.insert(ta.end(), a[i].begin(), a[i].end());
    tb.insert(tb.end(), b[i].begin(), b[i].end());
  }
  return Game({m, n}, {std::move(ta), std::move(tb)});
}

int Game::total_strategies() const {
  int n = 0;
  for (int c : counts_) n += c;
  return n;
}

std::size_t Game::flat_index(std::span<const int> pure) const {
  if (static_cast<int>(pure.size()) != num_players()) {
    throw DimensionError("pure profile has the wrong number of players");
  }
  std::size_t idx = 0;
  for (int i = 0; i < num_players(); ++i) {
    if (pure[i] < 0 || pure[i] >= counts_[i]) {
      throw DimensionError("pure strategy out of range");
    }
    idx = idx * static_cast<std::size_t>(counts_[i]) +
          static_cast<std::size_t>(pure[i]);
  }
  return idx;
}

const Rational& Game::utility(int player, std::span<const int> pure) const {
  return tensors_.at(player)[flat_index(pure)];
}

std::string Game::fingerprint() const {
  const std::string text = game_to_json(*this).dump();
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

template <class T>
const std::vector<T>& tensor_for(const Game& g, int player);
template <>
const std::vector<Rational>& tensor_for<Rational>(const Game& g, int player) {
  return g.tensor(player);
}
template <>
const std::vector<double>& tensor_for<double>(const Game& g, int player) {
  return g.tensor_f(player);
}

template <class T>
void check_shape(const Game& g, const Profile<T>& x) {
  if (x.sizes() != g.strategy_counts()) {
    throw DimensionError("profile shape does not match the game");
  }
}

}  // namespace

template <class T>
std::vector<T> deviation_payoffs(const Game& g, const Profile<T>& x,
                                 int player) {
  check_shape(g, x);
  if (player < 0 || player >= g.num_players()) {
    throw DimensionError("player index out of range");
  }
  const int p = g.num_players();
  const auto& u = tensor_for<T>(g, player);
  std::vector<T> dev(static_cast<std::size_t>(g.num_strategies(player)), T(0));
  std::vector<int> pure(static_cast<std::size_t>(p), 0);
  for (std::size_t cell = 0; cell < u.size(); ++cell) {
    T w(1);
    for (int j = 0; j < p; ++j) {
      if (j != player) w *= x.block(j)[pure[j]];
    }
    dev[pure[player]] += u[cell] * w;
    for (int j = p - 1; j >= 0; --j) {
      if (++pure[j] < g.num_strategies(j)) break;
      pure[j] = 0;
    }
  }
  return dev;
}

template <class T>
T expected_utility(const Game& g, const Profile<T>& x, int player) {
  const auto dev = deviation_payoffs(g, x, player);
  const auto own = x.block(player);
  T total(0);
  for (std::size_t a = 0; a < dev.size(); ++a) total += own[a] * dev[a];
  return total;
}

template <class T>
T pure_deviation_payoff(const Game& g, const Profile<T>& x, int player,
                        int strategy) {
  if (strategy < 0 || strategy >= g.num_strategies(player)) {
    throw DimensionError("strategy index out of range");
  }
  return deviation_payoffs(g, x, player)[static_cast<std::size_t>(strategy)];
}

template <class T>
T regret(const Game& g, const Profile<T>& x) {
  T worst(0);
  for (int i = 0; i < g.num_players(); ++i) {
    const auto dev = deviation_payoffs(g, x, i);
    const auto own = x.block(i);
    T mean(0);
    for (std::size_t a = 0; a < dev.size(); ++a) mean += own[a] * dev[a];
    for (const auto& d : dev) {
      T gain = d - mean;
      if (gain > worst) worst = gain;
    }
  }
  return worst;
}

template std::vector<Rational> deviation_payoffs(const Game&,
                                                 const RationalProfile&, int);
template std::vector<double> deviation_payoffs(const Game&,
                                               const FloatProfile&, int);
template Rational expected_utility(const Game&, const RationalProfile&, int);
template double expected_utility(const Game&, const FloatProfile&, int);
template Rational pure_deviation_payoff(const Game&, const RationalProfile&,
                                        int, int);
template double pure_deviation_payoff(const Game&, const FloatProfile&, int,
                                      int);
template Rational regret(const Game&, const RationalProfile&);
template double regret(const Game&, const FloatProfile&);

bool is_nash(const Game& g, const RationalProfile& x, const Rational& eps) {
  if (sgn(eps) < 0) throw ArgumentError("eps must be nonnegative");
  return regret(g, x) <= eps;
}

bool is_nash(const Game& g, const FloatProfile& x, double eps) {
  if (eps < 0) throw ArgumentError("eps must be nonnegative");
  return regret(g, x) <= eps;
}

std::vector<int> best_responses(const Game& g, const RationalProfile& x,
                                int player) {
  const auto dev = deviation_payoffs(g, x, player);
  const Rational best = *std::max_element(dev.begin(), dev.end());
  std::vector<int> out;
  for (int a = 0; a < static_cast<int>(dev.size()); ++a) {
    if (dev[a] == best) out.push_back(a);
  }
  return out;
}

namespace builtin {

Game matching_pennies() {
  return Game::bimatrix({{1, 0}, {0, 1}}, {{0, 1}, {1, 0}});
}

Game battle_of_sexes() {
  const Rational half(1, 2);
  return Game::bimatrix({{1, 0}, {0, half}}, {{half, 0}, {0, 1}});
}

Game degenerate_2x2() {
  return Game::bimatrix({{1, 1}, {1, 1}}, {{1, 0}, {0, 1}});
}

}  // namespace builtin

}  // namespace nashlab
