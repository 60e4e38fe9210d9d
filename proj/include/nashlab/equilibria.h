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

#ifndef NASHLAB_EQUILIBRIA_H_
#define NASHLAB_EQUILIBRIA_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nashlab/game.h"
#include "nashlab/game_io.h"

namespace nashlab {

// Desk-scale bound on strategies per player for the exact solvers.
inline constexpr int kMaxDeskStrategies = 12;
// Utilities of random games live on {0, 1/D, ..., 1}.
inline constexpr int kUtilityGrid = 10007;

enum class Execution { kSerial, kParallel };

struct Equilibrium {
  RationalProfile profile;
  Support support;
};

// Sorted by support (size, then lexicographic indices of player 1, then
// player 2). Members are pairwise distinct and each has regret exactly 0.
struct EquilibriumSet {
  std::vector<Equilibrium> members;
  std::string game_fingerprint;

  std::size_t size() const { return members.size(); }
  bool empty() const { return members.empty(); }
  std::vector<FloatProfile> float_profiles() const;
};

// All equilibria of a bimatrix game found by support enumeration over
// equal-size support pairs. Complete for nondegenerate games; for degenerate
// games it returns the equilibria whose support pair pins them down
// uniquely, which includes every pure equilibrium.
EquilibriumSet enumerate_nash(const Game& g,
                              Execution exec = Execution::kParallel);

// Single-threaded reference kept for cross-checking the OpenMP scan.
inline EquilibriumSet enumerate_nash_serial(const Game& g) {
  return enumerate_nash(g, Execution::kSerial);
}

struct NondegeneracyReport {
  bool nondegenerate = true;
  // A profile where some player's mixed strategy with support size k admits
  // at least k + 1 pure best responses by the opponent. The opponent's
  // block is uniform over those best responses.
  std::optional<RationalProfile> witness;
  std::string reason;
};

// A bimatrix game is nondegenerate iff no mixed strategy of either player
// with support size k has more than k pure best responses.
NondegeneracyReport is_nondegenerate(const Game& g,
                                     Execution exec = Execution::kParallel);

// Utilities drawn uniformly from {0, 1/D, ..., 1}, D = kUtilityGrid,
// resampled (attempt counter as stream id) until nondegenerate.
Game random_nondegenerate_game(int n1, int n2, std::uint64_t seed);

// [{"profile": ..., "support": ..., "regret": "0/1"}, ...]
Json equilibrium_set_to_json(const Game& g, const EquilibriumSet& set);

// Lexicographic k-subsets of {0, ..., n-1}.
std::vector<std::vector<int>> subsets_of_size(int n, int k);

}  // namespace nashlab

#endif  // NASHLAB_EQUILIBRIA_H_
