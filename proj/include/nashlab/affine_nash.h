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

#ifndef NASHLAB_AFFINE_NASH_H_
#define NASHLAB_AFFINE_NASH_H_

#include <vector>

#include "nashlab/equilibria.h"
#include "nashlab/game.h"
#include "nashlab/game_io.h"
#include "nashlab/quadratic_root.h"

namespace nashlab {

inline constexpr int kMaxAffineDimension = 4;

// The points base + sum_j lambda_j * directions[j]. Directions are flat
// vectors in the profile coordinates and sum to zero inside every player
// block, so every point keeps block sums equal to one.
struct AffineSubspace {
  RationalProfile base;
  std::vector<std::vector<Rational>> directions;

  int dimension() const { return static_cast<int>(directions.size()); }
  RationalProfile point(std::span<const Rational> lambda) const;
};

// The line through `from` and `to`, parametrized so that lambda = 0 is
// `from` and lambda = 1 is `to`.
AffineSubspace line_through(const RationalProfile& from,
                            const RationalProfile& to);

// Shape checks shared by both solvers: base block sums equal one, every
// direction is nonzero and tangent. Throws ArgumentError.
void check_subspace(const Game& g, const AffineSubspace& space);

// A closed lambda-interval; lo == hi is an isolated point.
struct LambdaInterval {
  QuadraticRoot lo;
  QuadraticRoot hi;
  bool is_point() const { return lo == hi; }
};

// For lines: sorted, pairwise disjoint intervals. For d > 1: isolated
// rational lambda vectors (nondegenerate games have finitely many
// equilibria).
struct LambdaSolutionSet {
  std::vector<LambdaInterval> intervals;
  std::vector<std::vector<Rational>> points;

  bool empty() const { return intervals.empty() && points.empty(); }
  bool contains(const Rational& lambda) const;
};

// All equilibria on a line, exactly, by sorting the real roots of the
// degree-two equilibrium conditions.
LambdaSolutionSet nash_on_line(const Game& g, const AffineSubspace& line);

// All equilibria in a subspace of dimension d <= 4 of a nondegenerate game.
// Throws DomainError (with the witness in the message) when the game is
// degenerate.
LambdaSolutionSet nash_on_affine(const Game& g, const AffineSubspace& space,
                                 Execution exec = Execution::kParallel);

// Profile coordinates base + lambda * direction, each a quadratic surd.
std::vector<QuadraticRoot> coordinates_at(const AffineSubspace& line,
                                          const QuadraticRoot& lambda);

// {"base": profile, "directions": [[...], ...]}; each direction is either
// flat or nested per player.
AffineSubspace subspace_from_json(const Game& g, const Json& j);
Json subspace_to_json(const AffineSubspace& space);

// [{"lambda": ..., "profile": ..., "kind": "point"|"interval"}, ...]
Json solution_to_json(const AffineSubspace& space,
                      const LambdaSolutionSet& set);

}  // namespace nashlab

#endif  // NASHLAB_AFFINE_NASH_H_
