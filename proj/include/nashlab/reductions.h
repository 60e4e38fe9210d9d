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

#ifndef NASHLAB_REDUCTIONS_H_
#define NASHLAB_REDUCTIONS_H_

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "nashlab/affine_nash.h"
#include "nashlab/dynamics.h"
#include "nashlab/game.h"
#include "nashlab/game_io.h"

namespace nashlab {

// A black-box step function with a query log.
class DynamicOracle {
 public:
  using Fn = std::function<RationalProfile(const RationalProfile&)>;

  explicit DynamicOracle(Fn fn) : fn_(std::move(fn)) {}

  RationalProfile query(const RationalProfile& x);
  std::size_t queries() const { return log_.size(); }
  const std::vector<std::pair<RationalProfile, RationalProfile>>& log() const {
    return log_;
  }

 private:
  Fn fn_;
  std::vector<std::pair<RationalProfile, RationalProfile>> log_;
};

DynamicOracle make_oracle(const Type1Dynamic& dyn);
DynamicOracle make_oracle(const Type2Dynamic& dyn);

struct FindNashResult {
  RationalProfile profile;
  AffineSubspace line;
  Rational lambda;
  LambdaSolutionSet solution;
};

// One query at the uniform profile x, then the line through x and
// oracle(x). Returns the first equilibrium ahead of x along the motion
// (smallest lambda > 0), else the nearest one behind it. Throws DomainError
// when the line carries no equilibrium.
FindNashResult find_nash_via_type1(const Game& g, DynamicOracle& oracle);

struct UniquenessOptions {
  int trials = 20;
  std::uint64_t seed = 0;
  bool forward_ray = false;  // only count lambda >= 0
  Execution exec = Execution::kParallel;
};

struct UniquenessTrial {
  RationalProfile query;
  RationalProfile response;
  LambdaSolutionSet solution;
  bool hit = false;
};

struct UniquenessVerdict {
  bool unique = false;
  int trials = 0;
  int hits = 0;
  std::vector<UniquenessTrial> log;
};

// Per trial: a uniformly random profile, one oracle query, and the line
// solver on the line through the query and its image. A line that carries
// an equilibrium votes "unique"; the majority decides.
UniquenessVerdict uniqueness_test(const Game& g, DynamicOracle& oracle,
                                  const UniquenessOptions& opts);

// {"verdict", "trials", "hits", "lines": [...]}
Json verdict_to_json(const UniquenessVerdict& v);

}  // namespace nashlab

#endif  // NASHLAB_REDUCTIONS_H_
