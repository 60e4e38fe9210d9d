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

#ifndef NASHLAB_LINEAR_SOLVE_H_
#define NASHLAB_LINEAR_SOLVE_H_

#include <vector>

#include "nashlab/rational.h"

namespace nashlab {

using RationalMatrix = std::vector<std::vector<Rational>>;

struct LinearSolution {
  enum class Kind { kUnique, kNone, kInfinite };
  Kind kind = Kind::kNone;
  int rank = 0;
  std::vector<Rational> x;  // set for kUnique; a particular solution for kInfinite
};

// Exact Gauss-Jordan elimination for a (possibly rectangular) system
// m x = rhs. Rows of m must all have the same length.
LinearSolution solve_linear(RationalMatrix m, std::vector<Rational> rhs);

int matrix_rank(RationalMatrix m);

}  // namespace nashlab

#endif  // NASHLAB_LINEAR_SOLVE_H_
