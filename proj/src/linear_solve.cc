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

#include "nashlab/linear_solve.h"

#include "nashlab/errors.h"

namespace nashlab {

namespace {

// Reduces [m | rhs] in place to reduced row-echelon form; returns the pivot
// column of each pivot row.
std::vector<int> reduce(RationalMatrix& m, std::vector<Rational>* rhs) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int sel = -1;
    for (int i = r; i < rows; ++i) {
      if (sgn(m[i][c]) != 0) {
        sel = i;
        break;
      }
    }
    if (sel < 0) continue;
    std::swap(m[r], m[sel]);
    if (rhs) std::swap((*rhs)[r], (*rhs)[sel]);
    const Rational inv = 1 / m[r][c];
    for (int k = c; k < cols; ++k) m[r][k] *= inv;
    if (rhs) (*rhs)[r] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || sgn(m[i][c]) == 0) continue;
      const Rational f = m[i][c];
      for (int k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
      if (rhs) (*rhs)[i] -= f * (*rhs)[r];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

LinearSolution solve_linear(RationalMatrix m, std::vector<Rational> rhs) {
  if (m.size() != rhs.size()) {
    throw DimensionError("solve_linear: rhs length differs from row count");
  }
  const int cols = m.empty() ? 0 : static_cast<int>(m[0].size());
  for (const auto& row : m) {
    if (static_cast<int>(row.size()) != cols) {
      throw DimensionError("solve_linear: ragged matrix");
    }
  }
  const auto pivots = reduce(m, &rhs);
  LinearSolution out;
  out.rank = static_cast<int>(pivots.size());
  for (std::size_t i = pivots.size(); i < rhs.size(); ++i) {
    if (sgn(rhs[i]) != 0) {
      out.kind = LinearSolution::Kind::kNone;
      return out;
    }
  }
  out.x.assign(static_cast<std::size_t>(cols), Rational(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) out.x[pivots[i]] = rhs[i];
  out.kind = out.rank == cols ? LinearSolution::Kind::kUnique
                              : LinearSolution::Kind::kInfinite;
  return out;
}

int matrix_rank(RationalMatrix m) {
  return static_cast<int>(reduce(m, nullptr).size());
}

}  // namespace nashlab
