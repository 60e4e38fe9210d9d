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

// Independent reference computations used by the unit and acceptance tests.
// Nothing here calls into the code under test beyond plain accessors.
#ifndef NASHLAB_TESTS_ORACLES_H_
#define NASHLAB_TESTS_ORACLES_H_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_dec_float.hpp>

#include "nashlab/affine_nash.h"
#include "nashlab/equilibria.h"
#include "nashlab/game.h"
#include "nashlab/quadratic_root.h"

namespace nashlab::oracle {

// Sum over every pure profile of utility times the product of probabilities.
inline Rational brute_utility(const Game& g, const RationalProfile& x,
                              int player) {
  const int p = g.num_players();
  std::vector<int> pure(static_cast<std::size_t>(p), 0);
  Rational total = 0;
  while (true) {
    Rational w = 1;
    for (int j = 0; j < p; ++j) w *= x.block(j)[pure[j]];
    total += w * g.utility(player, pure);
    int j = p - 1;
    while (j >= 0 && ++pure[j] == g.num_strategies(j)) pure[j--] = 0;
    if (j < 0) break;
  }
  return total;
}

// Regret by replacing each player's block with every pure strategy in turn.
inline Rational brute_regret(const Game& g, const RationalProfile& x) {
  Rational worst = 0;
  for (int i = 0; i < g.num_players(); ++i) {
    const Rational base = brute_utility(g, x, i);
    for (int a = 0; a < g.num_strategies(i); ++a) {
      RationalProfile y = x;
      for (auto& c : y.block(i)) c = 0;
      y.block(i)[a] = 1;
      worst = std::max(worst, Rational(brute_utility(g, y, i) - base));
    }
  }
  return worst;
}

using Dec64 = boost::multiprecision::number<
    boost::multiprecision::cpp_dec_float<64>>;

inline Dec64 to_dec(const Integer& z) { return Dec64(z.get_str()); }
inline Dec64 to_dec(const Rational& q) {
  return to_dec(q.get_num()) / to_dec(q.get_den());
}

inline Dec64 eval64(const QuadraticRoot& r) {
  return (to_dec(r.p()) + to_dec(r.q()) * boost::multiprecision::sqrt(
                                              to_dec(r.s()))) /
         to_dec(r.r());
}

// The lambda with base + lambda * direction == z exactly, if any.
inline std::optional<Rational> lambda_for(const AffineSubspace& line,
                                          const RationalProfile& z) {
  const auto& dir = line.directions.at(0);
  std::optional<Rational> lam;
  for (std::size_t i = 0; i < dir.size(); ++i) {
    if (dir[i] != 0) {
      lam = Rational((z[i] - line.base[i]) / dir[i]);
      break;
    }
  }
  if (!lam) return std::nullopt;
  for (std::size_t i = 0; i < dir.size(); ++i) {
    if (line.base[i] + *lam * dir[i] != z[i]) return std::nullopt;
  }
  return lam;
}

// Calls f on every composition of `total` into `parts` nonnegative parts
// whose weighted sum with `gaps` stays below `bound` (gaps >= 0, so the
// partial sums prune whole subtrees).
inline void for_each_composition(
    int parts, int total, const std::vector<double>& gaps, double bound,
    const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> c(static_cast<std::size_t>(parts), 0);
  std::function<void(int, int, double)> rec = [&](int pos, int left,
                                                  double acc) {
    if (pos == parts - 1) {
      c[pos] = left;
      if (acc + gaps[pos] * left / total < bound) f(c);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      const double a = acc + gaps[pos] * v / total;
      if (a >= bound) break;
      c[pos] = v;
      rec(pos + 1, left - v, a);
    }
  };
  rec(0, total, 0.0);
}

// Grid completeness scan for a bimatrix game: every grid profile (step
// 1/steps) with regret below eps, for which `visit` is called. The row
// player's regret is sum_s x1_s * gap_s with gap_s = max(Ax2) - (Ax2)_s,
// so rows are enumerated only where that sum stays below eps.
inline void scan_approximate_equilibria(
    const Game& g, int steps, double eps,
    const std::function<void(const FloatProfile&)>& visit) {
  const int n1 = g.num_strategies(0);
  const int n2 = g.num_strategies(1);
  const auto& a = g.tensor_f(0);
  const auto& b = g.tensor_f(1);
  const std::vector<double> zero(static_cast<std::size_t>(n2), 0.0);
  for_each_composition(n2, steps, zero, 1.0, [&](const std::vector<int>& c2) {
    std::vector<double> x2(c2.size());
    for (int j = 0; j < n2; ++j) x2[j] = static_cast<double>(c2[j]) / steps;
    std::vector<double> row(static_cast<std::size_t>(n1), 0.0);
    for (int s = 0; s < n1; ++s) {
      for (int j = 0; j < n2; ++j) row[s] += a[s * n2 + j] * x2[j];
    }
    const double best = *std::max_element(row.begin(), row.end());
    std::vector<double> gaps(row.size());
    for (int s = 0; s < n1; ++s) gaps[s] = best - row[s];
    for_each_composition(n1, steps, gaps, eps, [&](const std::vector<int>& c1) {
      std::vector<double> x1(c1.size());
      for (int s = 0; s < n1; ++s) x1[s] = static_cast<double>(c1[s]) / steps;
      std::vector<double> col(static_cast<std::size_t>(n2), 0.0);
      for (int s = 0; s < n1; ++s) {
        for (int j = 0; j < n2; ++j) col[j] += b[s * n2 + j] * x1[s];
      }
      double mean = 0.0;
      for (int j = 0; j < n2; ++j) mean += col[j] * x2[j];
      const double cbest = *std::max_element(col.begin(), col.end());
      if (cbest - mean >= eps) return;
      std::vector<double> coords = x1;
      coords.insert(coords.end(), x2.begin(), x2.end());
      visit(FloatProfile({n1, n2}, coords));
    });
  });
}

// Float support enumeration for bimatrix games, independent of the exact
// solver: Gaussian elimination with partial pivoting on each pair of
// equal-size supports, then a best-response check with tolerance tol.
inline std::vector<FloatProfile> float_support_enumeration(const Game& g,
                                                           double tol = 1e-9) {
  const int n1 = g.num_strategies(0);
  const int n2 = g.num_strategies(1);
  const auto& a = g.tensor_f(0);
  const auto& b = g.tensor_f(1);
  // Mixed strategy on `cols` (support of the mover) making every strategy in
  // `rows` (support of the other player) equally good, payoff pay(r, c).
  auto indifferent = [](const std::vector<int>& rows, const std::vector<int>& cols,
                        const std::function<double(int, int)>& pay)
      -> std::optional<std::vector<double>> {
    const std::size_t k = cols.size();
    // unknowns: probabilities on cols, then the common value
    std::vector<std::vector<double>> m(k + 1, std::vector<double>(k + 2, 0.0));
    for (std::size_t r = 0; r < k; ++r) {
      for (std::size_t c = 0; c < k; ++c) m[r][c] = pay(rows[r], cols[c]);
      m[r][k] = -1.0;
    }
    for (std::size_t c = 0; c < k; ++c) m[k][c] = 1.0;
    m[k][k + 1] = 1.0;
    for (std::size_t col = 0; col <= k; ++col) {
      std::size_t piv = col;
      for (std::size_t r = col + 1; r <= k; ++r) {
        if (std::abs(m[r][col]) > std::abs(m[piv][col])) piv = r;
      }
      if (std::abs(m[piv][col]) < 1e-12) return std::nullopt;
      std::swap(m[piv], m[col]);
      for (std::size_t r = 0; r <= k; ++r) {
        if (r == col) continue;
        const double f = m[r][col] / m[col][col];
        for (std::size_t c = col; c <= k + 1; ++c) m[r][c] -= f * m[col][c];
      }
    }
    std::vector<double> p(k);
    for (std::size_t c = 0; c < k; ++c) p[c] = m[c][k + 1] / m[c][c];
    return p;
  };
  std::vector<FloatProfile> found;
  for (int mask1 = 1; mask1 < (1 << n1); ++mask1) {
    for (int mask2 = 1; mask2 < (1 << n2); ++mask2) {
      std::vector<int> s1, s2;
      for (int i = 0; i < n1; ++i) if (mask1 >> i & 1) s1.push_back(i);
      for (int j = 0; j < n2; ++j) if (mask2 >> j & 1) s2.push_back(j);
      if (s1.size() != s2.size()) continue;
      const auto y = indifferent(s1, s2, [&](int r, int c) { return a[r * n2 + c]; });
      const auto x = indifferent(s2, s1, [&](int r, int c) { return b[c * n2 + r]; });
      if (!x || !y) continue;
      std::vector<double> coords(static_cast<std::size_t>(n1 + n2), 0.0);
      bool ok = true;
      for (std::size_t i = 0; i < s1.size(); ++i) {
        ok = ok && (*x)[i] >= -tol;
        coords[s1[i]] = std::max(0.0, (*x)[i]);
      }
      for (std::size_t j = 0; j < s2.size(); ++j) {
        ok = ok && (*y)[j] >= -tol;
        coords[n1 + s2[j]] = std::max(0.0, (*y)[j]);
      }
      if (!ok) continue;
      std::vector<double> row(static_cast<std::size_t>(n1), 0.0);
      std::vector<double> col(static_cast<std::size_t>(n2), 0.0);
      for (int i = 0; i < n1; ++i) {
        for (int j = 0; j < n2; ++j) {
          row[i] += a[i * n2 + j] * coords[n1 + j];
          col[j] += b[i * n2 + j] * coords[i];
        }
      }
      double v1 = 0.0, v2 = 0.0;
      for (int i = 0; i < n1; ++i) v1 += coords[i] * row[i];
      for (int j = 0; j < n2; ++j) v2 += coords[n1 + j] * col[j];
      if (*std::max_element(row.begin(), row.end()) > v1 + tol) continue;
      if (*std::max_element(col.begin(), col.end()) > v2 + tol) continue;
      FloatProfile z({n1, n2}, coords);
      bool dup = false;
      for (const auto& f : found) {
        double d = 0.0;
        for (std::size_t i = 0; i < coords.size(); ++i) {
          d = std::max(d, std::abs(f[i] - z[i]));
        }
        dup = dup || d < 1e-7;
      }
      if (!dup) found.push_back(std::move(z));
    }
  }
  return found;
}

// Bob's own BNN step for bimatrix games, written from the field's
// definition. Sums run in the same order as any straightforward
// row-major evaluation so the result can be compared bit for bit.
inline FloatProfile reference_bnn_step(const Game& g, const FloatProfile& x,
                                       double eta) {
  const int n1 = g.num_strategies(0);
  const int n2 = g.num_strategies(1);
  const auto& a = g.tensor_f(0);
  const auto& b = g.tensor_f(1);
  std::vector<double> u1(static_cast<std::size_t>(n1), 0.0);
  std::vector<double> u2(static_cast<std::size_t>(n2), 0.0);
  for (int s = 0; s < n1; ++s) {
    for (int j = 0; j < n2; ++j) {
      u1[s] += a[s * n2 + j] * x[n1 + j];
      u2[j] += b[s * n2 + j] * x[s];
    }
  }
  FloatProfile y = x;
  auto player = [&](const std::vector<double>& u, int off) {
    double mean = 0.0;
    for (std::size_t s = 0; s < u.size(); ++s) mean += x[off + s] * u[s];
    std::vector<double> e(u.size(), 0.0);
    double total = 0.0;
    for (std::size_t s = 0; s < u.size(); ++s) {
      if (u[s] - mean > 0) e[s] = u[s] - mean;
      total += e[s];
    }
    for (std::size_t s = 0; s < u.size(); ++s) {
      y[off + s] = x[off + s] + eta * (e[s] - x[off + s] * total);
    }
  };
  player(u1, 0);
  player(u2, n1);
  return y;
}

// Seeds (from `first` upward) of n x n random games with exactly `count`
// equilibria.
inline std::vector<std::uint64_t> seeds_with_count(int n, std::size_t count,
                                                   int how_many,
                                                   std::uint64_t first) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t s = first; static_cast<int>(out.size()) < how_many; ++s) {
    const Game g = random_nondegenerate_game(n, n, s);
    if (enumerate_nash(g).size() == count) out.push_back(s);
  }
  return out;
}

}  // namespace nashlab::oracle

#endif  // NASHLAB_TESTS_ORACLES_H_
