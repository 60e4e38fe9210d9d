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

#include "nashlab/affine_nash.h"

#include <algorithm>
#include <array>

#include "nashlab/linear_solve.h"

namespace nashlab {

namespace {

// c0 + c1*t + c2*t^2 >= 0 is required.
struct Condition {
  std::array<Rational, 3> c;

  bool is_zero() const { return c[0] == 0 && c[1] == 0 && c[2] == 0; }
  bool is_constant() const { return c[1] == 0 && c[2] == 0; }

  int sign_at(const Rational& t) const {
    return sgn(Rational(c[0] + t * (c[1] + t * c[2])));
  }
  int sign_at(const QuadraticRoot& t) const {
    return t.sign_of_quadratic(c[0], c[1], c[2]);
  }
};

std::vector<Rational> matrix_times(const Game& g, int player,
                                   std::span<const Rational> col) {
  const int rows = g.num_strategies(0);
  const int cols = g.num_strategies(1);
  std::vector<Rational> out(static_cast<std::size_t>(rows), Rational(0));
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      const Rational& u = player == 0 ? g.a(r, c) : g.b(r, c);
      out[r] += u * col[c];
    }
  }
  return out;
}

std::vector<Rational> row_times(const Game& g, int player,
                                std::span<const Rational> row) {
  const int rows = g.num_strategies(0);
  const int cols = g.num_strategies(1);
  std::vector<Rational> out(static_cast<std::size_t>(cols), Rational(0));
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      const Rational& u = player == 0 ? g.a(r, c) : g.b(r, c);
      out[c] += row[r] * u;
    }
  }
  return out;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Feasibility and both players' no-profitable-deviation conditions along
// x(t) = a + t*b, where a = (a1, a2) and b = (b1, b2).
std::vector<Condition> line_conditions(const Game& g,
                                       const AffineSubspace& line) {
  const int n1 = g.num_strategies(0);
  const int n2 = g.num_strategies(1);
  const auto& base = line.base.coords();
  const auto& dir = line.directions[0];
  std::span<const Rational> a1(base.data(), n1), a2(base.data() + n1, n2);
  std::span<const Rational> b1(dir.data(), n1), b2(dir.data() + n1, n2);

  std::vector<Condition> out;
  for (std::size_t i = 0; i < base.size(); ++i) {
    out.push_back({{base[i], dir[i], Rational(0)}});
  }
  {
    // Row player: x1^T A x2 - (A x2)_s >= 0.
    const auto aa = matrix_times(g, 0, a2);
    const auto ab = matrix_times(g, 0, b2);
    const Rational k0 = dot(a1, aa);
    const Rational k1 = dot(a1, ab) + dot(b1, aa);
    const Rational k2 = dot(b1, ab);
    for (int s = 0; s < n1; ++s) {
      out.push_back({{k0 - aa[s], k1 - ab[s], k2}});
    }
  }
  {
    // Column player: x1^T B x2 - (x1^T B)_s >= 0.
    const auto ba = row_times(g, 1, a1);
    const auto bb = row_times(g, 1, b1);
    const Rational k0 = dot(ba, a2);
    const Rational k1 = dot(ba, b2) + dot(bb, a2);
    const Rational k2 = dot(bb, b2);
    for (int s = 0; s < n2; ++s) {
      out.push_back({{k0 - ba[s], k1 - bb[s], k2}});
    }
  }
  return out;
}

void require_bimatrix(const Game& g) {
  if (g.num_players() != 2) {
    throw ArgumentError("the affine solvers need a two-player game");
  }
}

}  // namespace

RationalProfile AffineSubspace::point(std::span<const Rational> lambda) const {
  if (lambda.size() != directions.size()) {
    throw DimensionError("lambda has the wrong dimension");
  }
  RationalProfile x = base;
  for (std::size_t j = 0; j < directions.size(); ++j) {
    for (std::size_t i = 0; i < x.coords().size(); ++i) {
      x[i] += lambda[j] * directions[j][i];
    }
  }
  return x;
}

AffineSubspace line_through(const RationalProfile& from,
                            const RationalProfile& to) {
  if (from.sizes() != to.sizes()) {
    throw DimensionError("line endpoints have different shapes");
  }
  std::vector<Rational> dir(from.coords().size());
  for (std::size_t i = 0; i < dir.size(); ++i) dir[i] = to[i] - from[i];
  return AffineSubspace{from, {std::move(dir)}};
}

void check_subspace(const Game& g, const AffineSubspace& space) {
  const auto& sizes = g.strategy_counts();
  if (space.base.sizes() != sizes) {
    throw DimensionError("subspace base does not match the game");
  }
  for (int i = 0; i < space.base.num_players(); ++i) {
    Rational sum = 0;
    for (const auto& c : space.base.block(i)) sum += c;
    if (sum != 1) throw ArgumentError("subspace base block does not sum to 1");
  }
  if (space.directions.empty()) {
    throw ArgumentError("subspace needs at least one direction");
  }
  for (const auto& d : space.directions) {
    if (d.size() != space.base.coords().size()) {
      throw DimensionError("direction length does not match the game");
    }
    if (std::all_of(d.begin(), d.end(),
                    [](const Rational& c) { return c == 0; })) {
      throw ArgumentError("zero direction vector");
    }
    for (int i = 0; i < space.base.num_players(); ++i) {
      Rational sum = 0;
      const int off = space.base.offset(i);
      for (int k = 0; k < space.base.size(i); ++k) sum += d[off + k];
      if (sum != 0) {
        throw ArgumentError("direction is not tangent: block " +
                            std::to_string(i + 1) + " sums to " +
                            to_string(sum));
      }
    }
  }
}

bool LambdaSolutionSet::contains(const Rational& lambda) const {
  const QuadraticRoot t(lambda);
  for (const auto& iv : intervals) {
    if (iv.lo <= t && t <= iv.hi) return true;
  }
  for (const auto& p : points) {
    if (p.size() == 1 && p[0] == lambda) return true;
  }
  return false;
}

LambdaSolutionSet nash_on_line(const Game& g, const AffineSubspace& line) {
  require_bimatrix(g);
  if (line.dimension() != 1) {
    throw ArgumentError("nash_on_line needs exactly one direction");
  }
  check_subspace(g, line);

  std::vector<Condition> conds;
  for (auto& c : line_conditions(g, line)) {
    if (c.is_zero()) continue;
    if (c.is_constant()) {
      if (sgn(c.c[0]) < 0) return {};
      continue;
    }
    conds.push_back(std::move(c));
  }

  std::vector<QuadraticRoot> roots;
  for (const auto& c : conds) {
    auto r = real_roots(c.c[0], c.c[1], c.c[2]);
    roots.insert(roots.end(), r.begin(), r.end());
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());

  auto holds = [&](const auto& t) {
    return std::all_of(conds.begin(), conds.end(),
                       [&](const Condition& c) { return c.sign_at(t) >= 0; });
  };

  // Gap k lies before root k; gap roots.size() is past the last root.
  const std::size_t m = roots.size();
  std::vector<bool> root_ok(m), gap_ok(m + 1);
  if (m == 0) {
    gap_ok[0] = holds(Rational(0));
  } else {
    gap_ok[0] = holds(Rational(roots.front().bracket(8).first - 1));
    gap_ok[m] = holds(Rational(roots.back().bracket(8).second + 1));
    for (std::size_t k = 1; k < m; ++k) {
      gap_ok[k] = holds(rational_between(roots[k - 1], roots[k]));
    }
    for (std::size_t k = 0; k < m; ++k) root_ok[k] = holds(roots[k]);
  }
  // Feasibility alone bounds the line, so the outer gaps never hold.
  if (gap_ok[0] || gap_ok[m]) {
    throw InvariantViolation("nash_on_line: unbounded solution set");
  }

  LambdaSolutionSet out;
  std::size_t k = 0;
  while (k < m) {
    if (!root_ok[k]) {
      ++k;
      continue;
    }
    std::size_t end = k;
    while (end + 1 < m && gap_ok[end + 1] && root_ok[end + 1]) ++end;
    out.intervals.push_back({roots[k], roots[end]});
    k = end + 1;
  }
  return out;
}

LambdaSolutionSet nash_on_affine(const Game& g, const AffineSubspace& space,
                                 Execution exec) {
  require_bimatrix(g);
  check_subspace(g, space);
  const int d = space.dimension();
  int dim_x = 0;
  for (int n : g.strategy_counts()) dim_x += n - 1;
  if (d > kMaxAffineDimension || d > dim_x) {
    throw ArgumentError("subspace dimension " + std::to_string(d) +
                        " out of range (at most " +
                        std::to_string(std::min(kMaxAffineDimension, dim_x)) +
                        ")");
  }
  const std::size_t n = space.base.coords().size();
  RationalMatrix m(n, std::vector<Rational>(static_cast<std::size_t>(d)));
  for (std::size_t i = 0; i < n; ++i) {
    for (int j = 0; j < d; ++j) m[i][j] = space.directions[j][i];
  }
  if (matrix_rank(m) != d) {
    throw ArgumentError("subspace directions are linearly dependent");
  }
  const auto report = is_nondegenerate(g, exec);
  if (!report.nondegenerate) {
    std::string msg = "degenerate game: " + report.reason;
    if (report.witness) {
      msg += "; witness " + profile_to_json(*report.witness).dump();
    }
    throw DomainError(msg);
  }

  LambdaSolutionSet out;
  for (const auto& eq : enumerate_nash(g, exec).members) {
    std::vector<Rational> rhs(n);
    for (std::size_t i = 0; i < n; ++i) rhs[i] = eq.profile[i] - space.base[i];
    auto sol = solve_linear(m, std::move(rhs));
    if (sol.kind == LinearSolution::Kind::kUnique) {
      out.points.push_back(std::move(sol.x));
    }
  }
  return out;
}

std::vector<QuadraticRoot> coordinates_at(const AffineSubspace& line,
                                          const QuadraticRoot& lambda) {
  std::vector<QuadraticRoot> out;
  out.reserve(line.base.coords().size());
  for (std::size_t i = 0; i < line.base.coords().size(); ++i) {
    out.push_back(lambda.affine(line.base[i], line.directions.at(0)[i]));
  }
  return out;
}

AffineSubspace subspace_from_json(const Game& g, const Json& j) {
  try {
    AffineSubspace s;
    s.base = rational_profile_from_json(j.at("base"));
    if (s.base.sizes() != g.strategy_counts()) {
      throw DimensionError("subspace base does not match the game");
    }
    for (const auto& dj : j.at("directions")) {
      std::vector<Rational> d;
      for (const auto& e : dj) {
        if (e.is_array()) {
          for (const auto& v : e) d.push_back(parse_rational(v.get<std::string>()));
        } else {
          d.push_back(parse_rational(e.get<std::string>()));
        }
      }
      s.directions.push_back(std::move(d));
    }
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw ArgumentError(std::string("malformed subspace: ") + e.what());
  }
}

Json subspace_to_json(const AffineSubspace& space) {
  Json j;
  j["base"] = profile_to_json(space.base);
  Json dirs = Json::array();
  for (const auto& d : space.directions) {
    Json dj = Json::array();
    for (const auto& c : d) dj.push_back(to_string(c));
    dirs.push_back(std::move(dj));
  }
  j["directions"] = std::move(dirs);
  return j;
}

namespace {

Json surd_profile_json(const AffineSubspace& line, const QuadraticRoot& t) {
  const auto coords = coordinates_at(line, t);
  Json out = Json::array();
  for (int i = 0; i < line.base.num_players(); ++i) {
    Json block = Json::array();
    for (int k = 0; k < line.base.size(i); ++k) {
      block.push_back(coords[line.base.offset(i) + k].to_string());
    }
    out.push_back(std::move(block));
  }
  return out;
}

}  // namespace

Json solution_to_json(const AffineSubspace& space,
                      const LambdaSolutionSet& set) {
  Json out = Json::array();
  for (const auto& iv : set.intervals) {
    Json e;
    if (iv.is_point()) {
      e["lambda"] = iv.lo.to_string();
      e["profile"] = surd_profile_json(space, iv.lo);
      e["kind"] = "point";
    } else {
      e["lambda"] = Json::array({iv.lo.to_string(), iv.hi.to_string()});
      e["profile"] = Json::array({surd_profile_json(space, iv.lo),
                                  surd_profile_json(space, iv.hi)});
      e["kind"] = "interval";
    }
    out.push_back(std::move(e));
  }
  for (const auto& p : set.points) {
    Json e;
    Json lj = Json::array();
    for (const auto& c : p) lj.push_back(to_string(c));
    e["lambda"] = std::move(lj);
    e["profile"] = profile_to_json(space.point(p));
    e["kind"] = "point";
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace nashlab
