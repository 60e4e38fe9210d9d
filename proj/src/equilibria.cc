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

#include "nashlab/equilibria.h"

#include <algorithm>
#include <functional>

#include "nashlab/errors.h"
#include "nashlab/linear_solve.h"
#include "nashlab/rng.h"

namespace nashlab {

namespace {

void check_bimatrix(const Game& g) {
  if (g.num_players() != 2) {
    throw ArgumentError("equilibrium enumeration needs a two-player game");
  }
  for (int n : g.strategy_counts()) {
    if (n > kMaxDeskStrategies) {
      throw ArgumentError("more than " + std::to_string(kMaxDeskStrategies) +
                          " strategies per player is beyond desk scale");
    }
  }
}

// Payoff to the responder when the mixer plays `mix_strategy` and the
// responder plays `resp_strategy`.
using PayoffFn = std::function<const Rational&(int mix_strategy,
                                               int resp_strategy)>;

// Solves for a mixed strategy on `mixed` that makes every strategy in
// `indifferent` pay the same value v to the responder.
// Unknowns: x_s for s in `mixed`, then v.
LinearSolution solve_indifference(const std::vector<int>& mixed,
                                  const std::vector<int>& indifferent,
                                  const PayoffFn& payoff) {
  const std::size_t k = mixed.size();
  RationalMatrix m;
  std::vector<Rational> rhs;
  for (int r : indifferent) {
    std::vector<Rational> row(k + 1);
    for (std::size_t s = 0; s < k; ++s) row[s] = payoff(mixed[s], r);
    row[k] = -1;
    m.push_back(std::move(row));
    rhs.emplace_back(0);
  }
  std::vector<Rational> ones(k + 1, Rational(1));
  ones[k] = 0;
  m.push_back(std::move(ones));
  rhs.emplace_back(1);
  return solve_linear(std::move(m), std::move(rhs));
}

Rational payoff_against(const std::vector<int>& mixed,
                        const std::vector<Rational>& probs, int resp,
                        const PayoffFn& payoff) {
  Rational total = 0;
  for (std::size_t s = 0; s < mixed.size(); ++s) {
    total += probs[s] * payoff(mixed[s], resp);
  }
  return total;
}

struct SupportPair {
  std::vector<int> rows;
  std::vector<int> cols;
};

std::vector<SupportPair> equal_size_support_pairs(int m, int n) {
  std::vector<SupportPair> pairs;
  for (int k = 1; k <= std::min(m, n); ++k) {
    const auto rs = subsets_of_size(m, k);
    const auto cs = subsets_of_size(n, k);
    for (const auto& r : rs) {
      for (const auto& c : cs) pairs.push_back({r, c});
    }
  }
  return pairs;
}

// Solution of one side of the support-pair system: strictly positive
// probabilities on `mixed` with no profitable responder deviation.
std::optional<std::vector<Rational>> side_solution(
    const std::vector<int>& mixed, const std::vector<int>& indifferent,
    int num_responses, const PayoffFn& payoff) {
  const auto sol = solve_indifference(mixed, indifferent, payoff);
  if (sol.kind != LinearSolution::Kind::kUnique) return std::nullopt;
  const std::size_t k = mixed.size();
  for (std::size_t s = 0; s < k; ++s) {
    // A zero inside the claimed support marks a boundary solution; it is
    // not an equilibrium with this support.
    if (sgn(sol.x[s]) <= 0) return std::nullopt;
  }
  const Rational& value = sol.x[k];
  std::vector<Rational> probs(sol.x.begin(), sol.x.begin() + k);
  for (int r = 0; r < num_responses; ++r) {
    if (std::binary_search(indifferent.begin(), indifferent.end(), r)) continue;
    if (payoff_against(mixed, probs, r, payoff) > value) return std::nullopt;
  }
  return probs;
}

std::optional<Equilibrium> try_support_pair(const Game& g,
                                            const SupportPair& sp) {
  const int m = g.num_strategies(0);
  const int n = g.num_strategies(1);
  // Column mix y over sp.cols making the rows in sp.rows indifferent.
  const PayoffFn row_payoff = [&g](int col, int row) -> const Rational& {
    return g.a(row, col);
  };
  const PayoffFn col_payoff = [&g](int row, int col) -> const Rational& {
    return g.b(row, col);
  };
  const auto y = side_solution(sp.cols, sp.rows, m, row_payoff);
  if (!y) return std::nullopt;
  const auto x = side_solution(sp.rows, sp.cols, n, col_payoff);
  if (!x) return std::nullopt;
  RationalProfile prof(g.strategy_counts());
  for (std::size_t s = 0; s < sp.rows.size(); ++s) {
    prof.block(0)[sp.rows[s]] = (*x)[s];
  }
  for (std::size_t s = 0; s < sp.cols.size(); ++s) {
    prof.block(1)[sp.cols[s]] = (*y)[s];
  }
  return Equilibrium{std::move(prof), {sp.rows, sp.cols}};
}

// Searches mixed strategies of the "mixer" (supported in a subset of
// `num_mixed` strategies) that leave the responder with more pure best
// responses than the support size. Returns (mix, best-response set).
struct ExcessWitness {
  std::vector<int> mixed;
  std::vector<Rational> probs;
  std::vector<int> responses;
};

std::optional<ExcessWitness> check_unique_excess(
    const std::vector<int>& mixed, const std::vector<int>& responses,
    int num_responses, const PayoffFn& payoff, bool* rank_deficient) {
  const auto sol = solve_indifference(mixed, responses, payoff);
  if (sol.kind == LinearSolution::Kind::kNone) return std::nullopt;
  if (sol.kind == LinearSolution::Kind::kInfinite) {
    if (rank_deficient) *rank_deficient = true;
    return std::nullopt;
  }
  const std::size_t k = mixed.size();
  for (std::size_t s = 0; s < k; ++s) {
    if (sgn(sol.x[s]) < 0) return std::nullopt;
  }
  std::vector<Rational> probs(sol.x.begin(), sol.x.begin() + k);
  for (int r = 0; r < num_responses; ++r) {
    if (std::binary_search(responses.begin(), responses.end(), r)) continue;
    if (payoff_against(mixed, probs, r, payoff) > sol.x[k]) return std::nullopt;
  }
  return ExcessWitness{mixed, std::move(probs), responses};
}

// For a consistent but rank-deficient system on (S, J), every vertex of
// the feasible region is the unique solution of some (S', J') with
// S' a subset of S and J' a superset of J, so scanning those is complete.
std::optional<ExcessWitness> scan_vertices(const std::vector<int>& mixed,
                                           const std::vector<int>& responses,
                                           int num_responses,
                                           const PayoffFn& payoff) {
  std::vector<int> extra;
  for (int r = 0; r < num_responses; ++r) {
    if (!std::binary_search(responses.begin(), responses.end(), r)) {
      extra.push_back(r);
    }
  }
  const int ms = static_cast<int>(mixed.size());
  const int es = static_cast<int>(extra.size());
  for (int smask = 1; smask < (1 << ms); ++smask) {
    std::vector<int> sub;
    for (int b = 0; b < ms; ++b) {
      if (smask & (1 << b)) sub.push_back(mixed[b]);
    }
    for (int emask = 0; emask < (1 << es); ++emask) {
      std::vector<int> sup = responses;
      for (int b = 0; b < es; ++b) {
        if (emask & (1 << b)) sup.push_back(extra[b]);
      }
      std::sort(sup.begin(), sup.end());
      if (sup.size() <= sub.size()) continue;
      if (auto w = check_unique_excess(sub, sup, num_responses, payoff,
                                       nullptr)) {
        return w;
      }
    }
  }
  return std::nullopt;
}

std::optional<ExcessWitness> find_excess_responses(int num_mixed,
                                                   int num_responses,
                                                   const PayoffFn& payoff,
                                                   Execution exec) {
  std::vector<std::vector<int>> supports;
  for (int k = 1; k <= num_mixed && k + 1 <= num_responses; ++k) {
    auto s = subsets_of_size(num_mixed, k);
    supports.insert(supports.end(), s.begin(), s.end());
  }
  std::vector<std::optional<ExcessWitness>> found(supports.size());
  const long count = static_cast<long>(supports.size());
#pragma omp parallel for schedule(dynamic) if (exec == Execution::kParallel)
  for (long idx = 0; idx < count; ++idx) {
    const auto& mixed = supports[idx];
    const int k = static_cast<int>(mixed.size());
    for (const auto& responses : subsets_of_size(num_responses, k + 1)) {
      bool deficient = false;
      auto w = check_unique_excess(mixed, responses, num_responses, payoff,
                                   &deficient);
      if (!w && deficient) {
        w = scan_vertices(mixed, responses, num_responses, payoff);
      }
      if (w) {
        found[idx] = std::move(w);
        break;
      }
    }
  }
  for (auto& f : found) {
    if (f) return f;
  }
  return std::nullopt;
}

}  // namespace

std::vector<std::vector<int>> subsets_of_size(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> cur(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == n - k + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

std::vector<FloatProfile> EquilibriumSet::float_profiles() const {
  std::vector<FloatProfile> out;
  out.reserve(members.size());
  for (const auto& e : members) out.push_back(to_float(e.profile));
  return out;
}

EquilibriumSet enumerate_nash(const Game& g, Execution exec) {
  check_bimatrix(g);
  const auto pairs =
      equal_size_support_pairs(g.num_strategies(0), g.num_strategies(1));
  std::vector<std::optional<Equilibrium>> found(pairs.size());
  const long count = static_cast<long>(pairs.size());
#pragma omp parallel for schedule(dynamic) if (exec == Execution::kParallel)
  for (long idx = 0; idx < count; ++idx) {
    found[idx] = try_support_pair(g, pairs[idx]);
  }
  EquilibriumSet set;
  set.game_fingerprint = g.fingerprint();
  for (auto& f : found) {
    if (f) set.members.push_back(std::move(*f));
  }
  return set;
}

NondegeneracyReport is_nondegenerate(const Game& g, Execution exec) {
  check_bimatrix(g);
  const int m = g.num_strategies(0);
  const int n = g.num_strategies(1);
  // Player 1 mixes, player 2 responds (payoffs B), then the reverse.
  const PayoffFn col_payoff = [&g](int row, int col) -> const Rational& {
    return g.b(row, col);
  };
  const PayoffFn row_payoff = [&g](int col, int row) -> const Rational& {
    return g.a(row, col);
  };
  for (int mixer = 0; mixer < 2; ++mixer) {
    const int num_mixed = mixer == 0 ? m : n;
    const int num_resp = mixer == 0 ? n : m;
    const auto w = find_excess_responses(
        num_mixed, num_resp, mixer == 0 ? col_payoff : row_payoff, exec);
    if (!w) continue;
    RationalProfile prof(g.strategy_counts());
    for (std::size_t s = 0; s < w->mixed.size(); ++s) {
      prof.block(mixer)[w->mixed[s]] = w->probs[s];
    }
    const Rational share(Integer(1),
                         Integer(static_cast<long>(w->responses.size())));
    for (int r : w->responses) prof.block(1 - mixer)[r] = share;
    NondegeneracyReport rep;
    rep.nondegenerate = false;
    rep.witness = std::move(prof);
    rep.reason = "player " + std::to_string(2 - mixer) + " has " +
                 std::to_string(w->responses.size()) +
                 " pure best responses to a mixed strategy of player " +
                 std::to_string(mixer + 1) + " with support size " +
                 std::to_string(w->mixed.size()) + " or less";
    return rep;
  }
  return {};
}

Game random_nondegenerate_game(int n1, int n2, std::uint64_t seed) {
  if (n1 < 2 || n2 < 2 || n1 > kMaxDeskStrategies ||
      n2 > kMaxDeskStrategies) {
    throw ArgumentError("random games need 2 <= n_i <= " +
                        std::to_string(kMaxDeskStrategies));
  }
  constexpr int kMaxAttempts = 1000;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    CounterRng rng(seed, static_cast<std::uint64_t>(attempt));
    std::vector<std::vector<Rational>> tensors(2);
    for (auto& t : tensors) {
      t.reserve(static_cast<std::size_t>(n1 * n2));
      for (int c = 0; c < n1 * n2; ++c) {
        t.emplace_back(Integer(static_cast<long>(rng.uniform_int(0, kUtilityGrid))),
                       Integer(kUtilityGrid));
        t.back().canonicalize();
      }
    }
    Game g({n1, n2}, std::move(tensors));
    if (is_nondegenerate(g, Execution::kSerial).nondegenerate) return g;
  }
  throw DomainError("no nondegenerate game found in 1000 attempts");
}

Json equilibrium_set_to_json(const Game& g, const EquilibriumSet& set) {
  Json out = Json::array();
  for (const auto& e : set.members) {
    Json j;
    j["profile"] = profile_to_json(e.profile);
    j["support"] = support_to_json(e.support);
    j["regret"] = to_string(regret(g, e.profile));
    out.push_back(std::move(j));
  }
  return out;
}

}  // namespace nashlab
