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

#include "nashlab/proving_game.h"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <map>

#include "nashlab/rng.h"
#include "nashlab/simplex.h"
#include "nashlab/trajectory.h"

namespace nashlab {

void check_config(const PgConfig& cfg) {
  if (cfg.budget < 0) throw ArgumentError("budget must be >= 0");
  if (!(cfg.eps_r > 0.0 && cfg.eps_r < 1.0)) {
    throw ArgumentError("eps_r must lie in (0, 1)");
  }
  if (!(cfg.eta > 0.0)) throw ArgumentError("eta must be positive");
  if (!(cfg.rho > 0.0 && cfg.rho < cfg.eta / 4)) {
    throw ArgumentError("rho must satisfy 0 < rho < eta / 4");
  }
  if (!(cfg.phi_slowdown > 1.0)) {
    throw ArgumentError("phi slowdown must exceed 1");
  }
  if (cfg.verify_samples < 1) {
    throw ArgumentError("verify_samples must be positive");
  }
}

Json config_to_json(const PgConfig& cfg) {
  Json j;
  j["budget"] = cfg.budget;
  j["eps_r"] = cfg.eps_r;
  j["eta"] = cfg.eta;
  j["rho"] = cfg.rho;
  j["target"] = cfg.target;
  j["phi_slowdown"] = cfg.phi_slowdown;
  j["verify_samples"] = cfg.verify_samples;
  j["seed"] = cfg.seed;
  return j;
}

FloatProfile alice_respond(const Game& g, const FloatProfile& x,
                           const PgConfig& cfg) {
  return bnn_step(g, x, cfg.eta);
}

// ---- Bob ----

namespace {

FloatProfile best_of(const Game& g, const std::vector<FloatProfile>& pool) {
  const FloatProfile* best = &pool.front();
  double best_regret = regret(g, *best);
  for (const auto& x : pool) {
    const double r = regret(g, x);
    if (r < best_regret) {
      best = &x;
      best_regret = r;
    }
  }
  return *best;
}

// Rank-1 lattice: coordinate k of probe j is frac((j + 1) * sqrt(p_k)) for
// the k-th prime p_k. Each player's n - 1 coordinates are sorted and their
// spacings used as probabilities. Deterministic, interior, and free of the
// rational alignments of a regular grid.
class GridBob : public BobStrategy {
 public:
  std::string name() const override { return "grid"; }

  std::optional<FloatProfile> next_query(const Game& g,
                                         const PgTranscript& prefix,
                                         const PgConfig&) override {
    static constexpr int kPrimes[] = {2,  3,  5,  7,  11, 13, 17, 19,
                                      23, 29, 31, 37, 41, 43, 47, 53,
                                      59, 61, 67, 71, 73, 79, 83, 89};
    const auto& sizes = g.strategy_counts();
    const double j = static_cast<double>(prefix.rounds.size() + 1);
    FloatProfile x(sizes);
    std::size_t k = 0;
    for (int i = 0; i < x.num_players(); ++i) {
      std::vector<double> cuts{0.0, 1.0};
      for (int a = 1; a < sizes[i]; ++a, ++k) {
        const double alpha = std::sqrt(static_cast<double>(kPrimes[k % 24]));
        cuts.push_back(j * alpha - std::floor(j * alpha));
      }
      std::sort(cuts.begin(), cuts.end());
      for (int a = 0; a < sizes[i]; ++a) x.block(i)[a] = cuts[a + 1] - cuts[a];
    }
    return x;
  }

  FloatProfile claim(const Game& g, const PgTranscript& t,
                     const PgConfig&) override {
    std::vector<FloatProfile> pool;
    for (const auto& r : t.rounds) pool.push_back(r.query);
    if (pool.empty()) pool.push_back(FloatProfile::uniform(g.strategy_counts()));
    return best_of(g, pool);
  }
};

class RandomBob : public BobStrategy {
 public:
  std::string name() const override { return "random"; }

  std::optional<FloatProfile> next_query(const Game& g,
                                         const PgTranscript& prefix,
                                         const PgConfig& cfg) override {
    CounterRng rng(cfg.seed, prefix.rounds.size());
    return random_profile(g.strategy_counts(), rng);
  }

  FloatProfile claim(const Game& g, const PgTranscript& t,
                     const PgConfig&) override {
    std::vector<FloatProfile> pool{FloatProfile::uniform(g.strategy_counts())};
    for (const auto& r : t.rounds) {
      pool.push_back(r.query);
      pool.push_back(r.response);
    }
    return best_of(g, pool);
  }
};

class CheatBob : public RandomBob {
 public:
  std::string name() const override { return "cheat"; }

  FloatProfile claim(const Game& g, const PgTranscript&,
                     const PgConfig&) override {
    const auto eq = enumerate_nash(g);
    if (eq.empty()) throw InvariantViolation("game without equilibria");
    return to_float(eq.members.front().profile);
  }
};

bool same_point(const FloatProfile& a, const FloatProfile& b) {
  return a.coords() == b.coords();
}

}  // namespace

std::unique_ptr<BobStrategy> make_bob(std::string_view name) {
  if (name == "grid") return std::make_unique<GridBob>();
  if (name == "random") return std::make_unique<RandomBob>();
  if (name == "cheat") return std::make_unique<CheatBob>();
  throw ArgumentError("unknown Bob strategy '" + std::string(name) + "'");
}

// ---- claims ----

ClaimsReport check_claims(const Game& g, const PgTranscript& t,
                          const EquilibriumSet& equilibria) {
  ClaimsReport rep;
  const PgConfig& cfg = t.config;

  // Distinct query points; first occurrence wins.
  std::map<std::vector<double>, std::size_t> index;
  std::vector<std::size_t> nodes;
  for (std::size_t i = 0; i < t.rounds.size(); ++i) {
    if (index.emplace(t.rounds[i].query.coords(), i).second) nodes.push_back(i);
  }

  Json w1 = Json::array();
  for (std::size_t i : nodes) {
    const double r = regret(g, t.rounds[i].query);
    if (r <= cfg.eps_r) {
      rep.claim1 = false;
      w1.push_back({{"round", i}, {"regret", r}});
    }
  }

  std::map<std::size_t, std::size_t> succ;
  for (std::size_t i : nodes) {
    auto it = index.find(t.rounds[i].response.coords());
    if (it != index.end()) succ[i] = it->second;
  }
  Json w2 = Json::array();
  std::map<std::size_t, int> state;  // 1 on stack, 2 done
  for (std::size_t start : nodes) {
    if (state[start] != 0) continue;
    std::vector<std::size_t> path;
    std::size_t cur = start;
    for (;;) {
      state[cur] = 1;
      path.push_back(cur);
      auto it = succ.find(cur);
      if (it == succ.end()) break;
      const std::size_t next = it->second;
      if (state[next] == 1) {
        Json cycle = Json::array();
        auto pos = std::find(path.begin(), path.end(), next);
        for (; pos != path.end(); ++pos) cycle.push_back(*pos);
        w2.push_back(std::move(cycle));
        rep.claim2 = false;
        break;
      }
      if (state[next] == 2) break;
      cur = next;
    }
    for (std::size_t v : path) state[v] = 2;
  }

  Json w3 = Json::array();
  const auto eqf = equilibria.float_profiles();
  for (std::size_t i : nodes) {
    const auto& q = t.rounds[i].query;
    const auto& r = t.rounds[i].response;
    std::vector<double> d(q.coords().size());
    for (std::size_t k = 0; k < d.size(); ++k) d[k] = r[k] - q[k];
    const double len = norm(d);
    for (std::size_t e = 0; e < eqf.size(); ++e) {
      std::vector<double> v(d.size());
      for (std::size_t k = 0; k < d.size(); ++k) v[k] = eqf[e][k] - q[k];
      double dist;
      if (len == 0.0) {
        dist = norm(v);
      } else {
        const double along = dot(v, d) / len;
        for (std::size_t k = 0; k < d.size(); ++k) v[k] -= along * d[k] / len;
        dist = norm(v);
      }
      if (dist < cfg.rho) {
        rep.claim3 = false;
        w3.push_back({{"round", i}, {"equilibrium", e}, {"distance", dist}});
      }
    }
  }
  rep.witnesses = {{"claim1", w1}, {"claim2", w2}, {"claim3", w3}};
  return rep;
}

bool transcript_replays(const Game& g, const PgTranscript& t) {
  return std::all_of(t.rounds.begin(), t.rounds.end(), [&](const PgRound& r) {
    return same_point(alice_respond(g, r.query, t.config), r.response);
  });
}

bool short_cycle_regret_check(const Game& g, const std::vector<FloatProfile>& cycle,
                   const PgConfig& cfg, double closure_tol) {
  if (cycle.empty()) throw ArgumentError("not a cycle: empty sequence");
  for (std::size_t i = 0; i + 1 < cycle.size(); ++i) {
    if (!same_point(alice_respond(g, cycle[i], cfg), cycle[i + 1])) {
      throw ArgumentError("not a cycle: link " + std::to_string(i) +
                          " is not an Alice step");
    }
  }
  const double gap =
      distance(alice_respond(g, cycle.back(), cfg), cycle.front());
  if (!(gap <= closure_tol)) {
    throw ArgumentError("not a cycle: last step misses the first point by " +
                        std::to_string(gap));
  }
  double diameter = 0.0;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    for (std::size_t j = i + 1; j < cycle.size(); ++j) {
      diameter = std::max(diameter, distance(cycle[i], cycle[j]));
    }
  }
  if (diameter > cfg.budget * cfg.eta) return true;
  return std::all_of(cycle.begin(), cycle.end(), [&](const FloatProfile& x) {
    return regret(g, x) <= cfg.eps_r;
  });
}

// ---- Phi ----

std::vector<double> AliceDynamic::outside_delta(const FloatProfile& x) const {
  const FloatProfile& t = eqf_[target_];
  std::vector<double> delta(x.coords().size(), 0.0);
  const double dt = distance(x, t);
  if (dt == 0.0) return delta;
  double dn = dt;
  for (const auto& e : eqf_) dn = std::min(dn, distance(x, e));
  const double scale = dn / (k_ * dt);
  for (std::size_t i = 0; i < delta.size(); ++i) delta[i] = (t[i] - x[i]) * scale;
  return delta;
}

FloatProfile AliceDynamic::outside_step(const FloatProfile& x) const {
  const auto delta = outside_delta(x);
  FloatProfile y = x;
  for (std::size_t i = 0; i < delta.size(); ++i) y[i] += delta[i];
  return y;
}

FloatProfile AliceDynamic::step(const FloatProfile& x) const {
  const std::size_t n = x.coords().size();
  double prod = 1.0;
  double sum_w = 0.0;
  double sum_b = 0.0;
  std::vector<double> s(n, 0.0), d(n, 0.0);
  for (std::size_t c = 0; c < centers_.size(); ++c) {
    const double r = distance(x, centers_[c]);
    if (r == 0.0) return images_[c];
    if (r >= rho_) continue;
    const double b = 1.0 - r / rho_;
    prod *= 1.0 - b;
    const double w = b / r;
    sum_w += w;
    sum_b += b;
    FloatProfile boundary = x;
    for (std::size_t i = 0; i < n; ++i) {
      boundary[i] = centers_[c][i] + rho_ * (x[i] - centers_[c][i]) / r;
    }
    const auto out = outside_delta(boundary);
    for (std::size_t i = 0; i < n; ++i) {
      s[i] += w * (images_[c][i] - centers_[c][i]);
      d[i] += b * out[i];
    }
  }
  if (sum_b == 0.0) return outside_step(x);
  const double beta = 1.0 - prod;
  FloatProfile y = x;
  for (std::size_t i = 0; i < n; ++i) {
    y[i] += beta * s[i] / sum_w + (1.0 - beta) * d[i] / sum_b;
  }
  if (std::any_of(y.coords().begin(), y.coords().end(),
                  [](double c) { return c < 0.0; })) {
    y = project_to_profile_space(std::move(y));
  }
  return y;
}

StepFn AliceDynamic::step_fn() const {
  return [d = *this](const FloatProfile& x) { return d.step(x); };
}

AliceDynamic build_phi(const Game& g, const PgTranscript& t,
                       const EquilibriumSet& equilibria) {
  const auto claims = check_claims(g, t, equilibria);
  if (!claims.all_passed()) {
    throw DomainError("cannot build Phi: claims failed " +
                      claims.witnesses.dump());
  }
  if (t.config.target >= equilibria.size()) {
    throw ArgumentError("target index out of range");
  }
  AliceDynamic phi;
  phi.eq_ = equilibria;
  phi.eqf_ = equilibria.float_profiles();
  phi.target_ = t.config.target;
  phi.k_ = t.config.phi_slowdown;
  phi.rho_ = t.config.rho;

  std::map<std::vector<double>, std::size_t> index;
  std::vector<std::size_t> rounds;
  for (std::size_t i = 0; i < t.rounds.size(); ++i) {
    if (index.emplace(t.rounds[i].query.coords(), phi.centers_.size()).second) {
      phi.centers_.push_back(t.rounds[i].query);
      phi.images_.push_back(t.rounds[i].response);
    }
  }
  // Chains follow the exact successor relation from points with no
  // predecessor; Claim 2 rules out cycles, so this covers every center.
  const std::size_t m = phi.centers_.size();
  std::vector<std::optional<std::size_t>> succ(m);
  std::vector<bool> has_pred(m, false);
  for (std::size_t c = 0; c < m; ++c) {
    auto it = index.find(phi.images_[c].coords());
    if (it != index.end()) {
      succ[c] = it->second;
      has_pred[it->second] = true;
    }
  }
  for (std::size_t c = 0; c < m; ++c) {
    if (has_pred[c]) continue;
    std::vector<std::size_t> chain{c};
    while (succ[chain.back()]) chain.push_back(*succ[chain.back()]);
    phi.chains_.push_back(std::move(chain));
  }
  return phi;
}

PhiReport verify_phi(const Game& g, const AliceDynamic& phi,
                     const PgTranscript& t, const PgConfig& cfg, int samples,
                     std::uint64_t seed, Execution exec) {
  if (samples < 1) throw ArgumentError("samples must be positive");
  PhiReport rep;
  const auto& sizes = g.strategy_counts();
  const bool parallel = exec == Execution::kParallel;
  const auto& centers = phi.centers();
  const double kFixedTol = 1e-12;

  // (a) exact consistency on the queries.
  rep.consistency = true;
  Json wa = Json::array();
  for (std::size_t i = 0; i < t.rounds.size(); ++i) {
    if (!same_point(phi.step(t.rounds[i].query), t.rounds[i].response)) {
      rep.consistency = false;
      wa.push_back(i);
    }
  }

  // (b) no fixed points among high-regret points, uniform and inside balls.
  const long total = 2L * samples;
  std::vector<double> disp(static_cast<std::size_t>(total), -1.0);
  std::vector<FloatProfile> where(static_cast<std::size_t>(total));
#pragma omp parallel for schedule(static) if (parallel)
  for (long i = 0; i < total; ++i) {
    CounterRng rng(seed, static_cast<std::uint64_t>(i));
    FloatProfile x;
    if (i < samples) {
      x = random_profile(sizes, rng);
    } else {
      if (centers.empty()) continue;
      const auto& c = centers[static_cast<std::size_t>(i) % centers.size()];
      const auto dir = random_tangent_direction(sizes, rng);
      const double radius = cfg.rho * rng.uniform01();
      x = c;
      for (std::size_t k = 0; k < dir.size(); ++k) x[k] += radius * dir[k];
      if (!in_profile_space(x, 0.0)) continue;
    }
    if (regret(g, x) <= cfg.eps_r) continue;
    disp[i] = distance(phi.step(x), x);
    where[i] = std::move(x);
  }
  rep.no_fixed_points = true;
  rep.min_displacement = std::numeric_limits<double>::infinity();
  Json wb = Json::array();
  for (long i = 0; i < total; ++i) {
    if (disp[i] < 0.0) continue;
    ++rep.fixed_point_samples;
    rep.min_displacement = std::min(rep.min_displacement, disp[i]);
    if (disp[i] <= kFixedTol) {
      rep.no_fixed_points = false;
      if (wb.size() < 10) wb.push_back(profile_to_json(where[i]));
    }
  }

  // (c) Lipschitz ratio across ball boundaries. Inside a ball the field
  // turns over a length rho, so the admissible constant grows as 1/rho.
  const long pairs = std::max(1, samples / 10);
  std::vector<double> ratio(static_cast<std::size_t>(pairs), -1.0);
#pragma omp parallel for schedule(static) if (parallel)
  for (long i = 0; i < pairs; ++i) {
    CounterRng rng(seed, static_cast<std::uint64_t>(total + i));
    const auto dir = random_tangent_direction(sizes, rng);
    const double h = 5e-7 * rng.uniform01();
    if (h == 0.0) continue;
    FloatProfile a, b;
    if (centers.empty()) {
      a = random_profile(sizes, rng);
      b = a;
      for (std::size_t k = 0; k < dir.size(); ++k) b[k] += 2 * h * dir[k];
    } else {
      const auto& c = centers[static_cast<std::size_t>(i) % centers.size()];
      a = c;
      b = c;
      for (std::size_t k = 0; k < dir.size(); ++k) {
        a[k] += (cfg.rho - h) * dir[k];
        b[k] += (cfg.rho + h) * dir[k];
      }
    }
    if (!in_profile_space(a, 0.0) || !in_profile_space(b, 0.0)) continue;
    const double dx = distance(a, b);
    if (dx == 0.0) continue;
    ratio[i] = distance(phi.step(a), phi.step(b)) / dx;
  }
  rep.ratio_bound = 10.0 / std::min(1.0, cfg.rho);
  for (double r : ratio) rep.max_ratio = std::max(rep.max_ratio, r);
  rep.continuity = rep.max_ratio <= rep.ratio_bound;

  // (d) convergence from random starts.
  std::vector<FloatProfile> starts;
  for (long i = 0; i < pairs; ++i) {
    CounterRng rng(seed, static_cast<std::uint64_t>(total + pairs + i));
    starts.push_back(random_profile(sizes, rng));
  }
  TrajectoryOptions opts;
  opts.eps_fix = 1e-9;
  opts.max_steps = 100000;
  opts.thin_after = 0;
  opts.thin_every = 1000000;
  const auto runs = run_batch(phi.step_fn(), {}, starts, opts, exec);
  const auto eqf = phi.equilibria().float_profiles();
  rep.trajectories = static_cast<int>(runs.size());
  rep.convergence = true;
  Json wd = Json::array();
  for (std::size_t i = 0; i < runs.size(); ++i) {
    const auto& last = runs[i].final_point();
    double best = std::numeric_limits<double>::infinity();
    for (const auto& e : eqf) best = std::min(best, distance(last, e));
    if (runs[i].reason != Termination::kConverged || !(best <= 1e-6)) {
      rep.convergence = false;
      if (wd.size() < 10) {
        wd.push_back({{"start", profile_to_json(starts[i])},
                      {"termination", to_string(runs[i].reason)},
                      {"distance", best}});
      }
    }
  }
  rep.witnesses = {{"consistency", wa},
                   {"fixed_points", wb},
                   {"convergence", wd}};
  return rep;
}

PgTranscript run_match(const Game& g, BobStrategy& bob, const PgConfig& cfg,
                       Execution exec) {
  check_config(cfg);
  if (g.num_players() != 2) throw ArgumentError("PG needs a bimatrix game");
  const auto eq = enumerate_nash(g, exec);
  if (cfg.target >= eq.size()) {
    throw ArgumentError("target index " + std::to_string(cfg.target) +
                        " out of range for " + std::to_string(eq.size()) +
                        " equilibria");
  }
  PgTranscript t;
  t.config = cfg;
  t.game_fingerprint = g.fingerprint();
  t.bob = bob.name();
  for (int round = 0; round < cfg.budget; ++round) {
    auto q = bob.next_query(g, t, cfg);
    if (!q) break;
    if (q->sizes() != g.strategy_counts() ||
        !in_profile_space(*q, kFloatSumTolerance)) {
      throw ArgumentError("Bob query outside the profile space");
    }
    FloatProfile r = alice_respond(g, *q, cfg);
    t.rounds.push_back({std::move(*q), std::move(r)});
  }
  t.claim = bob.claim(g, t, cfg);
  check_profile(*t.claim, g.strategy_counts());
  t.claim_regret = regret(g, *t.claim);
  t.claims = check_claims(g, t, eq);
  if (t.claims.all_passed()) {
    const auto phi = build_phi(g, t, eq);
    t.phi = verify_phi(g, phi, t, cfg, cfg.verify_samples,
                       splitmix64(cfg.seed), exec);
  }
  if (t.claim_regret <= cfg.eps_r) {
    t.prevail = "bob";
  } else if (t.claims.all_passed() && t.phi && t.phi->passed()) {
    t.prevail = "alice";
  } else {
    t.prevail = "bob";
  }
  return t;
}

namespace {

Json phi_report_json(const PhiReport& r) {
  Json j;
  j["consistency"] = r.consistency;
  j["no_fixed_points"] = r.no_fixed_points;
  j["continuity"] = r.continuity;
  j["convergence"] = r.convergence;
  j["fixed_point_samples"] = r.fixed_point_samples;
  j["min_displacement"] = r.min_displacement;
  j["max_ratio"] = r.max_ratio;
  j["ratio_bound"] = r.ratio_bound;
  j["trajectories"] = r.trajectories;
  j["passed"] = r.passed();
  j["witnesses"] = r.witnesses;
  return j;
}

}  // namespace

Json transcript_to_json(const PgTranscript& t) {
  Json j;
  j["config"] = config_to_json(t.config);
  j["game"] = t.game_fingerprint;
  j["bob"] = t.bob;
  Json rounds = Json::array();
  for (const auto& r : t.rounds) {
    rounds.push_back({{"query", profile_to_json(r.query)},
                      {"response", profile_to_json(r.response)}});
  }
  j["rounds"] = std::move(rounds);
  j["claim"] = t.claim ? profile_to_json(*t.claim) : Json(nullptr);
  j["claim_regret"] = t.claim_regret;
  j["claims_report"] = {{"claim1", t.claims.claim1},
                        {"claim2", t.claims.claim2},
                        {"claim3", t.claims.claim3},
                        {"witnesses", t.claims.witnesses}};
  j["phi_report"] = t.phi ? phi_report_json(*t.phi) : Json(nullptr);
  j["prevail"] = t.prevail;
  return j;
}

}  // namespace nashlab
