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

#ifndef NASHLAB_PROVING_GAME_H_
#define NASHLAB_PROVING_GAME_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nashlab/dynamics.h"
#include "nashlab/equilibria.h"
#include "nashlab/game.h"
#include "nashlab/game_io.h"

namespace nashlab {

struct PgConfig {
  int budget = 32;             // P, number of query rounds
  double eps_r = 1e-2;         // approximation bound for Bob's claim
  double eta = 1e-3;           // Alice's step scale
  double rho = 1e-4;           // ball radius around each query
  std::size_t target = 0;      // index of T in the enumerated set
  double phi_slowdown = 2.0;   // K in the outside field of Phi
  int verify_samples = 10000;  // random points for verify_phi
  std::uint64_t seed = 0;
};

// Throws ArgumentError unless 0 < rho < eta / 4, 0 < eps_r < 1, P >= 0.
void check_config(const PgConfig& cfg);
Json config_to_json(const PgConfig& cfg);

struct PgRound {
  FloatProfile query;
  FloatProfile response;
};

struct ClaimsReport {
  bool claim1 = true;  // no query is an eps_r-approximate equilibrium
  bool claim2 = true;  // no query lies on a cycle of exact responses
  bool claim3 = true;  // no equilibrium within rho of a query's line
  Json witnesses = Json::object();
  bool all_passed() const { return claim1 && claim2 && claim3; }
};

struct PhiReport {
  bool consistency = false;
  bool no_fixed_points = false;
  bool continuity = false;
  bool convergence = false;
  double max_ratio = 0.0;      // largest |Phi(x)-Phi(x')| / |x-x'| seen
  double ratio_bound = 0.0;
  double min_displacement = 0.0;
  int fixed_point_samples = 0;
  int trajectories = 0;
  Json witnesses = Json::object();
  bool passed() const {
    return consistency && no_fixed_points && continuity && convergence;
  }
};

struct PgTranscript {
  PgConfig config;
  std::string game_fingerprint;
  std::string bob;
  std::vector<PgRound> rounds;
  std::optional<FloatProfile> claim;
  double claim_regret = 0.0;
  ClaimsReport claims;
  std::optional<PhiReport> phi;
  std::string prevail;  // "alice" or "bob"
};

// phi(x) = x + eta * bnn_field(x). Pure in (g, x, eta).
FloatProfile alice_respond(const Game& g, const FloatProfile& x,
                           const PgConfig& cfg);

class BobStrategy {
 public:
  virtual ~BobStrategy() = default;
  virtual std::string name() const = 0;
  // The next query given the rounds so far, or nothing to stop early.
  virtual std::optional<FloatProfile> next_query(const Game& g,
                                                 const PgTranscript& prefix,
                                                 const PgConfig& cfg) = 0;
  virtual FloatProfile claim(const Game& g, const PgTranscript& transcript,
                             const PgConfig& cfg) = 0;
};

// "grid": deterministic rank-1 lattice probes, claims the best probe.
// "random": Dirichlet probes, claims the best of uniform, probes and
//   responses.
// "cheat": random probes, then claims an enumerated equilibrium.
std::unique_ptr<BobStrategy> make_bob(std::string_view name);

// Claims 1-3 over the distinct query points of the transcript.
ClaimsReport check_claims(const Game& g, const PgTranscript& transcript,
                          const EquilibriumSet& equilibria);

// True iff every recorded response equals alice_respond bit for bit.
bool transcript_replays(const Game& g, const PgTranscript& transcript);

// `cycle` must satisfy cycle[i+1] == alice_respond(cycle[i]) exactly, and
// alice_respond(cycle.back()) must be within closure_tol of cycle.front().
// When the cycle diameter is at most P * eta, checks that every member has
// regret <= eps_r; otherwise the statement is vacuous and true is returned.
bool short_cycle_regret_check(const Game& g, const std::vector<FloatProfile>& cycle,
                   const PgConfig& cfg, double closure_tol = 0.0);

// Alice's second-stage dynamic. Outside the balls of radius rho around the
// queries, Delta(x) = (T - x) / |T - x| * |x - N| / K with N the nearest
// equilibrium. Inside the balls it blends the recorded steps delta(q) with
// Delta at the radial boundary points, so Phi(q) = phi(q) on every query.
class AliceDynamic {
 public:
  FloatProfile step(const FloatProfile& x) const;
  FloatProfile outside_step(const FloatProfile& x) const;
  StepFn step_fn() const;

  const std::vector<std::vector<std::size_t>>& chains() const {
    return chains_;
  }
  const std::vector<FloatProfile>& centers() const { return centers_; }
  const EquilibriumSet& equilibria() const { return eq_; }
  double rho() const { return rho_; }

 private:
  friend AliceDynamic build_phi(const Game& g, const PgTranscript& t,
                                const EquilibriumSet& equilibria);
  std::vector<double> outside_delta(const FloatProfile& x) const;

  EquilibriumSet eq_;
  std::vector<FloatProfile> eqf_;
  std::size_t target_ = 0;
  double k_ = 2.0;
  double rho_ = 0.0;
  std::vector<FloatProfile> centers_;
  std::vector<FloatProfile> images_;
  std::vector<std::vector<std::size_t>> chains_;
};

// Throws DomainError unless all three claims pass.
AliceDynamic build_phi(const Game& g, const PgTranscript& t,
                       const EquilibriumSet& equilibria);

PhiReport verify_phi(const Game& g, const AliceDynamic& phi,
                     const PgTranscript& t, const PgConfig& cfg, int samples,
                     std::uint64_t seed,
                     Execution exec = Execution::kParallel);

// Runs the query rounds, Bob's claim, the claim checkers and, when they
// pass, Phi verification. Bob prevails if his claim has regret <= eps_r;
// otherwise Alice prevails iff all claims pass and Phi verifies.
PgTranscript run_match(const Game& g, BobStrategy& bob, const PgConfig& cfg,
                       Execution exec = Execution::kParallel);

Json transcript_to_json(const PgTranscript& t);

}  // namespace nashlab

#endif  // NASHLAB_PROVING_GAME_H_
