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

#include "nashlab/reductions.h"

#include <exception>
#include <optional>

#include "nashlab/rng.h"
#include "nashlab/simplex.h"

namespace nashlab {

RationalProfile DynamicOracle::query(const RationalProfile& x) {
  RationalProfile y = fn_(x);
  log_.emplace_back(x, y);
  return y;
}

DynamicOracle make_oracle(const Type1Dynamic& dyn) {
  return DynamicOracle(
      [dyn](const RationalProfile& x) { return dyn.step_exact(x); });
}

DynamicOracle make_oracle(const Type2Dynamic& dyn) {
  return DynamicOracle(
      [dyn](const RationalProfile& x) { return dyn.step_exact(x); });
}

namespace {

std::vector<QuadraticRoot> solution_points(const LambdaSolutionSet& s) {
  std::vector<QuadraticRoot> out;
  for (const auto& iv : s.intervals) {
    out.push_back(iv.lo);
    if (!iv.is_point()) out.push_back(iv.hi);
  }
  return out;
}

}  // namespace

FindNashResult find_nash_via_type1(const Game& g, DynamicOracle& oracle) {
  const RationalProfile x = RationalProfile::uniform(g.strategy_counts());
  const RationalProfile y = oracle.query(x);
  check_profile(y, g.strategy_counts());
  if (y == x) {
    if (!is_nash(g, x, Rational(0))) {
      throw DomainError("oracle not Type 1: it fixes a non-equilibrium");
    }
    return {x, line_through(x, x), Rational(0), {}};
  }
  FindNashResult r;
  r.line = line_through(x, y);
  r.solution = nash_on_line(g, r.line);
  std::optional<QuadraticRoot> ahead, behind;
  const QuadraticRoot zero;
  for (const auto& t : solution_points(r.solution)) {
    if (t > zero) {
      if (!ahead || t < *ahead) ahead = t;
    } else if (!behind || t > *behind) {
      behind = t;
    }
  }
  const auto& pick = ahead ? ahead : behind;
  if (!pick) {
    throw DomainError("oracle not Type 1: no equilibrium on the line");
  }
  if (!pick->is_rational()) {
    throw InvariantViolation("irrational equilibrium on a rational line");
  }
  r.lambda = pick->to_rational();
  r.profile = r.line.point(std::span<const Rational>(&r.lambda, 1));
  return r;
}

UniquenessVerdict uniqueness_test(const Game& g, DynamicOracle& oracle,
                                  const UniquenessOptions& opts) {
  if (opts.trials <= 0) throw ArgumentError("no trials");
  const auto report = is_nondegenerate(g, opts.exec);
  if (!report.nondegenerate) {
    throw DomainError("degenerate game: " + report.reason);
  }
  UniquenessVerdict v;
  v.trials = opts.trials;
  v.log.resize(static_cast<std::size_t>(opts.trials));
  for (int i = 0; i < opts.trials; ++i) {
    CounterRng rng(opts.seed, static_cast<std::uint64_t>(i));
    auto& trial = v.log[i];
    trial.query = to_rational_normalized(random_profile(g.strategy_counts(), rng));
    trial.response = oracle.query(trial.query);
  }

  const bool parallel = opts.exec == Execution::kParallel;
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (int i = 0; i < opts.trials; ++i) {
    try {
      auto& trial = v.log[i];
      if (trial.response == trial.query) {
        trial.hit = is_nash(g, trial.query, Rational(0));
        continue;
      }
      trial.solution =
          nash_on_line(g, line_through(trial.query, trial.response));
      const QuadraticRoot zero;
      for (const auto& iv : trial.solution.intervals) {
        if (!opts.forward_ray || iv.hi >= zero) trial.hit = true;
      }
    } catch (...) {
#pragma omp critical
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);

  for (const auto& t : v.log) v.hits += t.hit ? 1 : 0;
  v.unique = 2 * v.hits > v.trials;
  return v;
}

Json verdict_to_json(const UniquenessVerdict& v) {
  Json j;
  j["verdict"] = v.unique ? "unique" : "multiple";
  j["trials"] = v.trials;
  j["hits"] = v.hits;
  Json lines = Json::array();
  for (const auto& t : v.log) {
    Json e;
    e["query"] = profile_to_json(t.query);
    e["response"] = profile_to_json(t.response);
    e["hit"] = t.hit;
    e["solution"] = t.response == t.query
                        ? Json::array()
                        : solution_to_json(line_through(t.query, t.response),
                                           t.solution);
    lines.push_back(std::move(e));
  }
  j["lines"] = std::move(lines);
  return j;
}

}  // namespace nashlab
