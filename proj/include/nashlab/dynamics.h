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

#ifndef NASHLAB_DYNAMICS_H_
#define NASHLAB_DYNAMICS_H_

#include <cstdint>
#include <functional>
#include <vector>

#include "nashlab/equilibria.h"
#include "nashlab/game.h"
#include "nashlab/profile.h"

namespace nashlab {

inline constexpr double kDefaultSlowdown = 10.0;  // k
inline constexpr double kDefaultAlpha = 0.5;
inline constexpr double kDefaultEpsFix = 1e-9;
inline constexpr std::int64_t kDefaultMaxSteps = 1000000;
// Directions tried when choosing the Type 2 ordering line.
inline constexpr std::uint64_t kLineCandidates = 64;

using StepFn = std::function<FloatProfile(const FloatProfile&)>;
using LyapunovFn = std::function<double(const FloatProfile&)>;

// Moves every profile straight toward one chosen equilibrium z, slowing
// down near every equilibrium:
//   phi(x) = x + (z - x) / |z - x| * |z' - x| / k,  z' the nearest one.
// A step that would pass z stops at z.
class Type1Dynamic {
 public:
  Type1Dynamic(EquilibriumSet equilibria, std::size_t target,
               double k = kDefaultSlowdown);

  FloatProfile step(const FloatProfile& x) const;
  // Same map in exact arithmetic: the step length is computed in double and
  // converted exactly, so phi(x) - x is an exact multiple of z - x.
  RationalProfile step_exact(const RationalProfile& x) const;
  // |x - z|.
  double lyapunov(const FloatProfile& x) const;

  const EquilibriumSet& equilibria() const { return eq_; }
  const RationalProfile& target() const { return eq_.members[target_].profile; }
  std::size_t target_index() const { return target_; }
  double k() const { return k_; }

  StepFn step_fn() const;
  LyapunovFn lyapunov_fn() const;

 private:
  double step_fraction(const FloatProfile& x) const;

  EquilibriumSet eq_;
  std::vector<FloatProfile> eqf_;
  std::size_t target_;
  double k_;
};

// Orders the equilibria by their projection t = <z - y, w> on a random line
// through the barycenter y. Hyperplanes normal to w through the
// equilibria of odd rank (0-based) are slices; every other equilibrium
// attracts the slab around it. Inside a chamber, between a slice s and the
// hyperplane of its attractor j,
//   phi(x) = (1 - u) (x + alpha (z_s - x_s)) + u (x + (z_j - x) / k)
// with x_s the closest point of the slice within X, u = d / W, d the
// distance to the slice along w and W the chamber width. Beyond the extreme
// attractors u = W / d, so the motion toward the slice never vanishes.
class Type2Dynamic {
 public:
  Type2Dynamic(EquilibriumSet equilibria, std::uint64_t seed,
               double alpha = kDefaultAlpha, double k = kDefaultSlowdown);

  FloatProfile step(const FloatProfile& x) const;
  // Exact-arithmetic variant: region and weight u are exact, the level
  // target is computed in floats and renormalized to rational block sums.
  RationalProfile step_exact(const RationalProfile& x) const;
  double lyapunov(const FloatProfile& x) const;

  // Equilibria sorted by projection; index 2i+1 lies on a slice.
  const std::vector<Equilibrium>& sorted_equilibria() const { return eq_; }
  const std::vector<double>& projections() const { return t_; }
  const std::vector<double>& direction() const { return w_; }
  double t_of(const FloatProfile& x) const;
  double alpha() const { return alpha_; }
  double k() const { return k_; }

  StepFn step_fn() const;
  LyapunovFn lyapunov_fn() const;

 private:
  // Point of X at level t closest to the equilibrium on `slice`.
  FloatProfile level_target(double t, std::size_t slice) const;

  std::vector<Equilibrium> eq_;
  std::vector<FloatProfile> eqf_;
  std::vector<double> w_;
  std::vector<Rational> wq_;
  FloatProfile y_;
  RationalProfile yq_;
  std::vector<double> t_;
  std::vector<Rational> tq_;
  double alpha_;
  double k_;
};

// Brown-von Neumann-Nash field: e_a = [u_i(a, x_-i) - u_i(x)]_+ and
// field_a = e_a - x_a * sum_b e_b, per player.
template <class T>
std::vector<T> bnn_field(const Game& g, const Profile<T>& x);

// x + eta * field, projected back onto X only if a coordinate went negative.
FloatProfile bnn_step(const Game& g, const FloatProfile& x, double eta);

class LyapunovViolation : public DomainError {
 public:
  LyapunovViolation(FloatProfile x, double before, double after,
                    std::int64_t step);
  const FloatProfile& x() const { return x_; }
  double before() const { return before_; }
  double after() const { return after_; }
  std::int64_t step() const { return step_; }

 private:
  FloatProfile x_;
  double before_;
  double after_;
  std::int64_t step_;
};

struct DescentResult {
  FloatProfile x;
  std::int64_t steps = 0;
  double final_displacement = 0.0;
};

// Iterates phi while checking that L strictly decreases on every step that
// is not yet below eps_fix. Throws LyapunovViolation on the first increase
// and DomainError when max_steps is exhausted.
DescentResult descend(const StepFn& phi, const LyapunovFn& lyapunov,
                      const FloatProfile& x0, double eps_fix,
                      std::int64_t max_steps);

}  // namespace nashlab

#endif  // NASHLAB_DYNAMICS_H_
