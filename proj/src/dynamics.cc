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

#include "nashlab/dynamics.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "nashlab/rng.h"
#include "nashlab/simplex.h"

namespace nashlab {

namespace {

template <class T>
T absolute(const T& v) {
  return v < 0 ? T(-v) : v;
}

template <class T>
struct Region {
  bool on_slice = false;
  std::size_t slice = 0;      // the slice, or the one adjacent to the slab
  std::size_t attractor = 0;  // attractor of the slab
  T u = T(1);                 // weight of the attractor term
};

// ts is strictly increasing with odd length; odd positions are slices.
template <class T>
Region<T> locate(const std::vector<T>& ts, const T& t) {
  const std::size_t m = ts.size();
  Region<T> r;
  if (m == 1) return r;
  std::size_t below = 0;
  for (std::size_t s = 1; s < m; s += 2) {
    if (t == ts[s]) {
      r.on_slice = true;
      r.slice = r.attractor = s;
      r.u = T(0);
      return r;
    }
    if (ts[s] < t) ++below;
  }
  const std::size_t j = 2 * below;
  r.attractor = j;
  if (t < ts[j]) {
    r.slice = j == 0 ? 1 : j - 1;
  } else if (ts[j] < t) {
    r.slice = j + 1 < m ? j + 1 : j - 1;
  } else {
    r.slice = j == 0 ? 1 : j - 1;
    return r;
  }
  const T width = absolute(T(ts[j] - ts[r.slice]));
  const T d = absolute(T(t - ts[r.slice]));
  r.u = d <= width ? T(d / width) : T(width / d);
  return r;
}

bool has_negative(const FloatProfile& x) {
  return std::any_of(x.coords().begin(), x.coords().end(),
                     [](double c) { return c < 0.0; });
}

}  // namespace

// ---- Type 1 ----

Type1Dynamic::Type1Dynamic(EquilibriumSet equilibria, std::size_t target,
                           double k)
    : eq_(std::move(equilibria)), target_(target), k_(k) {
  if (eq_.empty()) throw ArgumentError("Type 1 dynamic needs equilibria");
  if (target_ >= eq_.size()) throw ArgumentError("target index out of range");
  if (!(k_ > 1.0)) throw ArgumentError("slowdown k must exceed 1");
  eqf_ = eq_.float_profiles();
}

double Type1Dynamic::step_fraction(const FloatProfile& x) const {
  const FloatProfile& z = eqf_[target_];
  const double dz = distance(x, z);
  if (dz == 0.0) return 0.0;
  double nearest = dz;
  for (const auto& e : eqf_) nearest = std::min(nearest, distance(x, e));
  const double len = nearest / k_;
  return len >= dz ? 1.0 : len / dz;
}

FloatProfile Type1Dynamic::step(const FloatProfile& x) const {
  const FloatProfile& z = eqf_[target_];
  const double c = step_fraction(x);
  if (c == 1.0) return z;
  FloatProfile y = x;
  for (std::size_t i = 0; i < y.coords().size(); ++i) y[i] += c * (z[i] - x[i]);
  return y;
}

RationalProfile Type1Dynamic::step_exact(const RationalProfile& x) const {
  const RationalProfile& z = target();
  const Rational c = rational_from_double(step_fraction(to_float(x)));
  RationalProfile y = x;
  for (std::size_t i = 0; i < y.coords().size(); ++i) y[i] += c * (z[i] - x[i]);
  return y;
}

double Type1Dynamic::lyapunov(const FloatProfile& x) const {
  return distance(x, eqf_[target_]);
}

StepFn Type1Dynamic::step_fn() const {
  return [d = *this](const FloatProfile& x) { return d.step(x); };
}

LyapunovFn Type1Dynamic::lyapunov_fn() const {
  return [d = *this](const FloatProfile& x) { return d.lyapunov(x); };
}

// ---- Type 2 ----

Type2Dynamic::Type2Dynamic(EquilibriumSet equilibria, std::uint64_t seed,
                           double alpha, double k)
    : alpha_(alpha), k_(k) {
  if (equilibria.empty()) throw ArgumentError("Type 2 dynamic needs equilibria");
  if (equilibria.size() % 2 == 0) {
    throw DomainError("Type 2 dynamic needs an odd number of equilibria, got " +
                      std::to_string(equilibria.size()));
  }
  if (!(alpha_ > 0.0 && alpha_ < 1.0)) {
    throw ArgumentError("alpha must lie in (0, 1)");
  }
  if (!(k_ > 1.0)) throw ArgumentError("slowdown k must exceed 1");
  const auto sizes = equilibria.members[0].profile.sizes();
  y_ = FloatProfile::uniform(sizes);
  yq_ = RationalProfile::uniform(sizes);

  eq_ = std::move(equilibria.members);
  // Among seeded random directions keep the one whose closest pair of
  // projections is farthest apart: narrow chambers make the interpolation
  // steep. Keep drawing past the first batch until some gap is usable.
  double best_gap = 0.0;
  std::vector<double> best_w;
  for (std::uint64_t attempt = 0;
       attempt < kLineCandidates || !(best_gap > 1e-9); ++attempt) {
    if (attempt == 1000) {
      throw InvariantViolation("no line separates the equilibria");
    }
    CounterRng rng(seed, attempt);
    w_ = random_tangent_direction(sizes, rng);
    std::vector<double> t;
    for (const auto& e : eq_) t.push_back(t_of(to_float(e.profile)));
    std::sort(t.begin(), t.end());
    double gap = std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i < t.size(); ++i) gap = std::min(gap, t[i] - t[i - 1]);
    if (gap > best_gap) best_gap = gap, best_w = w_;
  }
  w_ = std::move(best_w);
  std::vector<double> t;
  for (const auto& e : eq_) t.push_back(t_of(to_float(e.profile)));
  std::vector<std::size_t> order(eq_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return t[a] < t[b]; });
  std::vector<Equilibrium> sorted;
  for (std::size_t i : order) sorted.push_back(eq_[i]);
  eq_ = std::move(sorted);
  for (double c : w_) wq_.push_back(rational_from_double(c));
  for (const auto& e : eq_) {
    eqf_.push_back(to_float(e.profile));
    t_.push_back(t_of(eqf_.back()));
    Rational tq = 0;
    for (std::size_t i = 0; i < wq_.size(); ++i) {
      tq += (e.profile[i] - yq_[i]) * wq_[i];
    }
    tq_.push_back(tq);
  }
  for (std::size_t i = 1; i < tq_.size(); ++i) {
    if (!(tq_[i - 1] < tq_[i])) {
      throw InvariantViolation("equilibrium projections not increasing");
    }
  }
}

double Type2Dynamic::t_of(const FloatProfile& x) const {
  double t = 0.0;
  for (std::size_t i = 0; i < w_.size(); ++i) t += (x[i] - y_[i]) * w_[i];
  return t;
}

FloatProfile Type2Dynamic::level_target(double t, std::size_t slice) const {
  const FloatProfile& zs = eqf_[slice];
  FloatProfile v = zs;
  const double shift = t - t_[slice];
  for (std::size_t i = 0; i < v.coords().size(); ++i) v[i] += shift * w_[i];
  if (!has_negative(v)) return v;
  return project_to_slice(zs, w_, t + dot(y_.coords(), w_));
}

FloatProfile Type2Dynamic::step(const FloatProfile& x) const {
  const double t = t_of(x);
  const auto r = locate(t_, t);
  const std::size_t n = x.coords().size();
  FloatProfile out = x;
  if (r.on_slice) {
    const FloatProfile& zs = eqf_[r.slice];
    for (std::size_t i = 0; i < n; ++i) out[i] += alpha_ * (zs[i] - x[i]);
    return out;
  }
  const FloatProfile& zj = eqf_[r.attractor];
  if (r.u == 1.0) {
    for (std::size_t i = 0; i < n; ++i) out[i] += (zj[i] - x[i]) / k_;
    return out;
  }
  // The slice move is carried to x's own level: head for the point of X on
  // that level closest to z_s. Translating x by alpha (z_s - x_s) instead
  // can leave X, and clamping it back pins boundary points in place.
  const FloatProfile q = level_target(t, r.slice);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = x[i] + (1.0 - r.u) * alpha_ * (q[i] - x[i]) +
             r.u * (zj[i] - x[i]) / k_;
  }
  return out;
}

RationalProfile Type2Dynamic::step_exact(const RationalProfile& x) const {
  Rational t = 0;
  for (std::size_t i = 0; i < wq_.size(); ++i) t += (x[i] - yq_[i]) * wq_[i];
  const auto r = locate(tq_, t);
  const Rational alpha = rational_from_double(alpha_);
  const Rational inv_k = 1 / rational_from_double(k_);
  const std::size_t n = x.coords().size();
  RationalProfile out = x;
  if (r.on_slice) {
    const auto& zs = eq_[r.slice].profile;
    for (std::size_t i = 0; i < n; ++i) out[i] += alpha * (zs[i] - x[i]);
    return out;
  }
  const auto& zj = eq_[r.attractor].profile;
  if (r.u == 1) {
    for (std::size_t i = 0; i < n; ++i) out[i] += (zj[i] - x[i]) * inv_k;
    return out;
  }
  const RationalProfile q =
      to_rational_normalized(level_target(t_of(to_float(x)), r.slice));
  const Rational v = 1 - r.u;
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = x[i] + v * alpha * (q[i] - x[i]) + r.u * (zj[i] - x[i]) * inv_k;
  }
  return out;
}

double Type2Dynamic::lyapunov(const FloatProfile& x) const {
  if (eq_.size() == 1) return distance(x, eqf_[0]);
  const double t = t_of(x);
  const auto r = locate(t_, t);
  if (r.on_slice) return distance(x, eqf_[r.slice]);
  const std::size_t j = r.attractor;
  const double width = std::abs(t_[j] - t_[r.slice]);
  FloatProfile xp = x;
  for (std::size_t i = 0; i < xp.coords().size(); ++i) {
    xp[i] -= (t - t_[j]) * w_[i];
  }
  return std::abs(t_[j] - t) / width + distance(xp, eqf_[j]) / k_;
}

StepFn Type2Dynamic::step_fn() const {
  return [d = *this](const FloatProfile& x) { return d.step(x); };
}

LyapunovFn Type2Dynamic::lyapunov_fn() const {
  return [d = *this](const FloatProfile& x) { return d.lyapunov(x); };
}

// ---- BNN ----

template <class T>
std::vector<T> bnn_field(const Game& g, const Profile<T>& x) {
  std::vector<T> field(x.coords().size(), T(0));
  for (int i = 0; i < g.num_players(); ++i) {
    const auto dev = deviation_payoffs(g, x, i);
    const auto own = x.block(i);
    T mean(0);
    for (std::size_t a = 0; a < dev.size(); ++a) mean += own[a] * dev[a];
    std::vector<T> excess(dev.size(), T(0));
    T total(0);
    for (std::size_t a = 0; a < dev.size(); ++a) {
      T e = dev[a] - mean;
      if (e > 0) excess[a] = e;
      total += excess[a];
    }
    const int off = x.offset(i);
    for (std::size_t a = 0; a < dev.size(); ++a) {
      field[off + a] = excess[a] - own[a] * total;
    }
  }
  return field;
}

template std::vector<Rational> bnn_field(const Game&, const RationalProfile&);
template std::vector<double> bnn_field(const Game&, const FloatProfile&);

FloatProfile bnn_step(const Game& g, const FloatProfile& x, double eta) {
  if (!(eta > 0.0)) throw ArgumentError("eta must be positive");
  const auto field = bnn_field(g, x);
  FloatProfile y = x;
  for (std::size_t i = 0; i < y.coords().size(); ++i) y[i] += eta * field[i];
  if (has_negative(y)) y = project_to_profile_space(std::move(y));
  return y;
}

// ---- descent ----

LyapunovViolation::LyapunovViolation(FloatProfile x, double before,
                                     double after, std::int64_t step)
    : DomainError("not a Lyapunov pair: L went from " + std::to_string(before) +
                  " to " + std::to_string(after) + " at step " +
                  std::to_string(step)),
      x_(std::move(x)),
      before_(before),
      after_(after),
      step_(step) {}

DescentResult descend(const StepFn& phi, const LyapunovFn& lyapunov,
                      const FloatProfile& x0, double eps_fix,
                      std::int64_t max_steps) {
  if (!(eps_fix > 0.0)) throw ArgumentError("eps_fix must be positive");
  if (max_steps < 1) throw ArgumentError("max_steps must be positive");
  FloatProfile x = x0;
  double lx = lyapunov(x);
  for (std::int64_t step = 1; step <= max_steps; ++step) {
    FloatProfile y = phi(x);
    const double disp = distance(x, y);
    if (disp < eps_fix) return {std::move(y), step, disp};
    const double ly = lyapunov(y);
    if (!(ly < lx)) throw LyapunovViolation(x, lx, ly, step);
    x = std::move(y);
    lx = ly;
  }
  throw DomainError("descend: step limit of " + std::to_string(max_steps) +
                    " exceeded");
}

}  // namespace nashlab
