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

#include "nashlab/simplex.h"

#include <algorithm>
#include <cmath>
#include <functional>

namespace nashlab {

double dot(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw DimensionError("dot: length mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm(std::span<const double> a) { return std::sqrt(dot(a, a)); }

double distance(const FloatProfile& a, const FloatProfile& b) {
  if (a.sizes() != b.sizes()) throw DimensionError("distance: shape mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < a.coords().size(); ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return std::sqrt(s);
}

double linf_distance(const FloatProfile& a, const FloatProfile& b) {
  if (a.sizes() != b.sizes()) throw DimensionError("distance: shape mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < a.coords().size(); ++i) {
    m = std::max(m, std::abs(a[i] - b[i]));
  }
  return m;
}

void project_to_simplex(std::span<double> v) {
  std::vector<double> sorted(v.begin(), v.end());
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  double cumulative = 0.0;
  double theta = 0.0;
  for (std::size_t j = 0; j < sorted.size(); ++j) {
    cumulative += sorted[j];
    const double t = (cumulative - 1.0) / static_cast<double>(j + 1);
    if (sorted[j] - t > 0) theta = t;
  }
  for (auto& c : v) c = std::max(c - theta, 0.0);
}

FloatProfile project_to_profile_space(FloatProfile x) {
  for (int i = 0; i < x.num_players(); ++i) project_to_simplex(x.block(i));
  return x;
}

FloatProfile project_to_slice(const FloatProfile& x, std::span<const double> w,
                              double level) {
  auto at = [&](double mu) {
    FloatProfile y = x;
    for (std::size_t i = 0; i < y.coords().size(); ++i) y[i] -= mu * w[i];
    return project_to_profile_space(std::move(y));
  };
  // g(mu) = <at(mu), w> is nonincreasing in mu.
  auto g = [&](double mu) { return dot(at(mu).coords(), w); };
  double lo = -1.0;
  double hi = 1.0;
  for (int grow = 0; g(lo) < level; ++grow, lo *= 2) {
    if (grow > 60) throw DomainError("slice level not attained in X");
  }
  for (int grow = 0; g(hi) > level; ++grow, hi *= 2) {
    if (grow > 60) throw DomainError("slice level not attained in X");
  }
  for (int it = 0; it < 200 && hi - lo > 1e-17 * std::max(1.0, std::abs(lo));
       ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    if (g(mid) > level) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return at(0.5 * (lo + hi));
}

FloatProfile random_profile(const std::vector<int>& sizes, CounterRng& rng) {
  FloatProfile x(sizes);
  for (int i = 0; i < x.num_players(); ++i) {
    auto block = x.block(i);
    double total = 0.0;
    for (auto& c : block) {
      c = rng.exponential();
      total += c;
    }
    for (auto& c : block) c /= total;
  }
  return x;
}

std::vector<double> random_tangent_direction(const std::vector<int>& sizes,
                                             CounterRng& rng) {
  FloatProfile w(sizes);
  for (;;) {
    for (int i = 0; i < w.num_players(); ++i) {
      auto block = w.block(i);
      double mean = 0.0;
      for (auto& c : block) {
        c = rng.normal();
        mean += c;
      }
      mean /= static_cast<double>(block.size());
      for (auto& c : block) c -= mean;
    }
    const double len = norm(w.coords());
    if (len > 1e-6) {
      for (auto& c : w.coords()) c /= len;
      return w.coords();
    }
  }
}

RationalProfile to_rational_normalized(const FloatProfile& x) {
  RationalProfile out(x.sizes());
  for (int i = 0; i < x.num_players(); ++i) {
    Rational total = 0;
    auto dst = out.block(i);
    const auto src = x.block(i);
    for (std::size_t a = 0; a < src.size(); ++a) {
      dst[a] = rational_from_double(std::max(src[a], 0.0));
      total += dst[a];
    }
    if (total == 0) throw DomainError("profile block has no mass");
    for (auto& c : dst) c /= total;
  }
  return out;
}

}  // namespace nashlab
