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

#ifndef NASHLAB_SIMPLEX_H_
#define NASHLAB_SIMPLEX_H_

#include <span>
#include <vector>

#include "nashlab/profile.h"
#include "nashlab/rng.h"

namespace nashlab {

double dot(std::span<const double> a, std::span<const double> b);
double norm(std::span<const double> a);
double distance(const FloatProfile& a, const FloatProfile& b);
double linf_distance(const FloatProfile& a, const FloatProfile& b);

// Euclidean projection of v onto the probability simplex, in place.
void project_to_simplex(std::span<double> v);

// Euclidean projection onto the product of simplices (block by block).
FloatProfile project_to_profile_space(FloatProfile x);

// Closest point to x among profiles y with <y, w> = level. The level must
// be attained inside the profile space. Solved through the one-parameter
// family project(x - mu * w), which is monotone in mu.
FloatProfile project_to_slice(const FloatProfile& x, std::span<const double> w,
                              double level);

// Per-player Dirichlet(1, ..., 1) draw via normalized exponentials, which is
// the uniform distribution on the product of simplices.
FloatProfile random_profile(const std::vector<int>& sizes, CounterRng& rng);

// A Gaussian vector with zero block sums, scaled to unit length.
std::vector<double> random_tangent_direction(const std::vector<int>& sizes,
                                             CounterRng& rng);

// Moves every coordinate into [0, inf) and renormalizes each block to sum
// one exactly in rational arithmetic. Used when a float point must be
// handed to an exact routine.
RationalProfile to_rational_normalized(const FloatProfile& x);

}  // namespace nashlab

#endif  // NASHLAB_SIMPLEX_H_
