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

#ifndef NASHLAB_PROFILE_H_
#define NASHLAB_PROFILE_H_

#include <cstddef>
#include <numeric>
#include <span>
#include <vector>

#include "nashlab/errors.h"
#include "nashlab/rational.h"

namespace nashlab {

// One probability vector per player, stored contiguously: the coordinates
// of player i occupy [offset(i), offset(i) + size(i)). The flat layout is
// also the Euclidean space the dynamics move in.
//
// Two numeric modes exist: Profile<Rational> for exact equilibrium work and
// Profile<double> for trajectories. They are distinct types, so mixing
// them needs an explicit conversion.
template <class T>
class Profile {
 public:
  Profile() = default;

  explicit Profile(std::vector<int> sizes)
      : sizes_(std::move(sizes)), offsets_(sizes_.size() + 1, 0) {
    for (std::size_t i = 0; i < sizes_.size(); ++i) {
      if (sizes_[i] < 1) throw DimensionError("player with no strategies");
      offsets_[i + 1] = offsets_[i] + sizes_[i];
    }
    coords_.assign(static_cast<std::size_t>(offsets_.back()), T(0));
  }

  Profile(std::vector<int> sizes, std::vector<T> coords)
      : Profile(std::move(sizes)) {
    if (coords.size() != coords_.size()) {
      throw DimensionError("profile coordinate count does not match sizes");
    }
    coords_ = std::move(coords);
  }

  static Profile uniform(const std::vector<int>& sizes) {
    Profile x(sizes);
    for (int i = 0; i < x.num_players(); ++i) {
      for (auto& c : x.block(i)) c = T(1) / T(sizes[i]);
    }
    return x;
  }

  static Profile pure(const std::vector<int>& sizes,
                      const std::vector<int>& choices) {
    Profile x(sizes);
    if (choices.size() != sizes.size()) {
      throw DimensionError("pure profile needs one choice per player");
    }
    for (int i = 0; i < x.num_players(); ++i) {
      if (choices[i] < 0 || choices[i] >= sizes[i]) {
        throw DimensionError("pure strategy index out of range");
      }
      x.block(i)[choices[i]] = T(1);
    }
    return x;
  }

  int num_players() const { return static_cast<int>(sizes_.size()); }
  int size(int player) const { return sizes_.at(player); }
  int offset(int player) const { return offsets_.at(player); }
  int dimension() const { return offsets_.empty() ? 0 : offsets_.back(); }
  const std::vector<int>& sizes() const { return sizes_; }

  std::span<const T> block(int player) const {
    return {coords_.data() + offset(player),
            static_cast<std::size_t>(size(player))};
  }
  std::span<T> block(int player) {
    return {coords_.data() + offset(player),
            static_cast<std::size_t>(size(player))};
  }

  const std::vector<T>& coords() const { return coords_; }
  std::vector<T>& coords() { return coords_; }
  const T& operator[](std::size_t i) const { return coords_[i]; }
  T& operator[](std::size_t i) { return coords_[i]; }

  friend bool operator==(const Profile& a, const Profile& b) {
    return a.sizes_ == b.sizes_ && a.coords_ == b.coords_;
  }

 private:
  std::vector<int> sizes_;
  std::vector<int> offsets_;
  std::vector<T> coords_;
};

using RationalProfile = Profile<Rational>;
using FloatProfile = Profile<double>;

FloatProfile to_float(const RationalProfile& x);
RationalProfile to_rational(const FloatProfile& x);

// Per-player support: indices with nonzero probability.
using Support = std::vector<std::vector<int>>;
Support support_of(const RationalProfile& x);

// Tolerance used for float-mode profile validation.
inline constexpr double kFloatSumTolerance = 1e-12;

// Checks shape and the simplex constraints; exact in rational mode,
// sums within kFloatSumTolerance and coordinates >= -tol in float mode.
void check_profile(const RationalProfile& x, const std::vector<int>& sizes);
void check_profile(const FloatProfile& x, const std::vector<int>& sizes,
                   double tol = kFloatSumTolerance);
bool in_profile_space(const FloatProfile& x, double tol);

}  // namespace nashlab

#endif  // NASHLAB_PROFILE_H_
