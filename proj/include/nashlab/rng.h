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

#ifndef NASHLAB_RNG_H_
#define NASHLAB_RNG_H_

#include <cstdint>
#include <string_view>
#include <vector>

namespace nashlab {

// Counter-based generator: the i-th draw of stream s under seed k is
// splitmix64(k, s, i), a pure function of its coordinates. Streams are
// independent, so parallel consumers can be handed stream ids by counter
// and still reproduce the serial result bit for bit.
class CounterRng {
 public:
  static constexpr std::string_view kName = "splitmix64-counter/v1";

  explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
      : seed_(seed), stream_(stream) {}

  std::uint64_t next_u64();

  // 53 random mantissa bits, in [0, 1).
  double uniform01();
  // Uniform integer in [lo, hi] (inclusive), rejection sampled.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);
  // Exp(1) via inversion.
  double exponential();
  // Standard normal via Box-Muller (one draw per call).
  double normal();

  // A child generator keyed on (seed, stream, child).
  CounterRng derive(std::uint64_t child) const;

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream() const { return stream_; }
  std::uint64_t counter() const { return counter_; }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::uint64_t counter_ = 0;
};

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace nashlab

#endif  // NASHLAB_RNG_H_
