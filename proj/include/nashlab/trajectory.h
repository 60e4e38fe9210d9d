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

#ifndef NASHLAB_TRAJECTORY_H_
#define NASHLAB_TRAJECTORY_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "nashlab/dynamics.h"
#include "nashlab/equilibria.h"
#include "nashlab/game_io.h"

namespace nashlab {

enum class Termination { kConverged, kStepLimit, kLeftDomain };

std::string to_string(Termination t);

struct TrajectoryOptions {
  double eps_fix = kDefaultEpsFix;
  std::int64_t max_steps = kDefaultMaxSteps;
  // Every step is recorded up to thin_after; later only every thin_every-th
  // step and the last one.
  std::int64_t thin_after = 10000;
  std::int64_t thin_every = 100;
  double domain_tol = 1e-9;
};

// Recorded states. steps[0] = 0 is the start; a start that is already a
// fixed point gives a single record.
struct Trajectory {
  std::vector<std::int64_t> steps;
  std::vector<FloatProfile> points;
  std::vector<double> lyapunov;      // NaN when no Lyapunov function given
  std::vector<double> displacement;  // |x_t - x_{t-1}|, 0 for the start
  Termination reason = Termination::kStepLimit;
  std::int64_t total_steps = 0;
  double final_displacement = 0.0;
  FloatProfile final_state;  // last iterate, recorded or not

  const FloatProfile& start() const { return points.front(); }
  const FloatProfile& final_point() const { return final_state; }
  std::size_t size() const { return points.size(); }
};

// `lyapunov` may be empty.
Trajectory run_trajectory(const StepFn& phi, const LyapunovFn& lyapunov,
                          const FloatProfile& x0,
                          const TrajectoryOptions& opts = {});

// Independent runs over many starts; the OpenMP path fills per-start slots,
// so both execution modes return identical results.
std::vector<Trajectory> run_batch(const StepFn& phi,
                                  const LyapunovFn& lyapunov,
                                  const std::vector<FloatProfile>& starts,
                                  const TrajectoryOptions& opts = {},
                                  Execution exec = Execution::kParallel);

// Header `step,coord_0,...,lyapunov,displacement`, values at 17 significant
// digits, then one `#`-prefixed JSON footer line.
void write_trajectory_csv(const Trajectory& traj, std::ostream& out);
void write_trajectory_csv(const Trajectory& traj,
                          const std::filesystem::path& path);
Json trajectory_footer(const Trajectory& traj);

// Index of the closest equilibrium and its L-infinity distance.
std::pair<std::size_t, double> nearest_equilibrium(
    const std::vector<FloatProfile>& equilibria, const FloatProfile& x);

}  // namespace nashlab

#endif  // NASHLAB_TRAJECTORY_H_
