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

#include "nashlab/trajectory.h"

#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <limits>
#include <ostream>

#include "nashlab/simplex.h"

namespace nashlab {

std::string to_string(Termination t) {
  switch (t) {
    case Termination::kConverged:
      return "converged";
    case Termination::kStepLimit:
      return "step-limit";
    case Termination::kLeftDomain:
      return "left-domain";
  }
  return "unknown";
}

Trajectory run_trajectory(const StepFn& phi, const LyapunovFn& lyapunov,
                          const FloatProfile& x0,
                          const TrajectoryOptions& opts) {
  if (!(opts.eps_fix > 0.0)) throw ArgumentError("eps_fix must be positive");
  if (opts.max_steps < 0) throw ArgumentError("max_steps must be >= 0");
  if (opts.thin_every < 1) throw ArgumentError("thin_every must be >= 1");
  const double nan = std::numeric_limits<double>::quiet_NaN();
  auto lyap = [&](const FloatProfile& x) {
    return lyapunov ? lyapunov(x) : nan;
  };

  Trajectory traj;
  auto record = [&](std::int64_t step, const FloatProfile& x, double disp) {
    traj.steps.push_back(step);
    traj.points.push_back(x);
    traj.lyapunov.push_back(lyap(x));
    traj.displacement.push_back(disp);
  };
  record(0, x0, 0.0);
  traj.final_state = x0;

  FloatProfile x = x0;
  for (std::int64_t step = 1; step <= opts.max_steps; ++step) {
    FloatProfile y = phi(x);
    const double disp = distance(x, y);
    traj.total_steps = step;
    traj.final_displacement = disp;
    if (disp < opts.eps_fix) {
      traj.final_state = std::move(y);
      traj.reason = Termination::kConverged;
      return traj;
    }
    if (!in_profile_space(y, opts.domain_tol)) {
      record(step, y, disp);
      traj.final_state = std::move(y);
      traj.reason = Termination::kLeftDomain;
      return traj;
    }
    const bool last = step == opts.max_steps;
    if (step <= opts.thin_after || step % opts.thin_every == 0 || last) {
      record(step, y, disp);
    }
    x = std::move(y);
  }
  traj.final_state = std::move(x);
  traj.reason = Termination::kStepLimit;
  return traj;
}

std::vector<Trajectory> run_batch(const StepFn& phi,
                                  const LyapunovFn& lyapunov,
                                  const std::vector<FloatProfile>& starts,
                                  const TrajectoryOptions& opts,
                                  Execution exec) {
  std::vector<Trajectory> out(starts.size());
  const long n = static_cast<long>(starts.size());
  const bool parallel = exec == Execution::kParallel;
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (long i = 0; i < n; ++i) {
    try {
      out[i] = run_trajectory(phi, lyapunov, starts[i], opts);
    } catch (...) {
#pragma omp critical
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return out;
}

namespace {

std::string format17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

Json trajectory_footer(const Trajectory& traj) {
  Json j;
  j["termination"] = to_string(traj.reason);
  j["steps"] = traj.total_steps;
  j["final_displacement"] = traj.final_displacement;
  j["final"] = profile_to_json(traj.final_point());
  return j;
}

void write_trajectory_csv(const Trajectory& traj, std::ostream& out) {
  const int n = traj.start().dimension();
  out << "step";
  for (int i = 0; i < n; ++i) out << ",coord_" << i;
  out << ",lyapunov,displacement\n";
  for (std::size_t r = 0; r < traj.points.size(); ++r) {
    out << traj.steps[r];
    for (double c : traj.points[r].coords()) out << ',' << format17(c);
    out << ',' << format17(traj.lyapunov[r]) << ','
        << format17(traj.displacement[r]) << '\n';
  }
  out << "# " << trajectory_footer(traj).dump() << '\n';
}

void write_trajectory_csv(const Trajectory& traj,
                          const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ArgumentError("cannot write " + path.string());
  write_trajectory_csv(traj, out);
}

std::pair<std::size_t, double> nearest_equilibrium(
    const std::vector<FloatProfile>& equilibria, const FloatProfile& x) {
  if (equilibria.empty()) throw ArgumentError("no equilibria given");
  std::size_t best = 0;
  double best_d = linf_distance(equilibria[0], x);
  for (std::size_t i = 1; i < equilibria.size(); ++i) {
    const double d = linf_distance(equilibria[i], x);
    if (d < best_d) {
      best = i;
      best_d = d;
    }
  }
  return {best, best_d};
}

}  // namespace nashlab
