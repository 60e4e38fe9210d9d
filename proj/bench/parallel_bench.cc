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

// Serial reference paths against their OpenMP counterparts.
#include <benchmark/benchmark.h>

#include "nashlab/dynamics.h"
#include "nashlab/equilibria.h"
#include "nashlab/simplex.h"
#include "nashlab/trajectory.h"

namespace nashlab {
namespace {

void BM_EnumerateNash(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto exec = state.range(1) ? Execution::kParallel : Execution::kSerial;
  const Game g = random_nondegenerate_game(n, n, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_nash(g, exec));
  }
  state.SetLabel(state.range(1) ? "openmp" : "serial");
}
BENCHMARK(BM_EnumerateNash)
    ->ArgsProduct({{6, 8, 10}, {0, 1}})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

void BM_RunBatch(benchmark::State& state) {
  const auto exec = state.range(1) ? Execution::kParallel : Execution::kSerial;
  const Game g = random_nondegenerate_game(4, 4, 2);
  Type2Dynamic d(enumerate_nash(g), 3);
  CounterRng rng(4);
  std::vector<FloatProfile> starts;
  for (int i = 0; i < state.range(0); ++i) {
    starts.push_back(random_profile({4, 4}, rng));
  }
  const auto step = d.step_fn();
  const auto lyap = d.lyapunov_fn();
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_batch(step, lyap, starts, {}, exec));
  }
  state.SetLabel(state.range(1) ? "openmp" : "serial");
}
BENCHMARK(BM_RunBatch)
    ->ArgsProduct({{64, 256}, {0, 1}})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

}  // namespace
}  // namespace nashlab

BENCHMARK_MAIN();
