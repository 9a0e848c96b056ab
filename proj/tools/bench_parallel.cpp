// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Times the serial reference paths against their OpenMP counterparts on a
// fixed workload and checks that both produce identical results:
//   - the per-agent phases of one coordination run
//   - the per-trial loop of an experiment sweep
//
// Usage: bench_parallel [threads]

#include <chrono>
#include <cstdio>
#include <cstdlib>

#if defined(_OPENMP)
#include <omp.h>
#endif

#include "coordnet/harness.hpp"
#include "coordnet/orchestrator.hpp"
#include "coordnet/rng.hpp"
#include "coordnet/time_model.hpp"

using namespace coordnet;

namespace {

double Seconds(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

double TraceChecksum(const SimTrace& trace) {
  double sum = 0.0;
  for (const RoundSnapshot& snap : trace.snapshots) {
    sum += snap.f_value + snap.sim_seconds;
  }
  return sum;
}

double SweepChecksum(const SweepResult& result) {
  double sum = 0.0;
  for (const VariantSummary& v : result.variants) {
    for (double m : v.curve.mean_coverage) sum += m;
  }
  return sum;
}

}  // namespace

int main(int argc, char** argv) {
  int threads = argc > 1 ? std::atoi(argv[1]) : 0;
#if defined(_OPENMP)
  int team = threads > 0 ? threads : omp_get_max_threads();
#else
  int team = 1;
  std::printf("built without OpenMP; parallel paths run serially\n");
#endif
  std::printf("comparing serial reference vs %d threads\n\n", team);

  // Workload 1: one coordination run, agent phases parallelized.
  {
    ExperimentConfig config;
    config.agent_count = 60;
    config.trials = 1;
    SampledWorld sampled = SampleWorld(config, DeriveSeed(7, {0x77, 0}));
    CoverageObjective objective(sampled.world);
    DirectedCommGraph graph =
        BuildGraph(sampled.world.camera_positions, sampled.comm_ranges);
    const int horizon = 400;
    std::vector<AgentConfig> agents =
        MakeAcndConfigs(objective, graph, 5, horizon);

    auto run_once = [&](int t) {
      TimeModel clock(0.01, 0.05);
      return Run(agents, objective, clock, horizon, 7, RunOptions{t}).trace;
    };
    auto start = std::chrono::steady_clock::now();
    SimTrace serial = run_once(1);
    double serial_s = Seconds(start);
    start = std::chrono::steady_clock::now();
    SimTrace parallel = run_once(threads == 1 ? 0 : threads);
    double parallel_s = Seconds(start);
    bool identical = TraceChecksum(serial) == TraceChecksum(parallel) &&
                     serial.snapshots.size() == parallel.snapshots.size();
    std::printf("coordination run (60 agents x %d rounds)\n", horizon);
    std::printf("  serial   %.3fs\n  parallel %.3fs  speedup %.2fx  %s\n\n",
                serial_s, parallel_s, serial_s / parallel_s,
                identical ? "identical traces" : "TRACES DIFFER");
    if (!identical) return 1;
  }

  // Workload 2: the sweep's trial loop.
  {
    ExperimentConfig config;
    config.agent_count = 60;
    config.trials = 8;
    config.time_budget_s = 40.0;
    config.nmax_sweep = {0, 3};
    config.tau_pairs = {{0.01, 0.05}};
    config.master_seed = 7;

    auto start = std::chrono::steady_clock::now();
    SweepResult serial = RunSweep(config, 1);
    double serial_s = Seconds(start);
    start = std::chrono::steady_clock::now();
    SweepResult parallel = RunSweep(config, threads == 1 ? 0 : threads);
    double parallel_s = Seconds(start);
    bool identical = SweepChecksum(serial) == SweepChecksum(parallel);
    std::printf("experiment sweep (%d trials, 3 variants)\n", config.trials);
    std::printf("  serial   %.3fs\n  parallel %.3fs  speedup %.2fx  %s\n",
                serial_s, parallel_s, serial_s / parallel_s,
                identical ? "identical aggregates" : "AGGREGATES DIFFER");
    if (!identical) return 1;
  }
  return 0;
}
