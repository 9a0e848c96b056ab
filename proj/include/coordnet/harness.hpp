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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "coordnet/coverage.hpp"
#include "coordnet/dfssg.hpp"
#include "coordnet/orchestrator.hpp"
#include "coordnet/trace.hpp"

namespace coordnet {

struct TauPair {
  double tau_f = 0.01;
  double tau_c = 0.05;
};

struct ExperimentConfig {
  double map_width = 100.0;
  double map_height = 100.0;
  double cell_size = 1.0;
  int agent_count = 60;
  double fov_radius = 7.0;
  int directions = 8;
  double range_low = 15.0;   // communication-range sampling bounds
  double range_high = 20.0;
  int trials = 30;
  int horizon = 0;  // rounds per run; 0 derives it from the budget
  // Default budget chosen so the fixed-horizon learning rates converge well
  // inside the window (the rates scale like 1/sqrt(T), so convergence time
  // grows with the horizon itself).
  double time_budget_s = 40.0;
  std::vector<int> nmax_sweep = {0, 1, 3, 5};
  std::vector<TauPair> tau_pairs = {{0.01, 0.05}, {0.01, 0.01}, {0.05, 0.01}};
  uint64_t master_seed = 0;
};

// Throws std::invalid_argument naming the offending field.
void ValidateExperimentConfig(const ExperimentConfig& config);

struct SampledWorld {
  CoverageWorld world;
  std::vector<double> comm_ranges;
};

// Camera positions i.i.d. uniform on the map and communication ranges i.i.d.
// uniform on [range_low, range_high]; deterministic per trial seed.
SampledWorld SampleWorld(const ExperimentConfig& config, uint64_t trial_seed);

enum class Algorithm { kAcnd, kDfssg };

struct VariantKey {
  Algorithm algorithm = Algorithm::kAcnd;
  int nmax = 0;        // meaningful for kAcnd only
  TauPair taus;
};

std::string VariantLabel(const VariantKey& key);

// Rounds that fit the wall-clock budget given the per-round charge of the
// slowest agent: floor(budget / (tau_f * max_i(|V_i| + 2*alpha_i + 1) + tau_c)).
int DeriveHorizon(const ExperimentConfig& config,
                  const std::vector<AgentConfig>& agents, TauPair taus);

// Coordination-run agent configs for one sampled world: candidates are the
// graph's in-neighborhoods, alpha_i = min(nmax, |M_i|), and the reward scale
// is each agent's own best singleton coverage.
std::vector<AgentConfig> MakeAcndConfigs(const CoverageObjective& objective,
                                         const DirectedCommGraph& graph,
                                         int nmax, int horizon);

struct AggregateCurve {
  std::vector<double> time_grid;      // seconds, uniform 0.1 s steps
  std::vector<double> mean_coverage;  // fraction of total map area
  std::vector<double> std_coverage;
};

struct VariantSummary {
  VariantKey key;
  AggregateCurve curve;
  double mean_first_coverage = 0.0;  // mean across trials, first snapshot
  double mean_final_coverage = 0.0;  // mean across trials, last snapshot
};

struct SweepResult {
  std::vector<VariantSummary> variants;
  int trials = 0;
  int dfssg_disconnected_trials = 0;
};

// Receives every finished trace. Implementations must tolerate concurrent
// calls from different trials; traces for distinct (variant, trial) pairs
// never collide.
class SweepSink {
 public:
  virtual ~SweepSink() = default;
  virtual void OnTrace(const VariantKey& key, int trial, const SimTrace& trace,
                       const CoverageObjective& objective) = 0;
};

// Runs every algorithm variant on every trial's world. Within a trial all
// variants see the identical world and candidate sets. Trials run in
// parallel when threads != 1; results are aggregated in trial order, so the
// output does not depend on the thread count.
SweepResult RunSweep(const ExperimentConfig& config, int threads = 1,
                     SweepSink* sink = nullptr);

}  // namespace coordnet
