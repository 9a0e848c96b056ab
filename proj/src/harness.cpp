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

#include "coordnet/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#if defined(_OPENMP)
#include <omp.h>
#endif

#include "coordnet/rng.hpp"

namespace coordnet {
namespace {

constexpr uint64_t kWorldTag = 0x77;
constexpr uint64_t kRunTag = 0x52;
constexpr double kGridStep = 0.1;  // seconds

std::string FormatTau(double tau) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", tau);
  return buf;
}

// Step-function (last observation carried forward) series of one trial's
// coverage over time; 0 before the first snapshot.
struct TrialSeries {
  std::vector<double> times;
  std::vector<double> coverage;  // fraction of total area
  double ValueAt(double t) const {
    // index of the last time <= t
    auto it = std::upper_bound(times.begin(), times.end(), t);
    if (it == times.begin()) return 0.0;
    return coverage[static_cast<std::size_t>(it - times.begin()) - 1];
  }
};

TrialSeries SeriesOf(const SimTrace& trace, double total_area) {
  TrialSeries s;
  s.times.reserve(trace.snapshots.size());
  s.coverage.reserve(trace.snapshots.size());
  for (const RoundSnapshot& snap : trace.snapshots) {
    s.times.push_back(snap.sim_seconds);
    s.coverage.push_back(snap.f_value / total_area);
  }
  return s;
}

}  // namespace

void ValidateExperimentConfig(const ExperimentConfig& config) {
  if (!(config.map_width > 0.0)) {
    throw std::invalid_argument("config: map.width must be > 0");
  }
  if (!(config.map_height > 0.0)) {
    throw std::invalid_argument("config: map.height must be > 0");
  }
  if (!(config.cell_size > 0.0)) {
    throw std::invalid_argument("config: map.cell_size must be > 0");
  }
  if (config.agent_count < 1) {
    throw std::invalid_argument("config: agent_count must be >= 1");
  }
  if (!(config.fov_radius > 0.0)) {
    throw std::invalid_argument("config: fov_radius must be > 0");
  }
  if (config.directions < 1) {
    throw std::invalid_argument("config: directions must be >= 1");
  }
  if (config.range_low < 0.0 || config.range_high < config.range_low) {
    throw std::invalid_argument(
        "config: need 0 <= range_low <= range_high");
  }
  if (config.trials < 1) {
    throw std::invalid_argument("config: trials must be >= 1");
  }
  if (config.horizon < 0) {
    throw std::invalid_argument("config: horizon must be >= 0");
  }
  if (config.horizon == 0 && !(config.time_budget_s > 0.0)) {
    throw std::invalid_argument(
        "config: time_budget_s must be > 0 when horizon is derived");
  }
  if (config.nmax_sweep.empty()) {
    throw std::invalid_argument("config: nmax_sweep must be non-empty");
  }
  for (int nmax : config.nmax_sweep) {
    if (nmax < 0) {
      throw std::invalid_argument("config: nmax_sweep entries must be >= 0");
    }
  }
  if (config.tau_pairs.empty()) {
    throw std::invalid_argument("config: tau_pairs must be non-empty");
  }
  for (const TauPair& taus : config.tau_pairs) {
    if (!(taus.tau_f > 0.0) || !(taus.tau_c > 0.0)) {
      throw std::invalid_argument("config: tau pairs must be positive");
    }
  }
}

SampledWorld SampleWorld(const ExperimentConfig& config, uint64_t trial_seed) {
  Rng rng(trial_seed);
  SampledWorld sampled;
  sampled.world.width = config.map_width;
  sampled.world.height = config.map_height;
  sampled.world.cell_size = config.cell_size;
  sampled.world.fov_radius = config.fov_radius;
  sampled.world.directions = config.directions;
  sampled.world.camera_positions.reserve(config.agent_count);
  sampled.comm_ranges.reserve(config.agent_count);
  for (int i = 0; i < config.agent_count; ++i) {
    double x = rng.NextUniform(0.0, config.map_width);
    double y = rng.NextUniform(0.0, config.map_height);
    sampled.world.camera_positions.push_back(Point{x, y});
  }
  for (int i = 0; i < config.agent_count; ++i) {
    sampled.comm_ranges.push_back(
        rng.NextUniform(config.range_low, config.range_high));
  }
  return sampled;
}

std::string VariantLabel(const VariantKey& key) {
  std::string label;
  if (key.algorithm == Algorithm::kAcnd) {
    label = "acnd_nmax" + std::to_string(key.nmax);
  } else {
    label = "dfssg";
  }
  label += "_tf" + FormatTau(key.taus.tau_f) + "_tc" + FormatTau(key.taus.tau_c);
  return label;
}

std::vector<AgentConfig> MakeAcndConfigs(const CoverageObjective& objective,
                                         const DirectedCommGraph& graph,
                                         int nmax, int horizon) {
  std::vector<AgentConfig> configs;
  configs.reserve(graph.n);
  for (int i = 0; i < graph.n; ++i) {
    AgentConfig c;
    c.id = i;
    c.action_count = objective.action_counts()[i];
    c.candidates = graph.in_neighbors[i];
    c.alpha = std::min(nmax, static_cast<int>(c.candidates.size()));
    c.horizon = horizon;
    c.reward_scale = objective.MaxSingletonValue(i);
    configs.push_back(std::move(c));
  }
  return configs;
}

int DeriveHorizon(const ExperimentConfig& config,
                  const std::vector<AgentConfig>& agents, TauPair taus) {
  if (config.horizon > 0) return config.horizon;
  long long max_evals = 0;
  for (const AgentConfig& a : agents) {
    max_evals = std::max(max_evals,
                         static_cast<long long>(a.action_count) + 2 * a.alpha + 1);
  }
  double per_round = taus.tau_f * static_cast<double>(max_evals) + taus.tau_c;
  return std::max(1, static_cast<int>(config.time_budget_s / per_round));
}

SweepResult RunSweep(const ExperimentConfig& config,
                     [[maybe_unused]] int threads, SweepSink* sink) {
  ValidateExperimentConfig(config);

  std::vector<VariantKey> variants;
  for (const TauPair& taus : config.tau_pairs) {
    for (int nmax : config.nmax_sweep) {
      variants.push_back(VariantKey{Algorithm::kAcnd, nmax, taus});
    }
    variants.push_back(VariantKey{Algorithm::kDfssg, 0, taus});
  }

  const int n_variants = static_cast<int>(variants.size());
  const int trials = config.trials;

  // series[v][trial], filled by whichever thread owns the trial.
  std::vector<std::vector<TrialSeries>> series(
      n_variants, std::vector<TrialSeries>(trials));
  std::vector<int> disconnected(trials, 0);

  auto run_trial = [&](int trial) {
    uint64_t world_seed = DeriveSeed(config.master_seed,
                                     {kWorldTag, static_cast<uint64_t>(trial)});
    SampledWorld sampled = SampleWorld(config, world_seed);
    CoverageObjective objective(sampled.world);
    DirectedCommGraph graph =
        BuildGraph(sampled.world.camera_positions, sampled.comm_ranges);
    const double total_area = objective.total_area();

    for (int v = 0; v < n_variants; ++v) {
      const VariantKey& key = variants[v];
      TimeModel clock(key.taus.tau_f, key.taus.tau_c);
      SimTrace trace;
      if (key.algorithm == Algorithm::kAcnd) {
        std::vector<AgentConfig> agents =
            MakeAcndConfigs(objective, graph, key.nmax, 1);
        int horizon = DeriveHorizon(config, agents, key.taus);
        for (AgentConfig& a : agents) a.horizon = horizon;
        uint64_t run_seed = DeriveSeed(
            config.master_seed,
            {kRunTag, static_cast<uint64_t>(trial),
             static_cast<uint64_t>(v)});
        // Trials are the parallel axis; rounds stay on the serial path.
        trace = Run(agents, objective, clock, horizon, run_seed,
                    RunOptions{1}).trace;
      } else {
        trace = RunDfsSg(graph, objective, clock);
        if (trace.component_count > 1) disconnected[trial] = 1;
      }
      series[v][trial] = SeriesOf(trace, total_area);
      if (sink != nullptr) sink->OnTrace(key, trial, trace, objective);
    }
  };

#if defined(_OPENMP)
  if (threads != 1) {
    int team = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(team)
    for (int trial = 0; trial < trials; ++trial) run_trial(trial);
  } else {
    for (int trial = 0; trial < trials; ++trial) run_trial(trial);
  }
#else
  for (int trial = 0; trial < trials; ++trial) run_trial(trial);
#endif

  SweepResult result;
  result.trials = trials;
  for (int trial = 0; trial < trials; ++trial) {
    result.dfssg_disconnected_trials += disconnected[trial];
  }

  for (int v = 0; v < n_variants; ++v) {
    VariantSummary summary;
    summary.key = variants[v];

    double max_time = 0.0;
    for (const TrialSeries& s : series[v]) {
      if (!s.times.empty()) max_time = std::max(max_time, s.times.back());
    }
    int grid_points = static_cast<int>(std::ceil(max_time / kGridStep)) + 1;

    summary.curve.time_grid.resize(grid_points);
    summary.curve.mean_coverage.resize(grid_points);
    summary.curve.std_coverage.resize(grid_points);
    for (int g = 0; g < grid_points; ++g) {
      double t = g * kGridStep;
      double sum = 0.0;
      double sum_sq = 0.0;
      for (const TrialSeries& s : series[v]) {
        double value = s.ValueAt(t);
        sum += value;
        sum_sq += value * value;
      }
      double mean = sum / trials;
      double variance =
          trials > 1 ? std::max(0.0, (sum_sq - trials * mean * mean) /
                                         (trials - 1))
                     : 0.0;
      summary.curve.time_grid[g] = t;
      summary.curve.mean_coverage[g] = mean;
      summary.curve.std_coverage[g] = std::sqrt(variance);
    }

    for (const TrialSeries& s : series[v]) {
      if (!s.coverage.empty()) {
        summary.mean_first_coverage += s.coverage.front();
        summary.mean_final_coverage += s.coverage.back();
      }
    }
    summary.mean_first_coverage /= trials;
    summary.mean_final_coverage /= trials;

    result.variants.push_back(std::move(summary));
  }
  return result;
}

}  // namespace coordnet
