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
#include <span>
#include <vector>

#include "coordnet/agent.hpp"
#include "coordnet/objective.hpp"
#include "coordnet/time_model.hpp"
#include "coordnet/trace.hpp"

namespace coordnet {

struct RunOptions {
  // 1 runs the serial reference loop; 0 lets OpenMP pick its default thread
  // count; any other value pins the team size. All settings produce
  // bit-identical traces because every agent owns its RNG streams.
  int threads = 1;
};

struct RunOutput {
  SimTrace trace;
  std::vector<Agent> agents;  // final learner state, for inspection
};

// Runs T barrier-synchronized rounds. Each round: every agent samples an
// action; every agent draws neighbors against the same-round action
// snapshot; one communication exchange delivers each requested action; every
// agent updates both learners. The realized objective value recorded per
// round is instrumentation and is excluded from the per-agent evaluation
// counters. Throws std::invalid_argument on a configuration inconsistent
// with the objective before round 1.
RunOutput Run(const std::vector<AgentConfig>& configs,
              const SubmodularObjective& objective, TimeModel& clock,
              int horizon, uint64_t master_seed,
              const RunOptions& options = {});

struct AgentRegret {
  double action_regret = 0.0;
  double network_regret = 0.0;
};

struct RegretReport {
  std::vector<AgentRegret> per_agent;
  double kappa = 0.0;     // curvature of the objective on its ground set
  double discount = 0.0;  // (1 - exp(-kappa)) / kappa, the factor applied to
                          // the hindsight-best fixed neighborhood
};

// Hindsight diagnostics computed from a finished trace.
//
// action_regret: best fixed own-action against the recorded neighbor
// contexts minus the realized marginal gains.
// network_regret: discounted best fixed neighborhood (enumerated over all
// subsets of the candidate set up to size alpha) minus the realized overlap
// values. Enumeration is exponential, so candidate sets larger than 15
// throw std::invalid_argument.
RegretReport ComputeRegretDiagnostics(const SimTrace& trace,
                                      const SubmodularObjective& objective,
                                      std::span<const AgentConfig> configs);

}  // namespace coordnet
