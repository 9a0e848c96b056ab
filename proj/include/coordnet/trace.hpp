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

#include <vector>

#include "coordnet/actions.hpp"

namespace coordnet {

// One point-to-point transmission: `from` sends its own current action to
// `to`. Payloads are exactly one action by construction.
struct CommMessage {
  int from = 0;
  int to = 0;
  ActionId payload;
};

// All transmissions of one round. The coordination loop produces exactly one
// exchange per round.
struct CommExchange {
  int t = 0;
  std::vector<CommMessage> messages;
};

struct RoundSnapshot {
  int t = 0;                  // 1-based round (or commit) index
  double sim_seconds = 0.0;   // simulated clock after this round completed
  JointActionSet actions;     // coordination: one action per agent;
                              // sequential baseline: committed prefix
  std::vector<std::vector<int>> neighborhoods;  // per agent, sorted
  double f_value = 0.0;       // objective of `actions`
  long long comm_messages = 0;
  std::vector<long long> eval_counts;  // per agent (empty for the baseline)
  long long max_evals = 0;
};

struct SimTrace {
  std::vector<RoundSnapshot> snapshots;
  std::vector<CommExchange> comm_log;

  // Sequential-baseline bookkeeping: number of connected components the run
  // was split into (1 for a connected graph) and whether any hop distance
  // fell back to undirected reachability.
  int component_count = 1;
  bool undirected_hop_fallback = false;

  std::vector<double> TimeAxis() const {
    std::vector<double> axis;
    axis.reserve(snapshots.size());
    for (const RoundSnapshot& s : snapshots) axis.push_back(s.sim_seconds);
    return axis;
  }
};

}  // namespace coordnet
