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

#include <span>
#include <vector>

#include "coordnet/coverage.hpp"
#include "coordnet/objective.hpp"
#include "coordnet/time_model.hpp"
#include "coordnet/trace.hpp"

namespace coordnet {

// Directed communication graph. An edge j -> i means i can receive from j,
// so in_neighbors[i] is exactly agent i's candidate set.
struct DirectedCommGraph {
  int n = 0;
  std::vector<std::vector<int>> in_neighbors;   // sorted ascending
  std::vector<std::vector<int>> out_neighbors;  // sorted ascending

  bool HasEdge(int from, int to) const;
};

// Geometric construction: edge j -> i iff dist(x_j, x_i) <= ranges[i], j != i.
DirectedCommGraph BuildGraph(std::span<const Point> positions,
                             std::span<const double> ranges);

// Depth-first visitation order over the undirected reachability of the
// graph, one segment per connected component. The root of each component is
// its lowest-index agent and neighbor exploration breaks ties by ascending
// index, so the plan is deterministic.
struct DfsPlan {
  std::vector<int> order;          // all agents, grouped by component
  std::vector<int> hop_distances;  // hops from order[k] to order[k+1];
                                   // 0 at component boundaries
  std::vector<int> component_of;   // component id per agent
  int component_count = 1;
  bool undirected_hop_fallback = false;  // a hop had no directed path
};

DfsPlan BuildDfsPlan(const DirectedCommGraph& graph);

// Sequential greedy along the DFS order: each agent in turn commits the
// action with the best marginal gain given everything committed before it in
// its component, then the running action set travels to the next agent along
// the shortest path (message size grows with each commitment). Coverage
// accrues as agents commit; one snapshot per commitment. Disconnected graphs
// run one token per component, side by side on the simulated clock, and the
// trace is flagged with the component count.
SimTrace RunDfsSg(const DirectedCommGraph& graph,
                  const SubmodularObjective& objective, TimeModel& clock);

// Closed-form communication time of a spanning-walk order with unit hops:
// tau_c * n * (n - 1) / 2. A test fixture, not a bound for arbitrary graphs.
double WorstCaseTime(int n, double tau_c);

}  // namespace coordnet
