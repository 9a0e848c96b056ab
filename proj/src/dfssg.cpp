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

#include "coordnet/dfssg.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>

namespace coordnet {
namespace {

// BFS hop count over the given adjacency; -1 when unreachable.
int HopDistance(const std::vector<std::vector<int>>& adjacency, int from,
                int to) {
  if (from == to) return 0;
  std::vector<int> dist(adjacency.size(), -1);
  std::queue<int> frontier;
  dist[from] = 0;
  frontier.push(from);
  while (!frontier.empty()) {
    int u = frontier.front();
    frontier.pop();
    for (int v : adjacency[u]) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        if (v == to) return dist[v];
        frontier.push(v);
      }
    }
  }
  return -1;
}

}  // namespace

bool DirectedCommGraph::HasEdge(int from, int to) const {
  const std::vector<int>& in = in_neighbors[to];
  return std::binary_search(in.begin(), in.end(), from);
}

DirectedCommGraph BuildGraph(std::span<const Point> positions,
                             std::span<const double> ranges) {
  if (positions.size() != ranges.size()) {
    throw std::invalid_argument(
        "BuildGraph: positions and ranges differ in length");
  }
  DirectedCommGraph graph;
  graph.n = static_cast<int>(positions.size());
  graph.in_neighbors.resize(graph.n);
  graph.out_neighbors.resize(graph.n);
  for (int i = 0; i < graph.n; ++i) {
    for (int j = 0; j < graph.n; ++j) {
      if (j == i) continue;
      double dx = positions[j].x - positions[i].x;
      double dy = positions[j].y - positions[i].y;
      if (std::sqrt(dx * dx + dy * dy) <= ranges[i]) {
        graph.in_neighbors[i].push_back(j);
        graph.out_neighbors[j].push_back(i);
      }
    }
  }
  for (std::vector<int>& out : graph.out_neighbors) {
    std::sort(out.begin(), out.end());
  }
  return graph;
}

DfsPlan BuildDfsPlan(const DirectedCommGraph& graph) {
  const int n = graph.n;
  // Ordering runs on undirected reachability; message hops use the directed
  // edges and fall back to undirected when no directed path exists.
  std::vector<std::vector<int>> undirected(n);
  for (int i = 0; i < n; ++i) {
    std::vector<int> merged = graph.in_neighbors[i];
    merged.insert(merged.end(), graph.out_neighbors[i].begin(),
                  graph.out_neighbors[i].end());
    std::sort(merged.begin(), merged.end());
    merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
    undirected[i] = std::move(merged);
  }

  DfsPlan plan;
  plan.component_of.assign(n, -1);
  plan.component_count = 0;
  std::vector<int> component_start;
  for (int root = 0; root < n; ++root) {
    if (plan.component_of[root] >= 0) continue;
    int comp = plan.component_count++;
    component_start.push_back(static_cast<int>(plan.order.size()));
    // Preorder DFS; pushing neighbors in reverse keeps exploration ascending.
    std::vector<int> stack{root};
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      if (plan.component_of[u] >= 0) continue;
      plan.component_of[u] = comp;
      plan.order.push_back(u);
      for (auto it = undirected[u].rbegin(); it != undirected[u].rend(); ++it) {
        if (plan.component_of[*it] < 0) stack.push_back(*it);
      }
    }
  }

  plan.hop_distances.assign(std::max(0, n - 1), 0);
  for (int k = 0; k + 1 < n; ++k) {
    int u = plan.order[k];
    int v = plan.order[k + 1];
    if (plan.component_of[u] != plan.component_of[v]) continue;
    int hops = HopDistance(graph.out_neighbors, u, v);
    if (hops < 0) {
      hops = HopDistance(undirected, u, v);
      plan.undirected_hop_fallback = true;
    }
    plan.hop_distances[k] = hops;
  }
  return plan;
}

SimTrace RunDfsSg(const DirectedCommGraph& graph,
                  const SubmodularObjective& objective, TimeModel& clock) {
  if (graph.n != objective.agent_count()) {
    throw std::invalid_argument("RunDfsSg: graph/objective size mismatch");
  }
  DfsPlan plan = BuildDfsPlan(graph);

  struct Commit {
    double time = 0.0;
    int agent = 0;
    long long evals = 0;
    long long transfer_hops = 0;  // hops of the incoming hand-off (0 at root)
  };
  std::vector<Commit> commits;
  commits.reserve(graph.n);
  std::vector<ActionId> chosen(graph.n);

  const double start = clock.elapsed();
  double end_time = start;
  // One token per component; components run side by side, so each gets its
  // own local clock starting at the shared current time.
  for (int comp = 0; comp < plan.component_count; ++comp) {
    TimeModel local(clock.tau_f(), clock.tau_c());
    local.AdvanceTo(start);
    JointActionSet committed;
    int committed_count = 0;
    for (int k = 0; k < graph.n; ++k) {
      int agent = plan.order[k];
      if (plan.component_of[agent] != comp) continue;

      long long incoming_hops = 0;
      if (committed_count > 0) {
        // Hand-off from the previous agent in this component's order: the
        // message carries every action committed so far.
        incoming_hops = plan.hop_distances[k - 1];
        local.ChargeSequentialStep(0, committed_count, incoming_hops);
      }

      // Maximizing f(committed + arm) picks the same arm as maximizing the
      // marginal gain, for one evaluation per arm.
      const int arms = objective.action_counts()[agent];
      int best_arm = 0;
      double best_value = -1.0;
      for (int arm = 0; arm < arms; ++arm) {
        JointActionSet with_arm = committed;
        with_arm.Insert(ActionId{agent, arm});
        double value = objective.Evaluate(with_arm);
        if (value > best_value) {  // ties keep the lowest arm index
          best_value = value;
          best_arm = arm;
        }
      }
      local.ChargeSequentialStep(arms, 0, 0);

      chosen[agent] = ActionId{agent, best_arm};
      committed.Insert(chosen[agent]);
      ++committed_count;
      commits.push_back(Commit{local.elapsed(), agent,
                               static_cast<long long>(arms), incoming_hops});
    }
    end_time = std::max(end_time, local.elapsed());
  }

  std::stable_sort(commits.begin(), commits.end(),
                   [](const Commit& a, const Commit& b) {
                     if (a.time != b.time) return a.time < b.time;
                     return a.agent < b.agent;
                   });

  SimTrace trace;
  trace.component_count = plan.component_count;
  trace.undirected_hop_fallback = plan.undirected_hop_fallback;
  JointActionSet global_committed;
  int t = 0;
  for (const Commit& c : commits) {
    global_committed.Insert(chosen[c.agent]);
    RoundSnapshot snap;
    snap.t = ++t;
    snap.sim_seconds = c.time;
    snap.actions = global_committed;
    snap.f_value = objective.Evaluate(global_committed);
    snap.comm_messages = c.transfer_hops;
    snap.max_evals = c.evals;
    trace.snapshots.push_back(std::move(snap));
  }
  clock.AdvanceTo(end_time);
  return trace;
}

double WorstCaseTime(int n, double tau_c) {
  if (n < 1) throw std::invalid_argument("WorstCaseTime: n must be >= 1");
  return tau_c * static_cast<double>(n) * static_cast<double>(n - 1) / 2.0;
}

}  // namespace coordnet
