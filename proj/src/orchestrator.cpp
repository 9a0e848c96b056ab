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

#include "coordnet/orchestrator.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace coordnet {
namespace {

// Serial reference loop when threads == 1, OpenMP team otherwise. Both paths
// produce identical results; the serial one is kept as the baseline the
// parallel path is tested and benchmarked against.
void ForEachAgent([[maybe_unused]] int threads, int n,
                  const std::function<void(int)>& fn) {
#if defined(_OPENMP)
  if (threads != 1) {
    int team = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(static) num_threads(team)
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
#endif
  for (int i = 0; i < n; ++i) fn(i);
}

void ValidateSetup(const std::vector<AgentConfig>& configs,
                   const SubmodularObjective& objective) {
  const int n = objective.agent_count();
  if (static_cast<int>(configs.size()) != n) {
    throw std::invalid_argument(
        "Run: got " + std::to_string(configs.size()) + " agent configs for " +
        std::to_string(n) + " objective agents");
  }
  std::vector<bool> seen(n, false);
  for (const AgentConfig& c : configs) {
    if (c.id < 0 || c.id >= n || seen[c.id]) {
      throw std::invalid_argument("Run: agent ids must be a permutation of 0.." +
                                  std::to_string(n - 1));
    }
    seen[c.id] = true;
    if (c.action_count != objective.action_counts()[c.id]) {
      throw std::invalid_argument(
          "Run: agent " + std::to_string(c.id) + " declares " +
          std::to_string(c.action_count) + " actions but the objective has " +
          std::to_string(objective.action_counts()[c.id]));
    }
    for (int j : c.candidates) {
      if (j < 0 || j >= n) {
        throw std::invalid_argument("Run: agent " + std::to_string(c.id) +
                                    " has out-of-range candidate " +
                                    std::to_string(j));
      }
    }
  }
}

}  // namespace

RunOutput Run(const std::vector<AgentConfig>& configs,
              const SubmodularObjective& objective, TimeModel& clock,
              int horizon, uint64_t master_seed, const RunOptions& options) {
  if (horizon < 1) throw std::invalid_argument("Run: horizon must be >= 1");
  ValidateSetup(configs, objective);

  const int n = static_cast<int>(configs.size());
  std::vector<Agent> agents;
  agents.reserve(n);
  // Agents are stored by id so the snapshot lookup is an index.
  std::vector<AgentConfig> ordered(configs);
  std::sort(ordered.begin(), ordered.end(),
            [](const AgentConfig& a, const AgentConfig& b) { return a.id < b.id; });
  for (const AgentConfig& c : ordered) {
    agents.emplace_back(c, objective, master_seed);
  }

  RunOutput out;
  out.trace.snapshots.reserve(horizon);
  out.trace.comm_log.reserve(horizon);

  std::vector<ActionId> actions(n);
  std::vector<AgentRound> rounds(n);
  std::vector<long long> evals(n);

  for (int t = 1; t <= horizon; ++t) {
    ForEachAgent(options.threads, n,
                 [&](int i) { actions[i] = agents[i].BeginRound(); });
    ForEachAgent(options.threads, n, [&](int i) {
      rounds[i] = agents[i].SelectNeighbors(actions[i], actions);
    });

    // The single exchange of the round: every drawn candidate transmits its
    // own action to the agent that drew it.
    CommExchange exchange;
    exchange.t = t;
    for (int i = 0; i < n; ++i) {
      for (const NeighborDraw& d : rounds[i].draws) {
        exchange.messages.push_back(
            CommMessage{d.candidate, i, actions[d.candidate]});
      }
    }

    ForEachAgent(options.threads, n,
                 [&](int i) { agents[i].UpdateActionLearner(rounds[i]); });

    RoundSnapshot snap;
    snap.t = t;
    snap.actions = JointActionSet(actions);
    snap.neighborhoods.resize(n);
    snap.eval_counts.resize(n);
    for (int i = 0; i < n; ++i) {
      snap.neighborhoods[i] = rounds[i].neighborhood;
      snap.eval_counts[i] = rounds[i].eval_count;
      evals[i] = rounds[i].eval_count;
      snap.max_evals = std::max(snap.max_evals, rounds[i].eval_count);
    }
    snap.comm_messages = static_cast<long long>(exchange.messages.size());
    // Instrumentation only: the realized value is a metric, not part of the
    // algorithm, so it bypasses the per-agent counters.
    snap.f_value = objective.Evaluate(snap.actions);
    clock.ChargeCoordinationRound(evals, 1);
    snap.sim_seconds = clock.elapsed();

    out.trace.snapshots.push_back(std::move(snap));
    out.trace.comm_log.push_back(std::move(exchange));
  }

  out.agents = std::move(agents);
  return out;
}

namespace {

double OverlapValue(const SubmodularObjective& f, ActionId a,
                    const JointActionSet& neighbors) {
  // Own action vs neighbor-context overlap; neighbors never contain a's
  // agent, so MutualInformation's precondition holds.
  return MutualInformation(f, a, neighbors);
}

JointActionSet ActionsOf(const JointActionSet& all, std::span<const int> who) {
  JointActionSet subset;
  for (int j : who) {
    const ActionId* a = all.FindAgent(j);
    if (a == nullptr) {
      throw std::invalid_argument(
          "ComputeRegretDiagnostics: trace snapshot misses agent " +
          std::to_string(j));
    }
    subset.Insert(*a);
  }
  return subset;
}

}  // namespace

RegretReport ComputeRegretDiagnostics(const SimTrace& trace,
                                      const SubmodularObjective& objective,
                                      std::span<const AgentConfig> configs) {
  if (trace.snapshots.empty()) {
    throw std::invalid_argument("ComputeRegretDiagnostics: empty trace");
  }

  std::vector<ActionId> ground;
  for (int agent = 0; agent < objective.agent_count(); ++agent) {
    for (int c = 0; c < objective.action_counts()[agent]; ++c) {
      ground.push_back(ActionId{agent, c});
    }
  }
  double kappa = ComputeCurvature(objective, ground).kappa;
  double discount = kappa < 1e-12 ? 1.0 : (1.0 - std::exp(-kappa)) / kappa;

  RegretReport report;
  report.kappa = kappa;
  report.discount = discount;
  report.per_agent.resize(configs.size());

  for (std::size_t idx = 0; idx < configs.size(); ++idx) {
    const AgentConfig& cfg = configs[idx];
    const int m = static_cast<int>(cfg.candidates.size());

    // Best fixed action in hindsight against the recorded contexts.
    std::vector<double> arm_totals(cfg.action_count, 0.0);
    double realized_gain = 0.0;
    for (const RoundSnapshot& snap : trace.snapshots) {
      JointActionSet context = ActionsOf(snap.actions, snap.neighborhoods[cfg.id]);
      double context_value = objective.Evaluate(context);
      for (int arm = 0; arm < cfg.action_count; ++arm) {
        JointActionSet with_arm = context;
        with_arm.Insert(ActionId{cfg.id, arm});
        arm_totals[arm] += objective.Evaluate(with_arm) - context_value;
      }
      const ActionId* own = snap.actions.FindAgent(cfg.id);
      JointActionSet with_own = context;
      with_own.Insert(*own);
      realized_gain += objective.Evaluate(with_own) - context_value;
    }
    double best_fixed_action =
        *std::max_element(arm_totals.begin(), arm_totals.end());
    report.per_agent[idx].action_regret = best_fixed_action - realized_gain;

    // Discounted best fixed neighborhood, by exhaustive enumeration.
    if (m > 15) {
      throw std::invalid_argument(
          "ComputeRegretDiagnostics: candidate set of agent " +
          std::to_string(cfg.id) + " too large to enumerate (" +
          std::to_string(m) + " > 15)");
    }
    double best_fixed_overlap = 0.0;
    for (uint32_t bits = 0; bits < (uint32_t{1} << m); ++bits) {
      if (std::popcount(bits) > cfg.alpha) continue;
      std::vector<int> subset;
      for (int b = 0; b < m; ++b) {
        if (bits & (uint32_t{1} << b)) subset.push_back(cfg.candidates[b]);
      }
      double total = 0.0;
      for (const RoundSnapshot& snap : trace.snapshots) {
        total += OverlapValue(objective, *snap.actions.FindAgent(cfg.id),
                              ActionsOf(snap.actions, subset));
      }
      best_fixed_overlap = std::max(best_fixed_overlap, total);
    }
    double realized_overlap = 0.0;
    for (const RoundSnapshot& snap : trace.snapshots) {
      realized_overlap +=
          OverlapValue(objective, *snap.actions.FindAgent(cfg.id),
                       ActionsOf(snap.actions, snap.neighborhoods[cfg.id]));
    }
    report.per_agent[idx].network_regret =
        discount * best_fixed_overlap - realized_overlap;
  }
  return report;
}

}  // namespace coordnet
