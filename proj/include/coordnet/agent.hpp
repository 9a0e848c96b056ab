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

#include "coordnet/actions.hpp"
#include "coordnet/exp3ix.hpp"
#include "coordnet/mwu.hpp"
#include "coordnet/objective.hpp"
#include "coordnet/rng.hpp"

namespace coordnet {

struct AgentConfig {
  int id = 0;
  int action_count = 1;          // |V_i|
  std::vector<int> candidates;   // agents within receive reach, excludes id
  int alpha = 0;                 // receive-bandwidth cap, clamped to |candidates|
  int horizon = 1;
  double reward_scale = 1.0;     // normalizes objective increments into [0,1]
};

struct NeighborDraw {
  int slot = 0;              // which bank learner produced the draw
  int candidate = 0;         // drawn agent index
  double probability = 0.0;  // sampling probability of the draw
  double reward = 0.0;       // normalized reward fed back to the learner
};

// Everything one agent produces in a round.
struct AgentRound {
  ActionId action;
  std::vector<int> neighborhood;    // deduplicated drawn candidates, sorted
  std::vector<NeighborDraw> draws;  // alpha entries, in draw order
  JointActionSet neighbor_actions;  // round-t actions of the neighborhood
  double context_value = 0.0;       // f(neighbor_actions), reused by the
                                    // action-learner reward pass
  long long eval_count = 0;         // objective evaluations this round
};

// One coordinating agent: a full-information action learner plus a bank of
// bandit learners that pick which candidates to listen to. A round costs
// exactly action_count + 2*alpha + 1 objective evaluations: one for the
// running-context bookkeeping, two per neighbor draw (the overlap increment
// needs the extended context with and without the agent's own action), and
// one marginal per arm against the cached context value.
//
// Single-owner state machine: no concurrent calls on one agent; distinct
// agents may run on different threads.
class Agent {
 public:
  Agent(AgentConfig config, const SubmodularObjective& objective,
        uint64_t master_seed);

  // Resets the round evaluation counter and samples this round's action.
  // Weights are not touched.
  ActionId BeginRound();

  // Runs the alpha bandit draws against the current round's action snapshot
  // (current_actions[j] is agent j's action this round), feeding each draw's
  // overlap increment back to its learner. Throws std::runtime_error if a
  // drawn candidate cannot be resolved.
  AgentRound SelectNeighbors(ActionId own_action,
                             std::span<const ActionId> current_actions);

  // Full-information update of the action learner: the marginal gain of
  // every own action against the realized neighbor actions, normalized by
  // reward_scale. Fills round.eval_count.
  void UpdateActionLearner(AgentRound& round);

  // Re-initialization hook for anytime reconfiguration (agents joining or
  // leaving): rebuilds both learners with fresh uniform weights and rates
  // for `remaining_horizon` steps. RNG streams continue where they were.
  void ResetLearners(int remaining_horizon);

  int id() const { return config_.id; }
  int alpha() const { return config_.alpha; }
  const AgentConfig& config() const { return config_; }
  long long round_evals() const { return objective_.calls(); }
  // Number of times a normalized reward fell outside [0,1] and was clipped.
  // Stays 0 when reward_scale actually bounds the increments.
  long long clamp_fires() const { return clamp_fires_; }

  const MwuLearner& action_learner() const { return action_learner_; }
  const Exp3IxBank& neighbor_bank() const { return bank_; }

 private:
  double NormalizeReward(double raw);

  AgentConfig config_;
  CountingObjective objective_;
  MwuLearner action_learner_;
  Exp3IxBank bank_;
  Rng action_rng_;
  std::vector<Rng> bank_rngs_;
  long long clamp_fires_ = 0;
};

}  // namespace coordnet
