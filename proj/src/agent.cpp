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

#include "coordnet/agent.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace coordnet {
namespace {

constexpr uint64_t kActionRole = 1;
constexpr uint64_t kNeighborRole = 2;

AgentConfig ValidateConfig(AgentConfig config) {
  if (config.id < 0) {
    throw std::invalid_argument("AgentConfig: id must be non-negative");
  }
  if (config.action_count < 1) {
    throw std::invalid_argument("AgentConfig: action_count must be >= 1");
  }
  if (config.horizon < 1) {
    throw std::invalid_argument("AgentConfig: horizon must be >= 1");
  }
  if (!(config.reward_scale > 0.0)) {
    throw std::invalid_argument("AgentConfig: reward_scale must be > 0");
  }
  std::sort(config.candidates.begin(), config.candidates.end());
  auto dup = std::adjacent_find(config.candidates.begin(), config.candidates.end());
  if (dup != config.candidates.end()) {
    throw std::invalid_argument("AgentConfig: duplicate candidate " +
                                std::to_string(*dup));
  }
  for (int j : config.candidates) {
    if (j == config.id) {
      throw std::invalid_argument("AgentConfig: agent " +
                                  std::to_string(config.id) +
                                  " cannot be its own candidate");
    }
    if (j < 0) {
      throw std::invalid_argument("AgentConfig: negative candidate index");
    }
  }
  if (config.alpha < 0) {
    throw std::invalid_argument("AgentConfig: alpha must be non-negative");
  }
  config.alpha = std::min(config.alpha,
                          static_cast<int>(config.candidates.size()));
  return config;
}

}  // namespace

Agent::Agent(AgentConfig config, const SubmodularObjective& objective,
             uint64_t master_seed)
    : config_(ValidateConfig(std::move(config))),
      objective_(objective),
      action_learner_(config_.action_count, config_.horizon),
      action_rng_(DeriveSeed(master_seed,
                             {static_cast<uint64_t>(config_.id), kActionRole, 0})) {
  bank_rngs_.reserve(config_.alpha);
  if (config_.alpha > 0) {
    bank_ = MakeExp3IxBank(config_.alpha,
                           static_cast<int>(config_.candidates.size()),
                           config_.horizon);
    for (int k = 0; k < config_.alpha; ++k) {
      bank_rngs_.emplace_back(DeriveSeed(
          master_seed, {static_cast<uint64_t>(config_.id), kNeighborRole,
                        static_cast<uint64_t>(k)}));
    }
  }
}

ActionId Agent::BeginRound() {
  objective_.ResetCalls();
  return ActionId{config_.id, action_learner_.Sample(action_rng_)};
}

AgentRound Agent::SelectNeighbors(ActionId own_action,
                                  std::span<const ActionId> current_actions) {
  AgentRound round;
  round.action = own_action;
  if (config_.alpha == 0) {
    // Empty bank: the round's only bookkeeping evaluation is the (empty)
    // neighbor context.
    round.context_value = objective_.Evaluate(round.neighbor_actions);
    return round;
  }

  double singleton =
      objective_.Evaluate(std::span<const ActionId>(&own_action, 1));
  JointActionSet context;
  double context_value = 0.0;
  double previous_overlap = 0.0;
  round.draws.reserve(config_.alpha);

  for (int k = 0; k < config_.alpha; ++k) {
    Exp3IxLearner::Draw draw = bank_[k].Step(bank_rngs_[k]);
    int candidate = config_.candidates[draw.arm];
    if (candidate < 0 ||
        candidate >= static_cast<int>(current_actions.size())) {
      throw std::runtime_error("Agent " + std::to_string(config_.id) +
                               ": no action available for drawn candidate " +
                               std::to_string(candidate));
    }
    ActionId candidate_action = current_actions[candidate];

    // Repeated draws leave the context unchanged but are still evaluated;
    // the per-round evaluation count is two per draw regardless.
    JointActionSet next = context;
    if (!next.ContainsAgent(candidate)) next.Insert(candidate_action);
    JointActionSet next_with_own = next;
    next_with_own.Insert(own_action);

    double next_value = objective_.Evaluate(next);
    double next_with_own_value = objective_.Evaluate(next_with_own);
    double overlap = singleton - (next_with_own_value - next_value);
    double reward = NormalizeReward(overlap - previous_overlap);

    bank_[k].Update(draw.arm, draw.probability, reward);
    round.draws.push_back(NeighborDraw{k, candidate, draw.probability, reward});

    context = std::move(next);
    context_value = next_value;
    previous_overlap = overlap;
  }

  round.neighbor_actions = std::move(context);
  round.context_value = context_value;
  for (const ActionId& a : round.neighbor_actions.Items()) {
    round.neighborhood.push_back(a.agent);
  }
  return round;
}

void Agent::UpdateActionLearner(AgentRound& round) {
  std::vector<double> rewards(config_.action_count);
  for (int arm = 0; arm < config_.action_count; ++arm) {
    JointActionSet with_arm = round.neighbor_actions;
    with_arm.Insert(ActionId{config_.id, arm});
    double value = objective_.Evaluate(with_arm);
    rewards[arm] = NormalizeReward(value - round.context_value);
  }
  action_learner_.Update(rewards);
  round.eval_count = objective_.calls();
}

void Agent::ResetLearners(int remaining_horizon) {
  if (remaining_horizon < 1) {
    throw std::invalid_argument("Agent: remaining_horizon must be >= 1");
  }
  config_.horizon = remaining_horizon;
  action_learner_ = MwuLearner(config_.action_count, remaining_horizon);
  if (config_.alpha > 0) {
    bank_ = MakeExp3IxBank(config_.alpha,
                           static_cast<int>(config_.candidates.size()),
                           remaining_horizon);
  }
}

double Agent::NormalizeReward(double raw) {
  double r = raw / config_.reward_scale;
  if (r > 1.0 + 1e-12 || r < -1e-12) ++clamp_fires_;
  return std::clamp(r, 0.0, 1.0);
}

}  // namespace coordnet
