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

#include "coordnet/exp3ix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace coordnet {

Exp3IxLearner::Exp3IxLearner(int arm_count, int horizon) {
  if (arm_count < 1) {
    throw std::invalid_argument("Exp3IxLearner: arm_count must be >= 1");
  }
  if (horizon < 1) {
    throw std::invalid_argument("Exp3IxLearner: horizon must be >= 1");
  }
  eta_ = std::sqrt(2.0 * std::log(static_cast<double>(arm_count)) /
                   (static_cast<double>(arm_count) * horizon));
  gamma_ = eta_ / 2.0;
  log_weights_.assign(arm_count, 0.0);
}

Exp3IxLearner::Exp3IxLearner(int arm_count, double eta, double gamma)
    : eta_(eta), gamma_(gamma) {
  if (arm_count < 1) {
    throw std::invalid_argument("Exp3IxLearner: arm_count must be >= 1");
  }
  log_weights_.assign(arm_count, 0.0);
}

std::vector<double> Exp3IxLearner::Distribution() const {
  double max_log = *std::max_element(log_weights_.begin(), log_weights_.end());
  std::vector<double> probs(log_weights_.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    probs[i] = std::exp(log_weights_[i] - max_log);
    sum += probs[i];
  }
  for (double& p : probs) p /= sum;
  return probs;
}

Exp3IxLearner::Draw Exp3IxLearner::Step(Rng& rng) const {
  std::vector<double> probs = Distribution();
  int arm = rng.NextFromDistribution(probs);
  return Draw{arm, probs[arm]};
}

void Exp3IxLearner::Update(int chosen_arm, double chosen_probability,
                           double reward) {
  if (chosen_arm < 0 || chosen_arm >= arm_count()) {
    throw std::out_of_range("Exp3IxLearner: chosen arm " +
                            std::to_string(chosen_arm) + " out of range");
  }
  if (!(reward >= 0.0 && reward <= 1.0)) {
    throw std::out_of_range("Exp3IxLearner: reward outside [0,1]: " +
                            std::to_string(reward));
  }
  if (!(chosen_probability > 0.0 && chosen_probability <= 1.0)) {
    throw std::out_of_range("Exp3IxLearner: probability outside (0,1]: " +
                            std::to_string(chosen_probability));
  }
  // Estimated rewards are 1 for every non-chosen arm, so the update is a
  // uniform exp(rate) factor plus a correction on the played arm.
  double est_chosen = EstimatedReward(chosen_probability, gamma_, reward);
  log_offset_ += eta_;
  log_weights_[chosen_arm] += eta_ * (est_chosen - 1.0);
}

std::vector<double> Exp3IxLearner::log_weights() const {
  std::vector<double> out(log_weights_);
  for (double& w : out) w += log_offset_;
  return out;
}

Exp3IxBank MakeExp3IxBank(int size, int arm_count, int horizon) {
  Exp3IxBank bank;
  bank.reserve(size);
  for (int k = 0; k < size; ++k) bank.emplace_back(arm_count, horizon);
  return bank;
}

}  // namespace coordnet
