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

#include "coordnet/mwu.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace coordnet {

MwuLearner::MwuLearner(int arm_count, int horizon) {
  if (arm_count < 1) {
    throw std::invalid_argument("MwuLearner: arm_count must be >= 1");
  }
  if (horizon < 1) {
    throw std::invalid_argument("MwuLearner: horizon must be >= 1");
  }
  eta_ = std::sqrt(8.0 * std::log(static_cast<double>(arm_count)) / horizon);
  log_weights_.assign(arm_count, 0.0);
}

MwuLearner MwuLearner::WithRate(int arm_count, double rate) {
  MwuLearner learner(arm_count, 1);
  learner.eta_ = rate;
  return learner;
}

std::vector<double> MwuLearner::Distribution() const {
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

int MwuLearner::Sample(Rng& rng) const {
  return rng.NextFromDistribution(Distribution());
}

void MwuLearner::Update(std::span<const double> rewards) {
  if (rewards.size() != log_weights_.size()) {
    throw std::invalid_argument("MwuLearner: expected " +
                                std::to_string(log_weights_.size()) +
                                " rewards, got " +
                                std::to_string(rewards.size()));
  }
  for (std::size_t i = 0; i < rewards.size(); ++i) {
    if (!(rewards[i] >= 0.0 && rewards[i] <= 1.0)) {
      throw std::out_of_range("MwuLearner: reward for arm " +
                              std::to_string(i) + " outside [0,1]: " +
                              std::to_string(rewards[i]));
    }
  }
  for (std::size_t i = 0; i < rewards.size(); ++i) {
    log_weights_[i] += eta_ * rewards[i];
  }
}

std::vector<double> MwuLearner::log_weights() const {
  std::vector<double> out(log_weights_);
  for (double& w : out) w += log_offset_;
  return out;
}

}  // namespace coordnet
