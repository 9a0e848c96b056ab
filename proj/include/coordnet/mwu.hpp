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

#include "coordnet/rng.hpp"

namespace coordnet {

// Full-information multiplicative-weights learner over a fixed horizon.
// Every arm starts at weight 1 and the learning rate is
// sqrt(8 * ln(arm_count) / horizon) (natural log). Weights are stored as
// logs: they grow like exp(rate * t) and raw products overflow long runs.
class MwuLearner {
 public:
  MwuLearner(int arm_count, int horizon);

  // Explicit learning rate, for tests and experiments.
  static MwuLearner WithRate(int arm_count, double rate);

  int arm_count() const { return static_cast<int>(log_weights_.size()); }
  double learning_rate() const { return eta_; }

  // Current play distribution (weights normalized by their sum). Entries are
  // non-negative and sum to 1 within 1e-12.
  std::vector<double> Distribution() const;

  // Samples an arm from Distribution(). Does not mutate the weights.
  int Sample(Rng& rng) const;

  // Full-information update: every arm's weight is multiplied by
  // exp(rate * reward). Rewards must lie in [0, 1]; a violation throws
  // std::out_of_range naming the offending arm.
  void Update(std::span<const double> rewards);

  // Multiplies every weight by exp(delta). The factor is kept in a separate
  // offset that never enters Distribution(), so the sampling probabilities
  // are bit-identical afterwards.
  void ShiftLogWeights(double delta) { log_offset_ += delta; }

  std::vector<double> log_weights() const;

 private:
  double eta_;
  double log_offset_ = 0.0;
  std::vector<double> log_weights_;
};

}  // namespace coordnet
