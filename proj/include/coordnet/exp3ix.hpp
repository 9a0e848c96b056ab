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

#include "coordnet/rng.hpp"

namespace coordnet {

// Adversarial bandit learner with implicit-exploration reward estimation
// (EXP3-IX). Only the played arm's reward is observed; the estimator keeps
// weights positive by updating non-chosen arms as if they earned reward 1:
//   est(j) = 1 - indicator(j == chosen) * (1 - reward) / (q_chosen + gamma).
class Exp3IxLearner {
 public:
  // Fixed-horizon rates: eta = sqrt(2 * ln(arm_count) / (arm_count * horizon)),
  // gamma = eta / 2 (natural log).
  Exp3IxLearner(int arm_count, int horizon);
  // Explicit rates, mostly for tests and experiments.
  Exp3IxLearner(int arm_count, double eta, double gamma);

  int arm_count() const { return static_cast<int>(log_weights_.size()); }
  double learning_rate() const { return eta_; }
  double gamma() const { return gamma_; }

  struct Draw {
    int arm = 0;
    double probability = 0.0;  // q of the drawn arm at sampling time
  };

  std::vector<double> Distribution() const;

  // Samples an arm and reports the probability it was drawn with (the
  // estimator needs it). Does not mutate the weights.
  Draw Step(Rng& rng) const;

  // Bandit update for the played arm. reward must lie in [0, 1] and
  // chosen_probability in (0, 1]; violations throw std::out_of_range.
  // The non-chosen arms' common exp(rate) factor goes into the offset, so a
  // full-reward update leaves the sampling distribution bit-identical.
  void Update(int chosen_arm, double chosen_probability, double reward);

  static double EstimatedReward(double chosen_probability, double gamma,
                                double reward) {
    return 1.0 - (1.0 - reward) / (chosen_probability + gamma);
  }

  // Multiplies every weight by exp(delta) without touching Distribution().
  void ShiftLogWeights(double delta) { log_offset_ += delta; }

  std::vector<double> log_weights() const;

 private:
  double eta_;
  double gamma_;
  double log_offset_ = 0.0;
  std::vector<double> log_weights_;
};

// One independent learner per neighborhood slot.
using Exp3IxBank = std::vector<Exp3IxLearner>;

Exp3IxBank MakeExp3IxBank(int size, int arm_count, int horizon);

}  // namespace coordnet
