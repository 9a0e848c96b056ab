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

#include <doctest.h>

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "coordnet/exp3ix.hpp"
#include "coordnet/mwu.hpp"
#include "coordnet/rng.hpp"

using namespace coordnet;

namespace {

void CheckDistributionValid(const std::vector<double>& probs) {
  double sum = 0.0;
  for (double p : probs) {
    CHECK(p >= 0.0);
    sum += p;
  }
  CHECK(std::abs(sum - 1.0) <= 1e-12);
}

}  // namespace

TEST_SUITE("mwu") {
  TEST_CASE("rate formula and uniform start") {
    MwuLearner learner(4, 100);
    CHECK(learner.learning_rate() ==
          doctest::Approx(std::sqrt(8.0 * std::log(4.0) / 100.0)).epsilon(1e-15));
    std::vector<double> probs = learner.Distribution();
    for (double p : probs) CHECK(p == doctest::Approx(0.25).epsilon(1e-15));
    CheckDistributionValid(probs);
  }

  TEST_CASE("one positive reward tilts a two-arm learner as exp(rate)") {
    MwuLearner learner(2, 50);
    learner.Update(std::vector<double>{1.0, 0.0});
    double e = std::exp(learner.learning_rate());
    std::vector<double> probs = learner.Distribution();
    CHECK(probs[0] == doctest::Approx(e / (1.0 + e)).epsilon(1e-14));
    CHECK(probs[1] == doctest::Approx(1.0 / (1.0 + e)).epsilon(1e-14));
  }

  TEST_CASE("explicit rate reproduces the weight recursion") {
    MwuLearner learner = MwuLearner::WithRate(2, 0.5);
    learner.Update(std::vector<double>{1.0, 0.0});
    CHECK(learner.log_weights()[0] == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(learner.log_weights()[1] == 0.0);
  }

  TEST_CASE("ten updates match an independent multiplicative replay") {
    const int arms = 5;
    MwuLearner learner(arms, 200);
    std::vector<double> raw(arms, 1.0);  // straight products, no log trick
    Rng rng(77);
    for (int t = 0; t < 10; ++t) {
      std::vector<double> rewards(arms);
      for (double& r : rewards) r = rng.NextUnit();
      learner.Update(rewards);
      for (int a = 0; a < arms; ++a) {
        raw[a] *= std::exp(learner.learning_rate() * rewards[a]);
      }
    }
    double total = std::accumulate(raw.begin(), raw.end(), 0.0);
    std::vector<double> probs = learner.Distribution();
    for (int a = 0; a < arms; ++a) {
      CHECK(probs[a] == doctest::Approx(raw[a] / total).epsilon(1e-12));
    }
  }

  TEST_CASE("all-zero rewards leave weights untouched") {
    MwuLearner learner(3, 100);
    std::vector<double> before = learner.log_weights();
    learner.Update(std::vector<double>{0.0, 0.0, 0.0});
    CHECK(learner.log_weights() == before);
  }

  TEST_CASE("all-one rewards scale weights uniformly") {
    MwuLearner learner(3, 100);
    learner.Update(std::vector<double>{0.3, 0.9, 0.1});
    std::vector<double> before_probs = learner.Distribution();
    std::vector<double> before_logs = learner.log_weights();
    learner.Update(std::vector<double>{1.0, 1.0, 1.0});
    std::vector<double> after_probs = learner.Distribution();
    for (int a = 0; a < 3; ++a) {
      CHECK(after_probs[a] ==
            doctest::Approx(before_probs[a]).epsilon(1e-14));
      CHECK(learner.log_weights()[a] ==
            doctest::Approx(before_logs[a] + learner.learning_rate())
                .epsilon(1e-15));
    }
  }

  TEST_CASE("reward range is enforced and names the arm") {
    MwuLearner learner(3, 100);
    CHECK_THROWS_WITH_AS(learner.Update(std::vector<double>{0.0, 1.5, 0.0}),
                         doctest::Contains("arm 1"), std::out_of_range);
    CHECK_THROWS_AS(learner.Update(std::vector<double>{0.0, 0.0}),
                    std::invalid_argument);
  }

  TEST_CASE("sampling is deterministic under a fixed seed") {
    MwuLearner learner(6, 100);
    learner.Update(std::vector<double>{0.1, 0.9, 0.3, 0.7, 0.5, 0.2});
    Rng a(123);
    Rng b(123);
    for (int i = 0; i < 50; ++i) CHECK(learner.Sample(a) == learner.Sample(b));
  }

  TEST_CASE("single-arm learner always plays arm zero") {
    MwuLearner learner(1, 10);
    Rng rng(5);
    for (int i = 0; i < 10; ++i) CHECK(learner.Sample(rng) == 0);
  }

  TEST_CASE("extreme weights concentrate empirical frequency") {
    MwuLearner learner = MwuLearner::WithRate(2, 1.0);
    for (int t = 0; t < 30; ++t) learner.Update(std::vector<double>{1.0, 0.0});
    Rng rng(9);
    int hits = 0;
    for (int i = 0; i < 10000; ++i) hits += learner.Sample(rng) == 0;
    CHECK(hits >= 9990);
  }

  TEST_CASE("empirical frequencies track the distribution") {
    MwuLearner learner(4, 100);
    learner.Update(std::vector<double>{0.9, 0.2, 0.5, 0.0});
    learner.Update(std::vector<double>{0.8, 0.1, 0.6, 0.3});
    std::vector<double> probs = learner.Distribution();
    Rng rng(31);
    const int draws = 10000;
    std::vector<int> counts(4, 0);
    for (int i = 0; i < draws; ++i) ++counts[learner.Sample(rng)];
    for (int a = 0; a < 4; ++a) {
      double sigma = std::sqrt(probs[a] * (1.0 - probs[a]) / draws);
      CHECK(std::abs(counts[a] / static_cast<double>(draws) - probs[a]) <=
            3.0 * sigma + 1e-9);
    }
  }

  TEST_CASE("scaling all weights leaves the distribution bit-identical") {
    MwuLearner learner(5, 100);
    learner.Update(std::vector<double>{0.1, 0.2, 0.3, 0.4, 0.5});
    std::vector<double> before = learner.Distribution();
    learner.ShiftLogWeights(std::log(3.0));
    CHECK(learner.Distribution() == before);
  }

  TEST_CASE("realized regret stays under the analytic bound on average") {
    // Fixed reward matrix, 50 seeded runs; the bound holds for the mean up
    // to sampling error.
    const int arms = 6;
    const int horizon = 2000;
    Rng matrix_rng(2024);
    std::vector<std::vector<double>> rewards(horizon,
                                             std::vector<double>(arms));
    for (auto& row : rewards) {
      for (double& r : row) r = matrix_rng.NextUnit();
    }
    std::vector<double> arm_totals(arms, 0.0);
    for (const auto& row : rewards) {
      for (int a = 0; a < arms; ++a) arm_totals[a] += row[a];
    }
    double best = *std::max_element(arm_totals.begin(), arm_totals.end());

    const int runs = 50;
    std::vector<double> regrets;
    for (int run = 0; run < runs; ++run) {
      MwuLearner learner(arms, horizon);
      Rng rng(DeriveSeed(400, {static_cast<uint64_t>(run)}));
      double realized = 0.0;
      for (const auto& row : rewards) {
        realized += row[learner.Sample(rng)];
        learner.Update(row);
      }
      regrets.push_back(best - realized);
    }
    double mean = std::accumulate(regrets.begin(), regrets.end(), 0.0) / runs;
    double var = 0.0;
    for (double r : regrets) var += (r - mean) * (r - mean);
    double stderr = std::sqrt(var / (runs - 1)) / std::sqrt(runs);
    double bound = std::sqrt(horizon * std::log(arms) / 2.0);
    CHECK(mean <= bound + 3.0 * stderr);
  }
}

TEST_SUITE("exp3ix") {
  TEST_CASE("rate formulas") {
    Exp3IxLearner learner(5, 400);
    double eta = std::sqrt(2.0 * std::log(5.0) / (5.0 * 400.0));
    CHECK(learner.learning_rate() == doctest::Approx(eta).epsilon(1e-15));
    CHECK(learner.gamma() == doctest::Approx(eta / 2.0).epsilon(1e-15));
  }

  TEST_CASE("uniform start: every arm has probability 1/n") {
    Exp3IxLearner learner(8, 100);
    for (double p : learner.Distribution()) {
      CHECK(p == doctest::Approx(1.0 / 8.0).epsilon(1e-15));
    }
  }

  TEST_CASE("step reports the probability the arm was drawn with") {
    Exp3IxLearner learner(4, 100);
    learner.Update(2, 0.25, 0.9);
    std::vector<double> probs = learner.Distribution();
    Rng rng(8);
    for (int i = 0; i < 20; ++i) {
      Exp3IxLearner::Draw draw = learner.Step(rng);
      CHECK(draw.probability == probs[draw.arm]);
    }
  }

  TEST_CASE("step is deterministic under a fixed seed") {
    Exp3IxLearner learner(6, 100);
    Rng a(42);
    Rng b(42);
    for (int i = 0; i < 50; ++i) CHECK(learner.Step(a).arm == learner.Step(b).arm);
  }

  TEST_CASE("implicit-exploration estimator") {
    CHECK(Exp3IxLearner::EstimatedReward(0.5, 0.1, 0.8) ==
          doctest::Approx(2.0 / 3.0).epsilon(1e-15));
    // Full reward estimates to 1 regardless of the probability.
    CHECK(Exp3IxLearner::EstimatedReward(0.2, 0.05, 1.0) == 1.0);
  }

  TEST_CASE("reward one scales every weight equally") {
    Exp3IxLearner learner(5, 300);
    learner.Update(1, 0.2, 0.4);
    std::vector<double> before = learner.Distribution();
    Exp3IxLearner::Draw draw{3, learner.Distribution()[3]};
    learner.Update(draw.arm, draw.probability, 1.0);
    CHECK(learner.Distribution() == before);
  }

  TEST_CASE("non-chosen arms are updated as if they earned reward one") {
    Exp3IxLearner learner(3, 100);
    std::vector<double> before = learner.log_weights();
    learner.Update(0, 1.0 / 3.0, 0.0);
    for (int a : {1, 2}) {
      CHECK(learner.log_weights()[a] ==
            doctest::Approx(before[a] + learner.learning_rate()).epsilon(1e-15));
    }
    // The chosen arm with zero reward is pushed down.
    CHECK(learner.log_weights()[0] < before[0]);
  }

  TEST_CASE("weights stay positive through punishing updates") {
    Exp3IxLearner learner(4, 100);
    Rng rng(3);
    for (int t = 0; t < 500; ++t) {
      Exp3IxLearner::Draw draw = learner.Step(rng);
      learner.Update(draw.arm, draw.probability, 0.0);
      CHECK(std::isfinite(learner.log_weights()[draw.arm]));
    }
    CheckDistributionValid(learner.Distribution());
  }

  TEST_CASE("input validation") {
    Exp3IxLearner learner(4, 100);
    CHECK_THROWS_AS(learner.Update(0, 0.5, 1.2), std::out_of_range);
    CHECK_THROWS_AS(learner.Update(0, 0.0, 0.5), std::out_of_range);
    CHECK_THROWS_AS(learner.Update(7, 0.5, 0.5), std::out_of_range);
    CHECK_THROWS_AS(Exp3IxLearner(0, 100), std::invalid_argument);
  }

  TEST_CASE("empirical frequencies match the sampling distribution") {
    Exp3IxLearner learner(4, 200);
    Rng warmup(12);
    for (int t = 0; t < 50; ++t) {
      Exp3IxLearner::Draw draw = learner.Step(warmup);
      learner.Update(draw.arm, draw.probability, draw.arm == 2 ? 0.9 : 0.1);
    }
    std::vector<double> probs = learner.Distribution();
    Rng rng(99);
    const int draws = 10000;
    std::vector<int> counts(4, 0);
    for (int i = 0; i < draws; ++i) ++counts[learner.Step(rng).arm];
    for (int a = 0; a < 4; ++a) {
      double sigma = std::sqrt(probs[a] * (1.0 - probs[a]) / draws);
      CHECK(std::abs(counts[a] / static_cast<double>(draws) - probs[a]) <=
            3.0 * sigma + 1e-9);
    }
  }

  TEST_CASE("scaling invariance of the sampling distribution") {
    Exp3IxLearner learner(5, 100);
    learner.Update(2, 0.2, 0.7);
    std::vector<double> before = learner.Distribution();
    learner.ShiftLogWeights(std::log(10.0));
    CHECK(learner.Distribution() == before);
  }

  TEST_CASE("per-step pseudo-regret shrinks with the horizon") {
    // Stochastic bandit with a 0.3 reward gap; averaged over 20 seeds the
    // per-step regret must decrease across horizons.
    const std::vector<double> means{0.8, 0.5, 0.5, 0.5};
    const int seeds = 20;
    std::vector<double> per_step;
    for (int horizon : {100, 1000, 10000}) {
      double total = 0.0;
      for (int seed = 0; seed < seeds; ++seed) {
        Exp3IxLearner learner(4, horizon);
        Rng rng(DeriveSeed(500, {static_cast<uint64_t>(horizon),
                                 static_cast<uint64_t>(seed)}));
        double regret = 0.0;
        for (int t = 0; t < horizon; ++t) {
          Exp3IxLearner::Draw draw = learner.Step(rng);
          double reward = rng.NextUnit() < means[draw.arm] ? 1.0 : 0.0;
          learner.Update(draw.arm, draw.probability, reward);
          regret += means[0] - means[draw.arm];
        }
        total += regret / horizon;
      }
      per_step.push_back(total / seeds);
    }
    CHECK(per_step[1] < per_step[0]);
    CHECK(per_step[2] < per_step[1]);
  }

  TEST_CASE("bank construction") {
    Exp3IxBank bank = MakeExp3IxBank(3, 5, 100);
    CHECK(bank.size() == 3);
    for (const Exp3IxLearner& l : bank) CHECK(l.arm_count() == 5);
  }
}
