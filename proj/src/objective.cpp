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

#include "coordnet/objective.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "coordnet/rng.hpp"

namespace coordnet {
namespace {

constexpr double kAuditTolerance = 1e-9;

std::vector<ActionId> WithExtra(std::span<const ActionId> base, ActionId extra) {
  std::vector<ActionId> out(base.begin(), base.end());
  out.push_back(extra);
  return out;
}

double ConditionalGain(const SubmodularObjective& f, ActionId s,
                       std::span<const ActionId> context) {
  return f.Evaluate(WithExtra(context, s)) - f.Evaluate(context);
}

}  // namespace

double MarginalGain(const SubmodularObjective& f, ActionId a,
                    const JointActionSet& context) {
  if (context.ContainsAgent(a.agent)) {
    throw std::invalid_argument("MarginalGain: agent " +
                                std::to_string(a.agent) +
                                " already present in context");
  }
  return ConditionalGain(f, a, context.Items());
}

double MutualInformation(const SubmodularObjective& f, ActionId a,
                         const JointActionSet& neighbor_actions) {
  if (neighbor_actions.ContainsAgent(a.agent)) {
    throw std::invalid_argument("MutualInformation: agent " +
                                std::to_string(a.agent) +
                                " already present in neighbor set");
  }
  double singleton = f.Evaluate(std::span<const ActionId>(&a, 1));
  return singleton - ConditionalGain(f, a, neighbor_actions.Items());
}

Curvature ComputeCurvature(const SubmodularObjective& f,
                           std::span<const ActionId> ground) {
  if (ground.empty()) {
    throw std::invalid_argument("ComputeCurvature: empty ground set");
  }
  double full = f.Evaluate(ground);
  double min_ratio = 1.0;
  std::vector<ActionId> rest;
  rest.reserve(ground.size() - 1);
  for (std::size_t i = 0; i < ground.size(); ++i) {
    ActionId v = ground[i];
    double singleton = f.Evaluate(std::span<const ActionId>(&v, 1));
    if (singleton <= 0.0) {
      throw std::domain_error("ComputeCurvature: undefined for element " +
                              ToString(v) + " with zero singleton value");
    }
    rest.clear();
    for (std::size_t j = 0; j < ground.size(); ++j) {
      if (j != i) rest.push_back(ground[j]);
    }
    double ratio = (full - f.Evaluate(rest)) / singleton;
    min_ratio = std::min(min_ratio, ratio);
  }
  double kappa = 1.0 - min_ratio;
  if (kappa < 0.0 && kappa >= -1e-12) kappa = 0.0;  // subtraction residue
  if (kappa > 1.0 && kappa <= 1.0 + 1e-12) kappa = 1.0;
  return Curvature{kappa};
}

SecondOrderAuditReport AuditSecondOrder(const SubmodularObjective& f,
                                        long long trials, uint64_t rng_seed) {
  if (trials < 1) {
    throw std::invalid_argument("AuditSecondOrder: trials must be >= 1");
  }
  std::vector<ActionId> ground;
  const std::vector<int>& counts = f.action_counts();
  for (int agent = 0; agent < static_cast<int>(counts.size()); ++agent) {
    for (int choice = 0; choice < counts[agent]; ++choice) {
      ground.push_back(ActionId{agent, choice});
    }
  }
  if (ground.size() < 3) {
    throw std::invalid_argument(
        "AuditSecondOrder: ground set too small to sample disjoint sets");
  }

  Rng rng(rng_seed);
  SecondOrderAuditReport report;
  report.trials = trials;
  double worst_margin = 0.0;

  std::vector<ActionId> pool(ground);
  for (long long trial = 0; trial < trials; ++trial) {
    // Partial Fisher-Yates shuffle, then carve s, A, B, C off the prefix.
    for (std::size_t i = 0; i < pool.size(); ++i) {
      std::size_t j = i + static_cast<std::size_t>(
                              rng.NextIndex(static_cast<int>(pool.size() - i)));
      std::swap(pool[i], pool[j]);
    }
    int budget = static_cast<int>(pool.size()) - 1;
    int size_a = 1 + rng.NextIndex(std::min(3, std::max(1, budget - 1)));
    int size_b = 1 + rng.NextIndex(std::min(3, std::max(1, budget - size_a)));
    int size_c = rng.NextIndex(
        std::min(3, std::max(0, budget - size_a - size_b)) + 1);

    ActionId s = pool[0];
    auto begin = pool.begin() + 1;
    std::vector<ActionId> a(begin, begin + size_a);
    std::vector<ActionId> b(begin + size_a, begin + size_a + size_b);
    std::vector<ActionId> c(begin + size_a + size_b,
                            begin + size_a + size_b + size_c);

    std::vector<ActionId> ac = a;
    ac.insert(ac.end(), c.begin(), c.end());
    std::vector<ActionId> bc = b;
    bc.insert(bc.end(), c.begin(), c.end());
    std::vector<ActionId> abc = ac;
    abc.insert(abc.end(), b.begin(), b.end());

    double margin = (ConditionalGain(f, s, c) - ConditionalGain(f, s, ac)) -
                    (ConditionalGain(f, s, bc) - ConditionalGain(f, s, abc));
    worst_margin = std::min(worst_margin, margin);
    if (margin < -kAuditTolerance) ++report.violations;
  }
  report.worst_violation = std::max(0.0, -worst_margin);
  return report;
}

}  // namespace coordnet
