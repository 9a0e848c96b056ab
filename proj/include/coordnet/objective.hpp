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

namespace coordnet {

// A normalized, non-decreasing, submodular set function over the ground set
// {(agent, choice)}. Evaluate treats its input as a set: duplicates do not
// change the value, order is irrelevant, and the empty set evaluates to 0.
// Implementations must be pure; concurrent Evaluate calls are safe.
class SubmodularObjective {
 public:
  virtual ~SubmodularObjective() = default;

  virtual double Evaluate(std::span<const ActionId> actions) const = 0;

  // Ground-set descriptor: number of available actions per agent.
  virtual const std::vector<int>& action_counts() const = 0;

  double Evaluate(const JointActionSet& actions) const {
    return Evaluate(actions.Items());
  }

  int agent_count() const { return static_cast<int>(action_counts().size()); }
};

// Counts evaluations routed through it. Each agent owns one, so per-agent
// call counters need no synchronization when agents run on separate threads.
class CountingObjective {
 public:
  explicit CountingObjective(const SubmodularObjective& base) : base_(&base) {}

  double Evaluate(std::span<const ActionId> actions) {
    ++calls_;
    return base_->Evaluate(actions);
  }
  double Evaluate(const JointActionSet& actions) {
    return Evaluate(actions.Items());
  }

  long long calls() const { return calls_; }
  void ResetCalls() { calls_ = 0; }
  const SubmodularObjective& base() const { return *base_; }

 private:
  const SubmodularObjective* base_;
  long long calls_ = 0;
};

// f(context + a) - f(context). Non-negative for monotone f.
// Throws std::invalid_argument if a's agent already appears in context.
double MarginalGain(const SubmodularObjective& f, ActionId a,
                    const JointActionSet& context);

// Utility overlap between action a and a set of neighbor actions:
// f({a}) - [f(neighbors + a) - f(neighbors)]. Zero for empty neighborhoods,
// at most f({a}), and non-decreasing in the neighbor set for submodular f.
// Throws std::invalid_argument if a's agent appears in neighbor_actions.
double MutualInformation(const SubmodularObjective& f, ActionId a,
                         const JointActionSet& neighbor_actions);

// Degree of non-modularity in [0, 1]: 0 means f is modular on the ground
// set, 1 means some element contributes nothing given all the others.
struct Curvature {
  double kappa = 0.0;
};

// kappa = 1 - min_v [f(ground) - f(ground \ {v})] / f({v}).
// Throws std::domain_error when some f({v}) is zero, naming the element.
Curvature ComputeCurvature(const SubmodularObjective& f,
                           std::span<const ActionId> ground);

struct SecondOrderAuditReport {
  long long trials = 0;
  long long violations = 0;
  // Largest magnitude by which the marginal-of-marginals inequality failed;
  // 0 when every sampled case held.
  double worst_violation = 0.0;
};

// Randomized audit of the 2nd-order diminishing-returns property: samples
// disjoint sets A, B, C and an element s, and checks
//   f(s|C) - f(s|A+C) >= f(s|B+C) - f(s|A+B+C)
// up to a 1e-9 tolerance. Deterministic for a fixed seed.
SecondOrderAuditReport AuditSecondOrder(const SubmodularObjective& f,
                                        long long trials, uint64_t rng_seed);

}  // namespace coordnet
