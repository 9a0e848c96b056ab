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

#include <algorithm>
#include <span>
#include <stdexcept>

namespace coordnet {

// Simulated decision-time accounting. Two primitives are charged: tau_f
// seconds per objective evaluation and tau_c seconds per single-action
// transmission. Arithmetic (additions/multiplications) is not charged.
class TimeModel {
 public:
  TimeModel(double tau_f, double tau_c) : tau_f_(tau_f), tau_c_(tau_c) {
    if (!(tau_f > 0.0) || !(tau_c > 0.0)) {
      throw std::invalid_argument("TimeModel: tau_f and tau_c must be > 0");
    }
  }

  // One synchronized round: agents evaluate in parallel, so compute costs
  // the slowest agent (max, not sum), and the single multi-channel exchange
  // costs one tau_c per communication round regardless of how many
  // point-to-point messages it carries.
  void ChargeCoordinationRound(std::span<const long long> per_agent_evals,
                               int comm_rounds = 1) {
    long long max_evals = 0;
    for (long long e : per_agent_evals) {
      if (e < 0) throw std::invalid_argument("TimeModel: negative eval count");
      max_evals = std::max(max_evals, e);
    }
    if (comm_rounds < 0) {
      throw std::invalid_argument("TimeModel: negative comm_rounds");
    }
    elapsed_ += tau_f_ * static_cast<double>(max_evals) +
                tau_c_ * static_cast<double>(comm_rounds);
  }

  // One sequential-greedy step: the committing agent's evaluations plus the
  // hand-off of the running action set (message_size actions over `hops`
  // single-action transmissions each).
  void ChargeSequentialStep(long long evals, long long message_size,
                            long long hops) {
    if (evals < 0 || message_size < 0 || hops < 0) {
      throw std::invalid_argument("TimeModel: negative charge");
    }
    elapsed_ += tau_f_ * static_cast<double>(evals) +
                tau_c_ * static_cast<double>(message_size) *
                    static_cast<double>(hops);
  }

  // Moves the clock forward to `t` if it is ahead of elapsed(); used when
  // independent timelines (disconnected components) run side by side.
  void AdvanceTo(double t) { elapsed_ = std::max(elapsed_, t); }

  double elapsed() const { return elapsed_; }
  double tau_f() const { return tau_f_; }
  double tau_c() const { return tau_c_; }

 private:
  double tau_f_;
  double tau_c_;
  double elapsed_ = 0.0;
};

}  // namespace coordnet
