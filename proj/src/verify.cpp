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

#include "coordnet/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <stdexcept>

#include "coordnet/coverage.hpp"
#include "coordnet/dfssg.hpp"
#include "coordnet/harness.hpp"
#include "coordnet/mwu.hpp"
#include "coordnet/objective.hpp"
#include "coordnet/orchestrator.hpp"
#include "coordnet/rng.hpp"
#include "coordnet/time_model.hpp"

namespace coordnet::verify {
namespace {

std::string Fmt(const char* format, ...) {
  char buf[512];
  va_list args;
  va_start(args, format);
  std::vsnprintf(buf, sizeof(buf), format, args);
  va_end(args);
  return buf;
}

CoverageWorld RandomWorld(Rng& rng, int cameras, double side, int directions,
                          double margin = 0.0) {
  CoverageWorld world;
  world.width = side;
  world.height = side;
  world.cell_size = 1.0;
  world.fov_radius = 7.0;
  world.directions = directions;
  for (int i = 0; i < cameras; ++i) {
    world.camera_positions.push_back(
        Point{rng.NextUniform(margin, side - margin),
              rng.NextUniform(margin, side - margin)});
  }
  return world;
}

// Exhaustive joint-action optimum; feasible only for tiny instances.
double BruteForceOptimum(const SubmodularObjective& f) {
  const std::vector<int>& counts = f.action_counts();
  std::vector<int> choice(counts.size(), 0);
  double best = 0.0;
  while (true) {
    std::vector<ActionId> joint;
    joint.reserve(counts.size());
    for (std::size_t i = 0; i < counts.size(); ++i) {
      joint.push_back(ActionId{static_cast<int>(i), choice[i]});
    }
    best = std::max(best, f.Evaluate(joint));
    std::size_t pos = 0;
    while (pos < counts.size() && ++choice[pos] == counts[pos]) {
      choice[pos] = 0;
      ++pos;
    }
    if (pos == counts.size()) break;
  }
  return best;
}

std::vector<ActionId> FullGround(const SubmodularObjective& f) {
  std::vector<ActionId> ground;
  for (int agent = 0; agent < f.agent_count(); ++agent) {
    for (int c = 0; c < f.action_counts()[agent]; ++c) {
      ground.push_back(ActionId{agent, c});
    }
  }
  return ground;
}

SuiteResult Lemma1Suite(uint64_t seed) {
  SuiteResult result{"lemma1", false, {}};
  constexpr int kCases = 1000;
  constexpr double kTol = 1e-9;
  Rng rng(DeriveSeed(seed, {0x1e, 1}));

  int monotonicity_violations = 0;
  int submodularity_violations = 0;
  double worst_monotonicity = 0.0;
  double worst_submodularity = 0.0;

  for (int c = 0; c < kCases; ++c) {
    // Small crowded worlds so neighbor FOVs actually overlap.
    CoverageWorld world = RandomWorld(rng, 7, 40.0, 8);
    CoverageObjective f(world);
    ActionId a{0, rng.NextIndex(8)};

    std::vector<int> others;
    for (int j = 1; j < 7; ++j) others.push_back(j);
    for (std::size_t i = 0; i < others.size(); ++i) {
      std::size_t j = i + rng.NextIndex(static_cast<int>(others.size() - i));
      std::swap(others[i], others[j]);
    }
    std::vector<ActionId> actions(7);
    for (int j = 1; j < 7; ++j) actions[j] = ActionId{j, rng.NextIndex(8)};

    auto joint = [&](std::span<const int> who) {
      JointActionSet set;
      for (int j : who) set.Insert(actions[j]);
      return set;
    };

    // Nested sets: the overlap measure must not decrease.
    int k2 = 1 + rng.NextIndex(6);
    int k1 = rng.NextIndex(k2 + 1);
    std::span<const int> all(others);
    double i1 = MutualInformation(f, a, joint(all.subspan(0, k1)));
    double i2 = MutualInformation(f, a, joint(all.subspan(0, k2)));
    worst_monotonicity = std::min(worst_monotonicity, i2 - i1);
    if (i2 - i1 < -kTol) ++monotonicity_violations;

    // Disjoint A, B1, B2: conditional gains of the overlap measure shrink.
    int size_a = 1 + rng.NextIndex(2);
    int size_b1 = 1 + rng.NextIndex(2);
    int size_b2 = 1 + rng.NextIndex(2);
    std::span<const int> set_a = all.subspan(0, size_a);
    std::span<const int> set_b1 = all.subspan(size_a, size_b1);
    std::span<const int> set_b2 = all.subspan(size_a + size_b1, size_b2);

    std::vector<int> ab1(set_a.begin(), set_a.end());
    ab1.insert(ab1.end(), set_b1.begin(), set_b1.end());
    std::vector<int> b1b2(set_b1.begin(), set_b1.end());
    b1b2.insert(b1b2.end(), set_b2.begin(), set_b2.end());
    std::vector<int> ab1b2 = ab1;
    ab1b2.insert(ab1b2.end(), set_b2.begin(), set_b2.end());

    double gain_b1 = MutualInformation(f, a, joint(ab1)) -
                     MutualInformation(f, a, joint(set_b1));
    double gain_b1b2 = MutualInformation(f, a, joint(ab1b2)) -
                       MutualInformation(f, a, joint(b1b2));
    worst_submodularity = std::min(worst_submodularity, gain_b1 - gain_b1b2);
    if (gain_b1 - gain_b1b2 < -kTol) ++submodularity_violations;
  }

  result.lines.push_back(Fmt("cases=%d tolerance=%g", kCases, kTol));
  result.lines.push_back(Fmt(
      "overlap monotonicity violations=%d (worst margin %.3g)",
      monotonicity_violations, worst_monotonicity));
  result.lines.push_back(Fmt(
      "overlap submodularity violations=%d (worst margin %.3g)",
      submodularity_violations, worst_submodularity));
  result.pass = monotonicity_violations == 0 && submodularity_violations == 0;
  return result;
}

SuiteResult Prop2Suite(uint64_t seed) {
  SuiteResult result{"prop2", false, {}};
  result.pass = true;
  Rng rng(DeriveSeed(seed, {0x92, 1}));
  CoverageWorld world = RandomWorld(rng, 10, 100.0, 8);
  CoverageObjective objective(world);

  for (int alpha : {3, 1, 0}) {
    std::vector<AgentConfig> configs;
    for (int i = 0; i < 10; ++i) {
      AgentConfig c;
      c.id = i;
      c.action_count = 8;
      for (int j = 0; j < 10; ++j) {
        if (j != i) c.candidates.push_back(j);
      }
      c.alpha = alpha;
      c.horizon = 60;
      c.reward_scale = objective.MaxSingletonValue(i);
      configs.push_back(std::move(c));
    }
    TimeModel clock(0.01, 0.01);
    RunOutput out = Run(configs, objective, clock, 60,
                        DeriveSeed(seed, {0x92, 2, static_cast<uint64_t>(alpha)}));
    const long long expected = 8 + 2LL * alpha + 1;
    long long bad_rounds = 0;
    for (const RoundSnapshot& snap : out.trace.snapshots) {
      for (long long e : snap.eval_counts) {
        if (e != expected) ++bad_rounds;
      }
    }
    result.lines.push_back(
        Fmt("alpha=%d expected=%lld per agent per round, mismatches=%lld",
            alpha, expected, bad_rounds));
    if (bad_rounds != 0) result.pass = false;
  }
  return result;
}

SuiteResult Prop3Suite(uint64_t seed) {
  SuiteResult result{"prop3", false, {}};
  Rng rng(DeriveSeed(seed, {0x93, 1}));
  CoverageWorld world = RandomWorld(rng, 6, 60.0, 8);
  CoverageObjective objective(world);

  std::vector<AgentConfig> configs;
  long long total_alpha = 0;
  for (int i = 0; i < 6; ++i) {
    AgentConfig c;
    c.id = i;
    c.action_count = 8;
    for (int j = 0; j < 6; ++j) {
      if (j != i) c.candidates.push_back(j);
    }
    c.alpha = 2;
    c.horizon = 40;
    c.reward_scale = objective.MaxSingletonValue(i);
    total_alpha += c.alpha;
    configs.push_back(std::move(c));
  }
  TimeModel clock(0.01, 0.01);
  RunOutput out =
      Run(configs, objective, clock, 40, DeriveSeed(seed, {0x93, 2}));

  bool one_exchange_per_round =
      out.trace.comm_log.size() == out.trace.snapshots.size();
  long long payload_errors = 0;
  long long count_errors = 0;
  for (std::size_t t = 0; t < out.trace.comm_log.size(); ++t) {
    const CommExchange& exchange = out.trace.comm_log[t];
    if (exchange.t != static_cast<int>(t) + 1) one_exchange_per_round = false;
    if (static_cast<long long>(exchange.messages.size()) != total_alpha) {
      ++count_errors;
    }
    for (const CommMessage& m : exchange.messages) {
      // Every payload is the sender's own single current action.
      const ActionId* sender_action =
          out.trace.snapshots[t].actions.FindAgent(m.from);
      if (sender_action == nullptr || !(*sender_action == m.payload) ||
          m.payload.agent != m.from) {
        ++payload_errors;
      }
    }
  }
  result.lines.push_back(Fmt("rounds=%zu exchanges=%zu",
                             out.trace.snapshots.size(),
                             out.trace.comm_log.size()));
  result.lines.push_back(
      Fmt("per-round message-count errors=%lld (expected %lld messages)",
          count_errors, total_alpha));
  result.lines.push_back(Fmt("payload errors=%lld", payload_errors));
  result.pass =
      one_exchange_per_round && payload_errors == 0 && count_errors == 0;
  return result;
}

SuiteResult RegretSuite(uint64_t seed) {
  SuiteResult result{"regret", false, {}};
  result.pass = true;
  constexpr int kArms = 8;
  constexpr int kHorizon = 10000;
  const double bound = std::sqrt(kHorizon * std::log(8.0) / 2.0);

  for (int run = 0; run < 5; ++run) {
    Rng matrix_rng(DeriveSeed(seed, {0xA1, static_cast<uint64_t>(run)}));
    Rng play_rng(DeriveSeed(seed, {0xA2, static_cast<uint64_t>(run)}));
    MwuLearner learner(kArms, kHorizon);
    std::vector<double> arm_totals(kArms, 0.0);
    double realized = 0.0;
    std::vector<double> rewards(kArms);
    for (int t = 0; t < kHorizon; ++t) {
      for (double& r : rewards) r = matrix_rng.NextUnit();
      int played = learner.Sample(play_rng);
      realized += rewards[played];
      for (int a = 0; a < kArms; ++a) arm_totals[a] += rewards[a];
      learner.Update(rewards);
    }
    double best = *std::max_element(arm_totals.begin(), arm_totals.end());
    double regret = best - realized;
    result.lines.push_back(
        Fmt("run %d: realized regret %.2f <= bound %.2f", run, regret, bound));
    if (!(regret <= bound)) result.pass = false;
  }
  return result;
}

SuiteResult Appendix2Suite(uint64_t seed) {
  (void)seed;  // fully deterministic
  SuiteResult result{"appendix2", false, {}};
  result.pass = true;

  // Closed-form fixtures.
  struct Case {
    int n;
    double tau_c;
    double expected;
  };
  for (const Case& c : {Case{4, 1.0, 6.0}, Case{1, 1.0, 0.0},
                        Case{60, 1.0, 1770.0}, Case{60, 0.05, 88.5}}) {
    double got = WorstCaseTime(c.n, c.tau_c);
    bool ok = std::abs(got - c.expected) <= 1e-9;
    result.lines.push_back(Fmt("spanning-walk n=%d tau_c=%g -> %.10g (want %g)",
                               c.n, c.tau_c, got, c.expected));
    if (!ok) result.pass = false;
  }

  // A unit-action path graph must charge the same total as the summation:
  // compute 4 * tau_f * 1, communication tau_c * (1 + 2 + 3).
  CoverageWorld world;
  world.width = 100.0;
  world.height = 40.0;
  world.cell_size = 1.0;
  world.fov_radius = 7.0;
  world.directions = 1;
  for (int i = 0; i < 4; ++i) {
    world.camera_positions.push_back(Point{20.0 + 10.0 * i, 20.0});
  }
  std::vector<double> ranges(4, 10.5);
  CoverageObjective objective(world);
  DirectedCommGraph graph =
      BuildGraph(world.camera_positions, ranges);
  TimeModel clock(1.0, 1.0);
  SimTrace trace = RunDfsSg(graph, objective, clock);
  double comm_time = clock.elapsed() - 4.0;  // minus the four evaluations
  bool ok = trace.component_count == 1 && comm_time == 6.0;
  result.lines.push_back(
      Fmt("path-graph run: components=%d comm charge=%.10g (want 6)",
          trace.component_count, comm_time));
  if (!ok) result.pass = false;
  return result;
}

SuiteResult Theorem1SmallSuite(uint64_t seed) {
  SuiteResult result{"theorem1-small", false, {}};
  result.pass = true;
  constexpr int kInstances = 10;
  constexpr int kHorizon = 10000;
  constexpr double kSlack = 0.05;

  for (int inst = 0; inst < kInstances; ++inst) {
    Rng rng(DeriveSeed(seed, {0x71, static_cast<uint64_t>(inst)}));
    // Cameras inset so every FOV stays on the map: all singleton values are
    // positive and the curvature is well defined. The map is large enough
    // that instances range from mostly-disjoint to heavily overlapping.
    CoverageWorld world = RandomWorld(rng, 4, 100.0, 3, 14.0);
    CoverageObjective objective(world);

    double opt = BruteForceOptimum(objective);
    double kappa = ComputeCurvature(objective, FullGround(objective)).kappa;
    double central_coeff = 1.0 / (1.0 + kappa);
    double decentral_coeff = (1.0 - kappa) / (1.0 + kappa - kappa * kappa);

    auto run_average = [&](int alpha) {
      std::vector<AgentConfig> configs;
      for (int i = 0; i < 4; ++i) {
        AgentConfig c;
        c.id = i;
        c.action_count = 3;
        for (int j = 0; j < 4; ++j) {
          if (j != i) c.candidates.push_back(j);
        }
        c.alpha = alpha;
        c.horizon = kHorizon;
        c.reward_scale = objective.MaxSingletonValue(i);
        configs.push_back(std::move(c));
      }
      TimeModel clock(0.01, 0.01);
      RunOutput out = Run(configs, objective, clock, kHorizon,
                          DeriveSeed(seed, {0x72, static_cast<uint64_t>(inst),
                                            static_cast<uint64_t>(alpha)}));
      double sum = 0.0;
      int count = 0;
      for (std::size_t t = out.trace.snapshots.size() / 2;
           t < out.trace.snapshots.size(); ++t) {
        sum += out.trace.snapshots[t].f_value;
        ++count;
      }
      return sum / count;
    };

    double central_avg = run_average(3);
    double decentral_avg = run_average(0);
    double central_band = central_coeff * opt - kSlack * opt;
    double decentral_band = decentral_coeff * opt - kSlack * opt;
    bool central_ok = central_avg >= central_band;
    bool decentral_ok = decentral_avg >= decentral_band;
    result.lines.push_back(Fmt(
        "instance %d: kappa=%.3f opt=%g central avg=%.2f >= %.2f %s; "
        "decentral avg=%.2f >= %.2f %s",
        inst, kappa, opt, central_avg, central_band,
        central_ok ? "ok" : "FAIL", decentral_avg, decentral_band,
        decentral_ok ? "ok" : "FAIL"));
    if (!central_ok || !decentral_ok) result.pass = false;
  }
  return result;
}

}  // namespace

const std::vector<std::string>& SuiteNames() {
  static const std::vector<std::string> kNames = {
      "lemma1", "prop2", "prop3", "regret", "appendix2", "theorem1-small"};
  return kNames;
}

SuiteResult RunSuite(const std::string& name, uint64_t seed) {
  if (name == "lemma1") return Lemma1Suite(seed);
  if (name == "prop2") return Prop2Suite(seed);
  if (name == "prop3") return Prop3Suite(seed);
  if (name == "regret") return RegretSuite(seed);
  if (name == "appendix2") return Appendix2Suite(seed);
  if (name == "theorem1-small") return Theorem1SmallSuite(seed);
  throw std::invalid_argument("unknown verification suite: " + name);
}

}  // namespace coordnet::verify
