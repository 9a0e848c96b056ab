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
#include <stdexcept>
#include <vector>

#include "coordnet/dfssg.hpp"
#include "coordnet/time_model.hpp"
#include "support.hpp"

using namespace coordnet;
using coordnet::testing::MakeRandomWorld;

namespace {

CoverageWorld PathWorld(int n, double spacing, int directions) {
  CoverageWorld world;
  world.width = 100.0;
  world.height = 40.0;
  world.directions = directions;
  for (int i = 0; i < n; ++i) {
    world.camera_positions.push_back(Point{15.0 + spacing * i, 20.0});
  }
  return world;
}

// Plain sequential greedy over a fixed order, no time model: the value
// baseline RunDfsSg must match exactly.
double GreedyOracle(const SubmodularObjective& f, std::span<const int> order) {
  JointActionSet committed;
  for (int agent : order) {
    int best_arm = 0;
    double best = -1.0;
    for (int arm = 0; arm < f.action_counts()[agent]; ++arm) {
      JointActionSet with = committed;
      with.Insert(ActionId{agent, arm});
      double v = f.Evaluate(with);
      if (v > best) {
        best = v;
        best_arm = arm;
      }
    }
    committed.Insert(ActionId{agent, best_arm});
  }
  return f.Evaluate(committed);
}

double BruteForceOpt(const SubmodularObjective& f) {
  std::vector<int> choice(f.agent_count(), 0);
  double best = 0.0;
  while (true) {
    std::vector<ActionId> joint;
    for (int i = 0; i < f.agent_count(); ++i) {
      joint.push_back(ActionId{i, choice[i]});
    }
    best = std::max(best, f.Evaluate(joint));
    int pos = 0;
    while (pos < f.agent_count() && ++choice[pos] == f.action_counts()[pos]) {
      choice[pos] = 0;
      ++pos;
    }
    if (pos == f.agent_count()) break;
  }
  return best;
}

}  // namespace

TEST_SUITE("comm graph") {
  TEST_CASE("asymmetric ranges make one-way edges") {
    std::vector<Point> positions{Point{0.0, 0.0}, Point{10.0, 0.0}};
    std::vector<double> ranges{15.0, 5.0};
    DirectedCommGraph graph = BuildGraph(positions, ranges);
    CHECK(graph.in_neighbors[0] == std::vector<int>{1});
    CHECK(graph.in_neighbors[1].empty());
    CHECK(graph.HasEdge(1, 0));
    CHECK(!graph.HasEdge(0, 1));
  }

  TEST_CASE("coincident agents form a complete digraph") {
    std::vector<Point> positions(4, Point{5.0, 5.0});
    std::vector<double> ranges(4, 1.0);
    DirectedCommGraph graph = BuildGraph(positions, ranges);
    for (int i = 0; i < 4; ++i) {
      CHECK(graph.in_neighbors[i].size() == 3);
    }
  }

  TEST_CASE("sampled graph matches a pairwise-distance recheck") {
    Rng rng(71);
    std::vector<Point> positions;
    std::vector<double> ranges;
    for (int i = 0; i < 60; ++i) {
      positions.push_back(Point{rng.NextUniform(0, 100), rng.NextUniform(0, 100)});
      ranges.push_back(rng.NextUniform(15, 20));
    }
    DirectedCommGraph graph = BuildGraph(positions, ranges);
    for (int i = 0; i < 60; ++i) {
      for (int j = 0; j < 60; ++j) {
        if (i == j) continue;
        bool expected = std::hypot(positions[j].x - positions[i].x,
                                   positions[j].y - positions[i].y) <= ranges[i];
        CHECK(graph.HasEdge(j, i) == expected);
      }
    }
  }

  TEST_CASE("length mismatch is rejected") {
    std::vector<Point> positions{Point{0, 0}};
    std::vector<double> ranges{1.0, 2.0};
    CHECK_THROWS_AS(BuildGraph(positions, ranges), std::invalid_argument);
  }
}

TEST_SUITE("sequential baseline") {
  TEST_CASE("single agent commits its best singleton") {
    CoverageWorld world = PathWorld(1, 10.0, 8);
    CoverageObjective objective(world);
    DirectedCommGraph graph =
        BuildGraph(world.camera_positions, std::vector<double>{5.0});
    TimeModel clock(0.25, 0.5);
    SimTrace trace = RunDfsSg(graph, objective, clock);
    REQUIRE(trace.snapshots.size() == 1);
    CHECK(trace.snapshots[0].f_value == objective.MaxSingletonValue(0));
    CHECK(clock.elapsed() == 0.25 * 8);
  }

  TEST_CASE("three-agent path: growing message over unit hops") {
    CoverageWorld world = PathWorld(3, 10.0, 8);
    CoverageObjective objective(world);
    DirectedCommGraph graph = BuildGraph(world.camera_positions,
                                         std::vector<double>(3, 10.5));
    TimeModel clock(0.25, 0.5);
    SimTrace trace = RunDfsSg(graph, objective, clock);
    REQUIRE(trace.snapshots.size() == 3);
    // commits at tau_f*8, tau_f*16 + tau_c, tau_f*24 + 3*tau_c
    CHECK(trace.snapshots[0].sim_seconds == 0.25 * 8);
    CHECK(trace.snapshots[1].sim_seconds == 0.25 * 16 + 0.5);
    CHECK(trace.snapshots[2].sim_seconds == 0.25 * 24 + 3 * 0.5);
    CHECK(clock.elapsed() == 0.25 * 24 + 3 * 0.5);
    CHECK(trace.component_count == 1);
  }

  TEST_CASE("final value equals the plain greedy oracle") {
    Rng rng(72);
    for (int trial = 0; trial < 5; ++trial) {
      CoverageWorld world = MakeRandomWorld(rng, 6, 60.0, 8);
      CoverageObjective objective(world);
      std::vector<double> ranges(6, 100.0);  // complete graph
      DirectedCommGraph graph = BuildGraph(world.camera_positions, ranges);
      TimeModel clock(0.25, 0.5);
      SimTrace trace = RunDfsSg(graph, objective, clock);
      DfsPlan plan = BuildDfsPlan(graph);
      CHECK(trace.snapshots.back().f_value ==
            GreedyOracle(objective, plan.order));
    }
  }

  TEST_CASE("at least half the optimum on exhaustively solvable instances") {
    Rng rng(73);
    for (int trial = 0; trial < 5; ++trial) {
      CoverageWorld world = MakeRandomWorld(rng, 4, 40.0, 4);
      CoverageObjective objective(world);
      std::vector<double> ranges(4, 100.0);
      DirectedCommGraph graph = BuildGraph(world.camera_positions, ranges);
      TimeModel clock(0.25, 0.5);
      SimTrace trace = RunDfsSg(graph, objective, clock);
      CHECK(trace.snapshots.back().f_value >= 0.5 * BruteForceOpt(objective));
    }
  }

  TEST_CASE("disconnected components run side by side") {
    CoverageWorld world;
    world.width = 100.0;
    world.height = 100.0;
    world.camera_positions = {Point{10.0, 10.0}, Point{20.0, 10.0},
                              Point{80.0, 80.0}, Point{90.0, 80.0}};
    CoverageObjective objective(world);
    std::vector<double> ranges(4, 12.0);
    DirectedCommGraph graph = BuildGraph(world.camera_positions, ranges);
    TimeModel clock(0.25, 0.5);
    SimTrace trace = RunDfsSg(graph, objective, clock);
    CHECK(trace.component_count == 2);
    REQUIRE(trace.snapshots.size() == 4);
    // Both component roots finish their evaluations at the same instant.
    CHECK(trace.snapshots[0].sim_seconds == 0.25 * 8);
    CHECK(trace.snapshots[1].sim_seconds == 0.25 * 8);
    // The clock ends at the slower component, not the sum of both.
    CHECK(clock.elapsed() == 0.25 * 16 + 0.5);
    // All four agents committed something.
    CHECK(trace.snapshots.back().actions.Size() == 4);
  }

  TEST_CASE("spanning-walk closed form") {
    CHECK(WorstCaseTime(4, 1.0) == 6.0);
    CHECK(WorstCaseTime(1, 1.0) == 0.0);
    CHECK(WorstCaseTime(60, 1.0) == 1770.0);
    CHECK(WorstCaseTime(60, 0.05) == doctest::Approx(88.5).epsilon(1e-12));
    CHECK_THROWS_AS(WorstCaseTime(0, 1.0), std::invalid_argument);
  }
}

TEST_SUITE("time model") {
  TEST_CASE("coordination round charges the slowest agent plus one exchange") {
    TimeModel tm(0.01, 0.05);
    std::vector<long long> evals{15, 15, 15};
    tm.ChargeCoordinationRound(evals, 1);
    CHECK(tm.elapsed() == doctest::Approx(0.20).epsilon(1e-12));

    TimeModel tm2(0.25, 0.5);
    tm2.ChargeCoordinationRound(std::vector<long long>{15, 9, 11}, 1);
    CHECK(tm2.elapsed() == 0.25 * 15 + 0.5);

    TimeModel tm3(0.25, 0.5);  // alpha = 0, single action: 2 evaluations
    tm3.ChargeCoordinationRound(std::vector<long long>{2}, 1);
    CHECK(tm3.elapsed() == 0.25 * 2 + 0.5);
  }

  TEST_CASE("sequential step charges evals plus message transmissions") {
    TimeModel tm(0.25, 0.5);
    tm.ChargeSequentialStep(8, 0, 0);
    CHECK(tm.elapsed() == 2.0);
    tm.ChargeSequentialStep(0, 3, 2);
    CHECK(tm.elapsed() == 2.0 + 0.5 * 6);
  }

  TEST_CASE("charges are additive and order-independent") {
    TimeModel a(0.25, 0.5);
    TimeModel b(0.25, 0.5);
    a.ChargeSequentialStep(8, 0, 0);
    a.ChargeSequentialStep(0, 2, 3);
    a.ChargeCoordinationRound(std::vector<long long>{5}, 1);
    b.ChargeCoordinationRound(std::vector<long long>{5}, 1);
    b.ChargeSequentialStep(0, 2, 3);
    b.ChargeSequentialStep(8, 0, 0);
    CHECK(a.elapsed() == b.elapsed());
  }

  TEST_CASE("validation") {
    CHECK_THROWS_AS(TimeModel(0.0, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(TimeModel(0.5, -1.0), std::invalid_argument);
    TimeModel tm(0.25, 0.5);
    CHECK_THROWS_AS(tm.ChargeSequentialStep(-1, 0, 0), std::invalid_argument);
    std::vector<long long> bad{-2};
    CHECK_THROWS_AS(tm.ChargeCoordinationRound(bad, 1), std::invalid_argument);
  }

  TEST_CASE("advance only moves forward") {
    TimeModel tm(0.25, 0.5);
    tm.ChargeSequentialStep(4, 0, 0);
    double t = tm.elapsed();
    tm.AdvanceTo(t - 0.5);
    CHECK(tm.elapsed() == t);
    tm.AdvanceTo(t + 1.0);
    CHECK(tm.elapsed() == t + 1.0);
  }
}
