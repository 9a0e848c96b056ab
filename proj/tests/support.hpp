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

// Test-only oracles and toy objectives. The coverage oracle deliberately
// shares no code with CoverageObjective's bitmask path: it scans every grid
// cell directly, so the two implementations check each other.

#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <span>
#include <vector>

#include "coordnet/coverage.hpp"
#include "coordnet/objective.hpp"
#include "coordnet/rng.hpp"

namespace coordnet::testing {

inline Point OracleFovCenter(const CoverageWorld& world, ActionId a) {
  const Point& p = world.camera_positions[a.agent];
  double theta = 2.0 * std::numbers::pi * a.choice / world.directions;
  return Point{p.x + world.fov_radius * std::cos(theta),
               p.y + world.fov_radius * std::sin(theta)};
}

// Direct rasterization: count cells whose center lies within fov_radius of
// at least one selected FOV center.
inline double OracleCoverage(const CoverageWorld& world,
                             std::span<const ActionId> actions) {
  const double cell = world.cell_size;
  const int cols = static_cast<int>(std::llround(world.width / cell));
  const int rows = static_cast<int>(std::llround(world.height / cell));
  std::vector<Point> centers;
  centers.reserve(actions.size());
  for (const ActionId& a : actions) centers.push_back(OracleFovCenter(world, a));
  const double r2 = world.fov_radius * world.fov_radius;
  long long covered = 0;
  for (int row = 0; row < rows; ++row) {
    for (int col = 0; col < cols; ++col) {
      double cx = (col + 0.5) * cell;
      double cy = (row + 0.5) * cell;
      for (const Point& c : centers) {
        double dx = cx - c.x;
        double dy = cy - c.y;
        if (dx * dx + dy * dy <= r2) {
          ++covered;
          break;
        }
      }
    }
  }
  return static_cast<double>(covered) * cell * cell;
}

inline double OracleMarginal(const CoverageWorld& world, ActionId a,
                             std::span<const ActionId> context) {
  std::vector<ActionId> with(context.begin(), context.end());
  with.push_back(a);
  return OracleCoverage(world, with) - OracleCoverage(world, context);
}

inline double OracleOverlap(const CoverageWorld& world, ActionId a,
                            std::span<const ActionId> neighbors) {
  return OracleCoverage(world, {&a, 1}) - OracleMarginal(world, a, neighbors);
}

// Weighted modular set function: f(S) = sum of per-element weights over the
// distinct elements of S.
class ModularObjective final : public SubmodularObjective {
 public:
  ModularObjective(std::vector<int> action_counts,
                   std::vector<std::vector<double>> weights)
      : action_counts_(std::move(action_counts)), weights_(std::move(weights)) {}

  using SubmodularObjective::Evaluate;
  double Evaluate(std::span<const ActionId> actions) const override {
    std::set<std::pair<int, int>> distinct;
    for (const ActionId& a : actions) distinct.insert({a.agent, a.choice});
    double total = 0.0;
    for (const auto& [agent, choice] : distinct) {
      total += weights_[agent][choice];
    }
    return total;
  }
  const std::vector<int>& action_counts() const override {
    return action_counts_;
  }

 private:
  std::vector<int> action_counts_;
  std::vector<std::vector<double>> weights_;
};

// Deliberately non-submodular: f(S) = 1 once S holds at least two elements.
// The second element has a larger gain than the first, violating both plain
// and 2nd-order diminishing returns.
class ThresholdObjective final : public SubmodularObjective {
 public:
  explicit ThresholdObjective(int elements) : action_counts_(elements, 1) {}

  using SubmodularObjective::Evaluate;
  double Evaluate(std::span<const ActionId> actions) const override {
    std::set<std::pair<int, int>> distinct;
    for (const ActionId& a : actions) distinct.insert({a.agent, a.choice});
    return distinct.size() >= 2 ? 1.0 : 0.0;
  }
  const std::vector<int>& action_counts() const override {
    return action_counts_;
  }

 private:
  std::vector<int> action_counts_;
};

// Uniform-random inset world; margin keeps whole FOV spans on the map.
inline CoverageWorld MakeRandomWorld(Rng& rng, int cameras, double side,
                                     int directions, double margin = 0.0) {
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

}  // namespace coordnet::testing
