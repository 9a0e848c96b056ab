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
#include <vector>

#include "coordnet/objective.hpp"

namespace coordnet {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

// Area-monitoring world: fixed cameras on a rasterized rectangular map.
// Camera i can point a circular field of view along `directions` evenly
// spaced headings; the FOV center for heading k sits at
// position_i + fov_radius * (cos theta_k, sin theta_k), theta_k = 2*pi*k/directions.
struct CoverageWorld {
  double width = 100.0;
  double height = 100.0;
  double cell_size = 1.0;
  std::vector<Point> camera_positions;
  double fov_radius = 7.0;
  int directions = 8;
};

// Covered area, rasterized: f(S) counts the grid cells whose center (placed
// at (col+0.5, row+0.5)*cell_size) lies within fov_radius of at least one
// selected FOV center, times cell_size^2. FOV disks may overhang the map
// boundary; only in-map cells count. Values are therefore integer multiples
// of cell_size^2, which keeps monotonicity/submodularity checks exact.
//
// Cell membership is precomputed per (camera, heading) as a bitmask, so an
// evaluation is a word-wise OR + popcount. Evaluation is pure and reentrant.
class CoverageObjective final : public SubmodularObjective {
 public:
  explicit CoverageObjective(CoverageWorld world);

  using SubmodularObjective::Evaluate;
  double Evaluate(std::span<const ActionId> actions) const override;
  const std::vector<int>& action_counts() const override { return action_counts_; }

  const CoverageWorld& world() const { return world_; }
  double total_area() const { return world_.width * world_.height; }
  int grid_cols() const { return cols_; }
  int grid_rows() const { return rows_; }

  Point FovCenter(int agent, int choice) const;
  double SingletonValue(int agent, int choice) const;
  // Largest singleton value over the agent's own actions; used as the local
  // reward normalization constant.
  double MaxSingletonValue(int agent) const;

 private:
  const std::vector<uint64_t>& MaskFor(int agent, int choice) const;
  void CheckAction(ActionId a) const;

  CoverageWorld world_;
  int cols_ = 0;
  int rows_ = 0;
  std::size_t words_ = 0;
  std::vector<int> action_counts_;
  std::vector<std::vector<uint64_t>> masks_;  // [agent * directions + choice]
  std::vector<double> singleton_values_;
};

}  // namespace coordnet
