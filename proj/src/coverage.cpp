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

#include "coordnet/coverage.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace coordnet {
namespace {

int GridExtent(double length, double cell_size, const char* label) {
  double cells = length / cell_size;
  int n = static_cast<int>(std::llround(cells));
  if (n < 1 || std::abs(cells - n) > 1e-9) {
    throw std::invalid_argument(std::string("CoverageWorld: ") + label +
                                " must be a positive integer multiple of cell_size");
  }
  return n;
}

}  // namespace

CoverageObjective::CoverageObjective(CoverageWorld world)
    : world_(std::move(world)) {
  if (world_.cell_size <= 0.0) {
    throw std::invalid_argument("CoverageWorld: cell_size must be > 0");
  }
  if (world_.directions < 1) {
    throw std::invalid_argument("CoverageWorld: directions must be >= 1");
  }
  if (world_.fov_radius <= 0.0) {
    throw std::invalid_argument("CoverageWorld: fov_radius must be > 0");
  }
  cols_ = GridExtent(world_.width, world_.cell_size, "width");
  rows_ = GridExtent(world_.height, world_.cell_size, "height");
  words_ = (static_cast<std::size_t>(cols_) * rows_ + 63) / 64;

  const int n = static_cast<int>(world_.camera_positions.size());
  for (int i = 0; i < n; ++i) {
    const Point& p = world_.camera_positions[i];
    if (p.x < 0.0 || p.x > world_.width || p.y < 0.0 || p.y > world_.height) {
      throw std::invalid_argument("CoverageWorld: camera " + std::to_string(i) +
                                  " lies outside the map");
    }
  }

  action_counts_.assign(n, world_.directions);
  masks_.resize(static_cast<std::size_t>(n) * world_.directions);
  singleton_values_.resize(masks_.size());

  const double r = world_.fov_radius;
  const double r2 = r * r;
  const double cell = world_.cell_size;
  for (int agent = 0; agent < n; ++agent) {
    for (int choice = 0; choice < world_.directions; ++choice) {
      Point c = FovCenter(agent, choice);
      std::vector<uint64_t>& mask = masks_[agent * world_.directions + choice];
      mask.assign(words_, 0);
      int col_lo = std::max(0, static_cast<int>(std::floor((c.x - r) / cell)));
      int col_hi = std::min(cols_ - 1, static_cast<int>(std::ceil((c.x + r) / cell)));
      int row_lo = std::max(0, static_cast<int>(std::floor((c.y - r) / cell)));
      int row_hi = std::min(rows_ - 1, static_cast<int>(std::ceil((c.y + r) / cell)));
      long long count = 0;
      for (int row = row_lo; row <= row_hi; ++row) {
        double dy = (row + 0.5) * cell - c.y;
        for (int col = col_lo; col <= col_hi; ++col) {
          double dx = (col + 0.5) * cell - c.x;
          if (dx * dx + dy * dy <= r2) {
            std::size_t idx = static_cast<std::size_t>(row) * cols_ + col;
            mask[idx >> 6] |= uint64_t{1} << (idx & 63);
            ++count;
          }
        }
      }
      singleton_values_[agent * world_.directions + choice] =
          static_cast<double>(count) * cell * cell;
    }
  }
}

Point CoverageObjective::FovCenter(int agent, int choice) const {
  const Point& p = world_.camera_positions[agent];
  double theta = 2.0 * std::numbers::pi * choice / world_.directions;
  return Point{p.x + world_.fov_radius * std::cos(theta),
               p.y + world_.fov_radius * std::sin(theta)};
}

void CoverageObjective::CheckAction(ActionId a) const {
  if (a.agent < 0 || a.agent >= agent_count()) {
    throw std::out_of_range("CoverageObjective: no such agent " + ToString(a));
  }
  if (a.choice < 0 || a.choice >= world_.directions) {
    throw std::out_of_range("CoverageObjective: heading out of range " +
                            ToString(a));
  }
}

const std::vector<uint64_t>& CoverageObjective::MaskFor(int agent,
                                                        int choice) const {
  return masks_[static_cast<std::size_t>(agent) * world_.directions + choice];
}

double CoverageObjective::SingletonValue(int agent, int choice) const {
  CheckAction(ActionId{agent, choice});
  return singleton_values_[static_cast<std::size_t>(agent) * world_.directions +
                           choice];
}

double CoverageObjective::MaxSingletonValue(int agent) const {
  double best = 0.0;
  for (int choice = 0; choice < world_.directions; ++choice) {
    best = std::max(best, SingletonValue(agent, choice));
  }
  return best;
}

double CoverageObjective::Evaluate(std::span<const ActionId> actions) const {
  if (actions.empty()) return 0.0;
  if (actions.size() == 1) {
    CheckAction(actions[0]);
    return singleton_values_[static_cast<std::size_t>(actions[0].agent) *
                                 world_.directions +
                             actions[0].choice];
  }
  thread_local std::vector<uint64_t> scratch;
  scratch.assign(words_, 0);
  for (const ActionId& a : actions) {
    CheckAction(a);
    const std::vector<uint64_t>& mask = MaskFor(a.agent, a.choice);
    for (std::size_t w = 0; w < words_; ++w) scratch[w] |= mask[w];
  }
  long long count = 0;
  for (std::size_t w = 0; w < words_; ++w) count += std::popcount(scratch[w]);
  return static_cast<double>(count) * world_.cell_size * world_.cell_size;
}

}  // namespace coordnet
