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
#include <compare>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace coordnet {

// One ground-set element: agent `agent` playing its `choice`-th action.
struct ActionId {
  int agent = 0;
  int choice = 0;

  friend auto operator<=>(const ActionId&, const ActionId&) = default;
};

inline std::string ToString(const ActionId& a) {
  return "(agent " + std::to_string(a.agent) + ", choice " +
         std::to_string(a.choice) + ")";
}

// A set of actions holding at most one action per agent, kept sorted by
// agent index. May be empty.
class JointActionSet {
 public:
  JointActionSet() = default;

  explicit JointActionSet(std::span<const ActionId> actions) {
    items_.reserve(actions.size());
    for (const ActionId& a : actions) Insert(a);
  }

  // Throws std::invalid_argument if the agent already holds an action.
  void Insert(ActionId a) {
    auto it = LowerBound(a.agent);
    if (it != items_.end() && it->agent == a.agent) {
      throw std::invalid_argument("JointActionSet: agent " +
                                  std::to_string(a.agent) +
                                  " already holds an action");
    }
    items_.insert(it, a);
  }

  bool ContainsAgent(int agent) const {
    auto it = LowerBound(agent);
    return it != items_.end() && it->agent == agent;
  }

  // Returns nullptr when the agent is absent.
  const ActionId* FindAgent(int agent) const {
    auto it = LowerBound(agent);
    return (it != items_.end() && it->agent == agent) ? &*it : nullptr;
  }

  bool Empty() const { return items_.empty(); }
  int Size() const { return static_cast<int>(items_.size()); }
  std::span<const ActionId> Items() const { return items_; }

  friend bool operator==(const JointActionSet&, const JointActionSet&) = default;

 private:
  std::vector<ActionId>::const_iterator LowerBound(int agent) const {
    return std::lower_bound(
        items_.begin(), items_.end(), agent,
        [](const ActionId& x, int key) { return x.agent < key; });
  }
  std::vector<ActionId>::iterator LowerBound(int agent) {
    return std::lower_bound(
        items_.begin(), items_.end(), agent,
        [](const ActionId& x, int key) { return x.agent < key; });
  }

  std::vector<ActionId> items_;  // sorted by agent, unique agents
};

}  // namespace coordnet
