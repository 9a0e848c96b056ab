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
#include <string>
#include <vector>

namespace coordnet::verify {

struct SuiteResult {
  std::string suite;
  bool pass = false;
  std::vector<std::string> lines;  // human-readable measurements/margins
};

// Named property suites, runnable from the CLI and reused by the acceptance
// tests:
//   lemma1         randomized monotonicity/submodularity audit of the
//                  agent-neighborhood overlap measure
//   prop2          exact per-round objective-evaluation counting
//   prop3          one exchange per round, single-action payloads
//   regret         realized full-information regret under the analytic bound
//   appendix2      sequential-baseline communication-time closed forms
//   theorem1-small near-optimality bands on exhaustively solvable instances
//
// Throws std::invalid_argument for unknown suite names.
SuiteResult RunSuite(const std::string& name, uint64_t seed);

const std::vector<std::string>& SuiteNames();

}  // namespace coordnet::verify
