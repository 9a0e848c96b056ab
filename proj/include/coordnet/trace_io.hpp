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

#include "coordnet/harness.hpp"
#include "coordnet/trace.hpp"

namespace coordnet {

inline constexpr const char* kVersionString = "coordnet 0.1.0";

// Canonical number formatting for all CSV output: 9 significant digits, so
// re-runs can be compared by checksum.
std::string FormatNumber(double value);

// Columnar trace schema, one row per round/commitment:
//   t, sim_seconds, f_value, coverage_fraction, comm_messages, max_evals
struct TraceRow {
  long long t = 0;
  double sim_seconds = 0.0;
  double f_value = 0.0;
  double coverage_fraction = 0.0;
  long long comm_messages = 0;
  long long max_evals = 0;
};

struct TraceTable {
  std::vector<TraceRow> rows;
};

TraceTable ToTraceTable(const SimTrace& trace, double total_area);

std::string TraceCsv(const TraceTable& table);
void WriteTraceCsv(const std::string& path, const TraceTable& table);
// Throws std::runtime_error on missing files or malformed content.
TraceTable ReadTraceCsv(const std::string& path);

std::string TraceJson(const TraceTable& table);

// Aggregate schema: time_s, mean_coverage, std_coverage.
std::string AggregateCsv(const AggregateCurve& curve);
void WriteAggregateCsv(const std::string& path, const AggregateCurve& curve);

// Experiment config file handling (JSON). Unknown keys are errors; all type
// and range violations name the offending field. Throws std::runtime_error
// for unreadable files and std::invalid_argument for schema violations.
ExperimentConfig ParseExperimentConfigText(const std::string& json_text);
ExperimentConfig LoadExperimentConfig(const std::string& path);
std::string ExperimentConfigJson(const ExperimentConfig& config);

// Stable 64-bit FNV-1a hash of the canonical config serialization, as hex.
std::string ConfigHash(const ExperimentConfig& config);

struct RunManifest {
  std::string config_hash;
  uint64_t master_seed = 0;
  std::string version = kVersionString;
  std::string started_at;   // ISO-8601 UTC
  std::string finished_at;  // ISO-8601 UTC
  std::vector<std::string> outputs;  // sorted relative paths
};

std::string IsoTimestampUtcNow();

// Written atomically: temp file in the target directory, then rename.
void WriteManifest(const std::string& dir, const RunManifest& manifest);

}  // namespace coordnet
