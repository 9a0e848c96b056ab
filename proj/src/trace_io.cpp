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

#include "coordnet/trace_io.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace coordnet {
namespace {

using nlohmann::json;

constexpr const char* kTraceHeader =
    "t,sim_seconds,f_value,coverage_fraction,comm_messages,max_evals";
constexpr const char* kAggregateHeader = "time_s,mean_coverage,std_coverage";

std::string ReadFileOrThrow(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open file: " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void WriteFileOrThrow(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw std::runtime_error("cannot write file: " + path);
  }
  out << content;
  if (!out) {
    throw std::runtime_error("write failed: " + path);
  }
}

std::vector<std::string> SplitCsvLine(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, ',')) fields.push_back(field);
  return fields;
}

// Pull one typed value out of a JSON object, with field-level messages.
const json* FindKey(const json& obj, const std::string& key) {
  auto it = obj.find(key);
  return it == obj.end() ? nullptr : &*it;
}

double NumberField(const json& obj, const std::string& key, double fallback) {
  const json* v = FindKey(obj, key);
  if (v == nullptr) return fallback;
  if (!v->is_number()) {
    throw std::invalid_argument("config: field `" + key + "` must be a number");
  }
  return v->get<double>();
}

long long IntegerField(const json& obj, const std::string& key,
                       long long fallback) {
  const json* v = FindKey(obj, key);
  if (v == nullptr) return fallback;
  if (!v->is_number_integer()) {
    throw std::invalid_argument("config: field `" + key +
                                "` must be an integer");
  }
  return v->get<long long>();
}

void RejectUnknownKeys(const json& obj,
                       const std::vector<std::string>& known,
                       const std::string& scope) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (std::find(known.begin(), known.end(), it.key()) == known.end()) {
      throw std::invalid_argument("config: unknown key `" + scope + it.key() +
                                  "`");
    }
  }
}

}  // namespace

std::string FormatNumber(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", value);
  return buf;
}

TraceTable ToTraceTable(const SimTrace& trace, double total_area) {
  TraceTable table;
  table.rows.reserve(trace.snapshots.size());
  for (const RoundSnapshot& snap : trace.snapshots) {
    TraceRow row;
    row.t = snap.t;
    row.sim_seconds = snap.sim_seconds;
    row.f_value = snap.f_value;
    row.coverage_fraction = snap.f_value / total_area;
    row.comm_messages = snap.comm_messages;
    row.max_evals = snap.max_evals;
    table.rows.push_back(row);
  }
  return table;
}

std::string TraceCsv(const TraceTable& table) {
  std::string out(kTraceHeader);
  out += '\n';
  for (const TraceRow& row : table.rows) {
    out += std::to_string(row.t);
    out += ',';
    out += FormatNumber(row.sim_seconds);
    out += ',';
    out += FormatNumber(row.f_value);
    out += ',';
    out += FormatNumber(row.coverage_fraction);
    out += ',';
    out += std::to_string(row.comm_messages);
    out += ',';
    out += std::to_string(row.max_evals);
    out += '\n';
  }
  return out;
}

void WriteTraceCsv(const std::string& path, const TraceTable& table) {
  WriteFileOrThrow(path, TraceCsv(table));
}

TraceTable ReadTraceCsv(const std::string& path) {
  std::string content = ReadFileOrThrow(path);
  std::istringstream in(content);
  std::string line;
  if (!std::getline(in, line) || line != kTraceHeader) {
    throw std::runtime_error("not a trace file (bad header): " + path);
  }
  TraceTable table;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> fields = SplitCsvLine(line);
    if (fields.size() != 6) {
      throw std::runtime_error("malformed trace row in " + path + ": " + line);
    }
    try {
      TraceRow row;
      row.t = std::stoll(fields[0]);
      row.sim_seconds = std::stod(fields[1]);
      row.f_value = std::stod(fields[2]);
      row.coverage_fraction = std::stod(fields[3]);
      row.comm_messages = std::stoll(fields[4]);
      row.max_evals = std::stoll(fields[5]);
      table.rows.push_back(row);
    } catch (const std::exception&) {
      throw std::runtime_error("malformed trace row in " + path + ": " + line);
    }
  }
  return table;
}

std::string TraceJson(const TraceTable& table) {
  json rows = json::array();
  for (const TraceRow& row : table.rows) {
    rows.push_back(json{{"t", row.t},
                        {"sim_seconds", row.sim_seconds},
                        {"f_value", row.f_value},
                        {"coverage_fraction", row.coverage_fraction},
                        {"comm_messages", row.comm_messages},
                        {"max_evals", row.max_evals}});
  }
  return rows.dump(2) + "\n";
}

std::string AggregateCsv(const AggregateCurve& curve) {
  std::string out(kAggregateHeader);
  out += '\n';
  for (std::size_t i = 0; i < curve.time_grid.size(); ++i) {
    out += FormatNumber(curve.time_grid[i]);
    out += ',';
    out += FormatNumber(curve.mean_coverage[i]);
    out += ',';
    out += FormatNumber(curve.std_coverage[i]);
    out += '\n';
  }
  return out;
}

void WriteAggregateCsv(const std::string& path, const AggregateCurve& curve) {
  WriteFileOrThrow(path, AggregateCsv(curve));
}

ExperimentConfig ParseExperimentConfigText(const std::string& json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("config: invalid JSON: ") +
                                e.what());
  }
  if (!root.is_object()) {
    throw std::invalid_argument("config: top level must be an object");
  }
  RejectUnknownKeys(root,
                    {"map", "agent_count", "fov_radius", "directions",
                     "range_low", "range_high", "trials", "horizon",
                     "time_budget_s", "nmax_sweep", "tau_pairs", "master_seed"},
                    "");

  ExperimentConfig config;
  if (const json* map = FindKey(root, "map")) {
    if (!map->is_object()) {
      throw std::invalid_argument("config: field `map` must be an object");
    }
    RejectUnknownKeys(*map, {"width", "height", "cell_size"}, "map.");
    config.map_width = NumberField(*map, "width", config.map_width);
    config.map_height = NumberField(*map, "height", config.map_height);
    config.cell_size = NumberField(*map, "cell_size", config.cell_size);
  }
  config.agent_count = static_cast<int>(
      IntegerField(root, "agent_count", config.agent_count));
  config.fov_radius = NumberField(root, "fov_radius", config.fov_radius);
  config.directions =
      static_cast<int>(IntegerField(root, "directions", config.directions));
  config.range_low = NumberField(root, "range_low", config.range_low);
  config.range_high = NumberField(root, "range_high", config.range_high);
  config.trials = static_cast<int>(IntegerField(root, "trials", config.trials));
  config.horizon = static_cast<int>(IntegerField(root, "horizon", config.horizon));
  config.time_budget_s =
      NumberField(root, "time_budget_s", config.time_budget_s);

  if (const json* sweep = FindKey(root, "nmax_sweep")) {
    if (!sweep->is_array()) {
      throw std::invalid_argument("config: field `nmax_sweep` must be an array");
    }
    config.nmax_sweep.clear();
    for (const json& item : *sweep) {
      if (!item.is_number_integer()) {
        throw std::invalid_argument(
            "config: field `nmax_sweep` must contain integers");
      }
      config.nmax_sweep.push_back(item.get<int>());
    }
  }
  if (const json* taus = FindKey(root, "tau_pairs")) {
    if (!taus->is_array()) {
      throw std::invalid_argument("config: field `tau_pairs` must be an array");
    }
    config.tau_pairs.clear();
    for (const json& item : *taus) {
      if (!item.is_array() || item.size() != 2 || !item[0].is_number() ||
          !item[1].is_number()) {
        throw std::invalid_argument(
            "config: field `tau_pairs` must contain [tau_f, tau_c] pairs");
      }
      config.tau_pairs.push_back(
          TauPair{item[0].get<double>(), item[1].get<double>()});
    }
  }
  if (const json* seed = FindKey(root, "master_seed")) {
    if (!seed->is_number_unsigned() && !seed->is_number_integer()) {
      throw std::invalid_argument(
          "config: field `master_seed` must be an integer");
    }
    config.master_seed = seed->get<uint64_t>();
  }

  ValidateExperimentConfig(config);
  return config;
}

ExperimentConfig LoadExperimentConfig(const std::string& path) {
  return ParseExperimentConfigText(ReadFileOrThrow(path));
}

std::string ExperimentConfigJson(const ExperimentConfig& config) {
  json taus = json::array();
  for (const TauPair& t : config.tau_pairs) {
    taus.push_back(json::array({t.tau_f, t.tau_c}));
  }
  json root{
      {"map",
       {{"width", config.map_width},
        {"height", config.map_height},
        {"cell_size", config.cell_size}}},
      {"agent_count", config.agent_count},
      {"fov_radius", config.fov_radius},
      {"directions", config.directions},
      {"range_low", config.range_low},
      {"range_high", config.range_high},
      {"trials", config.trials},
      {"horizon", config.horizon},
      {"time_budget_s", config.time_budget_s},
      {"nmax_sweep", config.nmax_sweep},
      {"tau_pairs", taus},
      {"master_seed", config.master_seed},
  };
  return root.dump(2) + "\n";
}

std::string ConfigHash(const ExperimentConfig& config) {
  // nlohmann::json orders object keys, so dump() is canonical.
  std::string canonical = ExperimentConfigJson(config);
  uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : canonical) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  char buf[24];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(hash));
  return buf;
}

std::string IsoTimestampUtcNow() {
  auto now = std::chrono::system_clock::now();
  std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void WriteManifest(const std::string& dir, const RunManifest& manifest) {
  json root{
      {"config_hash", manifest.config_hash},
      {"master_seed", manifest.master_seed},
      {"version", manifest.version},
      {"started_at", manifest.started_at},
      {"finished_at", manifest.finished_at},
      {"outputs", manifest.outputs},
  };
  namespace fs = std::filesystem;
  fs::path target = fs::path(dir) / "manifest.json";
  fs::path temp = fs::path(dir) / ".manifest.json.tmp";
  WriteFileOrThrow(temp.string(), root.dump(2) + "\n");
  fs::rename(temp, target);
}

}  // namespace coordnet
