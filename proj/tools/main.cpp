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

// Command-line front end: `run` executes a Monte-Carlo experiment sweep,
// `verify` runs one of the named property suites, `export` converts trace
// files into plot-ready tables.
//
// Exit codes: 0 success, 1 verification failure, 2 usage/config error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "coordnet/harness.hpp"
#include "coordnet/trace_io.hpp"
#include "coordnet/verify.hpp"

namespace {

namespace fs = std::filesystem;
using namespace coordnet;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

// Writes one trace CSV per (variant, trial) as trials finish. Trials run on
// worker threads; the output-list append is the only shared state.
class CsvSweepSink : public SweepSink {
 public:
  explicit CsvSweepSink(fs::path dir) : dir_(std::move(dir)) {}

  void OnTrace(const VariantKey& key, int trial, const SimTrace& trace,
               const CoverageObjective& objective) override {
    char suffix[32];
    std::snprintf(suffix, sizeof(suffix), "_trial%03d.csv", trial);
    std::string name = "trace_" + VariantLabel(key) + suffix;
    WriteTraceCsv((dir_ / name).string(),
                  ToTraceTable(trace, objective.total_area()));
    std::lock_guard<std::mutex> lock(mutex_);
    outputs_.push_back(name);
  }

  std::vector<std::string> TakeOutputs() {
    std::lock_guard<std::mutex> lock(mutex_);
    return std::move(outputs_);
  }

 private:
  fs::path dir_;
  std::mutex mutex_;
  std::vector<std::string> outputs_;
};

int CmdRun(const std::string& config_path, const std::string& out_dir,
           bool seed_given, uint64_t seed_override, int threads) {
  ExperimentConfig config;
  try {
    config = LoadExperimentConfig(config_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  if (seed_given) config.master_seed = seed_override;

  RunManifest manifest;
  manifest.config_hash = ConfigHash(config);
  manifest.master_seed = config.master_seed;
  manifest.started_at = IsoTimestampUtcNow();

  try {
    fs::create_directories(out_dir);
    CsvSweepSink sink(out_dir);
    SweepResult result = RunSweep(config, threads, &sink);

    std::vector<std::string> outputs = sink.TakeOutputs();
    for (const VariantSummary& summary : result.variants) {
      std::string name = "agg_" + VariantLabel(summary.key) + ".csv";
      WriteAggregateCsv((fs::path(out_dir) / name).string(), summary.curve);
      outputs.push_back(name);
    }

    // Human-oriented sweep summary; the per-file data stays in the CSVs.
    std::string summary_name = "summary.json";
    {
      std::string text = "{\n  \"trials\": " + std::to_string(result.trials) +
                         ",\n  \"dfssg_disconnected_trials\": " +
                         std::to_string(result.dfssg_disconnected_trials) +
                         ",\n  \"final_mean_coverage\": {\n";
      for (std::size_t i = 0; i < result.variants.size(); ++i) {
        text += "    \"" + VariantLabel(result.variants[i].key) +
                "\": " + FormatNumber(result.variants[i].mean_final_coverage);
        text += (i + 1 < result.variants.size()) ? ",\n" : "\n";
      }
      text += "  }\n}\n";
      std::ofstream out(fs::path(out_dir) / summary_name,
                        std::ios::binary | std::ios::trunc);
      if (!out) throw std::runtime_error("cannot write summary.json");
      out << text;
    }
    outputs.push_back(summary_name);

    std::sort(outputs.begin(), outputs.end());
    manifest.outputs = std::move(outputs);
    manifest.finished_at = IsoTimestampUtcNow();
    WriteManifest(out_dir, manifest);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  std::cout << "wrote " << manifest.outputs.size() + 1 << " files to "
            << out_dir << " (config " << manifest.config_hash << ", seed "
            << config.master_seed << ")\n";
  return kExitOk;
}

int CmdVerify(const std::string& suite, uint64_t seed) {
  verify::SuiteResult result;
  try {
    result = verify::RunSuite(suite, seed);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    std::cerr << "available suites:";
    for (const std::string& name : verify::SuiteNames()) {
      std::cerr << " " << name;
    }
    std::cerr << "\n";
    return kExitUsage;
  }
  for (const std::string& line : result.lines) {
    std::cout << "  " << line << "\n";
  }
  std::cout << (result.pass ? "[PASS] " : "[FAIL] ") << result.suite << "\n";
  return result.pass ? kExitOk : kExitVerifyFailed;
}

int CmdExport(const std::string& trace_path, const std::string& format,
              const std::string& out_path) {
  TraceTable table;
  try {
    table = ReadTraceCsv(trace_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  std::string text;
  if (format == "csv") {
    text = TraceCsv(table);
  } else if (format == "json") {
    text = TraceJson(table);
  } else {
    std::cerr << "error: unknown export format `" << format
              << "` (expected csv or json)\n";
    return kExitUsage;
  }
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
    if (!out) {
      std::cerr << "error: cannot write file: " << out_path << "\n";
      return kExitUsage;
    }
    out << text;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Self-configuring multi-agent coverage coordination simulator"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir;
  std::string trace_path;
  std::string suite;
  std::string format = "csv";
  std::string export_out;
  uint64_t seed = 1;
  bool seed_given = false;
  int threads = 0;

  CLI::App* run = app.add_subcommand(
      "run", "Execute the experiment sweep described by a config file");
  run->add_option("--config", config_path, "Experiment config (JSON)")
      ->required();
  run->add_option("--out", out_dir, "Output directory")->required();
  run->add_option("--seed", seed, "Master seed override")
      ->each([&seed_given](const std::string&) { seed_given = true; });
  run->add_option("--threads", threads,
                  "Worker threads for trials (0 = all cores)");

  CLI::App* verify_cmd =
      app.add_subcommand("verify", "Run a named property suite");
  verify_cmd->add_option("--suite", suite, "Suite name")->required();
  verify_cmd->add_option("--seed", seed, "Suite seed");

  CLI::App* export_cmd =
      app.add_subcommand("export", "Convert a trace file for plotting");
  export_cmd->add_option("trace", trace_path, "Trace CSV path")->required();
  export_cmd->add_option("--format", format, "Output format: csv or json");
  export_cmd->add_option("--out", export_out,
                         "Output file (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  if (run->parsed()) {
    return CmdRun(config_path, out_dir, seed_given, seed, threads);
  }
  if (verify_cmd->parsed()) {
    return CmdVerify(suite, seed);
  }
  return CmdExport(trace_path, format, export_out);
}
