/*
Copyright 2026 The mcsp-dd Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    https://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#ifndef MCSP_BENCH_H_
#define MCSP_BENCH_H_

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

namespace mcsp {

struct BenchConfig {
  std::vector<std::filesystem::path> paths;  // files or directories
  std::vector<std::optional<int>> widths;    // nullopt runs the exact diagram
  int repetitions = 1;
  std::optional<double> time_limit_seconds;
  int jobs = 1;
};

struct BenchRow {
  std::string instance;
  int n = 0;
  int sigma = 0;
  std::string distribution;  // "linear", "skewed" or "unknown"
  std::optional<int> width;
  int repetition = 0;
  std::optional<int> value;  // absent when the time limit expired
  double elapsed_ms = 0.0;
  int blocks = 0;
  int max_layer_width = 0;
  bool validated = false;
};

// Mean value over the rows of one (distribution, sigma, n, width) group.
struct BenchGroup {
  std::string distribution;
  int sigma = 0;
  int n = 0;
  std::optional<int> width;
  int solved = 0;
  double mean_value = 0.0;
};

struct BenchReport {
  std::vector<BenchRow> rows;
  std::vector<BenchGroup> summary;
  std::vector<std::string> errors;  // instances skipped on parse errors
};

inline constexpr std::string_view kBenchCsvHeader =
    "instance,n,sigma,width,value,elapsed_ms,blocks,max_layer";

// Distribution named by a "linear" or "skewed" path component, if any.
std::string infer_distribution(const std::filesystem::path& path);

// Runs every (instance, width, repetition) in instance order, revalidating
// each partition. Rows come out in the same order for any `jobs`.
//
// Throws std::invalid_argument for an invalid config or when no instance
// file is found, std::logic_error if a returned partition fails validation.
BenchReport run_suite(const BenchConfig& config);

std::vector<BenchGroup> summarize(std::span<const BenchRow> rows);

std::string bench_to_csv(const BenchReport& report);

// {"metadata": {...}, "rows": [...], "summary": [...], "errors": [...]}
nlohmann::json bench_to_json(const BenchReport& report);

}  // namespace mcsp

#endif  // MCSP_BENCH_H_
