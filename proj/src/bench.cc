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

#include "mcsp/bench.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "mcsp/dd_solver.h"
#include "mcsp/generator.h"
#include "mcsp/instance.h"
#include "mcsp/partition.h"

namespace mcsp {
namespace {

struct InstanceOutcome {
  std::vector<BenchRow> rows;
  std::optional<std::string> error;
};

InstanceOutcome run_instance(const std::filesystem::path& path,
                             const BenchConfig& config) {
  InstanceOutcome outcome;
  std::optional<Instance> instance;
  try {
    instance.emplace(load_instance_file(path));
  } catch (const InputError& e) {
    outcome.error = e.what();
    return outcome;
  }
  const BlockSet blocks = enumerate_blocks(*instance);
  for (const auto& width : config.widths) {
    for (int rep = 0; rep < config.repetitions; ++rep) {
      BenchRow row;
      row.instance = path.string();
      row.n = instance->n();
      row.sigma = static_cast<int>(instance->alphabet().size());
      row.distribution = infer_distribution(path);
      row.width = width;
      row.repetition = rep;
      row.blocks = static_cast<int>(blocks.size());

      SolveConfig solve_config;
      solve_config.width = width;
      if (config.time_limit_seconds) {
        solve_config.time_limit =
            std::chrono::duration<double>(*config.time_limit_seconds);
      }
      const auto start = std::chrono::steady_clock::now();
      try {
        const SolveResult result = build_dd(*instance, blocks, solve_config);
        row.elapsed_ms = std::chrono::duration<double, std::milli>(
                             std::chrono::steady_clock::now() - start)
                             .count();
        const PartitionCheck check =
            validate_partition(*instance, result.partition);
        if (!check || result.partition.value() != result.value) {
          throw std::logic_error(path.string() +
                                 ": solver returned an invalid partition: " +
                                 check.message);
        }
        row.value = result.value;
        row.max_layer_width = result.stats.max_layer_width;
        row.validated = true;
      } catch (const TimeLimitExceeded&) {
        row.elapsed_ms = std::chrono::duration<double, std::milli>(
                             std::chrono::steady_clock::now() - start)
                             .count();
      }
      outcome.rows.push_back(std::move(row));
    }
  }
  return outcome;
}

std::string width_label(const std::optional<int>& width) {
  return width ? std::to_string(*width) : "exact";
}

}  // namespace

std::string infer_distribution(const std::filesystem::path& path) {
  for (const auto& part : path) {
    const std::string name = part.string();
    if (name.find("skewed") != std::string::npos) return "skewed";
    if (name.find("linear") != std::string::npos) return "linear";
  }
  return "unknown";
}

BenchReport run_suite(const BenchConfig& config) {
  if (config.widths.empty()) throw std::invalid_argument("no widths given");
  if (config.repetitions < 1) {
    throw std::invalid_argument("repetitions must be >= 1");
  }
  for (const auto& width : config.widths) {
    if (width && *width < 1) throw std::invalid_argument("width must be >= 1");
  }
  const auto files = collect_instance_files(config.paths);
  if (files.empty()) throw std::invalid_argument("no instance files found");

  std::vector<InstanceOutcome> outcomes(files.size());
  std::atomic<std::size_t> cursor{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = cursor++; i < files.size(); i = cursor++) {
      try {
        outcomes[i] = run_instance(files[i], config);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        cursor = files.size();
      }
    }
  };
  const int jobs = std::clamp(config.jobs, 1, static_cast<int>(files.size()));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  BenchReport report;
  for (auto& outcome : outcomes) {
    if (outcome.error) report.errors.push_back(*outcome.error);
    for (auto& row : outcome.rows) report.rows.push_back(std::move(row));
  }
  report.summary = summarize(report.rows);
  return report;
}

std::vector<BenchGroup> summarize(std::span<const BenchRow> rows) {
  using Key = std::tuple<std::string, int, int, int>;  // width -1 for exact
  std::map<Key, std::pair<long long, int>> totals;
  for (const auto& row : rows) {
    auto& [sum, count] = totals[Key{row.distribution, row.sigma, row.n,
                                    row.width.value_or(-1)}];
    if (row.value) {
      sum += *row.value;
      ++count;
    }
  }
  std::vector<BenchGroup> groups;
  for (const auto& [key, total] : totals) {
    const auto& [distribution, sigma, n, width] = key;
    BenchGroup group;
    group.distribution = distribution;
    group.sigma = sigma;
    group.n = n;
    if (width >= 0) group.width = width;
    group.solved = total.second;
    group.mean_value = total.second > 0
                           ? static_cast<double>(total.first) / total.second
                           : 0.0;
    groups.push_back(std::move(group));
  }
  return groups;
}

std::string bench_to_csv(const BenchReport& report) {
  std::ostringstream out;
  out << kBenchCsvHeader << "\n";
  for (const auto& row : report.rows) {
    out << row.instance << "," << row.n << "," << row.sigma << ","
        << width_label(row.width) << ",";
    if (row.value) out << *row.value;
    out << "," << row.elapsed_ms << "," << row.blocks << ","
        << row.max_layer_width << "\n";
  }
  return out.str();
}

nlohmann::json bench_to_json(const BenchReport& report) {
  using nlohmann::json;
  json rows = json::array();
  for (const auto& row : report.rows) {
    json r = {{"instance", row.instance},
              {"n", row.n},
              {"sigma", row.sigma},
              {"distribution", row.distribution},
              {"repetition", row.repetition},
              {"elapsed_ms", row.elapsed_ms},
              {"blocks", row.blocks},
              {"max_layer", row.max_layer_width},
              {"validated", row.validated}};
    r["width"] = row.width ? json(*row.width) : json("exact");
    r["value"] = row.value ? json(*row.value) : json(nullptr);
    rows.push_back(std::move(r));
  }
  json summary = json::array();
  for (const auto& group : report.summary) {
    json g = {{"distribution", group.distribution},
              {"sigma", group.sigma},
              {"n", group.n},
              {"solved", group.solved}};
    g["mean_value"] = group.solved > 0 ? json(group.mean_value) : json(nullptr);
    g["width"] = group.width ? json(*group.width) : json("exact");
    summary.push_back(std::move(g));
  }
  return {{"metadata", {{"generator_engine", kGeneratorEngine}}},
          {"rows", std::move(rows)},
          {"summary", std::move(summary)},
          {"errors", report.errors}};
}

}  // namespace mcsp
