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

// mcsp_dd: solve, generate, oracle and bench subcommands.
//
// Exit codes: 0 success, 2 bad input or flags, 3 solver resource limit,
// 4 oracle budget exhausted.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "mcsp/bench.h"
#include "mcsp/blocks.h"
#include "mcsp/dd_solver.h"
#include "mcsp/generator.h"
#include "mcsp/instance.h"
#include "mcsp/json_io.h"
#include "mcsp/oracle.h"
#include "mcsp/partition.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitResource = 3;
constexpr int kExitBudget = 4;

std::shared_ptr<spdlog::logger> make_logger() {
  auto logger = spdlog::stderr_color_mt("mcsp_dd");
  logger->set_pattern("[%l] %v");
  const char* level = std::getenv("MCSP_DD_LOG");
  const std::string name = level ? level : "off";
  if (name == "debug") {
    logger->set_level(spdlog::level::debug);
  } else if (name == "info") {
    logger->set_level(spdlog::level::info);
  } else {
    logger->set_level(spdlog::level::off);
  }
  return logger;
}

std::optional<int> parse_width(const std::string& text) {
  if (text == "exact") return std::nullopt;
  std::size_t used = 0;
  const int width = std::stoi(text, &used);
  if (used != text.size() || width < 1) throw std::invalid_argument(text);
  return width;
}

// Writes to `path`, or standard output when it is empty.
bool emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return static_cast<bool>(std::cout);
  }
  std::ofstream out(path, std::ios::binary);
  out << text;
  return static_cast<bool>(out);
}

std::string pretty_partition(const mcsp::Instance& instance,
                             const mcsp::Partition& partition) {
  std::ostringstream out;
  for (const auto& piece : partition.pieces) {
    out << "  " << instance.s1().substr(piece.k1, piece.t) << "  s1[" << piece.k1
        << ":" << piece.k1 + piece.t << "] s2[" << piece.k2 << ":"
        << piece.k2 + piece.t << "]\n";
  }
  return out.str();
}

struct SolveFlags {
  std::string path;
  std::string width = "exact";
  bool json = false;
  bool stats = false;
  bool pretty = false;
  std::optional<std::uint64_t> node_budget;
};

int run_solve(const SolveFlags& flags, spdlog::logger& log) {
  std::optional<int> width;
  try {
    width = parse_width(flags.width);
  } catch (const std::exception&) {
    std::cerr << "error: --width must be a positive integer or 'exact'\n";
    return kExitInput;
  }
  try {
    const mcsp::Instance instance = mcsp::load_instance_file(flags.path);
    const mcsp::BlockSet blocks = mcsp::enumerate_blocks(instance);
    log.info("n={} sigma={} blocks={} width={}", instance.n(),
             instance.alphabet().size(), blocks.size(), flags.width);

    mcsp::SolveConfig config;
    config.width = width;
    config.collect_stats = flags.stats;
    config.node_budget = flags.node_budget;
    if (log.should_log(spdlog::level::debug)) {
      config.on_layer = [&log](const mcsp::LayerView& layer) {
        if (layer.phase() == mcsp::LayerView::Phase::kExpanded &&
            layer.index() % 1000 == 0) {
          log.debug("layer {} holds {} nodes", layer.index(), layer.size());
        }
      };
    }
    const mcsp::SolveResult result = mcsp::build_dd(instance, blocks, config);
    log.info("value={} max_layer_width={} elapsed_ms={:.3f}", result.value,
             result.stats.max_layer_width, result.stats.elapsed_ms);

    if (flags.json) {
      auto out = mcsp::solve_result_to_json(result, instance.n());
      if (flags.stats) {
        out["stats"] = {{"layers", result.stats.layers},
                        {"max_candidates", result.stats.max_candidates},
                        {"nodes_created", result.stats.nodes_created},
                        {"layer_widths", result.stats.layer_widths}};
      }
      std::cout << out.dump(flags.pretty ? 2 : -1) << "\n";
    } else {
      std::cout << result.value << "\n";
      if (flags.stats) {
        std::cout << "layers=" << result.stats.layers
                  << "\nmax_layer_width=" << result.stats.max_layer_width
                  << "\nmax_candidates=" << result.stats.max_candidates
                  << "\nnodes_created=" << result.stats.nodes_created
                  << "\nblocks=" << result.stats.blocks_count
                  << "\nelapsed_ms=" << result.stats.elapsed_ms << "\n";
      }
      if (flags.pretty) std::cout << pretty_partition(instance, result.partition);
    }
    return kExitOk;
  } catch (const mcsp::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const mcsp::ResourceLimit& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResource;
  }
}

struct GenerateFlags {
  int n = 0;
  int sigma = 0;
  std::string dist = "linear";
  std::uint64_t seed = 0;
  std::string output;
};

int run_generate(const GenerateFlags& flags) {
  const auto distribution = mcsp::parse_distribution(flags.dist);
  if (!distribution) {
    std::cerr << "error: --dist must be 'linear' or 'skewed'\n";
    return kExitInput;
  }
  try {
    const mcsp::Instance instance = mcsp::generate_instance(
        {flags.n, flags.sigma, *distribution, flags.seed});
    if (!emit(flags.output, mcsp::serialize_instance(instance))) {
      std::cerr << "error: cannot write " << flags.output << "\n";
      return kExitInput;
    }
    return kExitOk;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
}

struct OracleFlags {
  std::string path;
  std::optional<std::uint64_t> node_budget;
  bool json = false;
};

int run_oracle(const OracleFlags& flags) {
  try {
    const mcsp::Instance instance = mcsp::load_instance_file(flags.path);
    const auto start = std::chrono::steady_clock::now();
    const mcsp::OracleResult result =
        mcsp::brute_force(instance, {flags.node_budget, true});
    const double elapsed_ms = std::chrono::duration<double, std::milli>(
                                  std::chrono::steady_clock::now() - start)
                                  .count();
    if (flags.json) {
      std::cout << mcsp::oracle_result_to_json(result, instance.n(), elapsed_ms)
                       .dump()
                << "\n";
    } else {
      std::cout << result.value << "\n"
                << mcsp::partition_to_json(result.partition).dump() << "\n";
    }
    return kExitOk;
  } catch (const mcsp::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const mcsp::BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << " (best found " << e.best_value()
              << ", not proven optimal)\n";
    return kExitBudget;
  }
}

struct BenchFlags {
  std::vector<std::string> paths;
  std::vector<std::string> widths{"10", "100", "1000"};
  int jobs = 1;
  int repetitions = 1;
  std::optional<double> time_limit;
  std::string format = "csv";
  std::string output;
};

int run_bench(const BenchFlags& flags, spdlog::logger& log) {
  mcsp::BenchConfig config;
  for (const auto& p : flags.paths) config.paths.emplace_back(p);
  try {
    for (const auto& w : flags.widths) config.widths.push_back(parse_width(w));
  } catch (const std::exception&) {
    std::cerr << "error: --widths takes positive integers or 'exact'\n";
    return kExitInput;
  }
  config.jobs = flags.jobs;
  config.repetitions = flags.repetitions;
  config.time_limit_seconds = flags.time_limit;

  mcsp::BenchReport report;
  try {
    report = mcsp::run_suite(config);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  log.info("{} rows, {} skipped instances", report.rows.size(),
           report.errors.size());

  std::string text;
  if (flags.format == "json") {
    text = mcsp::bench_to_json(report).dump(2) + "\n";
  } else {
    text = mcsp::bench_to_csv(report);
    for (const auto& group : report.summary) {
      std::cerr << "# summary distribution=" << group.distribution
                << " sigma=" << group.sigma << " n=" << group.n << " width="
                << (group.width ? std::to_string(*group.width) : "exact")
                << " solved=" << group.solved << " mean=" << group.mean_value
                << "\n";
    }
  }
  if (!emit(flags.output, text)) {
    std::cerr << "error: cannot write " << flags.output << "\n";
    return kExitInput;
  }
  for (const auto& error : report.errors) std::cerr << "error: " << error << "\n";
  return report.errors.empty() ? kExitOk : kExitInput;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimum common string partition by decision diagrams"};
  app.require_subcommand(1);

  SolveFlags solve;
  auto* solve_cmd = app.add_subcommand("solve", "Solve one instance file");
  solve_cmd->add_option("path", solve.path, "Instance file")->required();
  solve_cmd->add_option("--width", solve.width,
                        "Layer width bound, or 'exact'")
      ->capture_default_str();
  solve_cmd->add_flag("--json", solve.json, "Print the result as JSON");
  solve_cmd->add_flag("--stats", solve.stats, "Report construction statistics");
  solve_cmd->add_flag("--pretty", solve.pretty, "Human-readable output");
  solve_cmd->add_option("--node-budget", solve.node_budget,
                        "Fail with exit 3 after this many nodes");

  GenerateFlags generate;
  auto* gen_cmd = app.add_subcommand("generate", "Generate a random instance");
  gen_cmd->add_option("--n", generate.n, "String length")->required()
      ->check(CLI::PositiveNumber);
  gen_cmd->add_option("--sigma", generate.sigma, "Alphabet size")->required()
      ->check(CLI::Range(1, mcsp::kMaxGeneratedAlphabet));
  gen_cmd->add_option("--dist", generate.dist, "linear or skewed")
      ->capture_default_str();
  gen_cmd->add_option("--seed", generate.seed, "RNG seed")->capture_default_str();
  gen_cmd->add_option("-o,--output", generate.output,
                      "Output file (default: stdout)");

  OracleFlags oracle;
  auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustive exact solve");
  oracle_cmd->add_option("path", oracle.path, "Instance file")->required();
  oracle_cmd->add_option("--node-budget", oracle.node_budget,
                         "Fail with exit 4 after this many search nodes");
  oracle_cmd->add_flag("--json", oracle.json, "Print the result as JSON");

  BenchFlags bench;
  auto* bench_cmd = app.add_subcommand("bench", "Run widths over instances");
  bench_cmd->add_option("paths", bench.paths, "Instance files or directories")
      ->required();
  bench_cmd->add_option("--widths", bench.widths, "Comma-separated widths")
      ->delimiter(',')
      ->capture_default_str();
  bench_cmd->add_option("--jobs", bench.jobs, "Parallel instances")
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--repetitions", bench.repetitions,
                        "Runs per instance and width")
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--time-limit", bench.time_limit,
                        "Seconds per solve");
  bench_cmd->add_option("--format", bench.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  bench_cmd->add_option("-o,--output", bench.output,
                        "Output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  auto log = make_logger();
  if (*solve_cmd) return run_solve(solve, *log);
  if (*gen_cmd) return run_generate(generate);
  if (*oracle_cmd) return run_oracle(oracle);
  return run_bench(bench, *log);
}
