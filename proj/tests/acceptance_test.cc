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

// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
// gating criterion fails. Criterion 6 is reported only.

#include <sys/resource.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "mcsp/bench.h"
#include "mcsp/blocks.h"
#include "mcsp/dd_solver.h"
#include "mcsp/generator.h"
#include "mcsp/node_state.h"
#include "mcsp/oracle.h"
#include "mcsp/partition.h"
#include "test_support.h"

namespace {

using namespace mcsp;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Fails the enclosing criterion with a message.
#define REQUIRE(cond, msg)                          \
  do {                                              \
    if (!(cond)) {                                  \
      std::ostringstream what_;                     \
      what_ << msg;                                 \
      return Outcome{false, what_.str()};           \
    }                                               \
  } while (0)

// n in [4, 12] x alphabet {2, 3, 4} x both distributions x 4 seeds = 216.
std::vector<Instance> small_corpus() {
  std::vector<Instance> corpus;
  std::uint64_t seed = 1000;
  for (int n = 4; n <= 12; ++n) {
    for (int sigma = 2; sigma <= 4; ++sigma) {
      for (auto dist : {SymbolDistribution::kLinear, SymbolDistribution::kSkewed}) {
        for (int rep = 0; rep < 4; ++rep) {
          corpus.push_back(generate_instance({n, sigma, dist, seed++}));
        }
      }
    }
  }
  return corpus;
}

struct ProvenCorpus {
  std::vector<Instance> instances;
  std::vector<int> optimum;
  int redrawn = 0;
};

// 56 instances with n in [13, 40], alphabet 2..4, both distributions, each
// solved to proven optimality by the oracle. A draw whose search exceeds the
// node budget is replaced by another draw with the same n.
const ProvenCorpus& medium_corpus() {
  static const ProvenCorpus corpus = [] {
    ProvenCorpus out;
    std::mt19937_64 rng(2000);
    OracleOptions options;
    options.node_budget = 20'000'000;
    for (int i = 0; i < 56; ++i) {
      const int n = 13 + i % 28;
      const int sigma = 2 + i % 3;
      const auto dist = (i / 28) % 2 ? SymbolDistribution::kSkewed
                                     : SymbolDistribution::kLinear;
      for (;;) {
        const Instance instance = generate_instance({n, sigma, dist, rng()});
        try {
          const int value = brute_force(instance, options).value;
          out.instances.push_back(instance);
          out.optimum.push_back(value);
          break;
        } catch (const BudgetExceeded&) {
          ++out.redrawn;
        }
      }
    }
    return out;
  }();
  return corpus;
}

Outcome worked_example() {
  const auto start = Clock::now();
  const Instance instance("GAGACTA", "AACTGAG");
  const SolveResult result = solve(instance);
  REQUIRE(result.value == 3, "exact value " << result.value << " != 3");
  REQUIRE(validate_partition(instance, result.partition), "partition invalid");
  const auto pieces = piece_strings(instance, result.partition);
  REQUIRE((pieces == std::vector<std::string>{"A", "ACT", "GAG"}),
          "pieces differ from {A, ACT, GAG}");
  const Partition singletons = complete_with_singletons(instance, {});
  REQUIRE(validate_partition(instance, singletons), "singletons invalid");
  REQUIRE(singletons.value() == 7, "singleton value " << singletons.value());
  const double elapsed = seconds_since(start);
  REQUIRE(elapsed < 1.0, "took " << elapsed << " s");
  std::ostringstream detail;
  detail << "value 3, pieces {A, ACT, GAG}, singleton value 7, " << elapsed * 1e3
         << " ms";
  return {true, detail.str()};
}

Outcome oracle_equivalence(const std::vector<Instance>& corpus,
                           std::vector<int>& optimum) {
  const auto start = Clock::now();
  optimum.clear();
  for (const Instance& instance : corpus) {
    const int exact = solve(instance).value;
    const int oracle = brute_force(instance).value;
    REQUIRE(exact == oracle, instance.s1() << "/" << instance.s2() << ": dd "
                                           << exact << " oracle " << oracle);
    optimum.push_back(exact);
  }
  const double elapsed = seconds_since(start);
  REQUIRE(elapsed < 60.0, "took " << elapsed << " s");
  std::ostringstream detail;
  detail << corpus.size() << " instances equal, " << elapsed << " s";
  return {true, detail.str()};
}

Outcome restricted_upper_bound(const std::vector<Instance>& small,
                               const std::vector<int>& small_optimum) {
  std::vector<Instance> corpus = small;
  std::vector<int> optimum = small_optimum;
  const ProvenCorpus& medium = medium_corpus();
  corpus.insert(corpus.end(), medium.instances.begin(), medium.instances.end());
  optimum.insert(optimum.end(), medium.optimum.begin(), medium.optimum.end());
  int checks = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    for (int width : {1, 2, 5, 10}) {
      SolveConfig config;
      config.width = width;
      bool layers_ok = true;
      config.on_layer = [&](const LayerView& layer) {
        if (layer.phase() == LayerView::Phase::kRestricted &&
            layer.size() > static_cast<std::size_t>(width)) {
          layers_ok = false;
        }
      };
      const SolveResult result = solve(corpus[i], config);
      REQUIRE(result.value >= optimum[i], corpus[i].s1() << "/" << corpus[i].s2()
                                                         << " W=" << width << ": "
                                                         << result.value << " < "
                                                         << optimum[i]);
      REQUIRE(validate_partition(corpus[i], result.partition),
              "invalid partition at W=" << width);
      REQUIRE(result.partition.value() == result.value, "value mismatch");
      REQUIRE(layers_ok && result.stats.max_layer_width <= width,
              "layer wider than " << width);
      ++checks;
    }
  }
  std::ostringstream detail;
  detail << corpus.size() << " instances (" << medium.instances.size()
         << " with n in [13, 40], " << medium.redrawn
         << " redrawn past the oracle budget) x 4 widths = " << checks
         << " solves, all >= optimum";
  return {true, detail.str()};
}

Outcome greedy_equivalence(const std::vector<Instance>& corpus) {
  std::vector<Instance> all = corpus;
  const auto& medium = medium_corpus().instances;
  all.insert(all.end(), medium.begin(), medium.end());
  for (const Instance& instance : all) {
    SolveConfig config;
    config.width = 1;
    int min_child = 0;
    bool ok = true;
    std::string why;
    config.on_layer = [&](const LayerView& layer) {
      if (layer.phase() == LayerView::Phase::kExpanded) {
        min_child = layer.weight(0);
        for (std::size_t k = 1; k < layer.size(); ++k) {
          min_child = std::min(min_child, layer.weight(k));
        }
        return;
      }
      if (layer.size() != 1 || layer.weight(0) != min_child) {
        ok = false;
        why = "layer " + std::to_string(layer.index());
      }
    };
    const SolveResult result = solve(instance, config);
    REQUIRE(ok, "W=1 kept a non-minimal or extra node at " << why);
    REQUIRE(result.stats.max_layer_width == 1,
            "max_layer_width " << result.stats.max_layer_width);
    REQUIRE(result.value == testing::reference_greedy(instance),
            "differs from longest-first greedy on " << instance.s1());
  }
  std::ostringstream detail;
  detail << all.size() << " instances: one minimal-weight node per layer";
  return {true, detail.str()};
}

Outcome scaling_smoke() {
  const Instance instance =
      generate_instance({600, 4, SymbolDistribution::kLinear, 600});
  SolveConfig config;
  config.width = 100;
  const auto start = Clock::now();
  const SolveResult result = solve(instance, config);
  const double elapsed = seconds_since(start);
  rusage usage{};
  getrusage(RUSAGE_SELF, &usage);
  const double peak_mb = usage.ru_maxrss / 1024.0;
  REQUIRE(validate_partition(instance, result.partition), "invalid partition");
  REQUIRE(elapsed < 300.0, "took " << elapsed << " s");
  REQUIRE(peak_mb < 1024.0, "peak RSS " << peak_mb << " MB");
  std::ostringstream detail;
  detail << "n=600 W=100 value " << result.value << ", "
         << result.stats.blocks_count << " blocks, " << elapsed << " s, peak RSS "
         << peak_mb << " MB";
  return {true, detail.str()};
}

// Not gating: regenerated instances cannot match the original datasets.
Outcome value_quality_report() {
  struct Row {
    int n;
    double reference;
  };
  std::ostringstream detail;
  bool within = true;
  for (const Row row : {Row{200, 70.5}, Row{400, 128.3}, Row{600, 179.0}}) {
    double sum = 0;
    constexpr int kInstances = 10;
    for (int i = 0; i < kInstances; ++i) {
      const Instance instance = generate_instance(
          {row.n, 4, SymbolDistribution::kLinear,
           static_cast<std::uint64_t>(row.n * 100 + i)});
      SolveConfig config;
      config.width = 1000;
      sum += solve(instance, config).value;
    }
    const double mean = sum / kInstances;
    const double rel = std::abs(mean - row.reference) / row.reference;
    within = within && rel <= 0.10;
    detail << "n=" << row.n << " mean " << mean << " vs " << row.reference << " ("
           << std::round(rel * 1000) / 10 << "%) ";
  }
  detail << (within ? "all within 10%" : "outside 10%");
  return {within, detail.str()};
}

Outcome block_enumeration() {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 100; ++i) {
    const Instance instance = testing::random_instance(rng, 1, 10);
    REQUIRE(enumerate_blocks(instance) == testing::brute_force_blocks(instance),
            "mismatch on " << instance.s1() << "/" << instance.s2());
  }
  const auto count = enumerate_blocks(Instance("AAAA", "AAAA")).size();
  REQUIRE(count == 14, "AAAA count " << count);
  return {true, "100 instances match triple loop; AAAA has 14 blocks"};
}

Outcome property_suite() {
  constexpr int kCases = 1000;
  std::mt19937_64 rng(8);

  for (int c = 0; c < kCases; ++c) {
    const Instance instance = testing::random_instance(rng, 2, 14);
    SolveConfig config;
    config.width = 1 + static_cast<int>(rng() % 8);
    bool balanced = true;
    bool replay = true;
    config.on_layer = [&](const LayerView& layer) {
      for (std::size_t k = 0; k < layer.size(); ++k) {
        const NodeState state = layer.state(k);
        balanced = balanced && state_invariants_hold(instance, state.words());
        int weight = instance.n();
        for (const Block& b : layer.path_blocks(k)) weight -= b.t - 1;
        replay = replay && weight == layer.weight(k);
      }
    };
    const SolveResult a = solve(instance, config);
    REQUIRE(balanced, "unbalanced state on " << instance.s1());
    REQUIRE(replay, "weight replay failed on " << instance.s1());
    config.on_layer = nullptr;
    const SolveResult b = solve(instance, config);
    REQUIRE(a.value == b.value && a.partition.pieces == b.partition.pieces,
            "non-deterministic on " << instance.s1());
  }

  for (int c = 0; c < kCases; ++c) {
    const int n = 1 + static_cast<int>(rng() % 10);
    auto random_block = [&] {
      const int t = 1 + static_cast<int>(rng() % n);
      return Block{static_cast<int>(rng() % (n - t + 1)),
                   static_cast<int>(rng() % (n - t + 1)), t};
    };
    const Block x = random_block();
    const Block y = random_block();
    REQUIRE(overlaps(x, y) == overlaps(y, x), "overlap asymmetric");
    REQUIRE(overlaps(x, y) == testing::intervals_intersect(x, y),
            "overlap differs from interval form");
  }

  for (int c = 0; c < kCases; ++c) {
    BenchReport report;
    BenchRow row;
    row.instance = "i" + std::to_string(c);
    row.n = 1 + c;
    row.sigma = 4;
    if (c % 3) row.width = c;
    if (c % 2) row.value = c;
    report.rows.push_back(row);
    const std::string csv = bench_to_csv(report);
    const auto header_end = csv.find('\n');
    REQUIRE(csv.substr(0, header_end) == kBenchCsvHeader, "CSV header");
    const std::string line = csv.substr(header_end + 1);
    REQUIRE(std::count(line.begin(), line.end(), ',') == 7, "CSV row " << line);
  }
  return {true, "state balance, weight replay, determinism, overlap, CSV: 1000 "
                "cases each"};
}

}  // namespace

int main() {
  const std::vector<Instance> corpus = small_corpus();
  std::vector<int> optimum;

  struct Criterion {
    int id;
    const char* name;
    bool gating;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "worked example", true, worked_example},
      {2, "exact diagram equals oracle", true,
       [&] { return oracle_equivalence(corpus, optimum); }},
      {3, "restricted upper bound", true,
       [&] { return restricted_upper_bound(corpus, optimum); }},
      {4, "width one is greedy", true, [&] { return greedy_equivalence(corpus); }},
      {5, "n=600 W=100 scaling", true, scaling_smoke},
      {6, "value quality at W=1000 (report only)", false,
       value_quality_report},
      {7, "block enumeration oracle", true, block_enumeration},
      {8, "property suite", true, property_suite},
  };

  int failures = 0;
  for (const auto& criterion : criteria) {
    Outcome outcome;
    try {
      outcome = criterion.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const char* verdict =
        outcome.pass ? "PASS" : (criterion.gating ? "FAIL" : "NOTE");
    std::cout << "[" << verdict << "] AC" << criterion.id << " "
              << criterion.name << ": " << outcome.detail << std::endl;
    if (!outcome.pass && criterion.gating) ++failures;
  }
  std::cout << (failures == 0 ? "all gating criteria passed"
                              : std::to_string(failures) + " criteria failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
