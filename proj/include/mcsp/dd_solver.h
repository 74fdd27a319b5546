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

#ifndef MCSP_DD_SOLVER_H_
#define MCSP_DD_SOLVER_H_

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "mcsp/blocks.h"
#include "mcsp/instance.h"
#include "mcsp/node_state.h"
#include "mcsp/partition.h"

namespace mcsp {

// The node budget of a solve was exhausted.
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The wall-clock limit of a solve expired.
class TimeLimitExceeded : public ResourceLimit {
 public:
  using ResourceLimit::ResourceLimit;
};

namespace detail {
class Layer;
struct TraceEntry {
  std::int32_t block;  // index into the BlockSet
  std::int32_t prev;   // previous 1-decision on the path, -1 at the root
};
}  // namespace detail

// Read-only window onto one layer, handed to SolveConfig::on_layer.
class LayerView {
 public:
  enum class Phase {
    kExpanded,    // every child of the previous layer, deduplicated
    kRestricted,  // after pruning to the width bound
  };

  LayerView(int index, Phase phase, const detail::Layer& layer,
            const std::vector<detail::TraceEntry>& trace,
            const BlockSet& blocks, int n)
      : index_(index), phase_(phase), layer_(layer), trace_(trace),
        blocks_(blocks), n_(n) {}

  // Layer L_index, built from the decision on blocks[index - 1].
  int index() const { return index_; }
  Phase phase() const { return phase_; }
  std::size_t size() const;

  int weight(std::size_t k) const;
  int uncovered(std::size_t k) const;
  NodeState state(std::size_t k) const;

  // Blocks chosen along the recorded best root-to-node path, in decision
  // order.
  std::vector<Block> path_blocks(std::size_t k) const;

 private:
  int index_;
  Phase phase_;
  const detail::Layer& layer_;
  const std::vector<detail::TraceEntry>& trace_;
  const BlockSet& blocks_;
  int n_;
};

struct SolveConfig {
  // Maximum records per layer; absent builds the exact diagram.
  std::optional<int> width;
  // Record per-layer widths in SolveStats::layer_widths.
  bool collect_stats = false;
  // Cap on the total number of node records created across all layers.
  std::optional<std::uint64_t> node_budget;
  std::optional<std::chrono::duration<double>> time_limit;
  // Called for every layer that differs from its predecessor, once after
  // expansion and, in restricted mode, once after pruning.
  std::function<void(const LayerView&)> on_layer;
};

struct SolveStats {
  int layers = 0;               // |blocks| + 1, root layer included
  int max_layer_width = 0;      // after restriction
  int max_candidates = 0;       // before restriction
  std::uint64_t nodes_created = 0;
  int blocks_count = 0;
  double elapsed_ms = 0.0;
  std::vector<int> layer_widths;  // only with collect_stats
};

struct SolveResult {
  int value = 0;
  Partition partition;
  SolveStats stats;
  std::optional<int> width;
};

// Builds the (restricted) decision diagram over `blocks` layer by layer and
// returns the shortest root-to-terminal path weight with its partition.
//
// Root weight is n; choosing block b costs 1 - b.t; the closing arc covers
// the remaining positions with singletons at no cost. A child reached from
// several parents keeps the smaller weight, the earlier arrival on ties. In
// restricted mode each layer keeps the `width` records of least weight, ties
// going to fewer uncovered positions, then to earlier insertion.
//
// `blocks` must be enumerate_blocks(instance). Throws std::invalid_argument
// for a width < 1, ResourceLimit or TimeLimitExceeded when a guard trips.
SolveResult build_dd(const Instance& instance, const BlockSet& blocks,
                     const SolveConfig& config);

// enumerate_blocks followed by build_dd.
SolveResult solve(const Instance& instance, const SolveConfig& config = {});

}  // namespace mcsp

#endif  // MCSP_DD_SOLVER_H_
