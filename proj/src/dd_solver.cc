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

#include "mcsp/dd_solver.h"

#include <algorithm>
#include <cassert>
#include <cstring>
#include <numeric>
#include <string>

namespace mcsp {
namespace detail {

// One layer of the diagram: node records with their coverage states stored
// contiguously, plus an open-addressing index from state to record.
class Layer {
 public:
  struct Record {
    std::int32_t weight;
    std::int32_t uncovered;  // popcount(bs1)
    std::int32_t trace;      // last 1-decision on the best path, -1 if none
    std::uint64_t hash;
  };

  explicit Layer(int state_words) : state_words_(state_words) {}

  std::size_t size() const { return records_.size(); }
  const Record& record(std::size_t k) const { return records_[k]; }
  Record& record(std::size_t k) { return records_[k]; }
  const std::uint64_t* state(std::size_t k) const {
    return states_.data() + k * state_words_;
  }
  int state_words() const { return state_words_; }

  void clear() {
    records_.clear();
    states_.clear();
    std::fill(slots_.begin(), slots_.end(), -1);
  }

  // Inserts the state or lowers the weight of its existing record. Returns
  // the record index and whether this offer now defines the record.
  std::pair<std::size_t, bool> offer(const std::uint64_t* state,
                                     std::uint64_t hash, int weight,
                                     int uncovered) {
    if (2 * (records_.size() + 1) > slots_.size()) grow();
    const std::size_t mask = slots_.size() - 1;
    const std::size_t bytes = state_words_ * sizeof(std::uint64_t);
    for (std::size_t slot = hash & mask;; slot = (slot + 1) & mask) {
      const std::int32_t k = slots_[slot];
      if (k < 0) {
        slots_[slot] = static_cast<std::int32_t>(records_.size());
        records_.push_back({weight, uncovered, -1, hash});
        states_.insert(states_.end(), state, state + state_words_);
        return {records_.size() - 1, true};
      }
      Record& existing = records_[k];
      if (existing.hash == hash && std::memcmp(this->state(k), state, bytes) == 0) {
        if (weight < existing.weight) {
          existing.weight = weight;
          return {static_cast<std::size_t>(k), true};
        }
        return {static_cast<std::size_t>(k), false};
      }
    }
  }

  // Keeps the `width` records of least (weight, uncovered, index), in their
  // original order. Leaves the state index stale until the next clear().
  void restrict_to(std::size_t width) {
    if (records_.size() <= width) return;
    order_.resize(records_.size());
    std::iota(order_.begin(), order_.end(), 0u);
    std::nth_element(order_.begin(), order_.begin() + width, order_.end(),
                     [this](std::uint32_t a, std::uint32_t b) {
                       const Record& ra = records_[a];
                       const Record& rb = records_[b];
                       if (ra.weight != rb.weight) return ra.weight < rb.weight;
                       if (ra.uncovered != rb.uncovered) {
                         return ra.uncovered < rb.uncovered;
                       }
                       return a < b;
                     });
    keep_.assign(records_.size(), 0);
    for (std::size_t k = 0; k < width; ++k) keep_[order_[k]] = 1;
    std::size_t out = 0;
    for (std::size_t k = 0; k < records_.size(); ++k) {
      if (!keep_[k]) continue;
      if (out != k) {
        records_[out] = records_[k];
        std::memmove(states_.data() + out * state_words_,
                     states_.data() + k * state_words_,
                     state_words_ * sizeof(std::uint64_t));
      }
      ++out;
    }
    records_.resize(out);
    states_.resize(out * state_words_);
  }

 private:
  void grow() {
    std::size_t capacity = std::max<std::size_t>(16, slots_.size() * 2);
    while (capacity < 2 * (records_.size() + 1)) capacity *= 2;
    slots_.assign(capacity, -1);
    const std::size_t mask = capacity - 1;
    for (std::size_t k = 0; k < records_.size(); ++k) {
      std::size_t slot = records_[k].hash & mask;
      while (slots_[slot] >= 0) slot = (slot + 1) & mask;
      slots_[slot] = static_cast<std::int32_t>(k);
    }
  }

  int state_words_;
  std::vector<std::uint64_t> states_;
  std::vector<Record> records_;
  std::vector<std::int32_t> slots_;
  std::vector<std::uint32_t> order_;
  std::vector<char> keep_;
};

}  // namespace detail

std::size_t LayerView::size() const { return layer_.size(); }

int LayerView::weight(std::size_t k) const { return layer_.record(k).weight; }

int LayerView::uncovered(std::size_t k) const {
  return layer_.record(k).uncovered;
}

NodeState LayerView::state(std::size_t k) const {
  const auto* words = layer_.state(k);
  return NodeState(n_, std::vector<std::uint64_t>(
                           words, words + layer_.state_words()));
}

std::vector<Block> LayerView::path_blocks(std::size_t k) const {
  std::vector<Block> path;
  for (auto id = layer_.record(k).trace; id >= 0; id = trace_[id].prev) {
    path.push_back(blocks_[trace_[id].block]);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

namespace {

// Zobrist keys: a state's hash is the XOR of the keys of its covered
// positions, so clearing a block's range updates it in O(t).
std::vector<std::uint64_t> zobrist_keys(int n) {
  std::vector<std::uint64_t> keys(2 * static_cast<std::size_t>(n));
  std::uint64_t x = 0x6a09e667f3bcc909ull;
  for (auto& key : keys) {
    // splitmix64
    std::uint64_t z = (x += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    key = z ^ (z >> 31);
  }
  return keys;
}

// Drops trace entries no record of `layer` can reach and renumbers the rest.
void compact_trace(std::vector<detail::TraceEntry>& trace, detail::Layer& layer) {
  constexpr std::int32_t kUnmarked = -2;
  std::vector<std::int32_t> remap(trace.size(), kUnmarked);
  for (std::size_t k = 0; k < layer.size(); ++k) {
    for (auto id = layer.record(k).trace; id >= 0 && remap[id] == kUnmarked;
         id = trace[id].prev) {
      remap[id] = 0;
    }
  }
  std::int32_t live = 0;
  for (std::size_t id = 0; id < trace.size(); ++id) {
    if (remap[id] == kUnmarked) continue;
    remap[id] = live;
    // prev < id, so it is already renumbered.
    const auto prev = trace[id].prev;
    trace[live++] = {trace[id].block, prev < 0 ? prev : remap[prev]};
  }
  trace.resize(live);
  for (std::size_t k = 0; k < layer.size(); ++k) {
    auto& record = layer.record(k);
    if (record.trace >= 0) record.trace = remap[record.trace];
  }
}

bool placeable(const std::uint64_t* state, int wps, const Block& b) {
  return bits::all_set(state, b.k1, b.t) && bits::all_set(state + wps, b.k2, b.t);
}

}  // namespace

SolveResult build_dd(const Instance& instance, const BlockSet& blocks,
                     const SolveConfig& config) {
  using Clock = std::chrono::steady_clock;
  if (config.width && *config.width < 1) {
    throw std::invalid_argument("width must be >= 1");
  }
  const auto start = Clock::now();
  const int n = instance.n();
  const int wps = bits::words_for(n);
  const int state_words = 2 * wps;
  const auto keys = zobrist_keys(n);

  SolveResult result;
  result.width = config.width;
  SolveStats& stats = result.stats;
  stats.blocks_count = static_cast<int>(blocks.size());
  stats.layers = static_cast<int>(blocks.size()) + 1;

  std::vector<detail::TraceEntry> trace;
  detail::Layer current(state_words);
  detail::Layer next(state_words);
  std::vector<std::uint64_t> scratch(state_words, 0);

  const NodeState root = NodeState::root(n);
  current.offer(root.words().data(), 0, n, n);
  stats.nodes_created = 1;
  stats.max_layer_width = 1;
  stats.max_candidates = 1;
  if (config.collect_stats) {
    stats.layer_widths.reserve(blocks.size() + 1);
    stats.layer_widths.push_back(1);
  }
  if (config.on_layer) {
    config.on_layer(LayerView(0, LayerView::Phase::kExpanded, current, trace,
                              blocks, n));
  }

  std::size_t trace_gc_threshold = 1 << 16;
  const std::size_t width_bound =
      config.width ? static_cast<std::size_t>(*config.width) : 0;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const Block& block = blocks[i];
    if (config.time_limit && (i & 63) == 0 &&
        Clock::now() - start > *config.time_limit) {
      throw TimeLimitExceeded("time limit exceeded at layer " +
                              std::to_string(i));
    }

    bool any_one_arc = false;
    for (std::size_t k = 0; k < current.size() && !any_one_arc; ++k) {
      any_one_arc = placeable(current.state(k), wps, block);
    }
    if (!any_one_arc) {
      // Every node only has its 0-arc: the next layer equals this one.
      stats.nodes_created += current.size();
      if (config.collect_stats) {
        stats.layer_widths.push_back(static_cast<int>(current.size()));
      }
      continue;
    }

    next.clear();
    for (std::size_t k = 0; k < current.size(); ++k) {
      const auto parent = current.record(k);
      const std::uint64_t* state = current.state(k);
      if (auto [at, took] =
              next.offer(state, parent.hash, parent.weight, parent.uncovered);
          took) {
        next.record(at).trace = parent.trace;
      }
      if (!placeable(state, wps, block)) continue;

      std::copy(state, state + state_words, scratch.begin());
      bits::clear_range(scratch.data(), block.k1, block.t);
      bits::clear_range(scratch.data() + wps, block.k2, block.t);
      std::uint64_t hash = parent.hash;
      for (int d = 0; d < block.t; ++d) {
        hash ^= keys[block.k1 + d] ^ keys[n + block.k2 + d];
      }
      assert(state_invariants_hold(instance, scratch));
      if (auto [at, took] = next.offer(scratch.data(), hash,
                                       parent.weight - block.t + 1,
                                       parent.uncovered - block.t);
          took) {
        trace.push_back({static_cast<std::int32_t>(i), parent.trace});
        next.record(at).trace = static_cast<std::int32_t>(trace.size() - 1);
      }
    }

    stats.nodes_created += next.size();
    stats.max_candidates =
        std::max(stats.max_candidates, static_cast<int>(next.size()));
    if (config.node_budget && stats.nodes_created > *config.node_budget) {
      throw ResourceLimit("node budget of " +
                          std::to_string(*config.node_budget) +
                          " exceeded at layer " + std::to_string(i + 1));
    }
    const int layer_index = static_cast<int>(i) + 1;
    if (config.on_layer) {
      config.on_layer(LayerView(layer_index, LayerView::Phase::kExpanded, next,
                                trace, blocks, n));
    }
    if (config.width) {
      next.restrict_to(width_bound);
      if (config.on_layer) {
        config.on_layer(LayerView(layer_index, LayerView::Phase::kRestricted,
                                  next, trace, blocks, n));
      }
    }
    stats.max_layer_width =
        std::max(stats.max_layer_width, static_cast<int>(next.size()));
    if (config.collect_stats) {
      stats.layer_widths.push_back(static_cast<int>(next.size()));
    }
    std::swap(current, next);
    if (trace.size() > trace_gc_threshold) {
      compact_trace(trace, current);
      trace_gc_threshold = std::max<std::size_t>(1 << 16, 2 * trace.size());
    }
  }

  // Closing arcs: every last-layer node reaches the terminal at no cost.
  std::size_t best = 0;
  for (std::size_t k = 1; k < current.size(); ++k) {
    if (current.record(k).weight < current.record(best).weight) best = k;
  }
  result.value = current.record(best).weight;

  std::vector<Block> chosen;
  for (auto id = current.record(best).trace; id >= 0; id = trace[id].prev) {
    chosen.push_back(blocks[trace[id].block]);
  }
  std::reverse(chosen.begin(), chosen.end());
  result.partition = complete_with_singletons(instance, std::move(chosen));

  stats.elapsed_ms =
      std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  return result;
}

SolveResult solve(const Instance& instance, const SolveConfig& config) {
  return build_dd(instance, enumerate_blocks(instance), config);
}

}  // namespace mcsp
