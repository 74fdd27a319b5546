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

#include "mcsp/node_state.h"

#include <array>
#include <bit>
#include <stdexcept>

namespace mcsp {
namespace bits {
namespace {

std::uint64_t mask(int lo, int hi) {  // bits [lo, hi) of one word, hi <= 64
  const std::uint64_t upper = hi == 64 ? ~0ull : (1ull << hi) - 1;
  return upper & ~((1ull << lo) - 1);
}

}  // namespace

bool all_set(const std::uint64_t* words, int begin, int len) {
  const int end = begin + len;
  int w = begin >> 6;
  const int last = (end - 1) >> 6;
  if (w == last) {
    const auto m = mask(begin & 63, end - (w << 6));
    return (words[w] & m) == m;
  }
  const auto head = mask(begin & 63, 64);
  if ((words[w] & head) != head) return false;
  for (++w; w < last; ++w) {
    if (words[w] != ~0ull) return false;
  }
  const auto tail = mask(0, end - (last << 6));
  return (words[last] & tail) == tail;
}

void clear_range(std::uint64_t* words, int begin, int len) {
  const int end = begin + len;
  int w = begin >> 6;
  const int last = (end - 1) >> 6;
  if (w == last) {
    words[w] &= ~mask(begin & 63, end - (w << 6));
    return;
  }
  words[w] &= ~mask(begin & 63, 64);
  for (++w; w < last; ++w) words[w] = 0;
  words[last] &= ~mask(0, end - (last << 6));
}

void fill_ones(std::uint64_t* words, int n) {
  const int full = n >> 6;
  for (int w = 0; w < full; ++w) words[w] = ~0ull;
  if (n & 63) words[full] = mask(0, n & 63);
}

int popcount(const std::uint64_t* words, int word_count) {
  int total = 0;
  for (int w = 0; w < word_count; ++w) total += std::popcount(words[w]);
  return total;
}

}  // namespace bits

NodeState NodeState::root(int n) {
  const int wps = bits::words_for(n);
  std::vector<std::uint64_t> words(2 * wps, 0);
  bits::fill_ones(words.data(), n);
  bits::fill_ones(words.data() + wps, n);
  return NodeState(n, std::move(words));
}

NodeState NodeState::from_strings(std::string_view bs1, std::string_view bs2) {
  if (bs1.size() != bs2.size()) {
    throw std::invalid_argument("bitstrings differ in length");
  }
  const int n = static_cast<int>(bs1.size());
  const int wps = bits::words_for(n);
  std::vector<std::uint64_t> words(2 * wps, 0);
  for (int j = 0; j < n; ++j) {
    for (int c = 0; c < 2; ++c) {
      const char bit = (c == 0 ? bs1 : bs2)[j];
      if (bit != '0' && bit != '1') {
        throw std::invalid_argument("bitstrings must hold only '0' and '1'");
      }
      if (bit == '1') words[c * wps + (j >> 6)] |= 1ull << (j & 63);
    }
  }
  return NodeState(n, std::move(words));
}

NodeState::NodeState(int n, std::vector<std::uint64_t> words)
    : n_(n), words_(std::move(words)) {
  if (static_cast<int>(words_.size()) != 2 * bits::words_for(n_)) {
    throw std::invalid_argument("word count does not match n");
  }
}

int NodeState::popcount1() const {
  return bits::popcount(words_.data(), bits::words_for(n_));
}

int NodeState::popcount2() const {
  const int wps = bits::words_for(n_);
  return bits::popcount(words_.data() + wps, wps);
}

std::string NodeState::to_string() const {
  std::string out;
  out.reserve(2 * n_ + 1);
  for (int j = 0; j < n_; ++j) out.push_back(uncovered1(j) ? '1' : '0');
  out.push_back('|');
  for (int j = 0; j < n_; ++j) out.push_back(uncovered2(j) ? '1' : '0');
  return out;
}

Transition transition_zero(const NodeState& state) { return {state, 0}; }

std::optional<Transition> transition_one(const NodeState& state,
                                         const Block& block) {
  const int wps = bits::words_for(state.n());
  const auto* words = state.words().data();
  if (!bits::all_set(words, block.k1, block.t) ||
      !bits::all_set(words + wps, block.k2, block.t)) {
    return std::nullopt;
  }
  std::vector<std::uint64_t> next(state.words().begin(), state.words().end());
  bits::clear_range(next.data(), block.k1, block.t);
  bits::clear_range(next.data() + wps, block.k2, block.t);
  return Transition{NodeState(state.n(), std::move(next)), 1 - block.t};
}

bool state_invariants_hold(const Instance& instance,
                           std::span<const std::uint64_t> words) {
  const int n = instance.n();
  const int wps = bits::words_for(n);
  const auto* bs1 = words.data();
  const auto* bs2 = words.data() + wps;
  if (bits::popcount(bs1, wps) != bits::popcount(bs2, wps)) return false;
  std::array<int, 256> balance{};
  for (int j = 0; j < n; ++j) {
    if (bits::test(bs1, j)) ++balance[static_cast<unsigned char>(instance.s1()[j])];
    if (bits::test(bs2, j)) --balance[static_cast<unsigned char>(instance.s2()[j])];
  }
  for (int b : balance) {
    if (b != 0) return false;
  }
  return true;
}

}  // namespace mcsp
