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

#ifndef MCSP_NODE_STATE_H_
#define MCSP_NODE_STATE_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mcsp/blocks.h"
#include "mcsp/instance.h"

namespace mcsp {

namespace bits {

inline int words_for(int n) { return (n + 63) / 64; }

// True iff bits [begin, begin + len) of `words` are all set.
bool all_set(const std::uint64_t* words, int begin, int len);

// Clears bits [begin, begin + len).
void clear_range(std::uint64_t* words, int begin, int len);

// Sets bits [0, n), leaving the padding bits of the last word clear.
void fill_ones(std::uint64_t* words, int n);

int popcount(const std::uint64_t* words, int word_count);

inline bool test(const std::uint64_t* words, int j) {
  return (words[j >> 6] >> (j & 63)) & 1u;
}

}  // namespace bits

// Coverage of both strings: bit j of bs1 (bs2) is 1 iff position j of s1
// (s2) is not yet covered by a chosen block. Stored as one word array,
// bs1 words first, then bs2 words.
class NodeState {
 public:
  // (1^n, 1^n): nothing covered.
  static NodeState root(int n);

  // From two '0'/'1' strings of equal length; throws std::invalid_argument.
  static NodeState from_strings(std::string_view bs1, std::string_view bs2);

  // Adopts raw words laid out as described above.
  NodeState(int n, std::vector<std::uint64_t> words);

  int n() const { return n_; }
  bool uncovered1(int j) const { return bits::test(words_.data(), j); }
  bool uncovered2(int j) const {
    return bits::test(words_.data() + bits::words_for(n_), j);
  }
  int popcount1() const;
  int popcount2() const;

  std::span<const std::uint64_t> words() const { return words_; }

  // "bs1|bs2" as '0'/'1' characters.
  std::string to_string() const;

  friend bool operator==(const NodeState&, const NodeState&) = default;

 private:
  int n_;
  std::vector<std::uint64_t> words_;
};

struct Transition {
  NodeState state;
  int cost;
};

// Decision x_i = 0: the state is unchanged and the arc is free.
Transition transition_zero(const NodeState& state);

// Decision x_i = 1: defined iff every position the block touches is still
// uncovered in both strings. Clears those positions; cost 1 - t.
std::optional<Transition> transition_one(const NodeState& state,
                                         const Block& block);

// popcount(bs1) == popcount(bs2) and, per symbol, the uncovered positions of
// s1 and s2 hold the same counts.
bool state_invariants_hold(const Instance& instance,
                           std::span<const std::uint64_t> words);

}  // namespace mcsp

#endif  // MCSP_NODE_STATE_H_
