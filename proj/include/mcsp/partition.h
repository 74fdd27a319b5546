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

#ifndef MCSP_PARTITION_H_
#define MCSP_PARTITION_H_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mcsp/blocks.h"
#include "mcsp/instance.h"

namespace mcsp {

// A common partition: placed pieces (k1, k2, t), singletons included.
struct Partition {
  std::vector<Block> pieces;

  int value() const { return static_cast<int>(pieces.size()); }
};

// Outcome of validate_partition. On failure `clause` names the first
// violated condition and `piece` the offending piece, when there is one.
//
// Clauses: "empty_piece", "out_of_range", "substring_mismatch",
// "s1_overlap", "s2_overlap", "s1_uncovered", "s2_uncovered".
struct PartitionCheck {
  bool ok = true;
  std::string clause;
  std::optional<std::size_t> piece;
  std::string message;

  explicit operator bool() const { return ok; }
};

PartitionCheck validate_partition(const Instance& instance,
                                  const Partition& partition);

// Substrings the pieces read from s1, sorted.
std::vector<std::string> piece_strings(const Instance& instance,
                                       const Partition& partition);

// Adds length-1 pieces for every position not covered by `chosen`. Each
// uncovered s1 position, left to right, is paired with the leftmost
// uncovered s2 position holding the same symbol. Throws std::logic_error if
// the uncovered symbol multisets differ.
Partition complete_with_singletons(const Instance& instance,
                                   std::vector<Block> chosen);

}  // namespace mcsp

#endif  // MCSP_PARTITION_H_
