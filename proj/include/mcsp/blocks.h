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

#ifndef MCSP_BLOCKS_H_
#define MCSP_BLOCKS_H_

#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "mcsp/instance.h"

namespace mcsp {

// Equal substrings s1[k1, k1 + t) and s2[k2, k2 + t). Also used for the
// placed pieces of a partition, where t may be 1.
struct Block {
  int k1 = 0;
  int k2 = 0;
  int t = 0;

  friend bool operator==(const Block&, const Block&) = default;
};

std::ostream& operator<<(std::ostream& out, const Block& block);

// All blocks with t >= 2, nested sub-blocks included, in construction order:
// t descending, then k1 ascending, then k2 ascending.
using BlockSet = std::vector<Block>;

// Built from the longest-common-extension table, O(n^2) + O(|blocks|).
BlockSet enumerate_blocks(const Instance& instance);

// True iff the blocks share a position of s1 or a position of s2.
// Symmetric in its arguments.
bool overlaps(const Block& a, const Block& b);

// Puts blocks into construction order (see BlockSet).
BlockSet sort_blocks(std::vector<Block> blocks);

// Strict-weak order behind sort_blocks.
bool precedes(const Block& a, const Block& b);

// CSV dump with header "k1,k2,t".
std::string blocks_to_csv(std::span<const Block> blocks);

}  // namespace mcsp

#endif  // MCSP_BLOCKS_H_
