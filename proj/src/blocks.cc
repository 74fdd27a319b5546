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

#include "mcsp/blocks.h"

#include <algorithm>
#include <sstream>

namespace mcsp {

std::ostream& operator<<(std::ostream& out, const Block& block) {
  return out << "(" << block.k1 << "," << block.k2 << "," << block.t << ")";
}

BlockSet enumerate_blocks(const Instance& instance) {
  const auto& s1 = instance.s1();
  const auto& s2 = instance.s2();
  const int n = instance.n();

  // extension[i][j]: length of the longest common prefix of s1[i:] and s2[j:].
  // Rows are filled bottom-up, so only the row below is needed.
  std::vector<int> below(n + 1, 0);
  std::vector<int> row(n + 1, 0);
  std::vector<std::vector<Block>> by_length(n + 1);
  for (int i = n - 1; i >= 0; --i) {
    for (int j = n - 1; j >= 0; --j) {
      row[j] = s1[i] == s2[j] ? below[j + 1] + 1 : 0;
    }
    for (int j = 0; j < n; ++j) {
      for (int t = 2; t <= row[j]; ++t) by_length[t].push_back({i, j, t});
    }
    std::swap(row, below);
  }

  // Buckets were filled k1 descending, k2 ascending; a stable sort on k1
  // restores (k1, k2) order.
  BlockSet blocks;
  for (int t = n; t >= 2; --t) {
    auto& bucket = by_length[t];
    std::stable_sort(bucket.begin(), bucket.end(),
                     [](const Block& a, const Block& b) { return a.k1 < b.k1; });
    blocks.insert(blocks.end(), bucket.begin(), bucket.end());
  }
  return blocks;
}

bool overlaps(const Block& a, const Block& b) {
  const bool in_s1 = a.k1 - b.t < b.k1 && b.k1 < a.k1 + a.t;
  const bool in_s2 = a.k2 - b.t < b.k2 && b.k2 < a.k2 + a.t;
  return in_s1 || in_s2;
}

bool precedes(const Block& a, const Block& b) {
  if (a.t != b.t) return a.t > b.t;
  if (a.k1 != b.k1) return a.k1 < b.k1;
  return a.k2 < b.k2;
}

BlockSet sort_blocks(std::vector<Block> blocks) {
  std::sort(blocks.begin(), blocks.end(), precedes);
  return blocks;
}

std::string blocks_to_csv(std::span<const Block> blocks) {
  std::ostringstream out;
  out << "k1,k2,t\n";
  for (const auto& b : blocks) out << b.k1 << "," << b.k2 << "," << b.t << "\n";
  return out.str();
}

}  // namespace mcsp
