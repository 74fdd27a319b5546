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

#include "mcsp/partition.h"

#include <algorithm>
#include <array>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace mcsp {
namespace {

PartitionCheck fail(std::string clause, std::optional<std::size_t> piece,
                    const std::string& detail) {
  std::ostringstream message;
  message << clause;
  if (piece) message << " at piece " << *piece;
  if (!detail.empty()) message << ": " << detail;
  return {false, std::move(clause), piece, message.str()};
}

}  // namespace

PartitionCheck validate_partition(const Instance& instance,
                                  const Partition& partition) {
  const int n = instance.n();
  std::vector<int> owner1(n, -1);
  std::vector<int> owner2(n, -1);
  for (std::size_t p = 0; p < partition.pieces.size(); ++p) {
    const Block& b = partition.pieces[p];
    std::ostringstream text;
    text << b;
    if (b.t < 1) return fail("empty_piece", p, text.str());
    if (b.k1 < 0 || b.k2 < 0 || b.k1 > n - b.t || b.k2 > n - b.t) {
      return fail("out_of_range", p, text.str());
    }
    if (instance.s1().compare(b.k1, b.t, instance.s2(), b.k2, b.t) != 0) {
      return fail("substring_mismatch", p, text.str());
    }
    for (int d = 0; d < b.t; ++d) {
      if (owner1[b.k1 + d] >= 0) {
        return fail("s1_overlap", p,
                    "position " + std::to_string(b.k1 + d) +
                        " already covered by piece " +
                        std::to_string(owner1[b.k1 + d]));
      }
      owner1[b.k1 + d] = static_cast<int>(p);
      if (owner2[b.k2 + d] >= 0) {
        return fail("s2_overlap", p,
                    "position " + std::to_string(b.k2 + d) +
                        " already covered by piece " +
                        std::to_string(owner2[b.k2 + d]));
      }
      owner2[b.k2 + d] = static_cast<int>(p);
    }
  }
  for (int j = 0; j < n; ++j) {
    if (owner1[j] < 0) {
      return fail("s1_uncovered", std::nullopt, "position " + std::to_string(j));
    }
  }
  for (int j = 0; j < n; ++j) {
    if (owner2[j] < 0) {
      return fail("s2_uncovered", std::nullopt, "position " + std::to_string(j));
    }
  }
  return {};
}

std::vector<std::string> piece_strings(const Instance& instance,
                                       const Partition& partition) {
  std::vector<std::string> out;
  out.reserve(partition.pieces.size());
  for (const auto& b : partition.pieces) out.push_back(instance.s1().substr(b.k1, b.t));
  std::sort(out.begin(), out.end());
  return out;
}

Partition complete_with_singletons(const Instance& instance,
                                   std::vector<Block> chosen) {
  const int n = instance.n();
  std::vector<bool> covered1(n, false);
  std::vector<bool> covered2(n, false);
  for (const auto& b : chosen) {
    for (int d = 0; d < b.t; ++d) {
      covered1[b.k1 + d] = true;
      covered2[b.k2 + d] = true;
    }
  }
  std::array<std::deque<int>, 256> free2;
  for (int j = 0; j < n; ++j) {
    if (!covered2[j]) free2[static_cast<unsigned char>(instance.s2()[j])].push_back(j);
  }
  Partition partition{std::move(chosen)};
  for (int j = 0; j < n; ++j) {
    if (covered1[j]) continue;
    auto& queue = free2[static_cast<unsigned char>(instance.s1()[j])];
    if (queue.empty()) {
      throw std::logic_error("uncovered symbols of s1 and s2 differ");
    }
    partition.pieces.push_back({j, queue.front(), 1});
    queue.pop_front();
  }
  return partition;
}

}  // namespace mcsp
