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

#include "mcsp/oracle.h"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>
#include <unordered_map>
#include <vector>

namespace mcsp {
namespace {

class Search {
 public:
  Search(const Instance& instance, const OracleOptions& options)
      : s1_(instance.s1()),
        s2_(instance.s2()),
        n_(instance.n()),
        options_(options),
        used1_(n_, false),
        used2_(n_, false) {
    const std::string alphabet = instance.alphabet();
    sigma_ = static_cast<int>(alphabet.size());
    for (int i = 0; i < sigma_; ++i) {
      rank_[static_cast<unsigned char>(alphabet[i])] = i;
    }
    // suffix_pairs_[p] counts adjacent symbol pairs inside s1[p..].
    suffix_pairs_.assign((n_ + 1) * sigma_ * sigma_, 0);
    for (int p = n_ - 2; p >= 0; --p) {
      std::copy_n(&suffix_pairs_[(p + 1) * sigma_ * sigma_], sigma_ * sigma_,
                  &suffix_pairs_[p * sigma_ * sigma_]);
      ++suffix_pairs_[p * sigma_ * sigma_ + pair1(p)];
    }
    free_pairs_.assign(sigma_ * sigma_, 0);
    for (int j = 0; j + 1 < n_; ++j) ++free_pairs_[pair2(j)];
  }

  OracleResult run() {
    descend(0);
    return {best_value_, Partition{best_}, nodes_};
  }

 private:
  void descend(int from) {
    if (options_.node_budget && nodes_ >= *options_.node_budget) {
      throw BudgetExceeded("oracle node budget of " +
                               std::to_string(*options_.node_budget) +
                               " exhausted",
                           best_value_);
    }
    ++nodes_;
    int p = from;
    while (p < n_ && used1_[p]) ++p;
    const int pieces = static_cast<int>(path_.size());
    if (p == n_) {
      if (pieces < best_value_) {
        best_value_ = pieces;
        best_.assign(path_.begin(), path_.end());
      }
      return;
    }
    if (options_.prune) {
      if (pieces + remaining_bound(p) >= best_value_) return;
      if (!seen_before(pieces)) return;
    }

    int longest = 0;
    while (p + longest < n_ && !used1_[p + longest]) ++longest;
    for (int t = longest; t >= 1; --t) {
      for (int k2 = 0; k2 + t <= n_; ++k2) {
        if (!fits(p, k2, t)) continue;
        mark(p, k2, t, true);
        path_.push_back({p, k2, t});
        descend(p + t);
        path_.pop_back();
        mark(p, k2, t, false);
      }
    }
  }

  bool fits(int k1, int k2, int t) const {
    for (int d = 0; d < t; ++d) {
      if (used2_[k2 + d] || s1_[k1 + d] != s2_[k2 + d]) return false;
    }
    return true;
  }

  // Each adjacency kept inside a piece must occur both in s1[p..] and
  // between two free positions of s2; every other one starts a new piece.
  int remaining_bound(int p) const {
    const int* suffix = &suffix_pairs_[p * sigma_ * sigma_];
    int kept = 0;
    for (int d = 0; d < sigma_ * sigma_; ++d) {
      kept += std::min(suffix[d], free_pairs_[d]);
    }
    return n_ - p - kept;
  }

  // The s1 cover is always a prefix as long as the s2 cover, so the s2 mask
  // identifies the subproblem. Returns false if it was already reached with
  // no more pieces.
  bool seen_before(int pieces) {
    if (n_ > 64) return true;
    const auto [it, inserted] = visited_.try_emplace(mask2_, pieces);
    if (inserted) {
      if (visited_.size() > kMaxVisited) visited_.clear();
      return true;
    }
    if (it->second <= pieces) return false;
    it->second = pieces;
    return true;
  }

  int pair1(int j) const {
    return rank_[static_cast<unsigned char>(s1_[j])] * sigma_ +
           rank_[static_cast<unsigned char>(s1_[j + 1])];
  }
  int pair2(int j) const {
    return rank_[static_cast<unsigned char>(s2_[j])] * sigma_ +
           rank_[static_cast<unsigned char>(s2_[j + 1])];
  }

  void set_used2(int j, bool value) {
    const int delta = value ? -1 : 1;
    if (j > 0 && !used2_[j - 1]) free_pairs_[pair2(j - 1)] += delta;
    if (j + 1 < n_ && !used2_[j + 1]) free_pairs_[pair2(j)] += delta;
    used2_[j] = value;
    if (n_ <= 64) mask2_ ^= std::uint64_t{1} << j;
  }

  void mark(int k1, int k2, int t, bool value) {
    for (int d = 0; d < t; ++d) {
      used1_[k1 + d] = value;
      set_used2(k2 + d, value);
    }
  }

  const std::string& s1_;
  const std::string& s2_;
  const int n_;
  const OracleOptions& options_;
  std::vector<bool> used1_;
  std::vector<bool> used2_;
  int sigma_ = 0;
  int rank_[256] = {};
  std::vector<int> suffix_pairs_;
  std::vector<int> free_pairs_;
  static constexpr std::size_t kMaxVisited = 1 << 22;
  std::uint64_t mask2_ = 0;
  std::unordered_map<std::uint64_t, int> visited_;
  std::vector<Block> path_;
  std::vector<Block> best_;
  int best_value_ = std::numeric_limits<int>::max();
  std::uint64_t nodes_ = 0;
};

}  // namespace

OracleResult brute_force(const Instance& instance,
                         const OracleOptions& options) {
  return Search(instance, options).run();
}

}  // namespace mcsp
