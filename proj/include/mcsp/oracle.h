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

#ifndef MCSP_ORACLE_H_
#define MCSP_ORACLE_H_

#include <cstdint>
#include <optional>
#include <stdexcept>

#include "mcsp/instance.h"
#include "mcsp/partition.h"

namespace mcsp {

// The oracle ran out of search nodes before proving optimality.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, int best_value)
      : std::runtime_error(what), best_value_(best_value) {}

  // Incumbent at the time the budget ran out; not proven optimal.
  int best_value() const { return best_value_; }

 private:
  int best_value_;
};

struct OracleOptions {
  std::optional<std::uint64_t> node_budget;
  // Off only to check that pruning never changes the answer.
  bool prune = true;
};

struct OracleResult {
  int value = 0;
  Partition partition;
  std::uint64_t nodes_explored = 0;
};

// Exhaustive depth-first search for a minimum common partition. Always
// extends the leftmost uncovered position of s1 with every feasible piece,
// singletons included. Branches are cut with an adjacency-count bound, which
// keeps n up to about 40 tractable on small alphabets.
OracleResult brute_force(const Instance& instance,
                         const OracleOptions& options = {});

}  // namespace mcsp

#endif  // MCSP_ORACLE_H_
