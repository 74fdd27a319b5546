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

#ifndef MCSP_JSON_IO_H_
#define MCSP_JSON_IO_H_

#include <json.hpp>

#include "mcsp/dd_solver.h"
#include "mcsp/oracle.h"
#include "mcsp/partition.h"

namespace mcsp {

// [[k1, k2, t], ...]
nlohmann::json partition_to_json(const Partition& partition);
Partition partition_from_json(const nlohmann::json& pieces);

// {"value", "width" (int or "exact"), "n", "blocks", "max_layer_width",
//  "elapsed_ms", "partition"}
nlohmann::json solve_result_to_json(const SolveResult& result, int n);

// Same keys as a solve result, plus "nodes_explored"; "blocks" and
// "max_layer_width" are 0 since the oracle builds no diagram.
nlohmann::json oracle_result_to_json(const OracleResult& result, int n,
                                     double elapsed_ms);

}  // namespace mcsp

#endif  // MCSP_JSON_IO_H_
