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

#include "mcsp/json_io.h"

namespace mcsp {

using nlohmann::json;

json partition_to_json(const Partition& partition) {
  json pieces = json::array();
  for (const auto& b : partition.pieces) pieces.push_back({b.k1, b.k2, b.t});
  return pieces;
}

Partition partition_from_json(const json& pieces) {
  Partition partition;
  for (const auto& piece : pieces) {
    if (!piece.is_array() || piece.size() != 3) {
      throw std::invalid_argument("partition piece must be [k1, k2, t]");
    }
    partition.pieces.push_back(
        {piece[0].get<int>(), piece[1].get<int>(), piece[2].get<int>()});
  }
  return partition;
}

json solve_result_to_json(const SolveResult& result, int n) {
  json out;
  out["value"] = result.value;
  if (result.width) {
    out["width"] = *result.width;
  } else {
    out["width"] = "exact";
  }
  out["n"] = n;
  out["blocks"] = result.stats.blocks_count;
  out["max_layer_width"] = result.stats.max_layer_width;
  out["elapsed_ms"] = result.stats.elapsed_ms;
  out["partition"] = partition_to_json(result.partition);
  return out;
}

json oracle_result_to_json(const OracleResult& result, int n,
                           double elapsed_ms) {
  return {{"value", result.value},
          {"width", "exact"},
          {"n", n},
          {"blocks", 0},
          {"max_layer_width", 0},
          {"elapsed_ms", elapsed_ms},
          {"nodes_explored", result.nodes_explored},
          {"partition", partition_to_json(result.partition)}};
}

}  // namespace mcsp
