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

#ifndef MCSP_GENERATOR_H_
#define MCSP_GENERATOR_H_

#include <cstdint>
#include <optional>
#include <string_view>

#include "mcsp/instance.h"

namespace mcsp {

enum class SymbolDistribution {
  kLinear,  // uniform over the alphabet
  kSkewed,  // symbol with 1-based index i drawn with probability i / sum(1..k)
};

std::string_view to_string(SymbolDistribution distribution);
std::optional<SymbolDistribution> parse_distribution(std::string_view name);

struct GeneratorConfig {
  int n = 1;
  int alphabet_size = 1;
  SymbolDistribution distribution = SymbolDistribution::kLinear;
  std::uint64_t seed = 0;
};

// Name of the pseudo-random engine behind generate_instance, for metadata.
inline constexpr std::string_view kGeneratorEngine = "mt19937_64";

// Largest alphabet the generator supports; symbols are 'A', 'B', ... '~'.
inline constexpr int kMaxGeneratedAlphabet = '~' - 'A' + 1;

// Draws s1 position-by-position from the configured distribution and sets s2
// to a Fisher-Yates shuffle of s1. Deterministic per config on every
// platform. Throws std::invalid_argument on an out-of-range config.
Instance generate_instance(const GeneratorConfig& config);

}  // namespace mcsp

#endif  // MCSP_GENERATOR_H_
