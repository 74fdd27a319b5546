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

#include "mcsp/generator.h"

#include <limits>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>

namespace mcsp {
namespace {

// Unbiased draw from [0, bound) by rejection; std distributions are not
// bit-stable across standard library implementations.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t draw;
  do {
    draw = rng();
  } while (draw >= limit);
  return draw % bound;
}

}  // namespace

std::string_view to_string(SymbolDistribution distribution) {
  return distribution == SymbolDistribution::kLinear ? "linear" : "skewed";
}

std::optional<SymbolDistribution> parse_distribution(std::string_view name) {
  if (name == "linear") return SymbolDistribution::kLinear;
  if (name == "skewed") return SymbolDistribution::kSkewed;
  return std::nullopt;
}

Instance generate_instance(const GeneratorConfig& config) {
  if (config.n < 1) throw std::invalid_argument("n must be >= 1");
  if (config.alphabet_size < 1 || config.alphabet_size > kMaxGeneratedAlphabet) {
    throw std::invalid_argument("alphabet size must be in [1, " +
                                std::to_string(kMaxGeneratedAlphabet) + "]");
  }
  std::mt19937_64 rng(config.seed);
  const auto k = static_cast<std::uint64_t>(config.alphabet_size);

  std::string s1(static_cast<std::size_t>(config.n), 'A');
  for (char& symbol : s1) {
    std::uint64_t index;
    if (config.distribution == SymbolDistribution::kLinear) {
      index = bounded(rng, k);
    } else {
      // Symbol i (0-based) owns i + 1 of the k(k+1)/2 equally likely tickets.
      std::uint64_t ticket = bounded(rng, k * (k + 1) / 2);
      index = 0;
      while (ticket >= index + 1) {
        ticket -= index + 1;
        ++index;
      }
    }
    symbol = static_cast<char>('A' + index);
  }

  std::string s2 = s1;
  for (std::size_t i = s2.size() - 1; i > 0; --i) {
    std::swap(s2[i], s2[bounded(rng, i + 1)]);
  }
  return Instance(std::move(s1), std::move(s2));
}

}  // namespace mcsp
