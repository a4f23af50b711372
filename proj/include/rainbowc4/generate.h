// Copyright 2026 The rainbowc4 Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RAINBOWC4_GENERATE_H_
#define RAINBOWC4_GENERATE_H_

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>

#include "rainbowc4/graph.h"

namespace rainbowc4 {

using Rng = std::mt19937_64;

// Erdős–Rényi G(n, edge_probability) with colors uniform on [0, palette).
EdgeColoredGraph RandomColoredGraph(int n, double edge_probability,
                                    int palette, Rng& rng);

// Random bipartite graph with parts [0, left) and [left, left + right).
EdgeColoredGraph RandomColoredBipartite(int left, int right,
                                        double edge_probability, int palette,
                                        Rng& rng);

// K_n with a proper coloring by the round-robin 1-factorization: n - 1
// colors for even n, n colors for odd n.
EdgeColoredGraph ProperComplete(int n);
EdgeColoredGraph RainbowComplete(int n);
EdgeColoredGraph MonochromaticComplete(int n);

// Sample model used by the Problem 9 hunt: edge probability drawn from
// {0.3, 0.5, 0.8}, palette size from {2, floor(m/2), m} (at least 1).
EdgeColoredGraph SampleHuntGraph(int n, Rng& rng);

enum class GeneratorModel {
  kErdosRenyi,
  kHunt,
  kBipartite,
  kProperComplete,
  kRainbowComplete,
  kMonochromaticComplete,
};

inline constexpr GeneratorModel kAllModels[] = {
    GeneratorModel::kErdosRenyi,      GeneratorModel::kHunt,
    GeneratorModel::kBipartite,       GeneratorModel::kProperComplete,
    GeneratorModel::kRainbowComplete, GeneratorModel::kMonochromaticComplete,
};

// "er", "hunt", "bipartite", "proper-complete", "rainbow-complete",
// "mono-complete".
std::optional<GeneratorModel> ParseModel(std::string_view name);
std::string ModelName(GeneratorModel model);

struct GenerateOptions {
  GeneratorModel model = GeneratorModel::kErdosRenyi;
  int n = 10;
  double edge_probability = 0.5;
  // 0 selects the number of edges (a rainbow-capable palette).
  int palette = 0;
  std::uint64_t seed = 0;
};

EdgeColoredGraph Generate(const GenerateOptions& options);

}  // namespace rainbowc4

#endif  // RAINBOWC4_GENERATE_H_
