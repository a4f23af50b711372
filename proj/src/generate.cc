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

#include "rainbowc4/generate.h"

#include <algorithm>
#include <array>
#include <utility>
#include <vector>

#include "rainbowc4/errors.h"

namespace rainbowc4 {
namespace {

void CheckOrder(int n) {
  if (n < 1) throw InputError("n must be at least 1");
}

void CheckProbability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw InputError("edge probability must lie in [0, 1]");
  }
}

EdgeColoredGraph ColorPairs(int n,
                            const std::vector<std::pair<Vertex, Vertex>>& pairs,
                            int palette, Rng& rng) {
  if (palette < 1) palette = std::max<int>(1, static_cast<int>(pairs.size()));
  std::uniform_int_distribution<int> pick(0, palette - 1);
  GraphBuilder builder(n);
  for (const auto& [u, v] : pairs) builder.AddEdge(u, v, pick(rng));
  return std::move(builder).Build();
}

}  // namespace

EdgeColoredGraph RandomColoredGraph(int n, double edge_probability,
                                    int palette, Rng& rng) {
  CheckOrder(n);
  CheckProbability(edge_probability);
  std::bernoulli_distribution coin(edge_probability);
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng)) pairs.emplace_back(u, v);
    }
  }
  return ColorPairs(n, pairs, palette, rng);
}

EdgeColoredGraph RandomColoredBipartite(int left, int right,
                                        double edge_probability, int palette,
                                        Rng& rng) {
  if (left < 0 || right < 0) throw InputError("negative part size");
  CheckOrder(left + right);
  CheckProbability(edge_probability);
  std::bernoulli_distribution coin(edge_probability);
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex u = 0; u < left; ++u) {
    for (Vertex v = left; v < left + right; ++v) {
      if (coin(rng)) pairs.emplace_back(u, v);
    }
  }
  return ColorPairs(left + right, pairs, palette, rng);
}

EdgeColoredGraph ProperComplete(int n) {
  CheckOrder(n);
  GraphBuilder builder(n);
  if (n % 2 == 1) {
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) builder.AddEdge(u, v, (u + v) % n);
    }
  } else {
    // Vertices 0..n-2 on a circle, n-1 at the hub.
    const int k = n - 1;
    for (Vertex u = 0; u < k; ++u) {
      for (Vertex v = u + 1; v < k; ++v) builder.AddEdge(u, v, (u + v) % k);
      builder.AddEdge(u, k, (2 * u) % k);
    }
  }
  return std::move(builder).Build();
}

EdgeColoredGraph RainbowComplete(int n) {
  CheckOrder(n);
  GraphBuilder builder(n);
  Color c = 0;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) builder.AddEdge(u, v, c++);
  }
  return std::move(builder).Build();
}

EdgeColoredGraph MonochromaticComplete(int n) {
  CheckOrder(n);
  GraphBuilder builder(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) builder.AddEdge(u, v, 0);
  }
  return std::move(builder).Build();
}

EdgeColoredGraph SampleHuntGraph(int n, Rng& rng) {
  CheckOrder(n);
  constexpr std::array<double, 3> kProbabilities{0.3, 0.5, 0.8};
  std::uniform_int_distribution<int> three(0, 2);
  const double p = kProbabilities[three(rng)];
  const int palette_mode = three(rng);

  std::bernoulli_distribution coin(p);
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng)) pairs.emplace_back(u, v);
    }
  }
  const int m = static_cast<int>(pairs.size());
  const int palette = palette_mode == 0 ? 2 : palette_mode == 1 ? m / 2 : m;
  return ColorPairs(n, pairs, std::max(1, palette), rng);
}

std::optional<GeneratorModel> ParseModel(std::string_view name) {
  for (GeneratorModel m : kAllModels) {
    if (ModelName(m) == name) return m;
  }
  return std::nullopt;
}

std::string ModelName(GeneratorModel model) {
  switch (model) {
    case GeneratorModel::kErdosRenyi: return "er";
    case GeneratorModel::kHunt: return "hunt";
    case GeneratorModel::kBipartite: return "bipartite";
    case GeneratorModel::kProperComplete: return "proper-complete";
    case GeneratorModel::kRainbowComplete: return "rainbow-complete";
    case GeneratorModel::kMonochromaticComplete: return "mono-complete";
  }
  return "unknown";
}

EdgeColoredGraph Generate(const GenerateOptions& options) {
  Rng rng(options.seed);
  const int n = options.n;
  switch (options.model) {
    case GeneratorModel::kErdosRenyi:
      return RandomColoredGraph(n, options.edge_probability, options.palette,
                                rng);
    case GeneratorModel::kHunt:
      return SampleHuntGraph(n, rng);
    case GeneratorModel::kBipartite:
      return RandomColoredBipartite(n / 2, n - n / 2, options.edge_probability,
                                    options.palette, rng);
    case GeneratorModel::kProperComplete:
      return ProperComplete(n);
    case GeneratorModel::kRainbowComplete:
      return RainbowComplete(n);
    case GeneratorModel::kMonochromaticComplete:
      return MonochromaticComplete(n);
  }
  throw InputError("unknown generator model");
}

}  // namespace rainbowc4
