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

#ifndef RAINBOWC4_TESTS_TEST_GRAPHS_H_
#define RAINBOWC4_TESTS_TEST_GRAPHS_H_

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <random>
#include <set>
#include <tuple>
#include <vector>

#include "rainbowc4/generate.h"
#include "rainbowc4/graph.h"

namespace rainbowc4::testing {

inline EdgeColoredGraph Make(int n,
                             std::initializer_list<std::tuple<int, int, Color>> es) {
  GraphBuilder b(n);
  for (const auto& [u, v, c] : es) b.AddEdge(u, v, c);
  return std::move(b).Build();
}

// K4 with edges 01,02,03,12,13,23 colored 1..6.
inline EdgeColoredGraph RainbowK4() {
  return Make(4, {{0, 1, 1}, {0, 2, 2}, {0, 3, 3}, {1, 2, 4}, {1, 3, 5},
                  {2, 3, 6}});
}

// Perfect matchings {01,23}, {02,13}, {03,12} colored 0, 1, 2.
inline EdgeColoredGraph ProperThreeColoredK4() {
  return Make(4, {{0, 1, 0}, {2, 3, 0}, {0, 2, 1}, {1, 3, 1}, {0, 3, 2},
                  {1, 2, 2}});
}

inline EdgeColoredGraph MonoComplete(int n, Color c = 1) {
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) b.AddEdge(u, v, c);
  return std::move(b).Build();
}

// Cycle 0-1-...-(k-1)-0 with edge (i, i+1) colored colors[i].
inline EdgeColoredGraph CycleGraph(std::vector<Color> colors) {
  const int k = static_cast<int>(colors.size());
  GraphBuilder b(k);
  for (int i = 0; i < k; ++i) b.AddEdge(i, (i + 1) % k, colors[i]);
  return std::move(b).Build();
}

// Mixed random model for property tests: sparse-to-dense edges and few to
// many colors.
inline EdgeColoredGraph RandomGraph(std::uint64_t seed, int min_n, int max_n) {
  Rng rng(seed);
  const int n = std::uniform_int_distribution<int>(min_n, max_n)(rng);
  const double p = std::uniform_real_distribution<double>(0.1, 1.0)(rng);
  const int palette = std::uniform_int_distribution<int>(1, n * n / 2 + 1)(rng);
  return RandomColoredGraph(n, p, palette, rng);
}

// Test-side reference for CN(u) ∪ CN(v) straight from the edge list.
inline std::size_t NaiveUnion(const EdgeColoredGraph& g, Vertex u, Vertex v) {
  std::set<Color> s;
  for (const Edge& e : g.edges()) {
    if (e.u == u || e.v == u || e.u == v || e.v == v) s.insert(e.color);
  }
  return s.size();
}

inline EdgeColoredGraph Permuted(const EdgeColoredGraph& g,
                                 const std::vector<Vertex>& perm) {
  GraphBuilder b(g.order());
  for (const Edge& e : g.edges()) b.AddEdge(perm[e.u], perm[e.v], e.color);
  return std::move(b).Build();
}

}  // namespace rainbowc4::testing

#endif  // RAINBOWC4_TESTS_TEST_GRAPHS_H_
