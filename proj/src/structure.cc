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

#include "rainbowc4/structure.h"

#include <algorithm>
#include <queue>

namespace rainbowc4 {

std::optional<std::vector<int>> TwoColoring(const EdgeColoredGraph& g) {
  std::vector<int> side(g.order(), -1);
  std::queue<Vertex> frontier;
  for (Vertex root = 0; root < g.order(); ++root) {
    if (side[root] != -1) continue;
    side[root] = 0;
    frontier.push(root);
    while (!frontier.empty()) {
      const Vertex v = frontier.front();
      frontier.pop();
      for (const Neighbor& nb : g.neighbors(v)) {
        if (side[nb.vertex] == -1) {
          side[nb.vertex] = 1 - side[v];
          frontier.push(nb.vertex);
        } else if (side[nb.vertex] == side[v]) {
          return std::nullopt;
        }
      }
    }
  }
  return side;
}

bool IsBipartite(const EdgeColoredGraph& g) {
  return TwoColoring(g).has_value();
}

bool HasTriangle(const EdgeColoredGraph& g) {
  for (const Edge& e : g.edges()) {
    auto a = g.neighbors(e.u);
    auto b = g.neighbors(e.v);
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
      if (i->vertex < j->vertex) {
        ++i;
      } else if (j->vertex < i->vertex) {
        ++j;
      } else {
        return true;
      }
    }
  }
  return false;
}

bool IsComplete(const EdgeColoredGraph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  return g.size() == n * (n - 1) / 2;
}

std::optional<int> Girth(const EdgeColoredGraph& g) {
  // BFS from every vertex; a non-tree edge closing at depths (du, dv) bounds
  // the girth by du + dv + 1, and the minimum over all roots is exact.
  int best = -1;
  std::vector<int> depth(g.order());
  std::vector<Vertex> parent(g.order());
  for (Vertex root = 0; root < g.order(); ++root) {
    std::fill(depth.begin(), depth.end(), -1);
    depth[root] = 0;
    parent[root] = -1;
    std::queue<Vertex> frontier;
    frontier.push(root);
    while (!frontier.empty()) {
      const Vertex v = frontier.front();
      frontier.pop();
      for (const Neighbor& nb : g.neighbors(v)) {
        const Vertex w = nb.vertex;
        if (depth[w] == -1) {
          depth[w] = depth[v] + 1;
          parent[w] = v;
          frontier.push(w);
        } else if (parent[v] != w) {
          const int len = depth[v] + depth[w] + 1;
          if (best == -1 || len < best) best = len;
        }
      }
    }
  }
  if (best == -1) return std::nullopt;
  return best;
}

}  // namespace rainbowc4
