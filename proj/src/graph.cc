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

#include "rainbowc4/graph.h"

#include <algorithm>
#include <limits>
#include <string>

#include "rainbowc4/errors.h"

namespace rainbowc4 {
namespace {

void CheckVertex(const EdgeColoredGraph& g, Vertex v) {
  if (!g.contains(v)) {
    throw InputError("vertex " + std::to_string(v) + " out of range [0, " +
                     std::to_string(g.order()) + ")");
  }
}

std::uint64_t PairKey(Vertex u, Vertex v) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
         static_cast<std::uint32_t>(v);
}

}  // namespace

ColorSet::ColorSet(std::vector<Color> colors) : colors_(std::move(colors)) {
  std::sort(colors_.begin(), colors_.end());
  colors_.erase(std::unique(colors_.begin(), colors_.end()), colors_.end());
}

bool ColorSet::contains(Color c) const {
  return std::binary_search(colors_.begin(), colors_.end(), c);
}

ColorSet ColorSet::Union(const ColorSet& other) const {
  ColorSet out;
  out.colors_.reserve(colors_.size() + other.colors_.size());
  std::set_union(colors_.begin(), colors_.end(), other.colors_.begin(),
                 other.colors_.end(), std::back_inserter(out.colors_));
  return out;
}

EdgeColoredGraph EdgeColoredGraph::FromEdges(int n,
                                             std::span<const Edge> edges) {
  GraphBuilder builder(n);
  for (const Edge& e : edges) builder.AddEdge(e.u, e.v, e.color);
  return std::move(builder).Build();
}

std::span<const Neighbor> EdgeColoredGraph::neighbors(Vertex v) const {
  CheckVertex(*this, v);
  return adjacency_[v];
}

int EdgeColoredGraph::degree(Vertex v) const {
  return static_cast<int>(neighbors(v).size());
}

std::optional<Color> EdgeColoredGraph::color(Vertex u, Vertex v) const {
  CheckVertex(*this, u);
  CheckVertex(*this, v);
  const auto& adj = adjacency_[u];
  auto it = std::lower_bound(
      adj.begin(), adj.end(), v,
      [](const Neighbor& nb, Vertex x) { return nb.vertex < x; });
  if (it == adj.end() || it->vertex != v) return std::nullopt;
  return it->color;
}

EdgeColoredGraph EdgeColoredGraph::Recolored(
    std::span<const Color> colors) const {
  if (colors.size() != edges_.size()) {
    throw InputError("recoloring needs " + std::to_string(edges_.size()) +
                     " colors, got " + std::to_string(colors.size()));
  }
  GraphBuilder builder(n_);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    builder.AddEdge(edges_[i].u, edges_[i].v, colors[i]);
  }
  return std::move(builder).Build();
}

GraphBuilder::GraphBuilder(int n) : n_(n) {
  if (n < 1) {
    throw InputError("graph needs at least one vertex, got n=" +
                     std::to_string(n));
  }
}

GraphBuilder& GraphBuilder::AddEdge(Vertex u, Vertex v, Color color) {
  if (u < 0 || u >= n_ || v < 0 || v >= n_) {
    throw InputError("edge " + std::to_string(u) + "-" + std::to_string(v) +
                     " has an endpoint outside [0, " + std::to_string(n_) +
                     ")");
  }
  if (u == v) {
    throw InputError("self-loop at vertex " + std::to_string(u));
  }
  if (color < 0) {
    throw InputError("negative color " + std::to_string(color));
  }
  if (u > v) std::swap(u, v);
  if (!seen_.insert(PairKey(u, v)).second) {
    throw InputError("duplicate edge " + std::to_string(u) + "-" +
                     std::to_string(v));
  }
  edges_.push_back({u, v, color});
  return *this;
}

EdgeColoredGraph GraphBuilder::Build() && {
  EdgeColoredGraph g;
  g.n_ = n_;
  g.edges_ = std::move(edges_);
  std::sort(g.edges_.begin(), g.edges_.end(), [](const Edge& a, const Edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  g.adjacency_.assign(n_, {});
  for (const Edge& e : g.edges_) {
    g.adjacency_[e.u].push_back({e.v, e.color});
    g.adjacency_[e.v].push_back({e.u, e.color});
  }
  for (auto& adj : g.adjacency_) {
    std::sort(adj.begin(), adj.end(), [](const Neighbor& a, const Neighbor& b) {
      return a.vertex < b.vertex;
    });
  }
  return g;
}

ColorSet ColorNeighborhood(const EdgeColoredGraph& g, Vertex v) {
  std::vector<Color> colors;
  for (const Neighbor& nb : g.neighbors(v)) colors.push_back(nb.color);
  return ColorSet(std::move(colors));
}

ColorSet RestrictedColorNeighborhood(const EdgeColoredGraph& g, Vertex v,
                                     std::span<const Vertex> subset) {
  CheckVertex(g, v);
  std::vector<bool> in_subset(g.order(), false);
  for (Vertex s : subset) {
    CheckVertex(g, s);
    in_subset[s] = true;
  }
  std::vector<Color> colors;
  for (const Neighbor& nb : g.neighbors(v)) {
    if (in_subset[nb.vertex]) colors.push_back(nb.color);
  }
  return ColorSet(std::move(colors));
}

std::size_t ColorDegree(const EdgeColoredGraph& g, Vertex v) {
  return ColorNeighborhood(g, v).size();
}

std::size_t PairwiseColorUnion(const EdgeColoredGraph& g, Vertex u, Vertex v) {
  CheckVertex(g, u);
  CheckVertex(g, v);
  if (u == v) throw InputError("pairwise color union needs distinct vertices");
  return ColorNeighborhood(g, u).Union(ColorNeighborhood(g, v)).size();
}

std::size_t MinPairwiseColorUnion(const EdgeColoredGraph& g) {
  if (g.order() < 2) {
    throw InputError("pairwise color union needs at least two vertices");
  }
  std::vector<ColorSet> cn;
  cn.reserve(g.order());
  for (Vertex v = 0; v < g.order(); ++v) cn.push_back(ColorNeighborhood(g, v));
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      best = std::min(best, cn[u].Union(cn[v]).size());
    }
  }
  return best;
}

std::size_t MinColorDegree(const EdgeColoredGraph& g) {
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (Vertex v = 0; v < g.order(); ++v) best = std::min(best, ColorDegree(g, v));
  return best;
}

}  // namespace rainbowc4
