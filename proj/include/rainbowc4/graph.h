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

#ifndef RAINBOWC4_GRAPH_H_
#define RAINBOWC4_GRAPH_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_set>
#include <vector>

namespace rainbowc4 {

// Vertices are dense ids 0..n-1.
using Vertex = int;
// Colors are arbitrary nonnegative ids; no contiguity is assumed.
using Color = std::int64_t;

// An undirected colored edge, always stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  Color color = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Neighbor {
  Vertex vertex = 0;
  Color color = 0;
};

// A finite set of colors, stored sorted and duplicate-free.
class ColorSet {
 public:
  ColorSet() = default;
  explicit ColorSet(std::vector<Color> colors);

  std::size_t size() const { return colors_.size(); }
  bool empty() const { return colors_.empty(); }
  bool contains(Color c) const;

  auto begin() const { return colors_.begin(); }
  auto end() const { return colors_.end(); }
  const std::vector<Color>& values() const { return colors_; }

  ColorSet Union(const ColorSet& other) const;

  friend bool operator==(const ColorSet&, const ColorSet&) = default;

 private:
  std::vector<Color> colors_;
};

// A cycle given by its vertex sequence, closed implicitly (last -> first).
struct Cycle {
  std::vector<Vertex> vertices;

  std::size_t length() const { return vertices.size(); }

  friend bool operator==(const Cycle&, const Cycle&) = default;
  friend auto operator<=>(const Cycle&, const Cycle&) = default;
};

// Immutable simple graph with one color per edge. Construct through
// GraphBuilder or FromEdges; both reject loops, parallel edges, out-of-range
// endpoints and negative colors.
class EdgeColoredGraph {
 public:
  static EdgeColoredGraph FromEdges(int n, std::span<const Edge> edges);

  int order() const { return n_; }
  std::size_t size() const { return edges_.size(); }

  // Edges in canonical (min endpoint, max endpoint) order.
  std::span<const Edge> edges() const { return edges_; }
  // Neighbors of v sorted by vertex id.
  std::span<const Neighbor> neighbors(Vertex v) const;
  int degree(Vertex v) const;

  bool contains(Vertex v) const { return v >= 0 && v < n_; }
  bool adjacent(Vertex u, Vertex v) const { return color(u, v).has_value(); }
  std::optional<Color> color(Vertex u, Vertex v) const;

  // Same graph with edge i (canonical order) recolored to colors[i].
  EdgeColoredGraph Recolored(std::span<const Color> colors) const;

  friend bool operator==(const EdgeColoredGraph& a,
                         const EdgeColoredGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  friend class GraphBuilder;
  EdgeColoredGraph() = default;

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Neighbor>> adjacency_;
};

class GraphBuilder {
 public:
  // Throws InputError unless n >= 1.
  explicit GraphBuilder(int n);

  // Validates immediately; throws InputError on a loop, an out-of-range
  // endpoint, a negative color or a repeated pair.
  GraphBuilder& AddEdge(Vertex u, Vertex v, Color color);

  int order() const { return n_; }
  EdgeColoredGraph Build() &&;

 private:
  int n_;
  std::vector<Edge> edges_;
  std::unordered_set<std::uint64_t> seen_;
};

// CN(v): colors on edges incident to v.
ColorSet ColorNeighborhood(const EdgeColoredGraph& g, Vertex v);

// Colors on edges joining v to members of `subset`. Whether or not v itself
// belongs to `subset`, this is exactly the set of colors of edges vu, u in
// subset (a simple graph has no loop at v).
ColorSet RestrictedColorNeighborhood(const EdgeColoredGraph& g, Vertex v,
                                     std::span<const Vertex> subset);

std::size_t ColorDegree(const EdgeColoredGraph& g, Vertex v);

// |CN(u) ∪ CN(v)|. Throws InputError when u == v.
std::size_t PairwiseColorUnion(const EdgeColoredGraph& g, Vertex u, Vertex v);

// Minimum of |CN(u) ∪ CN(v)| over unordered pairs. Requires n >= 2.
std::size_t MinPairwiseColorUnion(const EdgeColoredGraph& g);

// δ^c(G), the minimum color degree.
std::size_t MinColorDegree(const EdgeColoredGraph& g);

}  // namespace rainbowc4

#endif  // RAINBOWC4_GRAPH_H_
