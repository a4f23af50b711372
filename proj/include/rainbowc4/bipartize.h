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

#ifndef RAINBOWC4_BIPARTIZE_H_
#define RAINBOWC4_BIPARTIZE_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rainbowc4/graph.h"

namespace rainbowc4 {

// A split of V(G) into a left part X and a right part Y. The spanning
// bipartite subgraph H it induces is the set of all X-Y edges.
class Bipartition {
 public:
  // side[v] == 0 puts v on the left, 1 on the right.
  static Bipartition FromSides(std::vector<int> side);
  // Throws InputError unless left and right partition {0..n-1}.
  static Bipartition FromParts(int n, std::span<const Vertex> left,
                               std::span<const Vertex> right);
  // Even ids left, odd ids right.
  static Bipartition Parity(int n);
  // Independent fair coin per vertex.
  static Bipartition Random(int n, std::uint64_t seed);

  int order() const { return static_cast<int>(side_.size()); }
  int side(Vertex v) const { return side_.at(v); }
  bool crosses(Vertex u, Vertex v) const { return side(u) != side(v); }

  std::vector<Vertex> left() const;
  std::vector<Vertex> right() const;

  // Moves v to the other part.
  void Flip(Vertex v);

  friend bool operator==(const Bipartition&, const Bipartition&) = default;

 private:
  explicit Bipartition(std::vector<std::uint8_t> side)
      : side_(std::move(side)) {}
  std::vector<std::uint8_t> side_;
};

// d_H(v): neighbors of v across the split.
int CrossDegree(const EdgeColoredGraph& g, const Bipartition& b, Vertex v);
// d^c_H(v): distinct colors on v's cross edges.
std::size_t CrossColorDegree(const EdgeColoredGraph& g, const Bipartition& b,
                             Vertex v);
// |E(H)|.
std::size_t CutSize(const EdgeColoredGraph& g, const Bipartition& b);

// f(H) = |E(H)| + sum_v d^c_H(v). Throws InputError if b does not cover
// exactly the vertices of g.
long long Potential(const EdgeColoredGraph& g, const Bipartition& b);

struct SearchMove {
  Vertex vertex = 0;
  long long potential_before = 0;
  long long potential_after = 0;

  friend bool operator==(const SearchMove&, const SearchMove&) = default;
};

struct SearchTrace {
  std::vector<SearchMove> moves;
  long long final_potential = 0;
};

struct Lemma7Result {
  Bipartition partition;
  SearchTrace trace;
};

// Least vertex with 2 d^c_H(v) + 3 d_H(v) < d^c_G(v) + d_G(v), if any.
std::optional<Vertex> FindLemma7Violation(const EdgeColoredGraph& g,
                                          const Bipartition& b);

// Local search for a split whose cross subgraph H satisfies
//   2 d^c_H(v) + 3 d_H(v) >= d^c_G(v) + d_G(v)   for every v.
// While a violator exists, the least one switches sides. Each switch raises
// f(H) by at least d_G(w) + d^c_G(w) - 2 d^c_H(w) - 3 d_H(w) > 0, and
// f <= 3|E|, so the search stops after at most 3|E| moves. It stops at the
// first split with no violator; f need not be maximal there.
Lemma7Result Lemma7Bipartize(const EdgeColoredGraph& g);
Lemma7Result Lemma7Bipartize(const EdgeColoredGraph& g, Bipartition initial);

// Least vertex with 2 d_H(v) < d_G(v), if any.
std::optional<Vertex> FindErdosViolation(const EdgeColoredGraph& g,
                                         const Bipartition& b);

// Classical max-cut local search: switch the least vertex having more
// same-side than cross neighbors until none remains. The result satisfies
// d_H(v) >= d_G(v) / 2 for all v.
Bipartition ErdosBipartize(const EdgeColoredGraph& g);
Bipartition ErdosBipartize(const EdgeColoredGraph& g, Bipartition initial);

// One line per move: "move <v> <f_before> <f_after>".
std::string FormatTrace(const SearchTrace& trace);

}  // namespace rainbowc4

#endif  // RAINBOWC4_BIPARTIZE_H_
