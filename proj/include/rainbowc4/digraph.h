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

#ifndef RAINBOWC4_DIGRAPH_H_
#define RAINBOWC4_DIGRAPH_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rainbowc4/graph.h"

namespace rainbowc4 {

struct Arc {
  Vertex from = 0;
  Vertex to = 0;

  friend bool operator==(const Arc&, const Arc&) = default;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

// Directed bipartite graph. Part A is [0, |A|), part B is [|A|, |A|+|B|).
// Every arc joins the two parts (either direction); each ordered pair
// appears at most once, so u->v and v->u may coexist.
class Digraph {
 public:
  // Throws InputError on an arc inside a part, an out-of-range endpoint or
  // a repeated ordered pair.
  static Digraph FromArcs(int left_size, int right_size,
                          std::span<const Arc> arcs);

  int left_size() const { return left_; }
  int right_size() const { return right_; }
  int order() const { return left_ + right_; }
  bool in_left(Vertex v) const { return v < left_; }

  // Sorted by (from, to).
  std::span<const Arc> arcs() const { return arcs_; }
  std::span<const Vertex> out(Vertex v) const { return out_.at(v); }
  std::span<const Vertex> in(Vertex v) const { return in_.at(v); }
  int out_degree(Vertex v) const { return static_cast<int>(out(v).size()); }
  bool has_arc(Vertex u, Vertex v) const;

  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.left_ == b.left_ && a.right_ == b.right_ && a.arcs_ == b.arcs_;
  }

 private:
  int left_ = 0;
  int right_ = 0;
  std::vector<Arc> arcs_;
  std::vector<std::vector<Vertex>> out_;
  std::vector<std::vector<Vertex>> in_;
};

// `.dcg` text format: header `dcg <|A|> <|B|> <arcs>`, then one `<u> <v>`
// line per arc u->v. '#' comments and blank lines are ignored.
Digraph ParseDcg(std::string_view text);
// Arcs in (from, to) order.
std::string SerializeDcg(const Digraph& d);

// Directed 4-cycle a->b->a'->b'->a (a != a' in A, b != b' in B), returned as
// the vertex sequence {a, b, a', b'}. For each ordered pair (a, a'), b ranges
// over out(a) ∩ in(a') and b' over out(a') ∩ in(a).
std::optional<Cycle> FindDirectedC4(const Digraph& d);

// Reference scan over all ordered 4-tuples (a, b, a', b'); returns the
// lexicographically least cycle.
std::optional<Cycle> BruteForceDirectedC4(const Digraph& d);

}  // namespace rainbowc4

#endif  // RAINBOWC4_DIGRAPH_H_
