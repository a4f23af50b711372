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

#include "rainbowc4/bipartize.h"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "rainbowc4/errors.h"

namespace rainbowc4 {
namespace {

void CheckCovers(const EdgeColoredGraph& g, const Bipartition& b) {
  if (b.order() != g.order()) {
    throw InputError("bipartition covers " + std::to_string(b.order()) +
                     " vertices but the graph has " +
                     std::to_string(g.order()));
  }
}

}  // namespace

Bipartition Bipartition::FromSides(std::vector<int> side) {
  std::vector<std::uint8_t> bits(side.size());
  for (std::size_t v = 0; v < side.size(); ++v) {
    if (side[v] != 0 && side[v] != 1) {
      throw InputError("side of vertex " + std::to_string(v) +
                       " must be 0 or 1");
    }
    bits[v] = static_cast<std::uint8_t>(side[v]);
  }
  return Bipartition(std::move(bits));
}

Bipartition Bipartition::FromParts(int n, std::span<const Vertex> left,
                                   std::span<const Vertex> right) {
  if (n < 0) throw InputError("negative vertex count");
  std::vector<int> side(n, -1);
  auto assign = [&](std::span<const Vertex> part, int s) {
    for (Vertex v : part) {
      if (v < 0 || v >= n) {
        throw InputError("vertex " + std::to_string(v) + " out of range");
      }
      if (side[v] != -1) {
        throw InputError("vertex " + std::to_string(v) +
                         " appears more than once");
      }
      side[v] = s;
    }
  };
  assign(left, 0);
  assign(right, 1);
  for (Vertex v = 0; v < n; ++v) {
    if (side[v] == -1) {
      throw InputError("vertex " + std::to_string(v) + " is in neither part");
    }
  }
  return FromSides(std::move(side));
}

Bipartition Bipartition::Parity(int n) {
  std::vector<std::uint8_t> side(n);
  for (int v = 0; v < n; ++v) side[v] = static_cast<std::uint8_t>(v % 2);
  return Bipartition(std::move(side));
}

Bipartition Bipartition::Random(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::uint8_t> side(n);
  for (auto& s : side) s = static_cast<std::uint8_t>(rng() & 1U);
  return Bipartition(std::move(side));
}

std::vector<Vertex> Bipartition::left() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < order(); ++v) {
    if (side_[v] == 0) out.push_back(v);
  }
  return out;
}

std::vector<Vertex> Bipartition::right() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < order(); ++v) {
    if (side_[v] == 1) out.push_back(v);
  }
  return out;
}

void Bipartition::Flip(Vertex v) { side_.at(v) ^= 1U; }

int CrossDegree(const EdgeColoredGraph& g, const Bipartition& b, Vertex v) {
  CheckCovers(g, b);
  int count = 0;
  for (const Neighbor& nb : g.neighbors(v)) count += b.crosses(v, nb.vertex);
  return count;
}

std::size_t CrossColorDegree(const EdgeColoredGraph& g, const Bipartition& b,
                             Vertex v) {
  CheckCovers(g, b);
  std::vector<Color> colors;
  for (const Neighbor& nb : g.neighbors(v)) {
    if (b.crosses(v, nb.vertex)) colors.push_back(nb.color);
  }
  return ColorSet(std::move(colors)).size();
}

std::size_t CutSize(const EdgeColoredGraph& g, const Bipartition& b) {
  CheckCovers(g, b);
  std::size_t cut = 0;
  for (const Edge& e : g.edges()) cut += b.crosses(e.u, e.v);
  return cut;
}

long long Potential(const EdgeColoredGraph& g, const Bipartition& b) {
  CheckCovers(g, b);
  long long f = static_cast<long long>(CutSize(g, b));
  for (Vertex v = 0; v < g.order(); ++v) {
    f += static_cast<long long>(CrossColorDegree(g, b, v));
  }
  return f;
}

std::optional<Vertex> FindLemma7Violation(const EdgeColoredGraph& g,
                                          const Bipartition& b) {
  CheckCovers(g, b);
  for (Vertex v = 0; v < g.order(); ++v) {
    const long long lhs =
        2 * static_cast<long long>(CrossColorDegree(g, b, v)) +
        3LL * CrossDegree(g, b, v);
    const long long rhs =
        static_cast<long long>(ColorDegree(g, v)) + g.degree(v);
    if (lhs < rhs) return v;
  }
  return std::nullopt;
}

Lemma7Result Lemma7Bipartize(const EdgeColoredGraph& g) {
  return Lemma7Bipartize(g, Bipartition::Parity(g.order()));
}

Lemma7Result Lemma7Bipartize(const EdgeColoredGraph& g, Bipartition initial) {
  CheckCovers(g, initial);
  const int n = g.order();
  Bipartition b = std::move(initial);

  std::vector<long long> target(n);  // d^c_G(v) + d_G(v)
  std::vector<long long> d_h(n);
  std::vector<long long> dc_h(n);
  for (Vertex v = 0; v < n; ++v) {
    target[v] = static_cast<long long>(ColorDegree(g, v)) + g.degree(v);
    d_h[v] = CrossDegree(g, b, v);
    dc_h[v] = static_cast<long long>(CrossColorDegree(g, b, v));
  }
  long long f = Potential(g, b);

  SearchTrace trace;
  for (;;) {
    Vertex w = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (2 * dc_h[v] + 3 * d_h[v] < target[v]) {
        w = v;
        break;
      }
    }
    if (w == -1) break;

    const long long before = f;
    long long after = f + g.degree(w) - 2 * d_h[w];
    b.Flip(w);
    auto refresh = [&](Vertex v) {
      after -= dc_h[v];
      d_h[v] = CrossDegree(g, b, v);
      dc_h[v] = static_cast<long long>(CrossColorDegree(g, b, v));
      after += dc_h[v];
    };
    refresh(w);
    for (const Neighbor& nb : g.neighbors(w)) refresh(nb.vertex);

    if (after <= before) {
      throw std::logic_error("lemma 7 move did not increase the potential");
    }
    trace.moves.push_back({w, before, after});
    f = after;
  }
  trace.final_potential = f;
  return {std::move(b), std::move(trace)};
}

std::optional<Vertex> FindErdosViolation(const EdgeColoredGraph& g,
                                         const Bipartition& b) {
  CheckCovers(g, b);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (2 * CrossDegree(g, b, v) < g.degree(v)) return v;
  }
  return std::nullopt;
}

Bipartition ErdosBipartize(const EdgeColoredGraph& g) {
  return ErdosBipartize(g, Bipartition::Parity(g.order()));
}

Bipartition ErdosBipartize(const EdgeColoredGraph& g, Bipartition initial) {
  CheckCovers(g, initial);
  const int n = g.order();
  Bipartition b = std::move(initial);
  std::vector<int> d_h(n);
  for (Vertex v = 0; v < n; ++v) d_h[v] = CrossDegree(g, b, v);
  for (;;) {
    Vertex w = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (2 * d_h[v] < g.degree(v)) {
        w = v;
        break;
      }
    }
    if (w == -1) return b;
    b.Flip(w);
    d_h[w] = g.degree(w) - d_h[w];
    for (const Neighbor& nb : g.neighbors(w)) {
      d_h[nb.vertex] += b.crosses(w, nb.vertex) ? 1 : -1;
    }
  }
}

std::string FormatTrace(const SearchTrace& trace) {
  std::string out;
  for (const SearchMove& m : trace.moves) {
    out += "move " + std::to_string(m.vertex) + " " +
           std::to_string(m.potential_before) + " " +
           std::to_string(m.potential_after) + "\n";
  }
  return out;
}

}  // namespace rainbowc4
