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

#include "rainbowc4/rainbow.h"

#include <algorithm>
#include <array>
#include <string>
#include <tuple>

#include "rainbowc4/errors.h"

namespace rainbowc4 {
namespace {

constexpr Color kNoEdge = -1;

// Dense color row of v: row[x] = C(vx) or kNoEdge.
void FillRow(const EdgeColoredGraph& g, Vertex v, std::vector<Color>& row) {
  std::fill(row.begin(), row.end(), kNoEdge);
  for (const Neighbor& nb : g.neighbors(v)) row[nb.vertex] = nb.color;
}

bool AllDistinct(std::vector<Color> colors) {
  std::sort(colors.begin(), colors.end());
  return std::adjacent_find(colors.begin(), colors.end()) == colors.end();
}

}  // namespace

void ValidateCycle(const EdgeColoredGraph& g, const Cycle& cycle) {
  const auto& vs = cycle.vertices;
  if (vs.size() < 3) {
    throw InputError("a cycle needs at least 3 vertices, got " +
                     std::to_string(vs.size()));
  }
  for (Vertex v : vs) {
    if (!g.contains(v)) {
      throw InputError("cycle vertex " + std::to_string(v) + " out of range");
    }
  }
  std::vector<Vertex> sorted = vs;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InputError("cycle repeats a vertex");
  }
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const Vertex u = vs[i];
    const Vertex v = vs[(i + 1) % vs.size()];
    if (!g.adjacent(u, v)) {
      throw InputError("cycle uses non-edge " + std::to_string(u) + "-" +
                       std::to_string(v));
    }
  }
}

RainbowWitness MakeWitness(const EdgeColoredGraph& g, const Cycle& cycle) {
  ValidateCycle(g, cycle);
  RainbowWitness w{cycle, {}};
  const auto& vs = cycle.vertices;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    w.colors.push_back(*g.color(vs[i], vs[(i + 1) % vs.size()]));
  }
  return w;
}

bool IsRainbow(const EdgeColoredGraph& g, const Cycle& cycle) {
  return AllDistinct(MakeWitness(g, cycle).colors);
}

Cycle CanonicalCycle(const Cycle& cycle) {
  const auto& vs = cycle.vertices;
  if (vs.empty()) return cycle;
  const std::size_t k = vs.size();
  const std::size_t start =
      std::min_element(vs.begin(), vs.end()) - vs.begin();
  const Vertex next = vs[(start + 1) % k];
  const Vertex prev = vs[(start + k - 1) % k];
  Cycle out;
  out.vertices.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    out.vertices.push_back(next < prev ? vs[(start + i) % k]
                                       : vs[(start + k - i) % k]);
  }
  return out;
}

std::optional<RainbowWitness> FindRainbowC4(const EdgeColoredGraph& g) {
  const int n = g.order();
  std::vector<Color> row_a(n);
  std::vector<Color> row_c(n);
  // Common neighbors x > a of the pair {a, c}: (x, C(ax), C(cx)).
  std::vector<std::tuple<Vertex, Color, Color>> common;

  for (Vertex a = 0; a < n; ++a) {
    FillRow(g, a, row_a);
    std::optional<std::array<Vertex, 3>> best;  // (b, c, d)
    for (Vertex c = a + 1; c < n; ++c) {
      common.clear();
      for (const Neighbor& nb : g.neighbors(c)) {
        if (nb.vertex > a && row_a[nb.vertex] != kNoEdge) {
          common.emplace_back(nb.vertex, row_a[nb.vertex], nb.color);
        }
      }
      if (common.size() < 2) continue;
      // Cycle a-b-c-d with b < d; lex order on (b, d) follows the scan.
      bool found = false;
      for (std::size_t i = 0; i < common.size() && !found; ++i) {
        const auto [b, ab, cb] = common[i];
        // Earlier c with the same or smaller b already wins.
        if (best && b >= (*best)[0]) break;
        if (ab == cb) continue;
        for (std::size_t j = i + 1; j < common.size(); ++j) {
          const auto [d, ad, cd] = common[j];
          if (ad == cd || ad == ab || ad == cb || cd == ab || cd == cb) {
            continue;
          }
          best = std::array<Vertex, 3>{b, c, d};
          found = true;
          break;
        }
      }
    }
    if (best) {
      return MakeWitness(g, Cycle{{a, (*best)[0], (*best)[1], (*best)[2]}});
    }
  }
  return std::nullopt;
}

std::optional<RainbowWitness> FindRainbowC3(const EdgeColoredGraph& g) {
  const int n = g.order();
  std::vector<Color> row_a(n);
  for (Vertex a = 0; a < n; ++a) {
    FillRow(g, a, row_a);
    for (const Neighbor& ab : g.neighbors(a)) {
      if (ab.vertex < a) continue;
      for (const Neighbor& bc : g.neighbors(ab.vertex)) {
        const Vertex c = bc.vertex;
        if (c <= ab.vertex || row_a[c] == kNoEdge) continue;
        const Color ca = row_a[c];
        if (ab.color != bc.color && bc.color != ca && ca != ab.color) {
          return MakeWitness(g, Cycle{{a, ab.vertex, c}});
        }
      }
    }
  }
  return std::nullopt;
}

std::vector<RainbowWitness> OracleRainbowCycles(const EdgeColoredGraph& g,
                                                int k) {
  if (k != 3 && k != 4) {
    throw InputError("oracle supports cycle length 3 or 4, got " +
                     std::to_string(k));
  }
  const int n = g.order();
  std::vector<RainbowWitness> found;

  auto consider = [&](std::vector<Vertex> order) {
    std::vector<Color> colors;
    for (std::size_t i = 0; i < order.size(); ++i) {
      auto c = g.color(order[i], order[(i + 1) % order.size()]);
      if (!c) return;
      colors.push_back(*c);
    }
    if (!AllDistinct(colors)) return;
    found.push_back(MakeWitness(g, CanonicalCycle(Cycle{std::move(order)})));
  };

  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      for (Vertex c = b + 1; c < n; ++c) {
        if (k == 3) {
          consider({a, b, c});
          continue;
        }
        for (Vertex d = c + 1; d < n; ++d) {
          // The three distinct cyclic orders of {a, b, c, d}.
          consider({a, b, c, d});
          consider({a, b, d, c});
          consider({a, c, b, d});
        }
      }
    }
  }
  std::sort(found.begin(), found.end(),
            [](const RainbowWitness& x, const RainbowWitness& y) {
              return x.cycle < y.cycle;
            });
  return found;
}

}  // namespace rainbowc4
