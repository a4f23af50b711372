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

#include "rainbowc4/verify.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>

#include "rainbowc4/errors.h"
#include "rainbowc4/structure.h"

namespace rainbowc4 {
namespace {

constexpr double kThresholdSlack = 1e-9;

bool UsesPairwiseUnion(Theorem t) {
  return t == Theorem::kT1 || t == Theorem::kT6;
}

}  // namespace

std::optional<Theorem> ParseTheorem(std::string_view text) {
  if (!text.empty() && (text.front() == 'T' || text.front() == 't')) {
    text.remove_prefix(1);
  }
  if (text.size() != 1 || text[0] < '1' || text[0] > '6') return std::nullopt;
  return static_cast<Theorem>(text[0] - '0');
}

std::string TheoremName(Theorem t) {
  return "T" + std::to_string(static_cast<int>(t));
}

int OrderBound(Theorem t) {
  switch (t) {
    case Theorem::kT1: return 4;
    case Theorem::kT2: return 3;
    case Theorem::kT3: return 3;
    case Theorem::kT4: return 9;
    case Theorem::kT5: return 6;
    case Theorem::kT6: return 60;
  }
  return 0;
}

double Threshold(Theorem t, int n) {
  const double sqrt5 = std::sqrt(5.0);
  const double sqrt7 = std::sqrt(7.0);
  const double x = n;
  switch (t) {
    case Theorem::kT1:
    case Theorem::kT6:
      return x - 1.0;
    case Theorem::kT2: {
      const double c = 4.0 * sqrt7 / 7.0;
      return (c - 1.0) * x + 3.0 - c;
    }
    case Theorem::kT3:
      return (sqrt7 + 1.0) / 6.0 * x;
    case Theorem::kT4:
      return (3.0 - sqrt5) / 2.0 * x + 1.0;
    case Theorem::kT5:
      return (sqrt5 - 1.0) * x / 4.0 + 1.0;
  }
  return 0.0;
}

long long RequiredValue(double theta) {
  return static_cast<long long>(std::ceil(theta - kThresholdSlack));
}

HypothesisCheck CheckHypothesis(const EdgeColoredGraph& g, Theorem t) {
  if (t == Theorem::kT4 && HasTriangle(g)) {
    throw PreconditionError("T4 applies to triangle-free graphs only");
  }
  if (t == Theorem::kT5 && !IsBipartite(g)) {
    throw PreconditionError("T5 applies to bipartite graphs only");
  }
  const int n = g.order();
  const double theta = Threshold(t, n);
  long long value = 0;
  if (UsesPairwiseUnion(t)) {
    if (n < 2) return {false, 0.0};
    value = static_cast<long long>(MinPairwiseColorUnion(g));
  } else {
    value = static_cast<long long>(MinColorDegree(g));
  }
  HypothesisCheck out;
  out.margin = static_cast<double>(value) - theta;
  out.holds = n >= OrderBound(t) && value >= RequiredValue(theta);
  return out;
}

Verdict CheckTheorem(const EdgeColoredGraph& g, Theorem t) {
  const HypothesisCheck hyp = CheckHypothesis(g, t);
  Verdict v;
  v.theorem = TheoremName(t);
  v.hypothesis_holds = hyp.holds;
  v.margin = hyp.margin;
  switch (t) {
    case Theorem::kT1:
    case Theorem::kT2:
      v.witness = FindRainbowC4(g);
      if (!v.witness) v.witness = FindRainbowC3(g);
      break;
    case Theorem::kT3:
      v.witness = FindRainbowC3(g);
      break;
    case Theorem::kT4:
    case Theorem::kT5:
    case Theorem::kT6:
      v.witness = FindRainbowC4(g);
      break;
  }
  v.conclusion_holds = v.witness.has_value();
  return v;
}

bool IsProperlyColored(const EdgeColoredGraph& g) {
  std::vector<Color> colors;
  for (Vertex v = 0; v < g.order(); ++v) {
    colors.clear();
    for (const Neighbor& nb : g.neighbors(v)) colors.push_back(nb.color);
    std::sort(colors.begin(), colors.end());
    if (std::adjacent_find(colors.begin(), colors.end()) != colors.end()) {
      return false;
    }
  }
  return true;
}

EdgeColoredGraph CompleteGraphWithColors(int n, std::span<const Color> colors) {
  GraphBuilder builder(n);
  std::size_t i = 0;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (i >= colors.size()) throw InputError("too few colors for K_n");
      builder.AddEdge(u, v, colors[i++]);
    }
  }
  if (i != colors.size()) throw InputError("too many colors for K_n");
  return std::move(builder).Build();
}

Case1Report Case1Exhaustive(int n) {
  if (n < 4 || n > 6) {
    throw InputError("case 1 enumeration supports 4 <= n <= 6, got " +
                     std::to_string(n));
  }
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::vector<std::vector<int>> edge_id(n, std::vector<int>(n, -1));
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      edge_id[u][v] = edge_id[v][u] = static_cast<int>(edges.size());
      edges.emplace_back(u, v);
    }
  }
  // Every 4-cycle of K_n as the ids of its edges.
  std::vector<std::array<int, 4>> four_cycles;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      for (Vertex c = b + 1; c < n; ++c) {
        for (Vertex d = c + 1; d < n; ++d) {
          for (const auto& o : {std::array<Vertex, 4>{a, b, c, d},
                                std::array<Vertex, 4>{a, b, d, c},
                                std::array<Vertex, 4>{a, c, b, d}}) {
            four_cycles.push_back({edge_id[o[0]][o[1]], edge_id[o[1]][o[2]],
                                   edge_id[o[2]][o[3]], edge_id[o[3]][o[0]]});
          }
        }
      }
    }
  }

  const int m = static_cast<int>(edges.size());
  Case1Report report;
  report.n = n;
  std::vector<Color> colors(m, -1);
  std::vector<std::uint32_t> used_at(n, 0);  // color bitmask per vertex

  auto has_rainbow_c4 = [&] {
    for (const auto& cyc : four_cycles) {
      const Color c0 = colors[cyc[0]], c1 = colors[cyc[1]];
      const Color c2 = colors[cyc[2]], c3 = colors[cyc[3]];
      // Consecutive edges share a vertex, so only opposite pairs can clash.
      if (c0 != c2 && c1 != c3) return true;
    }
    return false;
  };

  auto recurse = [&](auto&& self, int i, int palette) -> void {
    if (i == m) {
      ++report.examined;
      if (!has_rainbow_c4()) report.failures.push_back(colors);
      return;
    }
    const auto [u, v] = edges[i];
    for (int c = 0; c <= palette && c < 32; ++c) {
      const std::uint32_t bit = 1U << c;
      if ((used_at[u] | used_at[v]) & bit) continue;
      colors[i] = c;
      used_at[u] |= bit;
      used_at[v] |= bit;
      self(self, i + 1, std::max(palette, c + 1));
      used_at[u] &= ~bit;
      used_at[v] &= ~bit;
    }
    colors[i] = -1;
  };
  recurse(recurse, 0, 0);
  std::sort(report.failures.begin(), report.failures.end());
  return report;
}

std::optional<std::array<Vertex, 4>> Claim9Check(const EdgeColoredGraph& g) {
  if (!IsComplete(g)) throw PreconditionError("claim 9 needs a complete graph");
  if (!IsProperlyColored(g)) {
    throw PreconditionError("claim 9 needs a proper edge coloring");
  }
  const int n = g.order();
  std::vector<Color> c(static_cast<std::size_t>(n) * n, -1);
  for (const Edge& e : g.edges()) {
    c[static_cast<std::size_t>(e.u) * n + e.v] = e.color;
    c[static_cast<std::size_t>(e.v) * n + e.u] = e.color;
  }
  auto col = [&](Vertex x, Vertex y) {
    return c[static_cast<std::size_t>(x) * n + y];
  };
  for (Vertex x1 = 0; x1 < n; ++x1) {
    for (Vertex x2 = 0; x2 < n; ++x2) {
      if (x2 == x1) continue;
      for (Vertex x3 = 0; x3 < n; ++x3) {
        if (x3 == x1 || x3 == x2) continue;
        for (Vertex x4 = 0; x4 < n; ++x4) {
          if (x4 == x1 || x4 == x2 || x4 == x3) continue;
          if (col(x1, x2) != col(x3, x4) && col(x2, x3) != col(x1, x4)) {
            return std::array<Vertex, 4>{x1, x2, x3, x4};
          }
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace rainbowc4
