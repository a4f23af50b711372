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

#include "rainbowc4/digraph.h"

#include <algorithm>

#include "rainbowc4/errors.h"
#include "rainbowc4/graph_io.h"

namespace rainbowc4 {

Digraph Digraph::FromArcs(int left_size, int right_size,
                          std::span<const Arc> arcs) {
  if (left_size < 0 || right_size < 0) {
    throw InputError("part sizes must be nonnegative");
  }
  Digraph d;
  d.left_ = left_size;
  d.right_ = right_size;
  const int n = left_size + right_size;
  d.arcs_.assign(arcs.begin(), arcs.end());
  for (const Arc& a : d.arcs_) {
    if (a.from < 0 || a.from >= n || a.to < 0 || a.to >= n) {
      throw InputError("arc " + std::to_string(a.from) + "->" +
                       std::to_string(a.to) + " has an endpoint outside [0, " +
                       std::to_string(n) + ")");
    }
    if (d.in_left(a.from) == d.in_left(a.to)) {
      throw InputError("arc " + std::to_string(a.from) + "->" +
                       std::to_string(a.to) + " does not cross the parts");
    }
  }
  std::sort(d.arcs_.begin(), d.arcs_.end());
  auto dup = std::adjacent_find(d.arcs_.begin(), d.arcs_.end());
  if (dup != d.arcs_.end()) {
    throw InputError("duplicate arc " + std::to_string(dup->from) + "->" +
                     std::to_string(dup->to));
  }
  d.out_.assign(n, {});
  d.in_.assign(n, {});
  for (const Arc& a : d.arcs_) {
    d.out_[a.from].push_back(a.to);
    d.in_[a.to].push_back(a.from);
  }
  for (auto& list : d.in_) std::sort(list.begin(), list.end());
  return d;
}

bool Digraph::has_arc(Vertex u, Vertex v) const {
  if (u < 0 || u >= order()) return false;
  const auto& o = out_[u];
  return std::binary_search(o.begin(), o.end(), v);
}

Digraph ParseDcg(std::string_view text) {
  const auto lines = detail::TokenizeLines(text);
  if (lines.empty()) throw ParseError(1, "missing 'dcg <|A|> <|B|> <arcs>'");
  const auto& header = lines.front();
  if (header.tokens.size() != 4 || header.tokens[0] != "dcg") {
    throw ParseError(header.number,
                     "malformed header, expected 'dcg <|A|> <|B|> <arcs>'");
  }
  const long long a =
      detail::ParseNonNegative(header.tokens[1], header.number, "part size");
  const long long b =
      detail::ParseNonNegative(header.tokens[2], header.number, "part size");
  const long long m =
      detail::ParseNonNegative(header.tokens[3], header.number, "arc count");
  if (a + b > (1LL << 30)) throw ParseError(header.number, "parts too large");
  if (static_cast<long long>(lines.size()) - 1 != m) {
    throw ParseError(header.number, "header declares " + std::to_string(m) +
                                        " arcs but found " +
                                        std::to_string(lines.size() - 1));
  }
  std::vector<Arc> arcs;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    if (line.tokens.size() != 2) throw ParseError(line.number, "expected '<u> <v>'");
    const long long u =
        detail::ParseNonNegative(line.tokens[0], line.number, "vertex");
    const long long v =
        detail::ParseNonNegative(line.tokens[1], line.number, "vertex");
    if (u >= a + b || v >= a + b) {
      throw ParseError(line.number, "vertex id out of range");
    }
    arcs.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  try {
    return Digraph::FromArcs(static_cast<int>(a), static_cast<int>(b), arcs);
  } catch (const ParseError&) {
    throw;
  } catch (const InputError& e) {
    // Report against the first offending arc line when we can find it.
    for (std::size_t i = 1; i < lines.size(); ++i) {
      const Arc& arc = arcs[i - 1];
      const bool same_part = (arc.from < a) == (arc.to < a);
      const bool repeated =
          std::count(arcs.begin(), arcs.begin() + (i - 1), arc) > 0;
      if (same_part || repeated) throw ParseError(lines[i].number, e.what());
    }
    throw ParseError(header.number, e.what());
  }
}

std::string SerializeDcg(const Digraph& d) {
  std::string out = "dcg " + std::to_string(d.left_size()) + " " +
                    std::to_string(d.right_size()) + " " +
                    std::to_string(d.arcs().size()) + "\n";
  for (const Arc& a : d.arcs()) {
    out += std::to_string(a.from) + " " + std::to_string(a.to) + "\n";
  }
  return out;
}

std::optional<Cycle> FindDirectedC4(const Digraph& d) {
  std::vector<Vertex> forward;   // b with a->b->a'
  std::vector<Vertex> backward;  // b' with a'->b'->a
  for (Vertex a = 0; a < d.left_size(); ++a) {
    if (d.out(a).empty() || d.in(a).empty()) continue;
    for (Vertex a2 = 0; a2 < d.left_size(); ++a2) {
      if (a2 == a) continue;
      forward.clear();
      backward.clear();
      std::set_intersection(d.out(a).begin(), d.out(a).end(), d.in(a2).begin(),
                            d.in(a2).end(), std::back_inserter(forward));
      if (forward.empty()) continue;
      std::set_intersection(d.out(a2).begin(), d.out(a2).end(),
                            d.in(a).begin(), d.in(a).end(),
                            std::back_inserter(backward));
      for (Vertex b : forward) {
        for (Vertex b2 : backward) {
          if (b2 != b) return Cycle{{a, b, a2, b2}};
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<Cycle> BruteForceDirectedC4(const Digraph& d) {
  const int na = d.left_size();
  const int n = d.order();
  for (Vertex a = 0; a < na; ++a) {
    for (Vertex b = na; b < n; ++b) {
      if (!d.has_arc(a, b)) continue;
      for (Vertex a2 = 0; a2 < na; ++a2) {
        if (a2 == a || !d.has_arc(b, a2)) continue;
        for (Vertex b2 = na; b2 < n; ++b2) {
          if (b2 != b && d.has_arc(a2, b2) && d.has_arc(b2, a)) {
            return Cycle{{a, b, a2, b2}};
          }
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace rainbowc4
