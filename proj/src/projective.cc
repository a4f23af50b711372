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

#include "rainbowc4/projective.h"

#include <algorithm>
#include <array>
#include <numeric>

#include "rainbowc4/errors.h"

namespace rainbowc4 {
namespace {

using Triple = std::array<int, 3>;

int PowMod(long long base, int exp, int p) {
  long long result = 1;
  base %= p;
  while (exp > 0) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return static_cast<int>(result);
}

int Inverse(int x, int p) { return PowMod(x, p - 2, p); }

// Canonical triples in lexicographic order: (0,0,1), (0,1,z), (1,y,z).
std::vector<Triple> CanonicalTriples(int p) {
  std::vector<Triple> out;
  out.push_back({0, 0, 1});
  for (int z = 0; z < p; ++z) out.push_back({0, 1, z});
  for (int y = 0; y < p; ++y) {
    for (int z = 0; z < p; ++z) out.push_back({1, y, z});
  }
  return out;
}

int TripleId(const Triple& t, int p) {
  if (t[0] == 0 && t[1] == 0) return 0;
  if (t[0] == 0) return 1 + t[2];
  return 1 + p + t[1] * p + t[2];
}

// Points x with a.x == 0 (mod p), solved per canonical point family.
std::vector<int> PointsOnLine(const Triple& line, int p) {
  const auto [a, b, c] = line;
  auto mod = [p](long long x) { return static_cast<int>(((x % p) + p) % p); };
  std::vector<int> points;
  if (c == 0) points.push_back(TripleId({0, 0, 1}, p));
  if (c != 0) {
    points.push_back(TripleId({0, 1, mod(-1LL * b * Inverse(c, p))}, p));
  } else if (b == 0) {
    for (int z = 0; z < p; ++z) points.push_back(TripleId({0, 1, z}, p));
  }
  for (int y = 0; y < p; ++y) {
    const long long lhs = a + 1LL * b * y;
    if (c != 0) {
      points.push_back(TripleId({1, y, mod(-lhs * Inverse(c, p))}, p));
    } else if (mod(lhs) == 0) {
      for (int z = 0; z < p; ++z) points.push_back(TripleId({1, y, z}, p));
    }
  }
  std::sort(points.begin(), points.end());
  return points;
}

}  // namespace

ProjectivePlane::ProjectivePlane(int order, int point_count,
                                 std::vector<std::vector<int>> lines)
    : order_(order), point_count_(point_count), lines_(std::move(lines)) {
  for (auto& line : lines_) std::sort(line.begin(), line.end());
}

std::vector<std::vector<int>> ProjectivePlane::lines_through() const {
  std::vector<std::vector<int>> out(point_count_);
  for (int l = 0; l < line_count(); ++l) {
    for (int pt : lines_[l]) {
      if (pt >= 0 && pt < point_count_) out[pt].push_back(l);
    }
  }
  return out;
}

bool ProjectivePlane::incident(int point, int line) const {
  const auto& pts = lines_.at(line);
  return std::binary_search(pts.begin(), pts.end(), point);
}

ProjectivePlane ProjectivePlane::Dual() const {
  return ProjectivePlane(order_, line_count(), lines_through());
}

bool IsPrime(long long x) {
  if (x < 2) return false;
  for (long long d = 2; d * d <= x; ++d) {
    if (x % d == 0) return false;
  }
  return true;
}

bool IsPrimePower(long long q) {
  if (q < 2) return false;
  for (long long d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      while (q % d == 0) q /= d;
      return q == 1;
    }
  }
  return true;
}

ProjectivePlane BuildPlane(int p) {
  if (!IsPrime(p)) {
    if (IsPrimePower(p)) {
      throw UnsupportedError(
          "order " + std::to_string(p) +
          " is a prime power; only prime orders are constructed");
    }
    throw InputError("plane order must be prime, got " + std::to_string(p));
  }
  if (p > kMaxPlaneOrder) {
    throw InputError("plane order " + std::to_string(p) + " exceeds " +
                     std::to_string(kMaxPlaneOrder));
  }
  const auto triples = CanonicalTriples(p);
  std::vector<std::vector<int>> lines;
  lines.reserve(triples.size());
  for (const Triple& line : triples) lines.push_back(PointsOnLine(line, p));
  return ProjectivePlane(p, static_cast<int>(triples.size()),
                         std::move(lines));
}

std::optional<std::string> VerifyPlaneAxioms(const ProjectivePlane& plane) {
  const long long t = plane.order();
  const long long expected = t * t + t + 1;
  const int np = plane.point_count();
  const int nl = plane.line_count();
  if (np != expected || nl != expected) {
    return "expected " + std::to_string(expected) + " points and lines, got " +
           std::to_string(np) + " points and " + std::to_string(nl) + " lines";
  }
  for (int l = 0; l < nl; ++l) {
    const auto& pts = plane.points_on(l);
    if (static_cast<long long>(pts.size()) != t + 1) {
      return "line " + std::to_string(l) + " has " +
             std::to_string(pts.size()) + " points, expected " +
             std::to_string(t + 1);
    }
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (pts[i] < 0 || pts[i] >= np) {
        return "line " + std::to_string(l) + " names unknown point " +
               std::to_string(pts[i]);
      }
      if (i > 0 && pts[i] == pts[i - 1]) {
        return "line " + std::to_string(l) + " repeats point " +
               std::to_string(pts[i]);
      }
    }
  }
  const auto through = plane.lines_through();
  for (int pt = 0; pt < np; ++pt) {
    if (static_cast<long long>(through[pt].size()) != t + 1) {
      return "point " + std::to_string(pt) + " lies on " +
             std::to_string(through[pt].size()) + " lines, expected " +
             std::to_string(t + 1);
    }
  }

  // line_of[x * np + y]: the line through points x and y, or -1.
  std::vector<int> line_of(static_cast<std::size_t>(np) * np, -1);
  for (int l = 0; l < nl; ++l) {
    const auto& pts = plane.points_on(l);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      for (std::size_t j = i + 1; j < pts.size(); ++j) {
        int& slot = line_of[static_cast<std::size_t>(pts[i]) * np + pts[j]];
        if (slot != -1) {
          return "points " + std::to_string(pts[i]) + " and " +
                 std::to_string(pts[j]) + " lie on lines " +
                 std::to_string(slot) + " and " + std::to_string(l);
        }
        slot = l;
      }
    }
  }
  for (int x = 0; x < np; ++x) {
    for (int y = x + 1; y < np; ++y) {
      if (line_of[static_cast<std::size_t>(x) * np + y] == -1) {
        return "points " + std::to_string(x) + " and " + std::to_string(y) +
               " lie on no common line";
      }
    }
  }
  for (int l = 0; l < nl; ++l) {
    for (int k = l + 1; k < nl; ++k) {
      const auto& a = plane.points_on(l);
      const auto& b = plane.points_on(k);
      std::vector<int> common;
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                            std::back_inserter(common));
      if (common.size() != 1) {
        return "lines " + std::to_string(l) + " and " + std::to_string(k) +
               " meet in " + std::to_string(common.size()) + " points";
      }
    }
  }

  auto line = [&](int x, int y) {
    if (x > y) std::swap(x, y);
    return line_of[static_cast<std::size_t>(x) * np + y];
  };
  auto collinear = [&](int x, int y, int z) {
    return plane.incident(z, line(x, y));
  };
  for (int a = 0; a < np; ++a) {
    for (int b = a + 1; b < np; ++b) {
      for (int c = b + 1; c < np; ++c) {
        if (collinear(a, b, c)) continue;
        for (int d = c + 1; d < np; ++d) {
          if (!collinear(a, b, d) && !collinear(a, c, d) &&
              !collinear(b, c, d)) {
            return std::nullopt;
          }
        }
      }
    }
  }
  return "no four points with no three collinear";
}

EdgeColoredGraph IncidenceGraph(const ProjectivePlane& plane) {
  GraphBuilder builder(plane.point_count() + plane.line_count());
  for (int l = 0; l < plane.line_count(); ++l) {
    for (int pt : plane.points_on(l)) {
      builder.AddEdge(pt, plane.point_count() + l, 0);
    }
  }
  return std::move(builder).Build();
}

EdgeColoredGraph RainbowColor(const EdgeColoredGraph& g) {
  std::vector<Color> colors(g.size());
  std::iota(colors.begin(), colors.end(), Color{0});
  return g.Recolored(colors);
}

}  // namespace rainbowc4
