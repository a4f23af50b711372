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

#ifndef RAINBOWC4_PROJECTIVE_H_
#define RAINBOWC4_PROJECTIVE_H_

#include <optional>
#include <string>
#include <vector>

#include "rainbowc4/graph.h"

namespace rainbowc4 {

// Point-line incidence structure. Points and lines are ids 0..count-1;
// line l contains the sorted point ids points_on(l).
class ProjectivePlane {
 public:
  ProjectivePlane(int order, int point_count,
                  std::vector<std::vector<int>> lines);

  int order() const { return order_; }
  int point_count() const { return point_count_; }
  int line_count() const { return static_cast<int>(lines_.size()); }

  const std::vector<int>& points_on(int line) const { return lines_.at(line); }
  // For each point, the sorted ids of lines through it.
  std::vector<std::vector<int>> lines_through() const;
  bool incident(int point, int line) const;

  // Roles of points and lines exchanged.
  ProjectivePlane Dual() const;

 private:
  int order_;
  int point_count_;
  std::vector<std::vector<int>> lines_;
};

bool IsPrime(long long x);
// True for q = r^k with r prime and k >= 1.
bool IsPrimePower(long long q);

// The plane PG(2, p) over the integers mod p, from homogeneous coordinates.
// A point or line is a nonzero triple whose first nonzero entry is 1; ids
// follow lexicographic order of those triples. Point x lies on line a iff
// a.x == 0 (mod p).
//
// Throws UnsupportedError for prime powers p^k with k >= 2, InputError for
// other non-primes and for p > kMaxPlaneOrder.
inline constexpr int kMaxPlaneOrder = 251;
ProjectivePlane BuildPlane(int p);

// Checks the counts (t^2+t+1 points and lines, t+1 points per line, t+1
// lines per point), that two points share exactly one line, that two lines
// share exactly one point, and that four points with no three collinear
// exist. Returns a description of the first failure, or nullopt.
std::optional<std::string> VerifyPlaneAxioms(const ProjectivePlane& plane);

// Bipartite point-line incidence graph. Point i is vertex i; line j is
// vertex point_count + j. All edges get color 0; see RainbowColor.
EdgeColoredGraph IncidenceGraph(const ProjectivePlane& plane);

// Colors the edges 0..m-1 in canonical edge order.
EdgeColoredGraph RainbowColor(const EdgeColoredGraph& g);

}  // namespace rainbowc4

#endif  // RAINBOWC4_PROJECTIVE_H_
