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

#ifndef RAINBOWC4_RAINBOW_H_
#define RAINBOWC4_RAINBOW_H_

#include <optional>
#include <vector>

#include "rainbowc4/graph.h"

namespace rainbowc4 {

// A heterochromatic cycle together with its edge colors; colors[i] is the
// color of the edge (cycle[i], cycle[i+1 mod k]).
struct RainbowWitness {
  Cycle cycle;
  std::vector<Color> colors;

  friend bool operator==(const RainbowWitness&,
                         const RainbowWitness&) = default;
};

// Throws InputError unless `cycle` has >= 3 distinct in-range vertices and
// every cyclically consecutive pair is an edge of g.
void ValidateCycle(const EdgeColoredGraph& g, const Cycle& cycle);

// True iff the edge colors along the cycle are pairwise distinct.
bool IsRainbow(const EdgeColoredGraph& g, const Cycle& cycle);

// Rotation/reflection representative: least vertex first, then the smaller
// of its two cycle neighbors.
Cycle CanonicalCycle(const Cycle& cycle);

// Builds the witness record for a cycle of g (validated, not checked for
// rainbowness).
RainbowWitness MakeWitness(const EdgeColoredGraph& g, const Cycle& cycle);

// Lexicographically least rainbow C4 in canonical form, if any. Scans vertex
// pairs {a, c} with a the least cycle vertex and tests the common neighbors.
std::optional<RainbowWitness> FindRainbowC4(const EdgeColoredGraph& g);

// Lexicographically least rainbow triangle in canonical form, if any.
std::optional<RainbowWitness> FindRainbowC3(const EdgeColoredGraph& g);

// Ground truth: every rainbow k-cycle (k in {3, 4}), found by exhausting
// vertex k-subsets and their distinct cyclic orders. Sorted, canonical, one
// entry per cycle. Exponential; intended for n <= 12.
std::vector<RainbowWitness> OracleRainbowCycles(const EdgeColoredGraph& g,
                                                int k);

}  // namespace rainbowc4

#endif  // RAINBOWC4_RAINBOW_H_
