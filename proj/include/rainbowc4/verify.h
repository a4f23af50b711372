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

#ifndef RAINBOWC4_VERIFY_H_
#define RAINBOWC4_VERIFY_H_

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rainbowc4/graph.h"
#include "rainbowc4/rainbow.h"

namespace rainbowc4 {

// The six rainbow-cycle theorems. Hypotheses:
//   T1  n >= 4,  |CN(u) ∪ CN(v)| >= n - 1 for all pairs       => C3 or C4
//   T2  n >= 3,  d^c(v) >= (4√7/7 - 1) n + 3 - 4√7/7           => C3 or C4
//   T3  n >= 3,  d^c(v) >= (√7 + 1) n / 6                       => C3
//   T4  n >= 9,  triangle-free, d^c(v) >= (3 - √5) n / 2 + 1    => C4
//   T5  n >= 6,  bipartite, d^c(v) >= (√5 - 1) n / 4 + 1        => C4
//   T6  n >= 60, |CN(u) ∪ CN(v)| >= n - 1 for all pairs         => C4
enum class Theorem { kT1 = 1, kT2, kT3, kT4, kT5, kT6 };

// Accepts "1".."6" or "T1".."T6" (case-insensitive).
std::optional<Theorem> ParseTheorem(std::string_view text);
std::string TheoremName(Theorem t);

// Least order n the theorem covers.
int OrderBound(Theorem t);

// Real-valued threshold the binding quantity must reach at order n
// (pairwise color union for T1/T6, minimum color degree otherwise).
double Threshold(Theorem t, int n);

// Integer form of "value >= theta" for integer values: ceil(theta - 1e-9).
long long RequiredValue(double theta);

struct HypothesisCheck {
  bool holds = false;
  // Binding quantity minus its threshold; negative when the degree
  // condition fails.
  double margin = 0.0;
};

// Throws PreconditionError for T4 on a graph with a triangle and for T5 on a
// non-bipartite graph.
HypothesisCheck CheckHypothesis(const EdgeColoredGraph& g, Theorem t);

struct Verdict {
  std::string theorem;
  bool hypothesis_holds = false;
  bool conclusion_holds = false;
  std::optional<RainbowWitness> witness;
  double margin = 0.0;

  // A counterexample: hypothesis true, conclusion false. Hypothesis-false
  // verdicts are never violations.
  bool violated() const { return hypothesis_holds && !conclusion_holds; }
};

// Hypothesis plus the matching detector: C4 (falling back to C3) for T1 and
// T2, C3 for T3, C4 for T4-T6.
Verdict CheckTheorem(const EdgeColoredGraph& g, Theorem t);

// No two edges at a common vertex share a color.
bool IsProperlyColored(const EdgeColoredGraph& g);

struct Case1Report {
  int n = 0;
  long long examined = 0;
  // Rainbow-C4-free colorings, as color lists in canonical edge order of K_n.
  std::vector<std::vector<Color>> failures;
};

// Enumerates every proper edge coloring of K_n up to renaming colors (edges
// in canonical order; each edge takes an existing color or the next unused
// id) and records those without a rainbow C4. Requires 4 <= n <= 6.
Case1Report Case1Exhaustive(int n);

// K_n with edges colored by `colors` in canonical order.
EdgeColoredGraph CompleteGraphWithColors(int n, std::span<const Color> colors);

// Scans ordered quadruples (x1, x2, x3, x4) of distinct vertices for
// C(x1x2) != C(x3x4) and C(x2x3) != C(x1x4). On a properly colored complete
// graph such a quadruple spans a rainbow C4 x1x2x3x4, so the scan returns
// nullopt exactly when the graph is rainbow-C4-free. Throws
// PreconditionError unless g is complete and properly colored.
std::optional<std::array<Vertex, 4>> Claim9Check(const EdgeColoredGraph& g);

}  // namespace rainbowc4

#endif  // RAINBOWC4_VERIFY_H_
