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

#ifndef RAINBOWC4_HUNT_H_
#define RAINBOWC4_HUNT_H_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rainbowc4/bipartize.h"
#include "rainbowc4/digraph.h"
#include "rainbowc4/generate.h"
#include "rainbowc4/graph.h"

namespace rainbowc4 {

// Open question: does every edge-colored graph have a split whose cross
// subgraph H keeps half the color degree, 2 d^c_H(v) >= d^c_G(v)?

inline constexpr int kMaxProblem9Order = 24;

bool MeetsHalfColorDegree(const EdgeColoredGraph& g, const Bipartition& b);

// Tries all 2^(n-1) splits with vertex 0 on the left and returns the first
// (by bitmask) meeting the half-color-degree bound, or nullopt when none
// does. Throws InputError for n > kMaxProblem9Order; use Problem9Hunt-style
// sampling for larger graphs.
std::optional<Bipartition> Problem9Exhaustive(const EdgeColoredGraph& g);

// Independent recheck: enumerates all 2^n splits through the generic
// cross-color-degree routine. True iff some split meets the bound.
bool Problem9Recheck(const EdgeColoredGraph& g);

// Directed bipartite 4-cycle conjecture. Hypothesis (either variant):
//   d+(u) >  |B|/3 for u in A  and  d+(v) >= |A|/3 for v in B, or
//   d+(u) >= |B|/3 for u in A  and  d+(v) >  |A|/3 for v in B,
// evaluated only when both parts have at least `min_part` vertices.
//
// Read literally, the statement fails whenever a part has at most 3
// vertices: with |A| = 3 the weak bound asks only d+(v) >= 1 on B, and if
// every v in B points at the same a0, a directed C4 would need a = a' = a0.
// kMinConjecturePart = 4 excludes that family; pass 1 for the literal
// statement.
inline constexpr int kMinConjecturePart = 4;

struct ConjectureVerdict {
  bool hypothesis_holds = false;
  bool conclusion_holds = false;
  std::optional<Cycle> witness;
  // min over vertices of d+(v) - |other part| / 3.
  double margin = 0.0;

  bool violated() const { return hypothesis_holds && !conclusion_holds; }
};

bool Conjecture10Hypothesis(const Digraph& d,
                            int min_part = kMinConjecturePart);
ConjectureVerdict Conjecture10Check(const Digraph& d,
                                    int min_part = kMinConjecturePart);

// Out-degree of each vertex uniform in [floor(k/3), min(k, ceil(k/3) + 1)]
// where k is the other part's size; targets uniform without replacement.
Digraph SampleThresholdDigraph(int left, int right, Rng& rng);

struct HuntCandidate {
  long long index = 0;
  // `.ecg` or `.dcg` serialization; enough to reproduce the verdict.
  std::string instance;
  // The brute-force recheck on a fresh parse of `instance` agrees.
  bool confirmed = false;
};

struct HuntReport {
  std::string kind;
  std::vector<std::pair<std::string, std::string>> parameters;
  long long instances = 0;
  std::vector<HuntCandidate> candidates;

  long long confirmed_candidates() const;
};

// Sample i uses an Rng seeded with seed + i, so reports do not depend on
// the thread count.
struct Problem9HuntOptions {
  int min_n = 4;
  int max_n = 14;
  long long budget = 1000;
  std::uint64_t seed = 0;
  int threads = 1;
};

struct Conjecture10HuntOptions {
  int min_part = 1;
  int max_part = 9;
  // Smallest part size the hypothesis covers.
  int hypothesis_min_part = kMinConjecturePart;
  long long budget = 10000;
  std::uint64_t seed = 0;
  int threads = 1;
};

HuntReport Problem9Hunt(const Problem9HuntOptions& options);
HuntReport Conjecture10Hunt(const Conjecture10HuntOptions& options);

// Line-oriented report:
//   instances=<N> candidates=<K>
//   kind=<name>
//   <param>=<value>        (one per parameter)
//   candidate index=<i> recheck=<confirmed|unconfirmed>
//   <instance lines>
//   end
std::string FormatHuntReport(const HuntReport& report);

}  // namespace rainbowc4

#endif  // RAINBOWC4_HUNT_H_
