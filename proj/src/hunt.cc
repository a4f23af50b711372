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

#include "rainbowc4/hunt.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <numeric>
#include <thread>

#include "rainbowc4/errors.h"
#include "rainbowc4/graph_io.h"

namespace rainbowc4 {
namespace {

// Evaluates samples 0..budget-1, striped across threads, and returns the
// candidates in index order.
std::vector<HuntCandidate> RunSamples(
    long long budget, int threads,
    const std::function<std::optional<HuntCandidate>(long long)>& sample) {
  threads = std::max(1, threads);
  std::vector<std::vector<HuntCandidate>> per_worker(threads);
  auto work = [&](int w) {
    for (long long i = w; i < budget; i += threads) {
      if (auto c = sample(i)) per_worker[w].push_back(std::move(*c));
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < threads; ++w) pool.emplace_back(work, w);
  }
  std::vector<HuntCandidate> all;
  for (auto& list : per_worker) {
    for (auto& c : list) all.push_back(std::move(c));
  }
  std::sort(all.begin(), all.end(),
            [](const HuntCandidate& a, const HuntCandidate& b) {
              return a.index < b.index;
            });
  return all;
}

void CheckBudget(long long budget) {
  if (budget <= 0) throw InputError("hunt budget must be positive");
}

}  // namespace

bool MeetsHalfColorDegree(const EdgeColoredGraph& g, const Bipartition& b) {
  for (Vertex v = 0; v < g.order(); ++v) {
    if (2 * CrossColorDegree(g, b, v) < ColorDegree(g, v)) return false;
  }
  return true;
}

std::optional<Bipartition> Problem9Exhaustive(const EdgeColoredGraph& g) {
  const int n = g.order();
  if (n > kMaxProblem9Order) {
    throw InputError("exhaustive split search supports n <= " +
                     std::to_string(kMaxProblem9Order) + ", got " +
                     std::to_string(n) + "; use the sampling hunt instead");
  }
  // Per vertex: incident colors renumbered 0..d^c(v)-1, so the cross colors
  // of v under a split fit in one 32-bit mask.
  struct Incidence {
    Vertex other;
    std::uint32_t bit;
  };
  std::vector<std::vector<Incidence>> local(n);
  std::vector<int> color_degree(n);
  for (Vertex v = 0; v < n; ++v) {
    const ColorSet cn = ColorNeighborhood(g, v);
    color_degree[v] = static_cast<int>(cn.size());
    for (const Neighbor& nb : g.neighbors(v)) {
      const auto idx =
          std::lower_bound(cn.begin(), cn.end(), nb.color) - cn.begin();
      local[v].push_back({nb.vertex, 1U << idx});
    }
  }
  const std::uint32_t limit = n == 0 ? 1 : (1U << (n - 1));
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    // Bit v-1 of mask is the side of vertex v; vertex 0 stays left.
    const std::uint64_t sides = static_cast<std::uint64_t>(mask) << 1;
    bool ok = true;
    for (Vertex v = 0; v < n && ok; ++v) {
      const auto side_v = (sides >> v) & 1U;
      std::uint32_t seen = 0;
      for (const Incidence& inc : local[v]) {
        if (((sides >> inc.other) & 1U) != side_v) seen |= inc.bit;
      }
      ok = 2 * std::popcount(seen) >= color_degree[v];
    }
    if (ok) {
      std::vector<int> side(n);
      for (Vertex v = 0; v < n; ++v) side[v] = static_cast<int>((sides >> v) & 1U);
      return Bipartition::FromSides(std::move(side));
    }
  }
  return std::nullopt;
}

bool Problem9Recheck(const EdgeColoredGraph& g) {
  const int n = g.order();
  if (n > kMaxProblem9Order) {
    throw InputError("recheck supports n <= " +
                     std::to_string(kMaxProblem9Order));
  }
  for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
    std::vector<int> side(n);
    for (Vertex v = 0; v < n; ++v) side[v] = static_cast<int>((mask >> v) & 1U);
    if (MeetsHalfColorDegree(g, Bipartition::FromSides(std::move(side)))) {
      return true;
    }
  }
  return false;
}

bool Conjecture10Hypothesis(const Digraph& d, int min_part) {
  const int na = d.left_size();
  const int nb = d.right_size();
  if (na < min_part || nb < min_part) return false;
  // 3 d+ > k and 3 d+ >= k, in integers.
  bool a_strict = true, a_weak = true, b_strict = true, b_weak = true;
  for (Vertex u = 0; u < na; ++u) {
    const int three_d = 3 * d.out_degree(u);
    a_strict = a_strict && three_d > nb;
    a_weak = a_weak && three_d >= nb;
  }
  for (Vertex v = na; v < na + nb; ++v) {
    const int three_d = 3 * d.out_degree(v);
    b_strict = b_strict && three_d > na;
    b_weak = b_weak && three_d >= na;
  }
  return (a_strict && b_weak) || (a_weak && b_strict);
}

ConjectureVerdict Conjecture10Check(const Digraph& d, int min_part) {
  ConjectureVerdict v;
  v.hypothesis_holds = Conjecture10Hypothesis(d, min_part);
  v.witness = FindDirectedC4(d);
  v.conclusion_holds = v.witness.has_value();
  double margin = std::numeric_limits<double>::infinity();
  for (Vertex x = 0; x < d.order(); ++x) {
    const int other = d.in_left(x) ? d.right_size() : d.left_size();
    margin = std::min(margin, d.out_degree(x) - other / 3.0);
  }
  v.margin = std::isfinite(margin) ? margin : 0.0;
  return v;
}

Digraph SampleThresholdDigraph(int left, int right, Rng& rng) {
  std::vector<Arc> arcs;
  auto add_out_arcs = [&](Vertex from, Vertex first, int count) {
    const int lo = count / 3;
    const int hi = std::min(count, (count + 2) / 3 + 1);
    const int degree = std::uniform_int_distribution<int>(lo, hi)(rng);
    std::vector<Vertex> targets(count);
    std::iota(targets.begin(), targets.end(), first);
    // Partial Fisher-Yates: the first `degree` slots are the targets.
    for (int i = 0; i < degree; ++i) {
      const int j = std::uniform_int_distribution<int>(i, count - 1)(rng);
      std::swap(targets[i], targets[j]);
      arcs.push_back({from, targets[i]});
    }
  };
  for (Vertex u = 0; u < left; ++u) add_out_arcs(u, left, right);
  for (Vertex v = left; v < left + right; ++v) add_out_arcs(v, 0, left);
  return Digraph::FromArcs(left, right, arcs);
}

long long HuntReport::confirmed_candidates() const {
  return std::count_if(candidates.begin(), candidates.end(),
                       [](const HuntCandidate& c) { return c.confirmed; });
}

HuntReport Problem9Hunt(const Problem9HuntOptions& options) {
  CheckBudget(options.budget);
  if (options.min_n < 1 || options.max_n < options.min_n ||
      options.max_n > kMaxProblem9Order) {
    throw InputError("problem 9 hunt needs 1 <= min_n <= max_n <= " +
                     std::to_string(kMaxProblem9Order));
  }
  HuntReport report;
  report.kind = "problem9";
  report.parameters = {{"seed", std::to_string(options.seed)},
                       {"budget", std::to_string(options.budget)},
                       {"min_n", std::to_string(options.min_n)},
                       {"max_n", std::to_string(options.max_n)}};
  report.instances = options.budget;
  report.candidates = RunSamples(
      options.budget, options.threads,
      [&](long long i) -> std::optional<HuntCandidate> {
        Rng rng(options.seed + static_cast<std::uint64_t>(i));
        const int n = std::uniform_int_distribution<int>(options.min_n,
                                                         options.max_n)(rng);
        const EdgeColoredGraph g = SampleHuntGraph(n, rng);
        if (Problem9Exhaustive(g)) return std::nullopt;
        HuntCandidate c{i, SerializeEcg(g), false};
        c.confirmed = !Problem9Recheck(ParseEcg(c.instance));
        return c;
      });
  return report;
}

HuntReport Conjecture10Hunt(const Conjecture10HuntOptions& options) {
  CheckBudget(options.budget);
  if (options.min_part < 1 || options.max_part < options.min_part) {
    throw InputError("conjecture 10 hunt needs 1 <= min_part <= max_part");
  }
  HuntReport report;
  report.kind = "conjecture10";
  report.parameters = {{"seed", std::to_string(options.seed)},
                       {"budget", std::to_string(options.budget)},
                       {"min_part", std::to_string(options.min_part)},
                       {"max_part", std::to_string(options.max_part)},
                       {"hypothesis_min_part",
                        std::to_string(options.hypothesis_min_part)}};
  report.instances = options.budget;
  report.candidates = RunSamples(
      options.budget, options.threads,
      [&](long long i) -> std::optional<HuntCandidate> {
        Rng rng(options.seed + static_cast<std::uint64_t>(i));
        std::uniform_int_distribution<int> part(options.min_part,
                                                options.max_part);
        const int a = part(rng);
        const int b = part(rng);
        const Digraph d = SampleThresholdDigraph(a, b, rng);
        const ConjectureVerdict verdict =
            Conjecture10Check(d, options.hypothesis_min_part);
        if (!verdict.violated()) return std::nullopt;
        HuntCandidate c{i, SerializeDcg(d), false};
        const Digraph fresh = ParseDcg(c.instance);
        c.confirmed =
            Conjecture10Hypothesis(fresh, options.hypothesis_min_part) &&
            !BruteForceDirectedC4(fresh);
        return c;
      });
  return report;
}

std::string FormatHuntReport(const HuntReport& report) {
  std::string out = "instances=" + std::to_string(report.instances) +
                    " candidates=" + std::to_string(report.candidates.size()) +
                    "\n";
  out += "kind=" + report.kind + "\n";
  for (const auto& [key, value] : report.parameters) {
    out += key + "=" + value + "\n";
  }
  for (const HuntCandidate& c : report.candidates) {
    out += "candidate index=" + std::to_string(c.index) +
           " recheck=" + (c.confirmed ? "confirmed" : "unconfirmed") + "\n";
    out += c.instance;
    out += "end\n";
  }
  return out;
}

}  // namespace rainbowc4
