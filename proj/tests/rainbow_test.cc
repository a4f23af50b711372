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

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "rainbowc4/errors.h"
#include "rainbowc4/generate.h"
#include "rainbowc4/projective.h"
#include "test_graphs.h"

namespace rainbowc4 {
namespace {

using testing::CycleGraph;
using testing::MonoComplete;
using testing::RainbowK4;

TEST(IsRainbowTest, Examples) {
  EXPECT_TRUE(IsRainbow(CycleGraph({1, 2, 3, 4}), Cycle{{0, 1, 2, 3}}));
  EXPECT_FALSE(IsRainbow(CycleGraph({1, 1, 2, 3}), Cycle{{0, 1, 2, 3}}));
  EXPECT_FALSE(IsRainbow(CycleGraph({1, 2, 1}), Cycle{{0, 1, 2}}));
}

TEST(IsRainbowTest, RejectsNonCycles) {
  const auto c4 = CycleGraph({1, 2, 3, 4});
  EXPECT_THROW(IsRainbow(c4, Cycle{{0, 2, 1, 3}}), InputError);
  EXPECT_THROW(IsRainbow(c4, Cycle{{0, 1, 0, 3}}), InputError);
  EXPECT_THROW(IsRainbow(c4, Cycle{{0, 1}}), InputError);
  EXPECT_THROW(IsRainbow(c4, Cycle{{0, 1, 2, 7}}), InputError);
}

TEST(CanonicalCycleTest, RotatesAndReflects) {
  EXPECT_EQ(CanonicalCycle(Cycle{{2, 3, 0, 1}}), (Cycle{{0, 1, 2, 3}}));
  EXPECT_EQ(CanonicalCycle(Cycle{{3, 2, 1, 0}}), (Cycle{{0, 1, 2, 3}}));
  EXPECT_EQ(CanonicalCycle(Cycle{{1, 0, 2}}), (Cycle{{0, 1, 2}}));
}

TEST(FindRainbowC4Test, Examples) {
  const auto w = FindRainbowC4(RainbowK4());
  ASSERT_TRUE(w.has_value());
  EXPECT_TRUE(IsRainbow(RainbowK4(), w->cycle));
  EXPECT_EQ(w->colors.size(), 4u);

  EXPECT_FALSE(FindRainbowC4(MonoComplete(5)).has_value());

  const auto fano = RainbowColor(IncidenceGraph(BuildPlane(2)));
  EXPECT_FALSE(FindRainbowC4(fano).has_value());

  const auto k60 = ProperComplete(60);
  const auto w60 = FindRainbowC4(k60);
  ASSERT_TRUE(w60.has_value());
  EXPECT_TRUE(IsRainbow(k60, w60->cycle));
}

TEST(FindRainbowC3Test, Examples) {
  EXPECT_TRUE(FindRainbowC3(RainbowK4()).has_value());
  EXPECT_FALSE(FindRainbowC3(MonoComplete(5)).has_value());
  EXPECT_TRUE(FindRainbowC3(testing::ProperThreeColoredK4()).has_value());
  EXPECT_FALSE(FindRainbowC3(CycleGraph({1, 2, 3, 4})).has_value());
}

TEST(OracleTest, Counts) {
  EXPECT_EQ(OracleRainbowCycles(RainbowK4(), 4).size(), 3u);
  EXPECT_EQ(OracleRainbowCycles(MonoComplete(4), 4).size(), 0u);
  EXPECT_EQ(OracleRainbowCycles(RainbowK4(), 3).size(), 4u);
  EXPECT_THROW(OracleRainbowCycles(RainbowK4(), 5), InputError);
  // Proper 3-coloring of K4: every triangle is rainbow, no 4-cycle is.
  EXPECT_EQ(OracleRainbowCycles(testing::ProperThreeColoredK4(), 3).size(), 4u);
  EXPECT_EQ(OracleRainbowCycles(testing::ProperThreeColoredK4(), 4).size(), 0u);
}

// Independent reference: every 4-tuple of distinct vertices, any order.
bool NaiveHasRainbowC4(const EdgeColoredGraph& g) {
  const int n = g.order();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          if (a == b || a == c || a == d || b == c || b == d || c == d) continue;
          const auto x = g.color(a, b), y = g.color(b, c), z = g.color(c, d),
                     w = g.color(d, a);
          if (!x || !y || !z || !w) continue;
          std::set<Color> s{*x, *y, *z, *w};
          if (s.size() == 4) return true;
        }
  return false;
}

TEST(EquivalenceTest, PrunedMatchesOracle) {
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    const auto g = testing::RandomGraph(seed, 1, 10);
    const auto o4 = OracleRainbowCycles(g, 4);
    const auto o3 = OracleRainbowCycles(g, 3);
    const auto p4 = FindRainbowC4(g);
    const auto p3 = FindRainbowC3(g);
    ASSERT_EQ(p4.has_value(), !o4.empty()) << "seed " << seed;
    ASSERT_EQ(p3.has_value(), !o3.empty()) << "seed " << seed;
    EXPECT_EQ(p4.has_value(), NaiveHasRainbowC4(g)) << "seed " << seed;
    if (p4) EXPECT_EQ(*p4, o4.front());
    if (p3) EXPECT_EQ(*p3, o3.front());
  }
}

TEST(EquivalenceTest, RecoloringAndRelabeling) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto g = testing::RandomGraph(seed, 4, 10);
    // Injective recoloring keeps the answer.
    std::vector<Color> colors;
    for (const Edge& e : g.edges()) colors.push_back(e.color * 7 + 3);
    const auto h = g.Recolored(colors);
    EXPECT_EQ(FindRainbowC4(g).has_value(), FindRainbowC4(h).has_value());
    EXPECT_EQ(FindRainbowC3(g).has_value(), FindRainbowC3(h).has_value());

    std::vector<Vertex> perm(g.order());
    std::iota(perm.begin(), perm.end(), 0);
    std::mt19937_64 rng(seed);
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto p = testing::Permuted(g, perm);
    EXPECT_EQ(OracleRainbowCycles(g, 4).size(), OracleRainbowCycles(p, 4).size());
    EXPECT_EQ(FindRainbowC4(g).has_value(), FindRainbowC4(p).has_value());
  }
}

}  // namespace
}  // namespace rainbowc4
