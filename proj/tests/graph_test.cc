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

#include "rainbowc4/graph.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "rainbowc4/errors.h"
#include "rainbowc4/generate.h"
#include "test_graphs.h"

namespace rainbowc4 {
namespace {

using testing::Make;
using testing::MonoComplete;
using testing::RainbowK4;

TEST(GraphBuilderTest, RejectsInvalidEdges) {
  EXPECT_THROW(GraphBuilder(0), InputError);
  GraphBuilder b(3);
  EXPECT_THROW(b.AddEdge(1, 1, 0), InputError);
  EXPECT_THROW(b.AddEdge(0, 3, 0), InputError);
  EXPECT_THROW(b.AddEdge(-1, 2, 0), InputError);
  EXPECT_THROW(b.AddEdge(0, 1, -4), InputError);
  b.AddEdge(0, 1, 7);
  EXPECT_THROW(b.AddEdge(1, 0, 8), InputError);
}

TEST(GraphBuilderTest, StoresCanonicalEdges) {
  const auto g = Make(4, {{3, 2, 9}, {1, 0, 4}, {2, 0, 5}});
  ASSERT_EQ(g.size(), 3u);
  EXPECT_EQ(g.edges()[0], (Edge{0, 1, 4}));
  EXPECT_EQ(g.edges()[1], (Edge{0, 2, 5}));
  EXPECT_EQ(g.edges()[2], (Edge{2, 3, 9}));
  EXPECT_EQ(g.color(3, 2), 9);
  EXPECT_EQ(g.color(1, 3), std::nullopt);
  EXPECT_EQ(g.degree(0), 2);
  EXPECT_THROW(g.neighbors(4), InputError);
}

TEST(ColorNeighborhoodTest, Examples) {
  const auto mono = MonoComplete(3, 1);
  EXPECT_EQ(ColorNeighborhood(mono, 0).values(), std::vector<Color>{1});

  const auto k4 = RainbowK4();
  for (Vertex v = 0; v < 4; ++v) EXPECT_EQ(ColorNeighborhood(k4, v).size(), 3u);

  const auto path = Make(3, {{0, 1, 5}, {1, 2, 5}});
  EXPECT_EQ(ColorNeighborhood(path, 1).values(), std::vector<Color>{5});

  EXPECT_THROW(ColorNeighborhood(path, 3), InputError);
}

TEST(RestrictedColorNeighborhoodTest, Examples) {
  const auto k4 = RainbowK4();
  const std::vector<Vertex> s12{1, 2};
  EXPECT_EQ(RestrictedColorNeighborhood(k4, 0, s12).values(),
            (std::vector<Color>{1, 2}));
  EXPECT_TRUE(RestrictedColorNeighborhood(k4, 0, {}).empty());
  const std::vector<Vertex> s01{0, 1};
  EXPECT_EQ(RestrictedColorNeighborhood(k4, 0, s01).values(),
            std::vector<Color>{1});
  const std::vector<Vertex> bad{9};
  EXPECT_THROW(RestrictedColorNeighborhood(k4, 0, bad), InputError);
}

TEST(PairwiseColorUnionTest, Examples) {
  EXPECT_EQ(PairwiseColorUnion(MonoComplete(3), 0, 2), 1u);
  const auto k4 = RainbowK4();
  for (Vertex u = 0; u < 4; ++u)
    for (Vertex v = u + 1; v < 4; ++v) EXPECT_EQ(PairwiseColorUnion(k4, u, v), 5u);
  EXPECT_THROW(PairwiseColorUnion(k4, 2, 2), InputError);

  // Rainbow path 0-1-2-3 plus pendant 3-4: 0 and 3 are nonadjacent.
  const auto g = Make(5, {{0, 1, 1}, {1, 2, 2}, {2, 3, 3}, {3, 4, 4}});
  EXPECT_EQ(PairwiseColorUnion(g, 0, 3), 1u + 2u);
}

TEST(MinimaTest, ProperK5) {
  const auto k5 = ProperComplete(5);
  EXPECT_EQ(MinColorDegree(k5), 4u);
  // Oracle: union straight from the edge list, over all pairs.
  std::size_t oracle = 100;
  for (Vertex u = 0; u < 5; ++u)
    for (Vertex v = u + 1; v < 5; ++v)
      oracle = std::min(oracle, testing::NaiveUnion(k5, u, v));
  EXPECT_EQ(MinPairwiseColorUnion(k5), oracle);
  EXPECT_GE(MinPairwiseColorUnion(k5), 4u);
  EXPECT_EQ(MinColorDegree(MonoComplete(3)), 1u);
  EXPECT_THROW(MinPairwiseColorUnion(Make(1, {})), InputError);
}

TEST(GraphPropertyTest, ColorDegreeAndUnionBounds) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto g = testing::RandomGraph(seed, 2, 12);
    std::vector<Vertex> all(g.order());
    std::iota(all.begin(), all.end(), 0);
    for (Vertex v = 0; v < g.order(); ++v) {
      const std::size_t dc = ColorDegree(g, v);
      const auto d = static_cast<std::size_t>(g.degree(v));
      if (d >= 1) {
        EXPECT_GE(dc, 1u);
        EXPECT_LE(dc, d);
      }
      EXPECT_EQ(RestrictedColorNeighborhood(g, v, all), ColorNeighborhood(g, v));
    }
    for (Vertex u = 0; u < g.order(); ++u) {
      for (Vertex v = u + 1; v < g.order(); ++v) {
        const std::size_t un = PairwiseColorUnion(g, u, v);
        EXPECT_EQ(un, testing::NaiveUnion(g, u, v));
        EXPECT_LE(std::max(ColorDegree(g, u), ColorDegree(g, v)), un);
        EXPECT_LE(un, ColorDegree(g, u) + ColorDegree(g, v));
      }
    }
  }
}

TEST(GraphPropertyTest, RainbowUnionIdentity) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto base = testing::RandomGraph(seed, 2, 12);
    std::vector<Color> distinct(base.size());
    std::iota(distinct.begin(), distinct.end(), Color{10});
    const auto g = base.Recolored(distinct);
    for (Vertex u = 0; u < g.order(); ++u) {
      for (Vertex v = u + 1; v < g.order(); ++v) {
        const std::size_t expected =
            g.degree(u) + g.degree(v) - (g.adjacent(u, v) ? 1 : 0);
        EXPECT_EQ(PairwiseColorUnion(g, u, v), expected);
      }
    }
  }
}

}  // namespace
}  // namespace rainbowc4
