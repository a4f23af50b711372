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

#include "rainbowc4/graph_io.h"

#include <gtest/gtest.h>

#include <filesystem>

#include "rainbowc4/errors.h"
#include "rainbowc4/rainbow.h"
#include "test_graphs.h"

namespace rainbowc4 {
namespace {

std::size_t ErrorLine(std::string_view text) {
  try {
    ParseEcg(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  ADD_FAILURE() << "no parse error for:\n" << text;
  return 0;
}

TEST(ParseEcgTest, RainbowTriangle) {
  const auto g = ParseEcg("ecg 3 3\n0 1 1\n1 2 2\n0 2 3\n");
  EXPECT_EQ(g.order(), 3);
  EXPECT_EQ(g.size(), 3u);
  EXPECT_TRUE(IsRainbow(g, Cycle{{0, 1, 2}}));
}

TEST(ParseEcgTest, CommentsAndBlankLines) {
  const auto g = ParseEcg("# header comment\necg 2 1\n\n# edge\n1 0 7\n");
  EXPECT_EQ(g.color(0, 1), 7);
}

TEST(ParseEcgTest, ErrorsNameTheLine) {
  EXPECT_EQ(ErrorLine("ecg 2 1\n0 0 1\n"), 2u);  // self-loop
  EXPECT_EQ(ErrorLine("ecx 2 1\n0 1 1\n"), 1u);
  EXPECT_EQ(ErrorLine("ecg 2\n0 1 1\n"), 1u);
  EXPECT_EQ(ErrorLine("ecg 0 0\n"), 1u);
  EXPECT_EQ(ErrorLine("ecg 3 2\n0 1 1\n1 0 2\n"), 3u);  // duplicate
  EXPECT_EQ(ErrorLine("ecg 3 1\n0 3 1\n"), 2u);         // id >= n
  EXPECT_EQ(ErrorLine("ecg 3 1\n0 1 -2\n"), 2u);        // negative color
  EXPECT_EQ(ErrorLine("ecg 3 1\n0 1\n"), 2u);
  EXPECT_EQ(ErrorLine("ecg 3 1\n0 1 x\n"), 2u);
  EXPECT_EQ(ErrorLine("ecg 3 2\n0 1 1\n"), 1u);  // count mismatch
  EXPECT_EQ(ErrorLine(""), 1u);
}

TEST(SerializeEcgTest, CanonicalOrder) {
  const auto g = ParseEcg("ecg 4 3\n3 2 1\n2 0 5\n1 0 2\n");
  EXPECT_EQ(SerializeEcg(g), "ecg 4 3\n0 1 2\n0 2 5\n2 3 1\n");
}

TEST(SerializeEcgTest, RoundTripRandomGraphs) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto g = testing::RandomGraph(seed, 1, 20);
    const std::string text = SerializeEcg(g);
    const auto back = ParseEcg(text);
    EXPECT_EQ(back, g);
    EXPECT_EQ(SerializeEcg(back), text);
  }
}

TEST(EcgFileTest, WriteThenRead) {
  const auto path = std::filesystem::temp_directory_path() / "rainbowc4_io.ecg";
  const auto g = testing::RainbowK4();
  WriteEcgFile(path, g);
  EXPECT_EQ(ReadEcgFile(path), g);
  std::filesystem::remove(path);
  EXPECT_THROW(ReadEcgFile(path), InputError);
}

}  // namespace
}  // namespace rainbowc4
