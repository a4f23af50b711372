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

#include "rainbowc4/cli.h"

#include <gtest/gtest.h>

#include <cstdio>
#include <sstream>

#include "json.hpp"
#include "rainbowc4/graph_io.h"
#include "rainbowc4/hunt.h"
#include "rainbowc4/rainbow.h"

namespace rainbowc4::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result Call(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = RunCli(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string Field(const std::string& text, const std::string& key) {
  std::istringstream s(text);
  std::string line;
  while (std::getline(s, line))
    if (line.rfind(key + "=", 0) == 0) return line.substr(key.size() + 1);
  return "";
}

TEST(CliTest, PlaneHasNoRainbowC4) {
  const auto plane = Call({"plane", "--p", "2"});
  ASSERT_EQ(plane.code, kExitOk) << plane.err;
  EXPECT_EQ(plane.out.rfind("ecg 14 21\n", 0), 0u);
  const auto det = Call({"detect", "--c4"}, plane.out);
  EXPECT_EQ(det.code, kExitOk);
  EXPECT_EQ(det.out, "NONE\n");
}

TEST(CliTest, ProperK60SatisfiesTheoremSix) {
  const auto gen = Call({"gen", "--model", "proper-complete", "--n", "60"});
  ASSERT_EQ(gen.code, kExitOk) << gen.err;
  const auto v = Call({"verify", "--theorem", "6"}, gen.out);
  ASSERT_EQ(v.code, kExitOk) << v.err;
  EXPECT_EQ(Field(v.out, "hypothesis"), "true");
  EXPECT_EQ(Field(v.out, "conclusion"), "true");
  const std::string witness = Field(v.out, "witness");
  ASSERT_EQ(witness.rfind("C4 ", 0), 0u);

  // The printed cycle revalidates through --cycle.
  std::istringstream w(witness.substr(3));
  std::string cycle;
  for (int i = 0; i < 4; ++i) {
    std::string id;
    w >> id;
    cycle += (i ? "," : "") + id;
  }
  EXPECT_EQ(Call({"detect", "--cycle", cycle}, gen.out).out, "RAINBOW\n");
}

TEST(CliTest, Case1) {
  const auto r = Call({"case1", "--n", "5"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(Field(r.out, "failures"), "0");
  EXPECT_EQ(Field(r.out, "examined"), "332");
  EXPECT_EQ(Call({"case1", "--n", "9"}).code, kExitDomainError);
}

TEST(CliTest, ExitCodes) {
  EXPECT_EQ(Call({}).code, kExitUsage);
  EXPECT_EQ(Call({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(Call({"detect", "--bogus"}).code, kExitUsage);
  EXPECT_EQ(Call({"detect", "/nonexistent/x.ecg"}).code, kExitDomainError);
  EXPECT_EQ(Call({"detect"}, "ecg 2 1\n0 0 1\n").code, kExitDomainError);
  EXPECT_EQ(Call({"plane", "--p", "4"}).code, kExitDomainError);
  EXPECT_EQ(Call({"verify", "--theorem", "4"}, "ecg 3 3\n0 1 1\n1 2 2\n0 2 3\n")
                .code,
            kExitDomainError);
  EXPECT_EQ(Call({"hunt", "problem9", "--budget", "0"}).code, kExitDomainError);
  EXPECT_EQ(Call({"--help"}).code, kExitOk);
}

TEST(CliTest, DetectBothAndCycles) {
  const std::string k4 = "ecg 4 6\n0 1 1\n0 2 2\n0 3 3\n1 2 4\n1 3 5\n2 3 6\n";
  const auto both = Call({"detect", "--c3", "--c4"}, k4);
  ASSERT_EQ(both.code, kExitOk);
  EXPECT_EQ(both.out.rfind("c3 C3 ", 0), 0u) << both.out;
  EXPECT_NE(both.out.find("\nc4 C4 "), std::string::npos);
  EXPECT_EQ(Call({"detect", "--cycle", "0,1,2"}, "ecg 3 3\n0 1 1\n1 2 2\n0 2 1\n")
                .out,
            "NOT_RAINBOW\n");
  EXPECT_EQ(Call({"detect", "--cycle", "0,2,1,3"}, "ecg 4 2\n0 1 1\n2 3 1\n").code,
            kExitDomainError);
}

TEST(CliTest, JsonOutput) {
  const std::string k4 = "ecg 4 6\n0 1 1\n0 2 2\n0 3 3\n1 2 4\n1 3 5\n2 3 6\n";
  const auto r = Call({"detect", "--format", "json"}, k4);
  ASSERT_EQ(r.code, kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["c4"]["length"], 4);
  const auto cycle = j["c4"]["cycle"].get<std::vector<Vertex>>();
  EXPECT_TRUE(IsRainbow(ParseEcg(k4), Cycle{cycle}));

  const auto c = nlohmann::json::parse(
      Call({"case1", "--n", "4", "--format", "json"}).out);
  EXPECT_EQ(c["examined"], 8);
  EXPECT_GT(c["failure_count"].get<int>(), 0);
}

TEST(CliTest, BipartizeAndHuntAreDeterministic) {
  const auto gen = Call({"gen", "--model", "er", "--n", "20", "--seed", "4"});
  ASSERT_EQ(gen.code, kExitOk);
  EXPECT_EQ(gen.out, Call({"gen", "--model", "er", "--n", "20", "--seed", "4"}).out);
  const auto b1 = Call({"bipartize", "--method", "lemma7"}, gen.out);
  ASSERT_EQ(b1.code, kExitOk) << b1.err;
  EXPECT_FALSE(Field(b1.out, "final_potential").empty());
  EXPECT_EQ(b1.out, Call({"bipartize"}, gen.out).out);
  const auto e = Call({"bipartize", "--method", "erdos"}, gen.out);
  EXPECT_FALSE(Field(e.out, "cut").empty());

  const std::vector<std::string> hunt{"hunt", "conjecture10", "--budget", "500",
                                      "--seed", "2"};
  const auto h1 = Call(hunt);
  ASSERT_EQ(h1.code, kExitOk) << h1.err;
  EXPECT_EQ(h1.out, Call(hunt).out);
  EXPECT_EQ(h1.out.rfind("instances=500 ", 0), 0u);
}

TEST(CliTest, VerifyConjectureFromDigraph) {
  const auto gen = Call({"gen", "--model", "threshold-digraph", "--left", "4",
                         "--right", "5", "--seed", "1"});
  ASSERT_EQ(gen.code, kExitOk) << gen.err;
  EXPECT_EQ(gen.out.rfind("dcg 4 5 ", 0), 0u);
  const auto v = Call({"verify", "--theorem", "C10"}, gen.out);
  ASSERT_EQ(v.code, kExitOk) << v.err;
  EXPECT_EQ(Field(v.out, "theorem"), "C10");
}

TEST(CliTest, DefaultHypothesisFloorMatchesLibrary) {
  EXPECT_EQ(RunConfig{}.hypothesis_min_part, kMinConjecturePart);
}

TEST(CliTest, RealBinary) {
  const std::string cmd = std::string(RAINBOWC4_CLI_PATH) + " case1 --n 4";
  FILE* pipe = popen(cmd.c_str(), "r");
  ASSERT_NE(pipe, nullptr);
  std::string out;
  char buf[256];
  while (std::fgets(buf, sizeof buf, pipe)) out += buf;
  EXPECT_EQ(pclose(pipe), 0);
  EXPECT_EQ(Field(out, "examined"), "8");
}

}  // namespace
}  // namespace rainbowc4::cli
