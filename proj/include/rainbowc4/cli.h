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

#ifndef RAINBOWC4_CLI_H_
#define RAINBOWC4_CLI_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace rainbowc4::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
  std::string subcommand;
  // Empty or "-" reads stdin; output empty writes stdout.
  std::string input;
  std::string output;
  std::uint64_t seed = 0;
  std::string format = "text";

  // detect
  bool c3 = false;
  bool c4 = false;
  std::string cycle;
  // bipartize
  std::string method = "lemma7";
  std::string init = "parity";
  // plane
  int prime = 2;
  // verify
  std::string theorem;
  // case1 / gen
  int n = 0;
  // hunt
  std::string hunt_kind;
  long long budget = 1000;
  int min_n = 4;
  int max_n = 14;
  int min_part = 1;
  int max_part = 9;
  int hypothesis_min_part = 4;  // kMinConjecturePart
  int threads = 1;
  // gen
  std::string model = "er";
  double edge_probability = 0.5;
  int palette = 0;
  int left = 3;
  int right = 3;
};

// Executes a parsed configuration. Returns kExitOk on success (including
// "no witness" answers) and kExitDomainError when the input is rejected.
int Run(const RunConfig& config, std::istream& in, std::ostream& out,
        std::ostream& err);

// Parses argv-style arguments (without the program name) and runs them.
// Unknown subcommands or flags give kExitUsage.
int RunCli(const std::vector<std::string>& args, std::istream& in,
           std::ostream& out, std::ostream& err);

}  // namespace rainbowc4::cli

#endif  // RAINBOWC4_CLI_H_
