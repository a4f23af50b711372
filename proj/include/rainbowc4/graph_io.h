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

#ifndef RAINBOWC4_GRAPH_IO_H_
#define RAINBOWC4_GRAPH_IO_H_

#include <filesystem>
#include <string>
#include <string_view>

#include "rainbowc4/graph.h"

namespace rainbowc4 {

// `.ecg` text format:
//
//   ecg <n> <m>
//   <u> <v> <c>      (m lines, 0 <= u,v < n, u != v, c >= 0)
//
// Lines starting with '#' and blank lines are ignored. Errors are reported as
// ParseError carrying the 1-based line number.
EdgeColoredGraph ParseEcg(std::string_view text);

// Canonical form: header, then edges in (min, max) endpoint order with the
// smaller endpoint first. ParseEcg(SerializeEcg(g)) == g.
std::string SerializeEcg(const EdgeColoredGraph& g);

EdgeColoredGraph ReadEcgFile(const std::filesystem::path& path);
void WriteEcgFile(const std::filesystem::path& path, const EdgeColoredGraph& g);

namespace detail {

// Shared line tokenizer for the text formats.
struct TextLine {
  std::size_t number = 0;
  std::vector<std::string_view> tokens;
};

// Splits into non-empty, non-comment lines of whitespace-separated tokens.
std::vector<TextLine> TokenizeLines(std::string_view text);

// Parses a nonnegative decimal integer token; throws ParseError otherwise.
long long ParseNonNegative(std::string_view token, std::size_t line,
                           std::string_view what);

std::string ReadTextFile(const std::filesystem::path& path);
void WriteTextFile(const std::filesystem::path& path, std::string_view text);

}  // namespace detail
}  // namespace rainbowc4

#endif  // RAINBOWC4_GRAPH_IO_H_
