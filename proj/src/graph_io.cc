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

#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>

#include "rainbowc4/errors.h"

namespace rainbowc4 {
namespace detail {

std::vector<TextLine> TokenizeLines(std::string_view text) {
  std::vector<TextLine> lines;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    pos = end + 1;

    if (!raw.empty() && raw.front() == '#') continue;
    TextLine line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i])))
        ++i;
      std::size_t start = i;
      while (i < raw.size() &&
             !std::isspace(static_cast<unsigned char>(raw[i])))
        ++i;
      if (i > start) line.tokens.push_back(raw.substr(start, i - start));
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (end == text.size()) break;
  }
  return lines;
}

long long ParseNonNegative(std::string_view token, std::size_t line,
                           std::string_view what) {
  long long value = 0;
  auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError(line, "expected integer " + std::string(what) +
                               ", got '" + std::string(token) + "'");
  }
  if (value < 0) {
    throw ParseError(line, "negative " + std::string(what) + " " +
                               std::string(token));
  }
  return value;
}

std::string ReadTextFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void WriteTextFile(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path.string());
  out << text;
  if (!out) throw InputError("write failed for " + path.string());
}

}  // namespace detail

EdgeColoredGraph ParseEcg(std::string_view text) {
  const auto lines = detail::TokenizeLines(text);
  if (lines.empty()) throw ParseError(1, "missing 'ecg <n> <m>' header");

  const auto& header = lines.front();
  if (header.tokens.size() != 3 || header.tokens[0] != "ecg") {
    throw ParseError(header.number, "malformed header, expected 'ecg <n> <m>'");
  }
  const long long n =
      detail::ParseNonNegative(header.tokens[1], header.number, "vertex count");
  const long long m =
      detail::ParseNonNegative(header.tokens[2], header.number, "edge count");
  if (n < 1 || n > std::numeric_limits<Vertex>::max()) {
    throw ParseError(header.number, "vertex count must be in [1, 2^31)");
  }
  if (static_cast<long long>(lines.size()) - 1 != m) {
    throw ParseError(header.number,
                     "header declares " + std::to_string(m) +
                         " edges but found " +
                         std::to_string(lines.size() - 1));
  }

  GraphBuilder builder(static_cast<int>(n));
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    if (line.tokens.size() != 3) {
      throw ParseError(line.number, "expected '<u> <v> <c>'");
    }
    const long long u =
        detail::ParseNonNegative(line.tokens[0], line.number, "vertex");
    const long long v =
        detail::ParseNonNegative(line.tokens[1], line.number, "vertex");
    const long long c =
        detail::ParseNonNegative(line.tokens[2], line.number, "color");
    if (u >= n || v >= n) {
      throw ParseError(line.number, "vertex id out of range [0, " +
                                        std::to_string(n) + ")");
    }
    try {
      builder.AddEdge(static_cast<Vertex>(u), static_cast<Vertex>(v), c);
    } catch (const InputError& e) {
      throw ParseError(line.number, e.what());
    }
  }
  return std::move(builder).Build();
}

std::string SerializeEcg(const EdgeColoredGraph& g) {
  std::string out = "ecg " + std::to_string(g.order()) + " " +
                    std::to_string(g.size()) + "\n";
  for (const Edge& e : g.edges()) {
    out += std::to_string(e.u);
    out += ' ';
    out += std::to_string(e.v);
    out += ' ';
    out += std::to_string(e.color);
    out += '\n';
  }
  return out;
}

EdgeColoredGraph ReadEcgFile(const std::filesystem::path& path) {
  return ParseEcg(detail::ReadTextFile(path));
}

void WriteEcgFile(const std::filesystem::path& path,
                  const EdgeColoredGraph& g) {
  detail::WriteTextFile(path, SerializeEcg(g));
}

}  // namespace rainbowc4
