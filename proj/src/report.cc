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

#include "rainbowc4/report.h"

#include <sstream>

namespace rainbowc4 {
namespace {

std::string Bool(bool b) { return b ? "true" : "false"; }

std::string Number(double x) {
  std::ostringstream out;
  out.precision(12);
  out << x;
  return out.str();
}

std::string JoinCycle(const Cycle& c) {
  std::string out;
  for (Vertex v : c.vertices) out += " " + std::to_string(v);
  return out;
}

}  // namespace

std::string FormatWitness(const RainbowWitness& w) {
  std::string out = "C" + std::to_string(w.cycle.length()) + JoinCycle(w.cycle);
  out += " colors";
  for (Color c : w.colors) out += " " + std::to_string(c);
  return out;
}

std::string FormatVerdict(const Verdict& v) {
  std::string out = "theorem=" + v.theorem + "\n";
  out += "hypothesis=" + Bool(v.hypothesis_holds) + "\n";
  out += "conclusion=" + Bool(v.conclusion_holds) + "\n";
  out += "margin=" + Number(v.margin) + "\n";
  out += "witness=" + (v.witness ? FormatWitness(*v.witness) : "NONE") + "\n";
  return out;
}

std::string FormatConjectureVerdict(const ConjectureVerdict& v) {
  std::string out = "theorem=C10\n";
  out += "hypothesis=" + Bool(v.hypothesis_holds) + "\n";
  out += "conclusion=" + Bool(v.conclusion_holds) + "\n";
  out += "margin=" + Number(v.margin) + "\n";
  out += "witness=" + (v.witness ? "DC4" + JoinCycle(*v.witness) : "NONE") +
         "\n";
  return out;
}

std::string FormatCase1Report(const Case1Report& r) {
  std::string out = "n=" + std::to_string(r.n) + "\n";
  out += "examined=" + std::to_string(r.examined) + "\n";
  out += "failures=" + std::to_string(r.failures.size()) + "\n";
  for (const auto& colors : r.failures) {
    out += "failure";
    for (Color c : colors) out += " " + std::to_string(c);
    out += "\n";
  }
  return out;
}

nlohmann::json ToJson(const RainbowWitness& w) {
  return {{"length", w.cycle.length()},
          {"cycle", w.cycle.vertices},
          {"colors", w.colors}};
}

nlohmann::json ToJson(const Verdict& v) {
  return {{"theorem", v.theorem},
          {"hypothesis", v.hypothesis_holds},
          {"conclusion", v.conclusion_holds},
          {"margin", v.margin},
          {"witness", v.witness ? ToJson(*v.witness) : nlohmann::json()}};
}

nlohmann::json ToJson(const ConjectureVerdict& v) {
  return {{"theorem", "C10"},
          {"hypothesis", v.hypothesis_holds},
          {"conclusion", v.conclusion_holds},
          {"margin", v.margin},
          {"witness",
           v.witness ? nlohmann::json(v.witness->vertices) : nlohmann::json()}};
}

nlohmann::json ToJson(const Case1Report& r) {
  return {{"n", r.n},
          {"examined", r.examined},
          {"failure_count", r.failures.size()},
          {"failures", r.failures}};
}

nlohmann::json ToJson(const HuntReport& r) {
  nlohmann::json params = nlohmann::json::object();
  for (const auto& [key, value] : r.parameters) params[key] = value;
  nlohmann::json candidates = nlohmann::json::array();
  for (const HuntCandidate& c : r.candidates) {
    candidates.push_back({{"index", c.index},
                          {"confirmed", c.confirmed},
                          {"instance", c.instance}});
  }
  return {{"kind", r.kind},
          {"instances", r.instances},
          {"candidate_count", r.candidates.size()},
          {"confirmed_count", r.confirmed_candidates()},
          {"parameters", params},
          {"candidates", candidates}};
}

nlohmann::json ToJson(const Bipartition& b) {
  return {{"left", b.left()}, {"right", b.right()}};
}

nlohmann::json ToJson(const SearchTrace& t) {
  nlohmann::json moves = nlohmann::json::array();
  for (const SearchMove& m : t.moves) {
    moves.push_back({m.vertex, m.potential_before, m.potential_after});
  }
  return {{"moves", moves}, {"final_potential", t.final_potential}};
}

}  // namespace rainbowc4
