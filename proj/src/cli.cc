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

#include <filesystem>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "rainbowc4/bipartize.h"
#include "rainbowc4/digraph.h"
#include "rainbowc4/errors.h"
#include "rainbowc4/generate.h"
#include "rainbowc4/graph_io.h"
#include "rainbowc4/hunt.h"
#include "rainbowc4/projective.h"
#include "rainbowc4/rainbow.h"
#include "rainbowc4/report.h"
#include "rainbowc4/verify.h"

namespace rainbowc4::cli {
namespace {

namespace fs = std::filesystem;

bool ReadsStdin(const RunConfig& c) { return c.input.empty() || c.input == "-"; }

void ValidatePaths(const RunConfig& c) {
  if (!ReadsStdin(c)) {
    if (!fs::is_regular_file(c.input)) {
      throw InputError("input file not found: " + c.input);
    }
  }
  if (!c.output.empty()) {
    const fs::path parent = fs::path(c.output).parent_path();
    if (!parent.empty() && !fs::is_directory(parent)) {
      throw InputError("output directory does not exist: " + parent.string());
    }
  }
  if (c.format != "text" && c.format != "json") {
    throw InputError("--format must be text or json");
  }
}

std::string ReadInput(const RunConfig& c, std::istream& in) {
  if (ReadsStdin(c)) {
    return std::string(std::istreambuf_iterator<char>(in), {});
  }
  return detail::ReadTextFile(c.input);
}

void Emit(const RunConfig& c, const std::string& text, std::ostream& out) {
  if (c.output.empty()) {
    out << text;
  } else {
    detail::WriteTextFile(c.output, text);
  }
}

std::string Dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

Cycle ParseCycleList(const std::string& text) {
  Cycle cycle;
  std::string token;
  std::istringstream stream(text);
  while (std::getline(stream, token, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(token, &used);
      if (used != token.size()) throw std::invalid_argument(token);
      cycle.vertices.push_back(v);
    } catch (const std::logic_error&) {
      throw InputError("--cycle expects comma-separated vertex ids");
    }
  }
  return cycle;
}

int RunDetect(const RunConfig& c, std::istream& in, std::ostream& out) {
  const EdgeColoredGraph g = ParseEcg(ReadInput(c, in));
  if (!c.cycle.empty()) {
    const bool rainbow = IsRainbow(g, ParseCycleList(c.cycle));
    if (c.format == "json") {
      Emit(c, Dump({{"rainbow", rainbow}}), out);
    } else {
      Emit(c, rainbow ? "RAINBOW\n" : "NOT_RAINBOW\n", out);
    }
    return kExitOk;
  }
  const bool want_c3 = c.c3;
  const bool want_c4 = c.c4 || !c.c3;
  const bool prefix = want_c3 && want_c4;
  std::string text;
  nlohmann::json j = nlohmann::json::object();
  auto report = [&](const char* key, const std::optional<RainbowWitness>& w) {
    j[key] = w ? ToJson(*w) : nlohmann::json();
    if (prefix) text += std::string(key) + " ";
    text += (w ? FormatWitness(*w) : "NONE") + "\n";
  };
  if (want_c3) report("c3", FindRainbowC3(g));
  if (want_c4) report("c4", FindRainbowC4(g));
  Emit(c, c.format == "json" ? Dump(j) : text, out);
  return kExitOk;
}

int RunBipartize(const RunConfig& c, std::istream& in, std::ostream& out) {
  const EdgeColoredGraph g = ParseEcg(ReadInput(c, in));
  Bipartition initial = Bipartition::Parity(g.order());
  if (c.init == "random") {
    initial = Bipartition::Random(g.order(), c.seed);
  } else if (c.init != "parity") {
    throw InputError("--init must be parity or random");
  }
  auto join = [](const std::vector<Vertex>& vs) {
    std::string s;
    for (Vertex v : vs) s += " " + std::to_string(v);
    return s;
  };
  if (c.method == "lemma7") {
    const Lemma7Result r = Lemma7Bipartize(g, std::move(initial));
    if (c.format == "json") {
      Emit(c,
           Dump({{"method", "lemma7"},
                 {"partition", ToJson(r.partition)},
                 {"trace", ToJson(r.trace)}}),
           out);
    } else {
      Emit(c,
           "left" + join(r.partition.left()) + "\nright" +
               join(r.partition.right()) + "\n" + FormatTrace(r.trace) +
               "final_potential=" + std::to_string(r.trace.final_potential) +
               "\n",
           out);
    }
  } else if (c.method == "erdos") {
    const Bipartition b = ErdosBipartize(g, std::move(initial));
    const std::size_t cut = CutSize(g, b);
    if (c.format == "json") {
      Emit(c,
           Dump({{"method", "erdos"}, {"partition", ToJson(b)}, {"cut", cut}}),
           out);
    } else {
      Emit(c,
           "left" + join(b.left()) + "\nright" + join(b.right()) +
               "\ncut=" + std::to_string(cut) + "\n",
           out);
    }
  } else {
    throw InputError("--method must be lemma7 or erdos");
  }
  return kExitOk;
}

int RunPlane(const RunConfig& c, std::ostream& out) {
  const ProjectivePlane plane = BuildPlane(c.prime);
  Emit(c, SerializeEcg(RainbowColor(IncidenceGraph(plane))), out);
  return kExitOk;
}

int RunVerify(const RunConfig& c, std::istream& in, std::ostream& out) {
  const std::string id = c.theorem;
  if (id == "C10" || id == "c10" || id == "10") {
    const ConjectureVerdict v = Conjecture10Check(ParseDcg(ReadInput(c, in)),
                                                  c.hypothesis_min_part);
    Emit(c, c.format == "json" ? Dump(ToJson(v)) : FormatConjectureVerdict(v),
         out);
    return kExitOk;
  }
  const auto theorem = ParseTheorem(id);
  if (!theorem) throw InputError("--theorem must be 1..6 or C10, got " + id);
  const Verdict v = CheckTheorem(ParseEcg(ReadInput(c, in)), *theorem);
  Emit(c, c.format == "json" ? Dump(ToJson(v)) : FormatVerdict(v), out);
  return kExitOk;
}

int RunCase1(const RunConfig& c, std::ostream& out) {
  const Case1Report r = Case1Exhaustive(c.n);
  Emit(c, c.format == "json" ? Dump(ToJson(r)) : FormatCase1Report(r), out);
  return kExitOk;
}

int RunHunt(const RunConfig& c, std::ostream& out) {
  HuntReport report;
  if (c.hunt_kind == "problem9") {
    Problem9HuntOptions o;
    o.min_n = c.min_n;
    o.max_n = c.max_n;
    o.budget = c.budget;
    o.seed = c.seed;
    o.threads = c.threads;
    report = Problem9Hunt(o);
  } else if (c.hunt_kind == "conjecture10") {
    Conjecture10HuntOptions o;
    o.min_part = c.min_part;
    o.max_part = c.max_part;
    o.hypothesis_min_part = c.hypothesis_min_part;
    o.budget = c.budget;
    o.seed = c.seed;
    o.threads = c.threads;
    report = Conjecture10Hunt(o);
  } else {
    throw InputError("hunt target must be problem9 or conjecture10");
  }
  Emit(c, c.format == "json" ? Dump(ToJson(report)) : FormatHuntReport(report),
       out);
  return kExitOk;
}

int RunGen(const RunConfig& c, std::ostream& out) {
  if (c.model == "threshold-digraph") {
    Rng rng(c.seed);
    Emit(c, SerializeDcg(SampleThresholdDigraph(c.left, c.right, rng)), out);
    return kExitOk;
  }
  const auto model = ParseModel(c.model);
  if (!model) throw InputError("unknown --model " + c.model);
  GenerateOptions o;
  o.model = *model;
  o.n = c.n;
  o.edge_probability = c.edge_probability;
  o.palette = c.palette;
  o.seed = c.seed;
  Emit(c, SerializeEcg(Generate(o)), out);
  return kExitOk;
}

}  // namespace

int Run(const RunConfig& config, std::istream& in, std::ostream& out,
        std::ostream& err) {
  try {
    ValidatePaths(config);
    const std::string& sub = config.subcommand;
    if (sub == "detect") return RunDetect(config, in, out);
    if (sub == "bipartize") return RunBipartize(config, in, out);
    if (sub == "plane") return RunPlane(config, out);
    if (sub == "verify") return RunVerify(config, in, out);
    if (sub == "case1") return RunCase1(config, out);
    if (sub == "hunt") return RunHunt(config, out);
    if (sub == "gen") return RunGen(config, out);
    err << "error: unknown subcommand '" << sub << "'\n";
    return kExitUsage;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomainError;
  }
}

int RunCli(const std::vector<std::string>& args, std::istream& in,
           std::ostream& out, std::ostream& err) {
  RunConfig config;
  CLI::App app{"Rainbow cycle toolkit for edge-colored graphs", "rainbowc4"};
  app.require_subcommand(1);

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", config.format, "Report format")
        ->check(CLI::IsMember({"text", "json"}));
  };
  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input,-i,--input", config.input,
                    "Input file ('-' or omitted: stdin)");
  };
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("-o,--output", config.output, "Output file (default: stdout)");
  };

  auto* detect = app.add_subcommand("detect", "Find a rainbow C3 / C4");
  add_input(detect);
  add_output(detect);
  add_format(detect);
  detect->add_flag("--c3", config.c3, "Search for a rainbow triangle");
  detect->add_flag("--c4", config.c4, "Search for a rainbow 4-cycle (default)");
  detect->add_option("--cycle", config.cycle,
                     "Check the given comma-separated cycle instead");

  auto* bip = app.add_subcommand("bipartize", "Spanning bipartite subgraph");
  add_input(bip);
  add_output(bip);
  add_format(bip);
  bip->add_option("--method", config.method)
      ->check(CLI::IsMember({"lemma7", "erdos"}));
  bip->add_option("--init", config.init)
      ->check(CLI::IsMember({"parity", "random"}));
  bip->add_option("--seed", config.seed);

  auto* plane = app.add_subcommand(
      "plane", "Rainbow-colored projective plane incidence graph");
  plane->add_option("--p", config.prime, "Prime order")->required();
  add_output(plane);

  auto* verify = app.add_subcommand("verify", "Check a theorem on a graph");
  add_input(verify);
  add_output(verify);
  add_format(verify);
  verify->add_option("--theorem", config.theorem, "1..6, or C10 for a .dcg")
      ->required();
  verify->add_option("--hypothesis-min-part", config.hypothesis_min_part,
                     "Smallest part size conjecture 10 covers (1: literal)");

  auto* case1 = app.add_subcommand(
      "case1", "Enumerate proper colorings of K_n for rainbow C4");
  case1->add_option("--n", config.n)->required();
  add_output(case1);
  add_format(case1);

  auto* hunt = app.add_subcommand("hunt", "Counterexample search");
  hunt->add_option("target", config.hunt_kind)
      ->required()
      ->check(CLI::IsMember({"problem9", "conjecture10"}));
  hunt->add_option("--budget", config.budget);
  hunt->add_option("--seed", config.seed);
  hunt->add_option("--min-n", config.min_n);
  hunt->add_option("--max-n", config.max_n);
  hunt->add_option("--min-part", config.min_part);
  hunt->add_option("--max-part", config.max_part);
  hunt->add_option("--hypothesis-min-part", config.hypothesis_min_part,
                   "Smallest part size conjecture 10 covers (1: literal)");
  hunt->add_option("--threads", config.threads);
  add_output(hunt);
  add_format(hunt);

  auto* gen = app.add_subcommand("gen", "Generate a random instance");
  gen->add_option("--model", config.model,
                  "er, hunt, bipartite, proper-complete, rainbow-complete, "
                  "mono-complete, threshold-digraph");
  gen->add_option("--n", config.n);
  gen->add_option("--p", config.edge_probability, "Edge probability");
  gen->add_option("--palette", config.palette, "Palette size (0: m)");
  gen->add_option("--left", config.left, "Digraph part A size");
  gen->add_option("--right", config.right, "Digraph part B size");
  gen->add_option("--seed", config.seed);
  add_output(gen);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }
  for (CLI::App* sub : app.get_subcommands()) config.subcommand = sub->get_name();
  return Run(config, in, out, err);
}

}  // namespace rainbowc4::cli
