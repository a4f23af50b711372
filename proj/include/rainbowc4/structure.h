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

#ifndef RAINBOWC4_STRUCTURE_H_
#define RAINBOWC4_STRUCTURE_H_

#include <optional>
#include <vector>

#include "rainbowc4/graph.h"

namespace rainbowc4 {

// Proper 2-coloring of the vertices (side[v] in {0, 1}) if the graph is
// bipartite. Each component's least vertex gets side 0.
std::optional<std::vector<int>> TwoColoring(const EdgeColoredGraph& g);

bool IsBipartite(const EdgeColoredGraph& g);
bool HasTriangle(const EdgeColoredGraph& g);
bool IsComplete(const EdgeColoredGraph& g);

// Length of a shortest cycle; nullopt for forests.
std::optional<int> Girth(const EdgeColoredGraph& g);

}  // namespace rainbowc4

#endif  // RAINBOWC4_STRUCTURE_H_
