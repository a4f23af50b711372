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

#ifndef RAINBOWC4_REPORT_H_
#define RAINBOWC4_REPORT_H_

#include <string>

#include "json.hpp"
#include "rainbowc4/bipartize.h"
#include "rainbowc4/hunt.h"
#include "rainbowc4/rainbow.h"
#include "rainbowc4/verify.h"

namespace rainbowc4 {

// "C4 0 1 2 3 colors 5 6 7 8"
std::string FormatWitness(const RainbowWitness& w);

std::string FormatVerdict(const Verdict& v);
std::string FormatConjectureVerdict(const ConjectureVerdict& v);
std::string FormatCase1Report(const Case1Report& r);

nlohmann::json ToJson(const RainbowWitness& w);
nlohmann::json ToJson(const Verdict& v);
nlohmann::json ToJson(const ConjectureVerdict& v);
nlohmann::json ToJson(const Case1Report& r);
nlohmann::json ToJson(const HuntReport& r);
nlohmann::json ToJson(const Bipartition& b);
nlohmann::json ToJson(const SearchTrace& t);

}  // namespace rainbowc4

#endif  // RAINBOWC4_REPORT_H_
