// Copyright 2025 The zxcult Authors
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

#ifndef ZXCULT_STAR_H_
#define ZXCULT_STAR_H_

#include <string>
#include <vector>

#include "zxcult/diagram.h"
#include "zxcult/sum.h"

namespace zxcult {

// A star edge between Z spiders u and v contributes omega^{ab} for their
// basis values a, b. It is realised by phase gadgets and one ancilla pair;
// `gadget` lists every spider that belongs to the realisation.
struct StarEdge {
  int u = -1;
  int v = -1;
  std::vector<int> gadget;
};

// Adds a star edge; u and v gain a pi/4 phase each as part of the gadget.
StarEdge add_star_edge(ZxDiagram& d, int u, int v);

// A Z spider joined by star edges to one to three Z "leg" spiders.
struct StarSite {
  int center = -1;
  std::vector<StarEdge> edges;  // edge.u == center for every edge
};

enum class StarPattern { kStar1, kStar2, kStar3, kStar3State0, kStar3StatePi2 };

struct StarDiagram {
  ZxDiagram diagram;
  StarSite site;
};

StarDiagram build_star_pattern(StarPattern p);
const char* to_string(StarPattern p);
std::vector<StarPattern> all_star_patterns();

// Sums over the centre spider and expands the resulting T-like legs.
DecompositionSum star_decompose(const ZxDiagram& d, const StarSite& site);

}  // namespace zxcult

#endif  // ZXCULT_STAR_H_
