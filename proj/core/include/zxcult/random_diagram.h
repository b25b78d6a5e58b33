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

#ifndef ZXCULT_RANDOM_DIAGRAM_H_
#define ZXCULT_RANDOM_DIAGRAM_H_

#include <random>

#include "zxcult/diagram.h"

namespace zxcult {

struct RandomDiagramParams {
  int spiders = 10;        // internal spiders
  int legs = 3;            // boundary legs, split between inputs and outputs
  int t_count = 2;         // exact number of odd-phase spiders
  int measurements = 0;    // degree-one Pauli measurement spiders
  double edge_density = 0.25;
  bool allow_loops = true;  // parallel edges and self-loops
};

ZxDiagram random_diagram(const RandomDiagramParams& params, std::mt19937_64& rng);

}  // namespace zxcult

#endif  // ZXCULT_RANDOM_DIAGRAM_H_
