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

#include "zxcult/random_diagram.h"

#include <algorithm>
#include <numeric>

namespace zxcult {

ZxDiagram random_diagram(const RandomDiagramParams& params, std::mt19937_64& rng) {
  if (params.spiders < 1 || params.t_count > params.spiders) {
    throw DomainError("random_diagram: inconsistent parameters");
  }
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_int_distribution<int> even(0, 3);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<int> order(params.spiders);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<bool> odd(params.spiders, false);
  for (int i = 0; i < params.t_count; ++i) odd[order[i]] = true;

  ZxDiagram d;
  std::vector<int> ids;
  for (int i = 0; i < params.spiders; ++i) {
    int n = 2 * even(rng) + (odd[i] ? 1 : 0);
    ids.push_back(d.add_spider(coin(rng) ? Color::X : Color::Z, Phase(n)));
  }
  std::uniform_int_distribution<int> pick(0, params.spiders - 1);
  auto kind = [&] { return coin(rng) ? EdgeKind::Hadamard : EdgeKind::Plain; };
  // A random spanning tree keeps most diagrams connected.
  for (int i = 1; i < params.spiders; ++i) {
    std::uniform_int_distribution<int> earlier(0, i - 1);
    d.connect(ids[i], ids[earlier(rng)], kind());
  }
  for (int i = 0; i < params.spiders; ++i) {
    for (int j = i + 1; j < params.spiders; ++j) {
      if (unit(rng) < params.edge_density) d.connect(ids[i], ids[j], kind());
    }
  }
  if (params.allow_loops) {
    for (int i = 0; i < params.spiders; ++i) {
      if (unit(rng) < 0.1) d.connect(ids[i], ids[i], kind());
      if (unit(rng) < 0.1) {
        int j = pick(rng);
        if (j != i) d.connect(ids[i], ids[j], kind());
      }
    }
  }
  for (int m = 0; m < params.measurements; ++m) {
    int s = d.add_spider(coin(rng) ? Color::X : Color::Z, Phase(4 * coin(rng)),
                         SpiderKind::Measurement, m);
    d.connect(ids[pick(rng)], s, kind());
  }
  for (int l = 0; l < params.legs; ++l) {
    int b = coin(rng) ? d.add_input() : d.add_output();
    d.connect(ids[pick(rng)], b, kind());
  }
  return d;
}

}  // namespace zxcult
