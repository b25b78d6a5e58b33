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

#include "zxcult/builders.h"

#include <string>

namespace zxcult {

ZxDiagram build_cat_state(int m) {
  if (m < 2) throw DomainError("build_cat_state: m must be at least 2, got " + std::to_string(m));
  return build_cat_chain({m}, false).diagram;
}

ZxDiagram build_t_states(int m) {
  if (m < 1) throw DomainError("build_t_states: m must be at least 1");
  ZxDiagram d;
  for (int i = 0; i < m; ++i) {
    int t = d.add_spider(Color::Z, Phase(1));
    d.connect(t, d.add_output());
  }
  d.set_scalar(CliffordScalar::sqrt2_pow(-m));
  return d;
}

FlagFreeDc build_flag_free_dc_parts(int n) {
  if (n < 2) throw DomainError("build_flag_free_dc: n must be at least 2");
  FlagFreeDc out;
  ZxDiagram& d = out.diagram;
  std::vector<int> in(n), x(n);
  for (int q = 0; q < n; ++q) in[q] = d.add_input();
  out.hub = d.add_spider(Color::Z, Phase(-n));
  for (int q = 0; q < n; ++q) {
    // T^dag, controlled flip, T on each target wire: T X T^dag = w X S^dag.
    int a = d.add_spider(Color::Z, Phase(-1));
    x[q] = d.add_spider(Color::X, Phase(0));
    int b = d.add_spider(Color::Z, Phase(1));
    int o = d.add_output();
    d.connect(in[q], a);
    d.connect(a, x[q]);
    d.connect(x[q], b);
    d.connect(b, o);
    d.connect(out.hub, x[q]);
  }
  d.set_scalar(CliffordScalar::sqrt2_pow(n));
  return out;
}

ZxDiagram build_flag_free_dc(int n) { return build_flag_free_dc_parts(n).diagram; }

CatChain build_cat_chain(const std::vector<int>& sizes, bool cap) {
  if (sizes.empty()) throw DomainError("build_cat_chain: no cats");
  CatChain out;
  ZxDiagram& d = out.diagram;
  std::vector<int> free_legs;
  for (size_t k = 0; k < sizes.size(); ++k) {
    const int m = sizes[k];
    if (m < 2 || (sizes.size() > 1 && m < 3)) throw DomainError("build_cat_chain: cat too small");
    int hub = d.add_spider(Color::X, Phase(0));
    out.hubs.push_back(hub);
    std::vector<int> legs;
    for (int i = 0; i < m; ++i) {
      int l = d.add_spider(Color::Z, Phase(1));
      d.connect(hub, l);
      legs.push_back(l);
    }
    size_t first = 0;
    if (k > 0) {
      int c = d.add_spider(Color::Z, Phase(-2));
      d.connect(free_legs.back(), c);
      d.connect(c, legs.front());
      free_legs.pop_back();
      first = 1;
    }
    free_legs.insert(free_legs.end(), legs.begin() + first, legs.end());
  }
  if (cap) {
    int c = d.add_spider(Color::Z, Phase(-1));
    d.connect(free_legs.back(), c);
    free_legs.pop_back();
  }
  for (int l : free_legs) d.connect(l, d.add_output());
  d.set_scalar(CliffordScalar::sqrt2_pow(-1));
  return out;
}

}  // namespace zxcult
