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

#include "zxcult/star.h"

#include <set>

namespace zxcult {
namespace {

using S = CliffordScalar;

int gadget(ZxDiagram& d, const std::vector<int>& targets, Phase phase, std::vector<int>& record) {
  int hub = d.add_spider(Color::Z, Phase(0));
  int leaf = d.add_spider(Color::Z, phase);
  d.connect(hub, leaf, EdgeKind::Hadamard);
  for (int t : targets) d.connect(hub, t, EdgeKind::Hadamard);
  record.push_back(hub);
  record.push_back(leaf);
  return hub;
}

void require_z(const ZxDiagram& d, int v, const char* what) {
  if (!d.has_spider(v) || d.spider(v).kind != SpiderKind::Internal || d.spider(v).color != Color::Z) {
    throw DomainError(std::string("star: ") + what + " " + std::to_string(v) +
                      " must be an internal Z spider");
  }
}

int leaf(ZxDiagram& d, int target, Color c, Phase p) {
  int l = d.add_spider(c, p);
  d.connect(l, target);
  return l;
}

}  // namespace

StarEdge add_star_edge(ZxDiagram& d, int u, int v) {
  require_z(d, u, "endpoint");
  require_z(d, v, "endpoint");
  if (u == v) throw DomainError("star: endpoints must differ");
  StarEdge e{u, v, {}};
  // (-1)^{c(x ^ ab)} summed over c enforces the ancilla x = ab; the cubic
  // term is the phase polynomial x+a+b-(x^a)-(x^b)-(a^b)+(x^a^b) in pi/4.
  int x = d.add_spider(Color::Z, Phase(1));
  int c = d.add_spider(Color::Z, Phase(1));
  d.connect(x, c, EdgeKind::Hadamard);
  e.gadget = {x, c};
  d.add_phase(u, Phase(1));
  d.add_phase(v, Phase(1));
  gadget(d, {x, u}, Phase(-1), e.gadget);
  gadget(d, {x, v}, Phase(-1), e.gadget);
  gadget(d, {u, v}, Phase(-1), e.gadget);
  gadget(d, {x, u, v}, Phase(1), e.gadget);
  d.mul_scalar(S::integer(4));
  return e;
}

StarDiagram build_star_pattern(StarPattern p) {
  int n = 3;
  bool op = false;
  Phase alpha(0);
  switch (p) {
    case StarPattern::kStar1: n = 1; break;
    case StarPattern::kStar2: n = 2; break;
    case StarPattern::kStar3: op = true; break;
    case StarPattern::kStar3State0: break;
    case StarPattern::kStar3StatePi2: alpha = Phase(2); break;
  }
  StarDiagram out;
  ZxDiagram& d = out.diagram;
  std::vector<int> ins;
  if (op) {
    for (int i = 0; i < n; ++i) ins.push_back(d.add_input());
  }
  out.site.center = d.add_spider(Color::Z, alpha);
  for (int i = 0; i < n; ++i) {
    int l = d.add_spider(Color::Z, Phase(0));
    if (op) d.connect(ins[i], l);
    d.connect(l, d.add_output());
    out.site.edges.push_back(add_star_edge(d, out.site.center, l));
  }
  return out;
}

const char* to_string(StarPattern p) {
  switch (p) {
    case StarPattern::kStar1: return "star-1";
    case StarPattern::kStar2: return "star-2";
    case StarPattern::kStar3: return "star-3";
    case StarPattern::kStar3State0: return "star-3-state-0";
    case StarPattern::kStar3StatePi2: return "star-3-state-pi2";
  }
  return "?";
}

std::vector<StarPattern> all_star_patterns() {
  return {StarPattern::kStar1, StarPattern::kStar2, StarPattern::kStar3, StarPattern::kStar3State0,
          StarPattern::kStar3StatePi2};
}

DecompositionSum star_decompose(const ZxDiagram& d0, const StarSite& site) {
  const int n = static_cast<int>(site.edges.size());
  if (n < 1 || n > 3) throw DomainError("star_decompose: one to three star edges supported");
  require_z(d0, site.center, "centre");
  std::set<int> gadgets;
  std::vector<int> legs;
  for (const StarEdge& e : site.edges) {
    if (e.u != site.center) throw DomainError("star_decompose: edge not anchored at the centre");
    require_z(d0, e.v, "leg");
    legs.push_back(e.v);
    for (int g : e.gadget) {
      if (!d0.has_spider(g)) throw DomainError("star_decompose: missing gadget spider");
      gadgets.insert(g);
    }
  }
  if (std::set<int>(legs.begin(), legs.end()).size() != legs.size()) {
    throw DomainError("star_decompose: repeated leg");
  }
  // The centre may only touch its star gadgets.
  for (int nb : d0.neighbors(site.center)) {
    if (!gadgets.count(nb)) throw DomainError("star_decompose: centre has non-star neighbours");
  }
  const Phase alpha = d0.spider(site.center).phase - Phase(n);
  if (!alpha.is_clifford()) throw DomainError("star_decompose: centre phase must be Clifford");

  ZxDiagram base = d0;
  for (int g : gadgets) base.remove_spider(g);
  base.remove_spider(site.center);
  for (int l : legs) base.add_phase(l, Phase(-1));
  // Each removed gadget carried 1/4 (compensated in the diagram scalar).
  const S k = S::sqrt2_pow(-4 * n);
  const S ea = S::omega(alpha.n);

  // Centre 0 leaves the legs alone (J); centre 1 puts a T leaf on each leg.
  DecompositionSum out;
  auto add = [&](const S& c, ZxDiagram t) {
    if (!c.is_zero()) out.add(k * c, std::move(t));
  };
  if (n == 1) {
    for (int b = 0; b < 2; ++b) {
      ZxDiagram t = base;
      leaf(t, legs[0], Color::X, Phase(4 * b));
      add((S::one() + ea * S::omega(b)).mul_sqrt2_pow(-1), std::move(t));
    }
  } else if (n == 2) {
    add(S::one(), base);
    ZxDiagram a = base;
    int z = a.add_spider(Color::Z, Phase(2));
    for (int l : legs) a.connect(z, l);
    add(ea, std::move(a));
    ZxDiagram b = base;
    int x = b.add_spider(Color::X, Phase::pi());
    for (int l : legs) b.connect(x, l);
    add(ea * S::omega(1), std::move(b));
  } else {
    // T^3 = (w+i)/2 J + (w-i)/2 (-1)^{e2(x)} + (1-w) (|000> - i|111>).
    const S two_inv = S::sqrt2_pow(-2);
    add(S::one() + ea * (S::omega(1) + S::omega(2)) * two_inv, base);
    ZxDiagram g = base;
    for (int i = 0; i < 3; ++i) {
      for (int j = i + 1; j < 3; ++j) g.connect(legs[i], legs[j], EdgeKind::Hadamard);
    }
    add(ea * (S::omega(1) - S::omega(2)) * two_inv * S::sqrt2_pow(3), std::move(g));
    ZxDiagram z = base;
    int c = z.add_spider(Color::Z, Phase(-2));
    for (int l : legs) z.connect(c, l);
    add(ea * (S::one() - S::omega(1)), std::move(z));
  }
  return out;
}

}  // namespace zxcult
