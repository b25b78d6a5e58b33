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

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "zxcult/decomposition.h"

namespace zxcult {
namespace {

using S = CliffordScalar;

struct Leg {
  int spider;
  int outer;
  EdgeKind outer_kind;
  Phase phase;
};

void require_t_spider(const ZxDiagram& d, int v, const char* who) {
  if (!d.has_spider(v)) throw DomainError(std::string(who) + ": no spider " + std::to_string(v));
  const Spider& s = d.spider(v);
  if (s.kind != SpiderKind::Internal || s.color != Color::Z || !s.phase.is_t_like()) {
    throw DomainError(std::string(who) + ": spider " + std::to_string(v) +
                      " is not an internal T-like Z spider");
  }
}

void require_distinct(const std::vector<int>& v, const char* who) {
  std::set<int> seen(v.begin(), v.end());
  if (seen.size() != v.size()) throw DomainError(std::string(who) + ": repeated spider");
}

// Joins `ports` with one new spider; the pattern terms of cat decompositions.
int join(ZxDiagram& d, Color c, Phase p, const std::vector<int>& ports) {
  int j = d.add_spider(c, p);
  for (int port : ports) d.connect(j, port);
  return j;
}

}  // namespace

DecompositionSum cat_decompose(const ZxDiagram& d0, int hub) {
  if (!d0.has_spider(hub)) throw DomainError("cat_decompose: no spider " + std::to_string(hub));
  const Spider& h = d0.spider(hub);
  if (h.kind != SpiderKind::Internal || h.color != Color::X || !h.phase.is_pauli()) {
    throw DomainError("cat_decompose: hub must be an internal X spider with phase 0 or pi");
  }
  std::vector<Leg> legs;
  std::set<int> leg_ids;
  for (int e : d0.incident(hub)) {
    const Edge& edge = d0.edge(e);
    if (edge.is_self_loop() || edge.kind != EdgeKind::Plain) {
      throw DomainError("cat_decompose: hub edges must be plain and loop-free");
    }
    int l = edge.other(hub);
    const Spider& ls = d0.spider(l);
    if (ls.kind != SpiderKind::Internal || ls.color != Color::Z || !ls.phase.is_t_like() ||
        d0.degree(l) != 2 || !leg_ids.insert(l).second) {
      throw DomainError("cat_decompose: spider " + std::to_string(l) +
                        " is not a degree-2 T-like Z leg");
    }
    int e2 = -1;
    for (int f : d0.incident(l)) {
      if (f != e) e2 = f;
    }
    if (e2 < 0 || d0.edge(e2).is_self_loop()) throw DomainError("cat_decompose: malformed leg");
    legs.push_back({l, d0.edge(e2).other(l), d0.edge(e2).kind, ls.phase});
  }
  for (const Leg& l : legs) {
    if (l.outer == hub || leg_ids.count(l.outer)) {
      throw DomainError("cat_decompose: legs must lead away from the hub");
    }
  }
  const int m = static_cast<int>(legs.size());
  if (m != 4 && m != 6) throw DomainError("cat_decompose: hub degree must be 4 or 6");
  std::sort(legs.begin(), legs.end(), [](const Leg& a, const Leg& b) { return a.spider < b.spider; });

  ZxDiagram d = d0;
  d.remove_spider(hub);
  for (const Leg& l : legs) d.remove_spider(l.spider);
  S pre = S::one();
  if (h.phase.n == 4) {
    // X(pi) pushed through the first leg to its outer side.
    Leg& l = legs.front();
    pre = S::omega(l.phase.n);
    l.phase = -l.phase;
    int x = d.add_spider(Color::X, Phase::pi());
    d.connect(x, l.outer, l.outer_kind);
    l.outer = x;
    l.outer_kind = EdgeKind::Plain;
  }
  std::vector<int> ports;
  for (const Leg& l : legs) {
    int p = d.add_spider(Color::Z, l.phase - Phase(1));
    d.connect(p, l.outer, l.outer_kind);
    ports.push_back(p);
  }

  DecompositionSum out;
  if (m == 4) {
    ZxDiagram a = d;
    join(a, Color::Z, Phase(-2), ports);
    out.add(pre * S::omega(-1).mul_sqrt2_pow(-1), std::move(a));
    ZxDiagram b = d;
    join(b, Color::X, Phase(0), ports);
    out.add(pre * S::omega(2), std::move(b));
  } else {
    ZxDiagram a = d;
    join(a, Color::X, Phase(0), ports);
    out.add(pre * S::omega(3).mul_sqrt2_pow(-1), std::move(a));
    ZxDiagram b = d;
    for (int p : ports) b.add_phase(p, Phase(2));
    join(b, Color::X, Phase(0), ports);
    out.add(pre * S::omega(5).mul_sqrt2_pow(-1), std::move(b));
    ZxDiagram c = d;
    join(c, Color::Z, Phase(-2), ports);
    out.add(pre * S::sqrt2_pow(-2), std::move(c));
  }
  return out;
}

DecompositionSum magic_cat_step(const ZxDiagram& d0, const std::vector<int>& t_spiders) {
  const int r = static_cast<int>(t_spiders.size());
  if (r != 3 && r != 5) throw DomainError("magic_cat_step: needs 3 or 5 T-like spiders");
  require_distinct(t_spiders, "magic_cat_step");
  for (int v : t_spiders) require_t_spider(d0, v, "magic_cat_step");
  ZxDiagram d = d0;
  int hub = d.add_spider(Color::X, Phase(0));
  for (int v : t_spiders) {
    d.add_phase(v, Phase(-1));
    int leg = d.add_spider(Color::Z, Phase(1));
    d.connect(hub, leg);
    d.connect(leg, v);
  }
  int leg = d.add_spider(Color::Z, Phase(1));
  int cap = d.add_spider(Color::Z, Phase(-1));
  d.connect(hub, leg);
  d.connect(leg, cap);
  DecompositionSum out = cat_decompose(d, hub);
  out.scale(S::sqrt2_pow(r - 1));
  return out;
}

DecompositionSum bss_decompose(const ZxDiagram& d0, const std::vector<int>& t_spiders) {
  if (t_spiders.size() != 6) throw DomainError("bss_decompose: needs 6 T-like spiders");
  require_distinct(t_spiders, "bss_decompose");
  for (int v : t_spiders) require_t_spider(d0, v, "bss_decompose");
  ZxDiagram base = d0;
  for (int v : t_spiders) base.add_phase(v, Phase(-1));

  // |T>^6 (unnormalised leaves) = (1 + w X_1 S_1^dag) sum_{|x| even} w^|x| |x>.
  DecompositionSum out;
  for (int flip = 0; flip < 2; ++flip) {
    ZxDiagram d = base;
    std::vector<int> ports = t_spiders;
    S extra = S::one();
    if (flip) {
      int sdag = d.add_spider(Color::Z, Phase(-2));
      int x = d.add_spider(Color::X, Phase::pi());
      d.connect(sdag, x);
      d.connect(x, ports[0]);
      ports[0] = sdag;
      extra = S::omega(1);
    }
    ZxDiagram a = d;
    join(a, Color::X, Phase(0), ports);
    out.add(extra * S::omega(3).mul_sqrt2_pow(3), std::move(a));
    ZxDiagram b = d;
    // The S on each leg sits between the pattern and its port.
    std::vector<int> sp;
    for (int p : ports) {
      int s = b.add_spider(Color::Z, Phase(2));
      b.connect(s, p);
      sp.push_back(s);
    }
    join(b, Color::X, Phase(0), sp);
    out.add(extra * S::omega(5).mul_sqrt2_pow(3), std::move(b));
    ZxDiagram c = d;
    join(c, Color::Z, Phase(-2), ports);
    out.add(extra * S::integer(2), std::move(c));
  }
  return out;
}

int64_t cat_chain_terms(int m) {
  if (m < 2) throw DomainError("cat_chain_terms: needs at least two legs");
  if (m % 2) ++m;
  const int n = m - 2;  // legs beyond the two shared by a chain of joins
  int64_t terms = 1;
  for (int k = 0; k < n / 4; ++k) terms *= 3;
  if (n % 4) terms *= 2;
  return terms;
}

int64_t pure_cat_terms(int t_count) {
  if (t_count < 0) throw DomainError("pure_cat_terms: negative T-count");
  if (t_count == 0) return 1;
  return 2 * cat_chain_terms(t_count + 1);
}

std::optional<int64_t> estimate_cat_terms(int t_count) {
  switch (t_count) {
    case 15:
    case 38:
      return pure_cat_terms(t_count);
    case 53:
      return pure_cat_terms(16) * pure_cat_terms(37);
    default:
      return std::nullopt;
  }
}

}  // namespace zxcult
