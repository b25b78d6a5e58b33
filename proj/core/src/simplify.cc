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

#include "zxcult/simplify.h"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "zxcult/graph_like.h"

namespace zxcult {
namespace {

bool is_pauli_z(const GraphLike& g, int v) { return g.is_z(v) && g.phase(v).is_pauli(); }
int pauli_bit(const GraphLike& g, int v) { return g.phase(v).n == 4 ? 1 : 0; }

// Degree-one non-Clifford spider hanging off a Z spider by a Hadamard edge.
bool is_leaf(const GraphLike& g, int v) {
  if (!g.is_z(v) || g.degree(v) != 1 || !g.phase(v).is_t_like()) return false;
  const auto& [w, k] = *g.adjacent(v).begin();
  return k == EdgeKind::Hadamard && g.is_z(w);
}

std::vector<int> leaves_of(const GraphLike& g, int h) {
  std::vector<int> out;
  for (const auto& [w, k] : g.adjacent(h)) {
    if (is_leaf(g, w)) out.push_back(w);
  }
  return out;
}

bool is_hub(const GraphLike& g, int h) {
  return is_pauli_z(g, h) && g.degree(h) >= 2 && !leaves_of(g, h).empty();
}

// A gadget hub eligible for normalisation and fusion.
bool is_clean_hub(const GraphLike& g, int h, int* leaf) {
  if (!is_pauli_z(g, h) || g.degree(h) < 2 || !g.is_interior(h)) return false;
  auto ls = leaves_of(g, h);
  if (ls.size() != 1) return false;
  *leaf = ls[0];
  return true;
}

void do_lcomp(GraphLike& g, int v) {
  const int alpha = g.phase(v).n;  // 2 or 6
  auto nb = g.neighbors(v);
  int delta = 0;
  for (size_t i = 0; i < nb.size(); ++i) {
    for (size_t j = i + 1; j < nb.size(); ++j) delta += g.toggle_edge(nb[i], nb[j]);
  }
  for (int x : nb) g.add_phase(x, Phase(-alpha));
  const int n = static_cast<int>(nb.size());
  g.scalar() = g.scalar().mul_sqrt2_pow(1 - n + delta).mul_omega(alpha == 2 ? 1 : -1);
  g.remove_vertex(v);
}

void do_pivot(GraphLike& g, int u, int v) {
  std::vector<int> nu, nv, A, B, C;
  for (int x : g.neighbors(u)) {
    if (x != v) nu.push_back(x);
  }
  for (int x : g.neighbors(v)) {
    if (x != u) nv.push_back(x);
  }
  std::set_difference(nu.begin(), nu.end(), nv.begin(), nv.end(), std::back_inserter(A));
  std::set_difference(nv.begin(), nv.end(), nu.begin(), nu.end(), std::back_inserter(B));
  std::set_intersection(nu.begin(), nu.end(), nv.begin(), nv.end(), std::back_inserter(C));
  const int a = pauli_bit(g, u), b = pauli_bit(g, v);
  int delta = 0;
  auto toggle_all = [&](const std::vector<int>& X, const std::vector<int>& Y) {
    for (int x : X) {
      for (int y : Y) delta += g.toggle_edge(x, y);
    }
  };
  toggle_all(A, B);
  toggle_all(A, C);
  toggle_all(B, C);
  for (int x : A) g.add_phase(x, Phase(4 * b));
  for (int x : B) g.add_phase(x, Phase(4 * a));
  for (int x : C) g.add_phase(x, Phase(4 * (a + b + 1)));
  const int k = 2 - (1 + static_cast<int>(A.size() + B.size() + 2 * C.size())) + delta;
  g.scalar() = g.scalar().mul_sqrt2_pow(k);
  if (a && b) g.scalar() = -g.scalar();
  g.remove_vertex(u);
  g.remove_vertex(v);
}

using Touched = std::vector<int>;

bool rule_isolated(GraphLike& g, int v, Touched& t) {
  if (!g.is_z(v) || g.degree(v) != 0) return false;
  g.scalar() *= CliffordScalar::one_plus_omega(g.phase(v).n);
  g.remove_vertex(v);
  t = {v};
  return true;
}

bool rule_identity(GraphLike& g, int v, Touched& t) {
  if (!g.is_z(v) || g.phase(v).n != 0 || g.degree(v) != 2) return false;
  auto it = g.adjacent(v).begin();
  const auto [n1, k1] = *it++;
  const auto [n2, k2] = *it;
  EdgeKind k = k1 == k2 ? EdgeKind::Plain : EdgeKind::Hadamard;
  g.remove_vertex(v);
  g.add_edge(n1, n2, k);
  t = {v, n1, n2};
  return true;
}

bool rule_hub_pi(GraphLike& g, int h, Touched& t) {
  int leaf;
  if (!is_clean_hub(g, h, &leaf) || g.phase(h).n != 4) return false;
  const int phi = g.phase(leaf).n;
  g.scalar() = g.scalar().mul_omega(phi);
  g.set_phase(leaf, Phase(-phi));
  g.set_phase(h, Phase(0));
  t = {h, leaf};
  return true;
}

bool rule_gadget_fuse(GraphLike& g, int h, Touched& t) {
  int leaf;
  if (!is_clean_hub(g, h, &leaf) || g.phase(h).n != 0) return false;
  std::vector<int> targets;
  for (int x : g.neighbors(h)) {
    if (x != leaf) targets.push_back(x);
  }
  for (int h2 : g.neighbors(targets.front())) {
    int leaf2;
    if (h2 <= h || !is_clean_hub(g, h2, &leaf2) || g.phase(h2).n != 0) continue;
    std::vector<int> targets2;
    for (int x : g.neighbors(h2)) {
      if (x != leaf2) targets2.push_back(x);
    }
    if (targets2 != targets) continue;
    g.add_phase(leaf, g.phase(leaf2));
    g.remove_vertex(leaf2);
    g.remove_vertex(h2);
    g.scalar() = g.scalar().mul_sqrt2_pow(2 - static_cast<int>(targets.size()) - 1);
    t = {h, leaf, h2, leaf2};
    return true;
  }
  return false;
}

bool rule_lcomp(GraphLike& g, int v, Touched& t) {
  if (!g.phase(v).is_proper_clifford() || !g.is_interior(v)) return false;
  t = {v};
  do_lcomp(g, v);
  return true;
}

bool pivot_candidate(const GraphLike& g, int v) {
  return is_pauli_z(g, v) && g.is_interior(v) && !is_hub(g, v);
}

bool rule_pivot(GraphLike& g, int u, Touched& t) {
  if (!pivot_candidate(g, u)) return false;
  for (int v : g.neighbors(u)) {
    if (!pivot_candidate(g, v)) continue;
    t = {u, v};
    do_pivot(g, u, v);
    return true;
  }
  return false;
}

// A Pauli state on one leg of a Z spider copies through it.
bool rule_copy(GraphLike& g, int v, Touched& t) {
  if (!is_pauli_z(g, v) || g.degree(v) != 1) return false;
  const auto [w, k] = *g.adjacent(v).begin();
  if (k != EdgeKind::Hadamard || !g.is_z(w) || g.boundary_neighbors(w) != 0) return false;
  const int a = pauli_bit(g, v);
  const int n = g.degree(w) - 1;
  g.scalar() = g.scalar().mul_sqrt2_pow(1 - n).mul_omega(a * g.phase(w).n);
  for (int x : g.neighbors(w)) {
    if (x != v) g.add_phase(x, Phase(4 * a));
  }
  g.remove_vertex(v);
  g.remove_vertex(w);
  t = {v, w};
  return true;
}

bool rule_boundary_pivot(GraphLike& g, int u, Touched& t) {
  if (!pivot_candidate(g, u)) return false;
  for (int v : g.neighbors(u)) {
    if (!is_pauli_z(g, v) || is_hub(g, v) || g.boundary_neighbors(v) != 1) continue;
    int b = -1;
    bool ok = true;
    for (const auto& [x, k] : g.adjacent(v)) {
      if (!g.is_z(x)) {
        b = x;
      } else if (k != EdgeKind::Hadamard) {
        ok = false;
      }
    }
    if (!ok) continue;
    const EdgeKind kb = g.edge_kind(v, b);
    g.remove_edge(v, b);
    int w = g.add_vertex(VKind::Z, Phase(0));
    g.add_edge(v, w, EdgeKind::Hadamard);
    g.add_edge(w, b, toggled(kb));
    t = {u, v, w};
    do_pivot(g, u, v);
    return true;
  }
  return false;
}

bool rule_pivot_gadget(GraphLike& g, int u, Touched& t) {
  if (!pivot_candidate(g, u)) return false;
  for (int v : g.neighbors(u)) {
    if (!g.phase(v).is_t_like() || g.degree(v) < 2 || !g.is_interior(v)) continue;
    int hub = g.add_vertex(VKind::Z, Phase(0));
    int leaf = g.add_vertex(VKind::Z, g.phase(v));
    g.set_phase(v, Phase(0));
    g.add_edge(v, hub, EdgeKind::Hadamard);
    g.add_edge(hub, leaf, EdgeKind::Hadamard);
    t = {u, v, hub, leaf};
    do_pivot(g, u, v);
    return true;
  }
  return false;
}

// Z(pi) between two non-Clifford spiders: push the pi through one side and
// fuse the pair.
bool rule_pi_commute(GraphLike& g, int p, Touched& t) {
  if (!g.is_z(p) || g.phase(p).n != 4 || g.degree(p) != 2 || !g.is_interior(p)) return false;
  auto nb = g.neighbors(p);
  for (int x : nb) {
    if (!g.phase(x).is_t_like()) return false;
  }
  int u = nb[0], w = nb[1];
  if (g.boundary_neighbors(w) < g.boundary_neighbors(u)) std::swap(u, w);
  if (g.boundary_neighbors(u) > 1) return false;
  const int alpha = g.phase(u).n;
  g.remove_vertex(p);
  g.scalar() = g.scalar().mul_omega(alpha);
  g.set_phase(u, Phase(-alpha));
  const std::map<int, EdgeKind> adj = g.adjacent(u);
  for (const auto& [x, k] : adj) {
    const GVertex& xv = g.vertex(x);
    if (xv.kind == VKind::Z) {
      g.add_phase(x, Phase::pi());
    } else if (xv.kind == VKind::Meas) {
      if (k == EdgeKind::Plain) {
        g.scalar() = g.scalar().mul_omega(xv.phase.n);
        g.set_phase(x, -xv.phase);
      } else {
        g.add_phase(x, Phase::pi());
      }
    } else {
      g.remove_edge(u, x);
      int n = g.add_vertex(VKind::Z, Phase::pi());
      g.add_edge(u, n, EdgeKind::Hadamard);
      g.add_edge(n, x, toggled(k));
    }
  }
  t = {p, u, w};
  g.fuse(u, w);
  return true;
}

struct NamedRule {
  const char* name;
  std::function<bool(GraphLike&, int, Touched&)> fn;
};

const std::vector<NamedRule>& all_rules() {
  static const std::vector<NamedRule> rules = {
      {"isolated", rule_isolated},
      {"identity", rule_identity},
      {"hub_pi", rule_hub_pi},
      {"gadget_fuse", rule_gadget_fuse},
      {"lcomp", rule_lcomp},
      {"pivot", rule_pivot},
      {"copy", rule_copy},
      {"boundary_pivot", rule_boundary_pivot},
      {"pivot_gadget", rule_pivot_gadget},
      {"pi_commute", rule_pi_commute},
  };
  return rules;
}

void run_rules(GraphLike& g, SimpLevel level, RewriteTrace* trace) {
  const auto& rules = all_rules();
  const size_t active = level == SimpLevel::kBasic ? 2 : rules.size();
  for (;;) {
    if (g.scalar().is_zero()) return;
    bool any = false;
    for (size_t r = 0; r < active && !any; ++r) {
      for (int v : g.vertex_ids()) {
        if (!g.has(v)) continue;
        Touched t;
        if (rules[r].fn(g, v, t)) {
          any = true;
          if (trace) trace->steps.push_back({rules[r].name, t});
        }
      }
    }
    if (!any) return;
  }
}

void fuse_raw(ZxDiagram& d, int a, int b) {
  struct Moved {
    int other;
    EdgeKind kind;
  };
  std::vector<Moved> moved;
  bool dropped_one = false;
  for (int e : d.incident(b)) {
    const Edge& ed = d.edge(e);
    int other = ed.other(b);
    // The fusing edge itself disappears; further a-b edges become loops.
    if (other == a && ed.kind == EdgeKind::Plain && !dropped_one) {
      dropped_one = true;
      continue;
    }
    moved.push_back({other == b ? a : other, ed.kind});
  }
  d.add_phase(a, d.spider(b).phase);
  d.remove_spider(b);
  for (const auto& m : moved) d.connect(a, m.other, m.kind);
}

bool drop_plain_loops(ZxDiagram& d, int v) {
  bool any = false;
  for (int e : std::vector<int>(d.incident(v))) {
    if (d.edge(e).is_self_loop() && d.edge(e).kind == EdgeKind::Plain) {
      d.remove_edge(e);
      any = true;
    }
  }
  return any;
}

bool fusable(const ZxDiagram& d, const Edge& e) {
  if (e.kind != EdgeKind::Plain || e.is_self_loop()) return false;
  const Spider& a = d.spider(e.a);
  const Spider& b = d.spider(e.b);
  return a.kind == SpiderKind::Internal && b.kind == SpiderKind::Internal && a.color == b.color;
}

}  // namespace

ZxDiagram fuse_spiders(const ZxDiagram& d, RewriteTrace* trace) {
  ZxDiagram out = d;
  for (;;) {
    bool changed = false;
    for (int v : out.spider_ids()) {
      if (out.spider(v).kind == SpiderKind::Internal && drop_plain_loops(out, v)) {
        if (trace) trace->steps.push_back({"drop_loop", {v}});
        changed = true;
      }
    }
    for (int e : out.edge_ids()) {
      if (!out.has_edge(e) || !fusable(out, out.edge(e))) continue;
      int a = std::min(out.edge(e).a, out.edge(e).b);
      int b = std::max(out.edge(e).a, out.edge(e).b);
      fuse_raw(out, a, b);
      if (trace) trace->steps.push_back({"fuse", {a, b}});
      changed = true;
      break;
    }
    if (!changed) return out;
  }
}

ZxDiagram clifford_simp(const ZxDiagram& d, const SimpOptions& options, RewriteTrace* trace) {
  GraphLike g = GraphLike::from_diagram(d, options.keep_measurements);
  if (trace) trace->graph_like = true;
  run_rules(g, options.level, trace);
  return g.to_diagram();
}

ZxDiagram replay_trace(const ZxDiagram& d, const RewriteTrace& trace,
                       const SimpOptions& options) {
  if (!trace.graph_like) {
    ZxDiagram out = d;
    for (const auto& s : trace.steps) {
      if (s.rule == "fuse") {
        fuse_raw(out, s.spiders.at(0), s.spiders.at(1));
      } else if (s.rule == "drop_loop") {
        drop_plain_loops(out, s.spiders.at(0));
      } else {
        throw DomainError("unknown rewrite rule '" + s.rule + "'");
      }
    }
    return out;
  }
  GraphLike g = GraphLike::from_diagram(d, options.keep_measurements);
  for (const auto& s : trace.steps) {
    auto it = std::find_if(all_rules().begin(), all_rules().end(),
                           [&](const NamedRule& r) { return s.rule == r.name; });
    if (it == all_rules().end()) throw DomainError("unknown rewrite rule '" + s.rule + "'");
    Touched t;
    if (!g.has(s.spiders.at(0)) || !it->fn(g, s.spiders.at(0), t) || t != s.spiders) {
      throw DomainError("trace step '" + s.rule + "' does not apply");
    }
  }
  return g.to_diagram();
}

CliffordScalar reduce_to_scalar(const ZxDiagram& d) {
  if (d.arity() != 0) throw DomainError("reduce_to_scalar: diagram has open legs");
  if (d.t_count() != 0) throw DomainError("reduce_to_scalar: non-Clifford spider present");
  GraphLike g = GraphLike::from_diagram(d, /*keep_measurements=*/false);
  run_rules(g, SimpLevel::kFull, nullptr);
  if (g.scalar().is_zero()) return CliffordScalar::zero();
  if (g.num_vertices() != 0) throw std::logic_error("reduce_to_scalar: reduction incomplete");
  return g.scalar();
}

}  // namespace zxcult
