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

#include "zxcult/oracle.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <string>

namespace zxcult {
namespace {

// Table over `vars` (sorted ascending); bit i of the index is vars[i].
struct Factor {
  std::vector<int> vars;
  std::vector<cplx> table;
};

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b) std::swap(a, b);
    parent[a] = b;  // keep the lowest id as representative
  }
};

Factor multiply(const Factor& f, const Factor& g) {
  Factor r;
  std::set_union(f.vars.begin(), f.vars.end(), g.vars.begin(), g.vars.end(),
                 std::back_inserter(r.vars));
  const size_t n = r.vars.size();
  auto positions = [&](const std::vector<int>& vs) {
    std::vector<int> pos;
    for (int v : vs) {
      pos.push_back(static_cast<int>(std::lower_bound(r.vars.begin(), r.vars.end(), v) -
                                     r.vars.begin()));
    }
    return pos;
  };
  const auto pf = positions(f.vars);
  const auto pg = positions(g.vars);
  r.table.assign(size_t{1} << n, cplx(0, 0));
  for (size_t idx = 0; idx < r.table.size(); ++idx) {
    size_t fi = 0, gi = 0;
    for (size_t k = 0; k < pf.size(); ++k) fi |= ((idx >> pf[k]) & 1u) << k;
    for (size_t k = 0; k < pg.size(); ++k) gi |= ((idx >> pg[k]) & 1u) << k;
    r.table[idx] = f.table[fi] * g.table[gi];
  }
  return r;
}

Factor sum_out(const Factor& f, int var) {
  auto it = std::find(f.vars.begin(), f.vars.end(), var);
  const int p = static_cast<int>(it - f.vars.begin());
  Factor r;
  r.vars = f.vars;
  r.vars.erase(r.vars.begin() + p);
  r.table.assign(size_t{1} << r.vars.size(), cplx(0, 0));
  for (size_t idx = 0; idx < f.table.size(); ++idx) {
    size_t low = idx & ((size_t{1} << p) - 1);
    size_t high = idx >> (p + 1);
    r.table[low | (high << p)] += f.table[idx];
  }
  return r;
}

}  // namespace

double DenseTensor::norm() const {
  double s = 0;
  for (const auto& a : amplitudes) s += std::norm(a);
  return std::sqrt(s);
}

DenseTensor evaluate(const ZxDiagram& d, const EvalLimits& limits) {
  const int arity = d.arity();
  if (arity > limits.max_arity) {
    throw DomainError("oracle: boundary arity " + std::to_string(arity) + " exceeds cap " +
                      std::to_string(limits.max_arity));
  }
  int internal = 0;
  for (int v : d.spider_ids()) {
    if (d.spider(v).kind != SpiderKind::Boundary) ++internal;
  }
  if (internal > limits.max_spiders) {
    throw DomainError("oracle: spider count " + std::to_string(internal) + " exceeds cap " +
                      std::to_string(limits.max_spiders));
  }
  const std::vector<int> legs = d.boundary_order();
  for (int v : d.spider_ids()) {
    if (d.spider(v).kind == SpiderKind::Boundary &&
        std::find(legs.begin(), legs.end(), v) == legs.end()) {
      throw DomainError("oracle: boundary spider " + std::to_string(v) +
                        " is neither an input nor an output");
    }
  }

  // Colour-change X spiders to Z: every edge end at an X spider gains a
  // Hadamard. Boundaries behave as phase-free Z wire ends.
  auto is_x = [&](int v) {
    const Spider& s = d.spider(v);
    return s.kind != SpiderKind::Boundary && s.color == Color::X;
  };
  UnionFind uf(d.spider_capacity());
  std::vector<std::pair<int, int>> h_pairs;
  std::vector<int> h_loops;
  for (int e : d.edge_ids()) {
    const Edge& ed = d.edge(e);
    if (ed.is_self_loop()) {
      if (ed.kind == EdgeKind::Hadamard) h_loops.push_back(ed.a);
      continue;
    }
    int h = (ed.kind == EdgeKind::Hadamard) + is_x(ed.a) + is_x(ed.b);
    if (h % 2 == 0) {
      uf.unite(ed.a, ed.b);
    } else {
      h_pairs.emplace_back(ed.a, ed.b);
    }
  }

  const double inv_sqrt2 = std::sqrt(0.5);
  std::map<int, Factor> unary;  // root -> diagonal factor
  for (int v : d.spider_ids()) {
    int r = uf.find(v);
    auto [it, fresh] = unary.try_emplace(r);
    if (fresh) it->second = Factor{{r}, {cplx(1, 0), cplx(1, 0)}};
    const int n = d.spider(v).phase.n;
    if (n != 0) it->second.table[1] *= std::polar(1.0, M_PI / 4 * n);
  }
  for (int v : h_loops) {
    Factor& f = unary[uf.find(v)];
    f.table[0] *= inv_sqrt2;
    f.table[1] *= -inv_sqrt2;
  }
  std::vector<Factor> factors;
  for (auto& [r, f] : unary) factors.push_back(std::move(f));
  for (auto [a, b] : h_pairs) {
    int ra = uf.find(a), rb = uf.find(b);
    if (ra == rb) {
      factors.push_back(Factor{{ra}, {cplx(inv_sqrt2, 0), cplx(-inv_sqrt2, 0)}});
    } else {
      if (ra > rb) std::swap(ra, rb);
      factors.push_back(Factor{
          {ra, rb}, {cplx(inv_sqrt2, 0), cplx(inv_sqrt2, 0), cplx(inv_sqrt2, 0),
                     cplx(-inv_sqrt2, 0)}});
    }
  }

  std::vector<int> leg_vars;
  for (int v : legs) leg_vars.push_back(uf.find(v));
  std::vector<int> kept = leg_vars;
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());

  std::vector<int> to_eliminate;
  for (const auto& f : factors) {
    for (int v : f.vars) {
      if (!std::binary_search(kept.begin(), kept.end(), v)) to_eliminate.push_back(v);
    }
  }
  std::sort(to_eliminate.begin(), to_eliminate.end());
  to_eliminate.erase(std::unique(to_eliminate.begin(), to_eliminate.end()),
                     to_eliminate.end());

  while (!to_eliminate.empty()) {
    int best = -1;
    size_t best_width = std::numeric_limits<size_t>::max();
    for (int v : to_eliminate) {
      std::vector<int> scope;
      for (const auto& f : factors) {
        if (std::binary_search(f.vars.begin(), f.vars.end(), v)) {
          scope.insert(scope.end(), f.vars.begin(), f.vars.end());
        }
      }
      std::sort(scope.begin(), scope.end());
      scope.erase(std::unique(scope.begin(), scope.end()), scope.end());
      if (scope.size() < best_width) {
        best_width = scope.size();
        best = v;
      }
    }
    if (static_cast<int>(best_width) > limits.max_width) {
      throw DomainError("oracle: contraction width exceeds cap");
    }
    Factor prod{{}, {cplx(1, 0)}};
    std::vector<Factor> rest;
    for (auto& f : factors) {
      if (std::binary_search(f.vars.begin(), f.vars.end(), best)) {
        prod = multiply(prod, f);
      } else {
        rest.push_back(std::move(f));
      }
    }
    rest.push_back(sum_out(prod, best));
    factors = std::move(rest);
    to_eliminate.erase(std::find(to_eliminate.begin(), to_eliminate.end(), best));
  }

  Factor all{{}, {cplx(1, 0)}};
  for (const auto& f : factors) all = multiply(all, f);
  // Every kept variable carries at least its unary factor, so all.vars == kept.

  DenseTensor out;
  out.arity = arity;
  out.amplitudes.assign(size_t{1} << arity, cplx(0, 0));
  const cplx global = d.scalar().to_complex();
  std::vector<int> pos;
  for (int v : leg_vars) {
    pos.push_back(static_cast<int>(std::lower_bound(all.vars.begin(), all.vars.end(), v) -
                                   all.vars.begin()));
  }
  for (size_t idx = 0; idx < out.amplitudes.size(); ++idx) {
    size_t fi = 0;
    bool consistent = true;
    std::vector<int> assigned(all.vars.size(), -1);
    for (int k = 0; k < arity; ++k) {
      int bit = static_cast<int>((idx >> (arity - 1 - k)) & 1u);
      int p = pos[k];
      if (assigned[p] >= 0 && assigned[p] != bit) {
        consistent = false;
        break;
      }
      assigned[p] = bit;
      fi |= static_cast<size_t>(bit) << p;
    }
    if (consistent) out.amplitudes[idx] = all.table[fi] * global;
  }
  return out;
}

double deviation(const DenseTensor& a, const DenseTensor& b, Comparison mode) {
  if (a.arity != b.arity || a.amplitudes.size() != b.amplitudes.size()) {
    throw DomainError("oracle: arity mismatch (" + std::to_string(a.arity) + " vs " +
                      std::to_string(b.arity) + ")");
  }
  std::vector<cplx> x = a.amplitudes, y = b.amplitudes;
  if (mode == Comparison::kProportional) {
    double na = a.norm(), nb = b.norm();
    if (na == 0 && nb == 0) return 0;
    if (na == 0 || nb == 0) return std::numeric_limits<double>::infinity();
    for (auto& v : x) v /= na;
    for (auto& v : y) v /= nb;
  }
  if (mode != Comparison::kExact) {
    cplx ip(0, 0);
    for (size_t i = 0; i < x.size(); ++i) ip += std::conj(y[i]) * x[i];
    if (std::abs(ip) > 0) {
      cplx lambda = ip / std::abs(ip);
      for (auto& v : y) v *= lambda;
    }
  }
  double m = 0;
  for (size_t i = 0; i < x.size(); ++i) m = std::max(m, std::abs(x[i] - y[i]));
  return m;
}

DenseTensor evaluate_sum(const DecompositionSum& sum, const EvalLimits& limits) {
  DenseTensor acc;
  bool first = true;
  for (const auto& t : sum.terms) {
    DenseTensor v = evaluate(t.diagram, limits);
    const cplx c = t.coeff.to_complex();
    if (first) {
      acc.arity = v.arity;
      acc.amplitudes.assign(v.amplitudes.size(), cplx(0, 0));
      first = false;
    } else if (v.arity != acc.arity) {
      throw DomainError("oracle: terms disagree on boundary arity");
    }
    for (size_t i = 0; i < v.amplitudes.size(); ++i) acc.amplitudes[i] += c * v.amplitudes[i];
  }
  return acc;
}

double compare_sum(const DecompositionSum& sum, const ZxDiagram& reference, Comparison mode,
                   const EvalLimits& limits) {
  DenseTensor ref = evaluate(reference, limits);
  DenseTensor s;
  if (sum.terms.empty()) {
    s.arity = ref.arity;
    s.amplitudes.assign(ref.amplitudes.size(), cplx(0, 0));
  } else {
    s = evaluate_sum(sum, limits);
  }
  return deviation(s, ref, mode);
}

}  // namespace zxcult
