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

#include "zxcult/decomposition.h"

#include <algorithm>
#include <map>
#include <tuple>

#include "zxcult/diagram_io.h"
#include "zxcult/simplify.h"
#include "zxcult/stabilizer_extract.h"

namespace zxcult {
namespace {

using S = CliffordScalar;

const SimpOptions kBasicClosed{SimpLevel::kBasic, false};
const SimpOptions kFullClosed{SimpLevel::kFull, false};

bool meets(Target t, int t_count) {
  return t == Target::kPureClifford ? t_count == 0 : t_count <= 1;
}

std::vector<int> t_like_spiders(const ZxDiagram& d) {
  std::vector<int> out;
  for (int v : d.spider_ids()) {
    const Spider& s = d.spider(v);
    if (s.kind == SpiderKind::Internal && s.phase.is_t_like()) out.push_back(v);
  }
  return out;
}

struct Work {
  S coeff;
  ZxDiagram diagram;
  int cuts = 0;
};

// Branch T-counts after full simplification; zero branches count as absent.
std::tuple<int, int, int> cut_score(const ZxDiagram& b, int v) {
  int worst = 0, total = 0, live = 0;
  for (const Term& t : cut_spider(b, v).terms) {
    ZxDiagram f = clifford_simp(t.diagram, kFullClosed);
    if (f.scalar().is_zero()) continue;
    worst = std::max(worst, f.t_count());
    total += f.t_count();
    ++live;
  }
  return {worst, total, live};
}

}  // namespace

DecompositionSum cut_spider(const ZxDiagram& d0, int v) {
  if (!d0.has_spider(v)) throw DomainError("cut_spider: no spider " + std::to_string(v));
  const Spider s = d0.spider(v);
  if (s.kind != SpiderKind::Internal) throw DomainError("cut_spider: only internal spiders can be cut");
  const Color leaf = s.color == Color::Z ? Color::X : Color::Z;

  ZxDiagram d = d0;
  std::vector<std::pair<int, EdgeKind>> ends;
  int h_loops = 0;
  for (int e : d.incident(v)) {
    const Edge& edge = d.edge(e);
    if (edge.is_self_loop()) {
      if (edge.kind == EdgeKind::Hadamard) ++h_loops;
      continue;
    }
    ends.emplace_back(edge.other(v), edge.kind);
  }
  d.remove_spider(v);
  const int n = static_cast<int>(ends.size());

  DecompositionSum out;
  for (int b = 0; b < 2; ++b) {
    ZxDiagram t = d;
    for (const auto& [o, kind] : ends) {
      int l = t.add_spider(leaf, Phase(4 * b));
      t.connect(l, o, kind);
    }
    // <b|H|b> per Hadamard self-loop.
    S c = S::sqrt2_pow(-n - h_loops);
    if (b) c = c * S::omega(s.phase.n + 4 * h_loops);
    out.add(c, std::move(t));
  }
  return out;
}

DecompositionSum to_pure_clifford(const DecompositionSum& sum) {
  DecompositionSum out;
  for (const Term& term : sum.terms) {
    std::vector<int> ts = t_like_spiders(term.diagram);
    if (ts.size() > 1) throw DomainError("to_pure_clifford: term with more than one T-like spider");
    if (ts.empty()) {
      out.add(term.coeff, term.diagram);
      continue;
    }
    for (const Term& b : cut_spider(term.diagram, ts.front()).terms) {
      ZxDiagram f = clifford_simp(b.diagram, kFullClosed);
      if (f.scalar().is_zero()) continue;
      out.add(term.coeff * b.coeff, std::move(f));
    }
  }
  return out;
}

DecompositionSum collect_terms(const DecompositionSum& sum) {
  struct Group {
    S total;
    S unit_inverse;  // 1 / (representative amplitude factor)
    ZxDiagram rep;
  };
  std::vector<Group> groups;
  std::map<StabilizerState, size_t> by_state;
  std::map<std::string, size_t> by_diagram;
  DecompositionSum loose;  // pure terms whose factor is not a unit monomial

  for (const Term& t : sum.terms) {
    if (t.coeff.is_zero() || t.diagram.scalar().is_zero()) continue;
    if (t.diagram.t_count() == 0) {
      auto state = diagram_stabilizer(t.diagram);
      if (!state) continue;
      S a = basis_amplitude(t.diagram, support_minimum(*state)).mul_sqrt2_pow(state->x_rank());
      auto it = by_state.find(*state);
      if (it == by_state.end()) {
        auto mono = as_unit_monomial(a);
        if (!mono) {
          loose.add(t.coeff, t.diagram);
          continue;
        }
        S inv = S::omega(-mono->first).mul_sqrt2_pow(-mono->second);
        by_state.emplace(*state, groups.size());
        groups.push_back({t.coeff * a, inv, t.diagram});
      } else {
        groups[it->second].total += t.coeff * a;
      }
    } else {
      ZxDiagram bare = t.diagram;
      bare.set_scalar(S::one());
      std::string key = diagram_to_json(bare);
      S c = t.coeff * t.diagram.scalar();
      auto it = by_diagram.find(key);
      if (it == by_diagram.end()) {
        by_diagram.emplace(key, groups.size());
        groups.push_back({c, S::one(), std::move(bare)});
      } else {
        groups[it->second].total += c;
      }
    }
  }
  DecompositionSum out;
  for (Group& g : groups) {
    if (g.total.is_zero()) continue;
    out.add(g.total * g.unit_inverse, std::move(g.rep));
  }
  out.append(std::move(loose));
  return out;
}

DecompositionResult decompose_full(const ZxDiagram& d, const DecompositionStrategy& st) {
  DecompositionResult res;
  std::vector<Work> pending{{S::one(), d, 0}};
  for (int v : st.fixed_cuts) {
    std::vector<Work> next;
    for (Work& w : pending) {
      for (Term& t : cut_spider(w.diagram, v).terms) {
        next.push_back({w.coeff * t.coeff, std::move(t.diagram), w.cuts + 1});
      }
      ++res.cuts;
    }
    pending = std::move(next);
  }
  std::reverse(pending.begin(), pending.end());

  DecompositionSum raw;
  auto push_all = [&](const Work& w, DecompositionSum s, int extra_cuts) {
    for (auto it = s.terms.rbegin(); it != s.terms.rend(); ++it) {
      pending.push_back({w.coeff * it->coeff, std::move(it->diagram), w.cuts + extra_cuts});
    }
  };

  while (!pending.empty()) {
    Work w = std::move(pending.back());
    pending.pop_back();
    if (w.coeff.is_zero()) continue;
    ZxDiagram b = clifford_simp(w.diagram, kBasicClosed);
    ZxDiagram f = clifford_simp(b, kFullClosed);
    if (f.scalar().is_zero()) continue;
    const int t = f.t_count();
    if (meets(st.target, t)) {
      raw.add(w.coeff, std::move(f));
      continue;
    }
    if (static_cast<int64_t>(raw.terms.size() + pending.size()) + 1 >= st.chi_cap) {
      res.complete = false;
      break;
    }

    if (w.cuts < st.cut_budget) {
      int best = -1;
      std::tuple<int, int, int> best_score;
      for (int v : b.spider_ids()) {
        if (b.spider(v).kind != SpiderKind::Internal) continue;
        auto score = cut_score(b, v);
        if (std::get<0>(score) >= t) continue;
        if (best < 0 || score < best_score) {
          best = v;
          best_score = score;
        }
      }
      if (best >= 0) {
        ++res.cuts;
        push_all(w, cut_spider(b, best), 1);
        continue;
      }
    }

    std::vector<int> ts = t_like_spiders(f);
    auto cut_first_t = [&] {
      ++res.cuts;
      push_all(w, cut_spider(f, ts.front()), 1);
    };
    switch (st.secondary) {
      case Secondary::kMagicCat:
        if (t >= 5) {
          ++res.secondary_steps;
          push_all(w, magic_cat_step(f, {ts.begin(), ts.begin() + 5}), 0);
        } else if (t >= 3) {
          ++res.secondary_steps;
          push_all(w, magic_cat_step(f, {ts.begin(), ts.begin() + 3}), 0);
        } else {
          cut_first_t();
        }
        break;
      case Secondary::kBss:
        if (t >= 6) {
          ++res.secondary_steps;
          push_all(w, bss_decompose(f, {ts.begin(), ts.begin() + 6}), 0);
        } else {
          cut_first_t();
        }
        break;
      case Secondary::kCutsThenBss:
        if (t >= 6 && t % 6 == 0) {
          ++res.secondary_steps;
          push_all(w, bss_decompose(f, {ts.begin(), ts.begin() + 6}), 0);
        } else {
          cut_first_t();
        }
        break;
    }
  }

  res.raw_chi = static_cast<int64_t>(raw.terms.size());
  res.sum = st.collect ? collect_terms(raw) : std::move(raw);
  res.chi = res.sum.chi();
  return res;
}

Secondary parse_secondary(const std::string& s) {
  if (s == "magic_cat" || s == "cat") return Secondary::kMagicCat;
  if (s == "bss") return Secondary::kBss;
  if (s == "cuts_then_bss" || s == "more_cuts_then_bss") return Secondary::kCutsThenBss;
  throw DomainError("unknown secondary decomposition '" + s + "'");
}

Target parse_target(const std::string& s) {
  if (s == "pure" || s == "pure_clifford") return Target::kPureClifford;
  if (s == "one_t" || s == "at_most_one_t") return Target::kAtMostOneT;
  throw DomainError("unknown decomposition target '" + s + "'");
}

const char* to_string(Secondary s) {
  switch (s) {
    case Secondary::kMagicCat: return "magic_cat";
    case Secondary::kBss: return "bss";
    case Secondary::kCutsThenBss: return "cuts_then_bss";
  }
  return "?";
}

const char* to_string(Target t) {
  return t == Target::kPureClifford ? "pure_clifford" : "at_most_one_t";
}

}  // namespace zxcult
