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

#include "zxcult/verify.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>

#include "zxcult/builders.h"
#include "zxcult/decomposition.h"
#include "zxcult/oracle.h"
#include "zxcult/random_diagram.h"
#include "zxcult/star.h"

namespace zxcult {
namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

EvalLimits wide() {
  EvalLimits l;
  l.max_spiders = 128;
  return l;
}

CheckResult finish(std::string name, double dev, int64_t terms, Clock::time_point start) {
  return CheckResult{std::move(name), dev, terms, since(start), dev < kIdentityTolerance};
}

std::vector<CheckResult> cat_suite() {
  std::vector<CheckResult> out;
  for (int m : {4, 6}) {
    auto start = Clock::now();
    CatChain c = build_cat_chain({m}, false);
    DecompositionSum s = cat_decompose(c.diagram, c.hubs[0]);
    out.push_back(finish("cat" + std::to_string(m), compare_sum(s, c.diagram), s.chi(), start));
  }
  return out;
}

// A cat with one leg closed by T^dag is |T> on the remaining legs.
std::vector<CheckResult> tstate_suite() {
  std::vector<CheckResult> out;
  for (int m : {4, 6}) {
    auto start = Clock::now();
    CatChain c = build_cat_chain({m}, true);
    const double dev = deviation(evaluate(c.diagram), evaluate(build_t_states(m - 1)), Comparison::kUpToPhase);
    out.push_back(finish("capped_cat" + std::to_string(m), dev, 1, start));
  }
  return out;
}

std::vector<CheckResult> dc_suite() {
  std::vector<CheckResult> out;
  for (int n : {2, 3, 4}) {
    auto start = Clock::now();
    ZxDiagram d = build_flag_free_dc(n);
    const uint64_t dim = 1ull << n;
    DenseTensor want{2 * n, std::vector<cplx>(dim * dim)};
    for (uint64_t i = 0; i < dim; ++i) {
      want.amplitudes[i * dim + i] += 1;
      want.amplitudes[i * dim + (i ^ (dim - 1))] += std::pow(cplx(0, -1), __builtin_popcountll(i));
    }
    DecompositionResult r = decompose_full(d, {});
    const double dev = std::max(deviation(evaluate(d), want), compare_sum(r.sum, d));
    out.push_back(finish("dc" + std::to_string(n), dev, r.chi, start));
  }
  return out;
}

std::vector<int> z_t_spiders(const ZxDiagram& d) {
  std::vector<int> ts;
  for (int v : d.spider_ids()) {
    const Spider& s = d.spider(v);
    if (s.kind == SpiderKind::Internal && s.color == Color::Z && s.phase.is_t_like()) ts.push_back(v);
  }
  return ts;
}

std::vector<CheckResult> bss_suite() {
  auto start = Clock::now();
  ZxDiagram d = build_t_states(6);
  DecompositionSum s = bss_decompose(d, z_t_spiders(d));
  return {finish("bss_t6", compare_sum(s, d), s.chi(), start)};
}

std::vector<CheckResult> star_suite() {
  std::vector<CheckResult> out;
  for (StarPattern p : all_star_patterns()) {
    auto start = Clock::now();
    StarDiagram s = build_star_pattern(p);
    DecompositionSum sum = star_decompose(s.diagram, s.site);
    out.push_back(finish(to_string(p), compare_sum(sum, s.diagram, Comparison::kExact, wide()), sum.chi(), start));
  }
  return out;
}

// Random Clifford+T diagrams (up to 20 spiders, 6 legs, 6 T spiders);
// every applicable rewrite is checked on each.
std::vector<CheckResult> random_suite(uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  struct Acc {
    double dev = 0;
    int64_t n = 0;
  } cut, cat, bss, star;
  auto start = Clock::now();
  auto record = [](Acc& a, double dev) {
    a.dev = std::max(a.dev, std::isnan(dev) ? INFINITY : dev);
    ++a.n;
  };
  for (int trial = 0; trial < count; ++trial) {
    RandomDiagramParams p;
    p.spiders = std::uniform_int_distribution<int>(4, 20)(rng);
    p.legs = std::uniform_int_distribution<int>(0, 6)(rng);
    p.t_count = trial % 4 == 2 ? 6 : std::uniform_int_distribution<int>(0, 6)(rng);
    p.t_count = std::min(p.t_count, p.spiders);
    ZxDiagram d = random_diagram(p, rng);
    // Odd phases sit on Z spiders so that every rewrite has candidates.
    for (int v : d.spider_ids()) {
      Spider& s = d.spider(v);
      if (s.kind == SpiderKind::Internal && s.phase.is_t_like()) s.color = Color::Z;
    }
    std::vector<int> internal;
    for (int v : d.spider_ids()) {
      if (d.spider(v).kind == SpiderKind::Internal) internal.push_back(v);
    }
    if (!internal.empty()) {
      const int v = internal[rng() % internal.size()];
      record(cut, compare_sum(cut_spider(d, v), d, Comparison::kExact, wide()));
    }
    const std::vector<int> ts = z_t_spiders(d);
    for (int r : {3, 5}) {
      if (static_cast<int>(ts.size()) >= r) {
        record(cat, compare_sum(magic_cat_step(d, {ts.begin(), ts.begin() + r}), d, Comparison::kExact, wide()));
      }
    }
    if (ts.size() >= 6) record(bss, compare_sum(bss_decompose(d, {ts.begin(), ts.begin() + 6}), d, Comparison::kExact, wide()));

    std::vector<int> zs;
    for (int v : internal) {
      if (d.spider(v).color == Color::Z) zs.push_back(v);
    }
    if (!zs.empty() && p.spiders <= 12) {
      std::shuffle(zs.begin(), zs.end(), rng);
      ZxDiagram e = d;
      StarSite site;
      site.center = e.add_spider(Color::Z, Phase(2 * static_cast<int>(rng() % 4)));
      const int n = std::min<int>(static_cast<int>(zs.size()), 1 + trial % 3);
      for (int i = 0; i < n; ++i) site.edges.push_back(add_star_edge(e, site.center, zs[i]));
      record(star, compare_sum(star_decompose(e, site), e, Comparison::kExact, wide()));
    }
  }
  const double secs = since(start);
  auto mk = [&](const char* name, const Acc& a) {
    return CheckResult{name, a.dev, a.n, secs, a.dev < kIdentityTolerance && a.n > 0};
  };
  return {mk("random_cut", cut), mk("random_magic_cat", cat), mk("random_bss", bss), mk("random_star", star)};
}

}  // namespace

std::vector<std::string> verify_suites() { return {"cat", "tstate", "dc", "bss", "star", "random"}; }

std::vector<CheckResult> run_verify_suite(const std::string& suite, uint64_t seed, int random_count) {
  if (suite == "cat") return cat_suite();
  if (suite == "tstate") return tstate_suite();
  if (suite == "dc") return dc_suite();
  if (suite == "bss") return bss_suite();
  if (suite == "star") return star_suite();
  if (suite == "random") return random_suite(seed, random_count);
  if (suite == "all") {
    std::vector<CheckResult> out;
    for (const std::string& s : verify_suites()) {
      auto r = run_verify_suite(s, seed, random_count);
      out.insert(out.end(), r.begin(), r.end());
    }
    return out;
  }
  throw DomainError("unknown verify suite '" + suite + "'");
}

}  // namespace zxcult
