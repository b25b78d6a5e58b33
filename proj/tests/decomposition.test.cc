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

#include <chrono>
#include <random>

#include "gtest/gtest.h"
#include "zxcult/builders.h"
#include "zxcult/oracle.h"
#include "zxcult/random_diagram.h"
#include "zxcult/simplify.h"

namespace zxcult {
namespace {

constexpr double kTol = 1e-9;

DecompositionSum single(const ZxDiagram& d) {
  DecompositionSum s;
  s.add(CliffordScalar::one(), d);
  return s;
}

TEST(CutSpider, PreservesTensorOnRandomDiagrams) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    RandomDiagramParams p;
    p.spiders = std::uniform_int_distribution<int>(1, 10)(rng);
    p.legs = std::uniform_int_distribution<int>(0, 4)(rng);
    p.t_count = std::uniform_int_distribution<int>(0, std::min(3, p.spiders))(rng);
    ZxDiagram d = random_diagram(p, rng);
    for (int v : d.spider_ids()) {
      if (d.spider(v).kind != SpiderKind::Internal) continue;
      DecompositionSum s = cut_spider(d, v);
      ASSERT_EQ(s.chi(), 2);
      ASSERT_LT(compare_sum(s, d), kTol) << "trial " << trial << " spider " << v;
      break;
    }
  }
}

TEST(CutSpider, HandlesSelfLoops) {
  for (Color c : {Color::Z, Color::X}) {
    for (EdgeKind k : {EdgeKind::Plain, EdgeKind::Hadamard}) {
      ZxDiagram d;
      int v = d.add_spider(c, Phase(3));
      d.connect(v, v, k);
      d.connect(v, d.add_output());
      d.connect(v, d.add_output(), EdgeKind::Hadamard);
      EXPECT_LT(compare_sum(cut_spider(d, v), d), kTol);
    }
  }
}

TEST(CutSpider, RejectsBoundary) {
  ZxDiagram d;
  int o = d.add_output();
  d.connect(d.add_spider(Color::Z, Phase(1)), o);
  EXPECT_THROW(cut_spider(d, o), DomainError);
}

TEST(CatState, MatchesDefinition) {
  ZxDiagram c2 = build_cat_state(2);
  DenseTensor t = evaluate(c2);
  const double r = 1 / std::sqrt(2.0);
  EXPECT_NEAR(std::abs(t.at(0) - cplx(r, 0)), 0, kTol);
  EXPECT_NEAR(std::abs(t.at(3) - cplx(0, r)), 0, kTol);
  EXPECT_NEAR(std::abs(t.at(1)) + std::abs(t.at(2)), 0, kTol);
  EXPECT_EQ(build_cat_state(4).t_count(), 4);
  EXPECT_EQ(build_cat_state(6).t_count(), 6);
  EXPECT_THROW(build_cat_state(1), DomainError);
}

TEST(CatState, CappedCatIsTStates) {
  for (int m : {4, 6}) {
    CatChain c = build_cat_chain({m}, true);
    EXPECT_LT(deviation(evaluate(c.diagram), evaluate(build_t_states(m - 1))), kTol);
  }
}

TEST(CatDecompose, FourAndSix) {
  for (int m : {4, 6}) {
    CatChain c = build_cat_chain({m}, false);
    DecompositionSum s = cat_decompose(c.diagram, c.hubs[0]);
    EXPECT_EQ(s.chi(), m == 4 ? 2 : 3);
    EXPECT_LT(compare_sum(s, c.diagram), kTol);
    for (const Term& t : s.terms) EXPECT_EQ(t.diagram.t_count(), 0);
  }
}

TEST(CatDecompose, PiHubAndOddLegPhases) {
  for (int m : {4, 6}) {
    CatChain c = build_cat_chain({m}, false);
    ZxDiagram& d = c.diagram;
    d.set_phase(c.hubs[0], Phase::pi());
    int k = 0;
    for (int v : d.neighbors(c.hubs[0])) d.set_phase(v, Phase(1 + 2 * (k++ % 4)));
    // Hadamard edge on one outer side.
    DecompositionSum s = cat_decompose(d, c.hubs[0]);
    EXPECT_LT(compare_sum(s, d), kTol);
  }
}

TEST(CatDecompose, RejectsNonCat) {
  ZxDiagram d = build_cat_state(5);
  EXPECT_THROW(cat_decompose(d, 0), DomainError);
  ZxDiagram t = build_t_states(4);
  EXPECT_THROW(cat_decompose(t, 0), DomainError);
}

TEST(MagicCat, ReplacesTSpidersInsideDiagrams) {
  std::mt19937_64 rng(5);
  int exercised = 0;
  for (int trial = 0; trial < 40; ++trial) {
    RandomDiagramParams p;
    p.spiders = std::uniform_int_distribution<int>(5, 12)(rng);
    p.legs = std::uniform_int_distribution<int>(0, 3)(rng);
    p.t_count = std::min(p.spiders, 8);
    ZxDiagram d = random_diagram(p, rng);
    std::vector<int> ts;
    for (int v : d.spider_ids()) {
      const Spider& sp = d.spider(v);
      if (sp.kind == SpiderKind::Internal && sp.color == Color::Z && sp.phase.is_t_like()) {
        ts.push_back(v);
      }
    }
    if (ts.size() >= 3) ++exercised;
    for (int r : {3, 5}) {
      if (static_cast<int>(ts.size()) < r) continue;
      DecompositionSum s = magic_cat_step(d, {ts.begin(), ts.begin() + r});
      EXPECT_EQ(s.chi(), r == 3 ? 2 : 3);
      ASSERT_LT(compare_sum(s, d), kTol) << "trial " << trial << " r " << r;
    }
  }
  EXPECT_GT(exercised, 20);
}

TEST(Bss, SixTStates) {
  ZxDiagram d = build_t_states(6);
  std::vector<int> ts;
  for (int v : d.spider_ids()) {
    if (d.spider(v).kind == SpiderKind::Internal) ts.push_back(v);
  }
  DecompositionSum s = bss_decompose(d, ts);
  EXPECT_EQ(s.chi(), 6);
  EXPECT_LT(compare_sum(s, d), kTol);
  for (const Term& t : s.terms) EXPECT_EQ(t.diagram.t_count(), 0);
}

TEST(FlagFreeDc, ClosedFormAndTwoTerms) {
  for (int n : {2, 3, 4}) {
    auto start = std::chrono::steady_clock::now();
    ZxDiagram d = build_flag_free_dc(n);
    EXPECT_EQ(d.t_count(), 2 * n + n % 2);
    // I + (X S^dag)^n as a dense operator.
    const uint64_t dim = 1ull << n;
    DenseTensor want{2 * n, std::vector<cplx>(dim * dim)};
    for (uint64_t i = 0; i < dim; ++i) {
      want.amplitudes[i * dim + i] += 1;
      // (X S^dag) maps |x> to (-i)^{x} |1-x>; input index first.
      uint64_t out = i ^ (dim - 1);
      cplx ph = std::pow(cplx(0, -1), __builtin_popcountll(i));
      want.amplitudes[i * dim + out] += ph;
    }
    EXPECT_LT(deviation(evaluate(d), want), kTol) << "n=" << n;
    DecompositionResult r = decompose_full(d, {});
    EXPECT_EQ(r.chi, 2) << "n=" << n;
    EXPECT_TRUE(r.complete);
    EXPECT_TRUE(r.sum.pure_clifford());
    EXPECT_LT(compare_sum(r.sum, d), kTol);
    EXPECT_LT(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(), 10);
  }
}

TEST(DecomposeFull, RandomDiagramsAllStrategies) {
  std::mt19937_64 rng(99);
  int secondary = 0;
  for (Secondary sec : {Secondary::kMagicCat, Secondary::kBss, Secondary::kCutsThenBss}) {
    for (int trial = 0; trial < 25; ++trial) {
      RandomDiagramParams p;
      p.spiders = std::uniform_int_distribution<int>(3, 12)(rng);
      p.legs = std::uniform_int_distribution<int>(0, 4)(rng);
      p.t_count = std::uniform_int_distribution<int>(0, std::min(7, p.spiders))(rng);
      ZxDiagram d = random_diagram(p, rng);
      for (Target tg : {Target::kPureClifford, Target::kAtMostOneT}) {
        DecompositionStrategy st;
        st.secondary = sec;
        st.target = tg;
        st.cut_budget = trial % 3 == 0 ? 0 : 64;
        DecompositionResult r = decompose_full(d, st);
        ASSERT_TRUE(r.complete);
        secondary += r.secondary_steps;
        EXPECT_LE(r.sum.max_t_count(), tg == Target::kPureClifford ? 0 : 1);
        EXPECT_LE(r.chi, r.raw_chi);
        ASSERT_LT(compare_sum(r.sum, d), kTol)
            << to_string(sec) << " trial " << trial << " target " << to_string(tg);
      }
    }
  }
  EXPECT_GT(secondary, 0);
}

TEST(DecomposeFull, ChiCapMarksIncomplete) {
  DecompositionStrategy st;
  st.chi_cap = 2;
  st.cut_budget = 0;
  DecompositionResult r = decompose_full(build_t_states(6), st);
  EXPECT_FALSE(r.complete);
}

TEST(DecomposeFull, FixedCutsApplyFirst) {
  FlagFreeDc dc = build_flag_free_dc_parts(3);
  DecompositionStrategy st;
  st.fixed_cuts = {dc.hub};
  st.cut_budget = 0;
  DecompositionResult r = decompose_full(dc.diagram, st);
  EXPECT_EQ(r.chi, 2);
  EXPECT_EQ(r.cuts, 1);
  EXPECT_LT(compare_sum(r.sum, dc.diagram), kTol);
}

TEST(CatChain, FifteenTStatesGive108PureTerms) {
  CatChain c = build_cat_chain({4, 6, 6, 6}, true);
  EvalLimits lim;
  lim.max_arity = 15;
  lim.max_spiders = 64;
  ASSERT_EQ(c.diagram.arity(), 15);
  DecompositionSum s = single(c.diagram);
  for (int hub : c.hubs) {
    DecompositionSum next;
    for (const Term& t : s.terms) {
      DecompositionSum part = cat_decompose(t.diagram, hub);
      part.scale(t.coeff);
      next.append(std::move(part));
    }
    s = std::move(next);
  }
  EXPECT_EQ(s.chi(), 54);
  EXPECT_EQ(s.max_t_count(), 1);
  DecompositionSum pure = to_pure_clifford(s);
  EXPECT_EQ(pure.chi(), 108);
  EXPECT_TRUE(pure.pure_clifford());
  EXPECT_LT(compare_sum(pure, build_t_states(15), Comparison::kExact, lim), kTol);
}

TEST(CatChain, TermAccounting) {
  EXPECT_EQ(cat_chain_terms(4), 2);
  EXPECT_EQ(cat_chain_terms(6), 3);
  EXPECT_EQ(cat_chain_terms(16), 54);
  EXPECT_EQ(estimate_cat_terms(15), 108);
  EXPECT_EQ(estimate_cat_terms(38), 78732);
  EXPECT_EQ(estimate_cat_terms(53), 6377292);
  EXPECT_FALSE(estimate_cat_terms(20).has_value());
}

TEST(CollectTerms, MergesDuplicates) {
  ZxDiagram d = build_cat_state(4);
  DecompositionSum s = cat_decompose(d, 0);
  DecompositionSum doubled = s;
  doubled.append(s);
  DecompositionSum c = collect_terms(doubled);
  EXPECT_EQ(c.chi(), 2);
  ZxDiagram twice = d;
  twice.mul_scalar(CliffordScalar::integer(2));
  EXPECT_LT(compare_sum(c, twice), kTol);
}

TEST(Names, RoundTrip) {
  for (Secondary s : {Secondary::kMagicCat, Secondary::kBss, Secondary::kCutsThenBss}) {
    EXPECT_EQ(parse_secondary(to_string(s)), s);
  }
  EXPECT_EQ(parse_target("one_t"), Target::kAtMostOneT);
  EXPECT_THROW(parse_target("x"), DomainError);
}

}  // namespace
}  // namespace zxcult
