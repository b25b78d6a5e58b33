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

#include <random>

#include "gtest/gtest.h"
#include "zxcult/oracle.h"
#include "zxcult/random_diagram.h"

namespace zxcult {
namespace {

constexpr double kTol = 1e-9;

EvalLimits wide() {
  EvalLimits l;
  l.max_spiders = 96;
  return l;
}

TEST(StarEdge, IsControlledOmega) {
  ZxDiagram d;
  int a = d.add_spider(Color::Z, Phase(0));
  int b = d.add_spider(Color::Z, Phase(0));
  d.connect(a, d.add_output());
  d.connect(b, d.add_output());
  add_star_edge(d, a, b);
  DenseTensor t = evaluate(d);
  const cplx w = std::polar(1.0, M_PI / 4);
  EXPECT_NEAR(std::abs(t.at(0) - 1.0), 0, kTol);
  EXPECT_NEAR(std::abs(t.at(1) - 1.0), 0, kTol);
  EXPECT_NEAR(std::abs(t.at(2) - 1.0), 0, kTol);
  EXPECT_NEAR(std::abs(t.at(3) - w), 0, kTol);
}

TEST(StarDecompose, PatternsMatchOracle) {
  for (StarPattern p : all_star_patterns()) {
    StarDiagram s = build_star_pattern(p);
    DecompositionSum sum = star_decompose(s.diagram, s.site);
    EXPECT_TRUE(sum.pure_clifford()) << to_string(p);
    EXPECT_LT(compare_sum(sum, s.diagram, Comparison::kExact, wide()), kTol) << to_string(p);
  }
}

TEST(StarDecompose, TermCountsOfThisConstruction) {
  EXPECT_EQ(star_decompose(build_star_pattern(StarPattern::kStar1).diagram,
                           build_star_pattern(StarPattern::kStar1).site).chi(), 2);
  StarDiagram s2 = build_star_pattern(StarPattern::kStar2);
  EXPECT_EQ(star_decompose(s2.diagram, s2.site).chi(), 3);
  StarDiagram s3 = build_star_pattern(StarPattern::kStar3State0);
  EXPECT_EQ(star_decompose(s3.diagram, s3.site).chi(), 3);
}

TEST(StarDecompose, InsideRandomDiagrams) {
  std::mt19937_64 rng(3);
  int done = 0;
  for (int trial = 0; trial < 100; ++trial) {
    RandomDiagramParams p;
    p.spiders = std::uniform_int_distribution<int>(2, 8)(rng);
    p.legs = std::uniform_int_distribution<int>(0, 3)(rng);
    p.t_count = std::uniform_int_distribution<int>(0, std::min(2, p.spiders))(rng);
    ZxDiagram d = random_diagram(p, rng);
    std::vector<int> zs;
    for (int v : d.spider_ids()) {
      if (d.spider(v).kind == SpiderKind::Internal && d.spider(v).color == Color::Z) zs.push_back(v);
    }
    if (zs.empty()) continue;
    std::shuffle(zs.begin(), zs.end(), rng);
    const int n = std::min<int>(zs.size(), 1 + trial % 3);
    StarSite site;
    site.center = d.add_spider(Color::Z, Phase(2 * (trial % 4)));
    for (int i = 0; i < n; ++i) site.edges.push_back(add_star_edge(d, site.center, zs[i]));
    DecompositionSum s = star_decompose(d, site);
    ASSERT_LT(compare_sum(s, d, Comparison::kExact, wide()), kTol) << "trial " << trial;
    ++done;
  }
  EXPECT_GT(done, 50);
}

TEST(StarDecompose, RejectsMismatch) {
  StarDiagram s = build_star_pattern(StarPattern::kStar2);
  StarSite bad = s.site;
  bad.center = s.site.edges[0].v;
  EXPECT_THROW(star_decompose(s.diagram, bad), DomainError);
  s.diagram.connect(s.site.center, s.diagram.add_spider(Color::Z, Phase(0)));
  EXPECT_THROW(star_decompose(s.diagram, s.site), DomainError);
}

}  // namespace
}  // namespace zxcult
