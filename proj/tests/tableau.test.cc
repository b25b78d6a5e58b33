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

#include "zxcult/tableau.h"

#include <random>

#include "gtest/gtest.h"
#include "zxcult/oracle.h"
#include "zxcult/random_diagram.h"
#include "zxcult/stabilizer_extract.h"

namespace zxcult {
namespace {

TEST(PauliString, MultiplyTracksSigns) {
  auto xx = PauliString::parse("+XX");
  auto zz = PauliString::parse("+ZZ");
  EXPECT_EQ(multiply(xx, zz).to_string(), "-YY");
  EXPECT_THROW(multiply(PauliString::parse("+X"), PauliString::parse("+Z")), std::logic_error);
  EXPECT_TRUE(xx.commutes_with(zz));
}

TEST(Tableau, BellStateStabilizers) {
  Tableau t(2);
  t.h(0);
  t.cx(0, 1);
  auto s = canonicalize(2, t.stabilizers());
  EXPECT_EQ(s.to_string(), "+XX +ZZ");
}

TEST(Tableau, MeasurementIsDeterministicOnEigenstates) {
  Tableau t(1);
  t.x(0);
  bool det = false;
  EXPECT_EQ(t.measure(0, [] { return 0; }, &det), 1);
  EXPECT_TRUE(det);
  t.h(0);
  EXPECT_EQ(t.measure(0, [] { return 1; }, &det), 1);
  EXPECT_FALSE(det);
  EXPECT_FALSE(t.postselect(0, 0));
}

TEST(Tableau, SDaggerUndoesS) {
  Tableau t(1);
  t.h(0);
  t.s(0);
  t.s_dag(0);
  EXPECT_EQ(canonicalize(1, t.stabilizers()).to_string(), "+X");
  t.s(0);
  EXPECT_EQ(canonicalize(1, t.stabilizers()).to_string(), "+Y");
}

TEST(StabilizerExtract, ZeroStateHasZGenerator) {
  ZxDiagram d;
  int x = d.add_spider(Color::X, Phase(0));
  d.connect(x, d.add_output());
  auto s = diagram_stabilizer(d);
  ASSERT_TRUE(s.has_value());
  EXPECT_EQ(s->to_string(), "+Z");
  DecompositionSum sum;
  sum.add(CliffordScalar::one(), d);
  auto terms = export_tableau_sum(sum);
  ASSERT_EQ(terms.size(), 1u);
  // X(0) on one leg is sqrt2 |0>.
  EXPECT_EQ(terms[0].coeff, CliffordScalar::sqrt2_pow(1));
}

TEST(StabilizerExtract, RandomCliffordDiagramsRoundTrip) {
  std::mt19937_64 rng(77);
  int checked = 0;
  for (int i = 0; i < 300; ++i) {
    RandomDiagramParams p;
    p.spiders = std::uniform_int_distribution<int>(1, 12)(rng);
    p.legs = std::uniform_int_distribution<int>(1, 6)(rng);
    p.t_count = 0;
    p.measurements = 1;
    ZxDiagram d = random_diagram(p, rng);
    DecompositionSum sum;
    sum.add(CliffordScalar::omega(i % 8), d);
    auto terms = export_tableau_sum(sum);
    DenseTensor ref = evaluate(d);
    std::vector<cplx> rebuilt(ref.amplitudes.size(), 0);
    for (const auto& t : terms) {
      auto v = stabilizer_statevector(t.state);
      for (size_t k = 0; k < v.size(); ++k) rebuilt[k] += t.coeff.to_complex() * v[k];
    }
    cplx w = CliffordScalar::omega(i % 8).to_complex();
    double dev = 0;
    for (size_t k = 0; k < rebuilt.size(); ++k) {
      dev = std::max(dev, std::abs(rebuilt[k] - w * ref.amplitudes[k]));
    }
    EXPECT_LT(dev, 1e-9) << i;
    checked += !terms.empty();
  }
  EXPECT_GT(checked, 100);
}

TEST(StabilizerExtract, UnitMonomials) {
  auto m = as_unit_monomial(CliffordScalar::omega(5).mul_sqrt2_pow(-3));
  ASSERT_TRUE(m.has_value());
  EXPECT_EQ(m->first, 5);
  EXPECT_EQ(m->second, -3);
  EXPECT_FALSE(as_unit_monomial(CliffordScalar::integer(3)).has_value());
  EXPECT_FALSE(as_unit_monomial(CliffordScalar::zero()).has_value());
}

}  // namespace
}  // namespace zxcult
