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

#include "zxcult/scalar.h"

#include <cmath>
#include <complex>

#include "gtest/gtest.h"

namespace zxcult {
namespace {

constexpr double kTol = 1e-12;

std::complex<double> w(int k) { return std::polar(1.0, M_PI / 4 * k); }

TEST(CliffordScalar, OmegaPowersMatchComplex) {
  for (int k = -9; k <= 9; ++k) {
    EXPECT_NEAR(std::abs(CliffordScalar::omega(k).to_complex() - w(k)), 0, kTol) << k;
  }
}

TEST(CliffordScalar, Sqrt2PowersAreCanonical) {
  for (int k = -6; k <= 6; ++k) {
    auto s = CliffordScalar::sqrt2_pow(k);
    EXPECT_NEAR(std::abs(s.to_complex() - std::pow(std::sqrt(2.0), k)), 0, kTol);
  }
  // sqrt2 * sqrt2 must normalise to the same representation as 2.
  EXPECT_EQ(CliffordScalar::sqrt2_pow(1) * CliffordScalar::sqrt2_pow(1),
            CliffordScalar::integer(2));
  EXPECT_EQ(CliffordScalar::one_plus_omega(2) * CliffordScalar::one_plus_omega(6),
            CliffordScalar::integer(2));
}

TEST(CliffordScalar, RingAxiomsAgainstComplexArithmetic) {
  std::vector<CliffordScalar> xs = {
      CliffordScalar::one(),           CliffordScalar::omega(3),
      CliffordScalar::sqrt2_pow(-3),   CliffordScalar::one_plus_omega(1),
      CliffordScalar::integer(-5),     CliffordScalar::one_plus_omega(4),
      CliffordScalar::i() * CliffordScalar::sqrt2_pow(5)};
  for (const auto& a : xs) {
    for (const auto& b : xs) {
      EXPECT_NEAR(std::abs((a * b).to_complex() - a.to_complex() * b.to_complex()), 0, 1e-9);
      EXPECT_NEAR(std::abs((a + b).to_complex() - (a.to_complex() + b.to_complex())), 0, 1e-9);
      EXPECT_NEAR(std::abs((a - b).to_complex() - (a.to_complex() - b.to_complex())), 0, 1e-9);
      EXPECT_EQ(a * b, b * a);
    }
    EXPECT_NEAR(std::abs(a.conj().to_complex() - std::conj(a.to_complex())), 0, 1e-9);
    EXPECT_TRUE((a - a).is_zero());
  }
}

TEST(CliffordScalar, ZeroIsCanonical) {
  auto z = CliffordScalar::one_plus_omega(4);
  EXPECT_TRUE(z.is_zero());
  EXPECT_EQ(z, CliffordScalar::zero());
  EXPECT_EQ(z.half_pow(), 0);
}

TEST(CliffordScalar, EqualValuesHaveEqualRepresentations) {
  // (1 + i)^2 = 2i
  auto a = CliffordScalar::one_plus_omega(2);
  EXPECT_EQ(a * a, CliffordScalar::integer(2) * CliffordScalar::i());
  // 1/sqrt2 * (1 + i) = omega
  EXPECT_EQ(a * CliffordScalar::sqrt2_pow(-1), CliffordScalar::omega(1));
}

}  // namespace
}  // namespace zxcult
