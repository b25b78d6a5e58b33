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
#include <sstream>

namespace zxcult {
namespace {

using Coeffs = std::array<int64_t, 4>;

Coeffs ring_mul(const Coeffs& a, const Coeffs& b) {
  Coeffs r{0, 0, 0, 0};
  for (int i = 0; i < 4; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < 4; ++j) {
      int k = i + j;
      int64_t v = a[i] * b[j];
      if (k >= 4) {
        r[k - 4] -= v;  // ω⁴ = −1
      } else {
        r[k] += v;
      }
    }
  }
  return r;
}

// Multiplication by √2 = ω − ω³.
Coeffs mul_sqrt2(const Coeffs& a) { return ring_mul(a, Coeffs{0, 1, 0, -1}); }

bool all_even(const Coeffs& a) {
  for (int64_t v : a) {
    if (v % 2 != 0) return false;
  }
  return true;
}

}  // namespace

CliffordScalar::CliffordScalar(std::array<int64_t, 4> coeffs, int half_pow)
    : coeffs_(coeffs), half_pow_(half_pow) {
  normalise();
}

void CliffordScalar::normalise() {
  if (coeffs_ == Coeffs{0, 0, 0, 0}) {
    half_pow_ = 0;
    return;
  }
  while (true) {
    if (all_even(coeffs_)) {
      for (auto& v : coeffs_) v /= 2;
      half_pow_ += 2;
      continue;
    }
    // x = y/√2 with y = x·√2; if y/2 is integral, x = (y/2)·√2.
    Coeffs y = mul_sqrt2(coeffs_);
    if (all_even(y)) {
      for (auto& v : y) v /= 2;
      coeffs_ = y;
      half_pow_ += 1;
      continue;
    }
    break;
  }
}

CliffordScalar CliffordScalar::omega(int k) {
  k = ((k % 8) + 8) % 8;
  Coeffs c{0, 0, 0, 0};
  if (k < 4) {
    c[k] = 1;
  } else {
    c[k - 4] = -1;
  }
  return CliffordScalar(c, 0);
}

CliffordScalar CliffordScalar::sqrt2_pow(int k) { return CliffordScalar({1, 0, 0, 0}, k); }

CliffordScalar CliffordScalar::one_plus_omega(int k) { return one() + omega(k); }

bool CliffordScalar::is_zero() const { return coeffs_ == Coeffs{0, 0, 0, 0}; }

std::complex<double> CliffordScalar::to_complex() const {
  const double s = std::sqrt(0.5);
  std::complex<double> w(s, s);
  std::complex<double> acc = static_cast<double>(coeffs_[0]);
  std::complex<double> p = w;
  for (int j = 1; j < 4; ++j) {
    acc += static_cast<double>(coeffs_[j]) * p;
    p *= w;
  }
  return acc * std::pow(2.0, half_pow_ / 2.0);
}

CliffordScalar CliffordScalar::conj() const {
  // ω ↦ ω⁷ = −ω³, ω² ↦ −ω², ω³ ↦ −ω.
  return CliffordScalar({coeffs_[0], -coeffs_[3], -coeffs_[2], -coeffs_[1]}, half_pow_);
}

CliffordScalar CliffordScalar::operator*(const CliffordScalar& o) const {
  if (is_zero() || o.is_zero()) return zero();
  return CliffordScalar(ring_mul(coeffs_, o.coeffs_), half_pow_ + o.half_pow_);
}

CliffordScalar CliffordScalar::operator+(const CliffordScalar& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  Coeffs a = coeffs_, b = o.coeffs_;
  int ka = half_pow_, kb = o.half_pow_;
  // Bring both to the smaller exponent by multiplying the other by √2 powers.
  while (ka > kb) {
    a = mul_sqrt2(a);
    --ka;
  }
  while (kb > ka) {
    b = mul_sqrt2(b);
    --kb;
  }
  Coeffs r;
  for (int j = 0; j < 4; ++j) r[j] = a[j] + b[j];
  return CliffordScalar(r, ka);
}

CliffordScalar CliffordScalar::operator-() const {
  return CliffordScalar({-coeffs_[0], -coeffs_[1], -coeffs_[2], -coeffs_[3]}, half_pow_);
}

CliffordScalar CliffordScalar::operator-(const CliffordScalar& o) const { return *this + (-o); }

CliffordScalar CliffordScalar::mul_sqrt2_pow(int k) const {
  if (is_zero()) return zero();
  return CliffordScalar(coeffs_, half_pow_ + k);
}

CliffordScalar CliffordScalar::mul_omega(int k) const { return *this * omega(k); }

std::string CliffordScalar::to_string() const {
  std::ostringstream os;
  os << "(" << coeffs_[0] << "," << coeffs_[1] << "," << coeffs_[2] << "," << coeffs_[3]
     << ")*2^(" << half_pow_ << "/2)";
  return os.str();
}

CliffordScalar scalar_mul(const CliffordScalar& a, const CliffordScalar& b) { return a * b; }
CliffordScalar scalar_add(const CliffordScalar& a, const CliffordScalar& b) { return a + b; }

}  // namespace zxcult
