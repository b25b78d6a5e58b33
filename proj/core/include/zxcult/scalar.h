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

#ifndef ZXCULT_SCALAR_H_
#define ZXCULT_SCALAR_H_

#include <array>
#include <complex>
#include <cstdint>
#include <string>

namespace zxcult {

// Exact element of Z[ω]·2^{k/2} with ω = e^{iπ/4}.
//
// The value is (c0 + c1·ω + c2·ω² + c3·ω³) · 2^{half_pow/2}. Every operation
// leaves the representation normalised, so equality is structural.
class CliffordScalar {
 public:
  CliffordScalar() = default;  // zero
  CliffordScalar(std::array<int64_t, 4> coeffs, int half_pow);

  static CliffordScalar zero() { return CliffordScalar(); }
  static CliffordScalar one() { return CliffordScalar({1, 0, 0, 0}, 0); }
  static CliffordScalar integer(int64_t v) { return CliffordScalar({v, 0, 0, 0}, 0); }
  // ω^k for any integer k.
  static CliffordScalar omega(int k);
  // √2^k for any integer k.
  static CliffordScalar sqrt2_pow(int k);
  static CliffordScalar i() { return omega(2); }
  // 1 + ω^k, the value of a degree-0 spider with phase kπ/4.
  static CliffordScalar one_plus_omega(int k);

  const std::array<int64_t, 4>& coeffs() const { return coeffs_; }
  int half_pow() const { return half_pow_; }
  bool is_zero() const;

  std::complex<double> to_complex() const;
  CliffordScalar conj() const;

  CliffordScalar operator*(const CliffordScalar& o) const;
  CliffordScalar operator+(const CliffordScalar& o) const;
  CliffordScalar operator-(const CliffordScalar& o) const;
  CliffordScalar operator-() const;
  CliffordScalar& operator*=(const CliffordScalar& o) { return *this = *this * o; }
  CliffordScalar& operator+=(const CliffordScalar& o) { return *this = *this + o; }
  bool operator==(const CliffordScalar& o) const = default;

  CliffordScalar mul_sqrt2_pow(int k) const;
  CliffordScalar mul_omega(int k) const;

  std::string to_string() const;

 private:
  void normalise();

  std::array<int64_t, 4> coeffs_{0, 0, 0, 0};
  int half_pow_ = 0;
};

CliffordScalar scalar_mul(const CliffordScalar& a, const CliffordScalar& b);
CliffordScalar scalar_add(const CliffordScalar& a, const CliffordScalar& b);

}  // namespace zxcult

#endif  // ZXCULT_SCALAR_H_
