// Copyright 2026 The wml Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#ifndef WML_CYCLOTOMIC_HPP_
#define WML_CYCLOTOMIC_HPP_

#include <complex>
#include <span>
#include <string>
#include <vector>

#include "wml/rational.hpp"

namespace wml {

// Exact element of Q(zeta_N), stored in the power basis 1, z, ..., z^(d-1)
// with d = phi(N), reduced modulo the N-th cyclotomic polynomial.
//
// Elements that happen to be rational are always stored with conductor 1, so
// rational arithmetic stays cheap. Mixed-conductor operands are lifted to the
// lcm of their conductors.
class Cyclotomic {
 public:
  Cyclotomic();
  Cyclotomic(long value);  // NOLINT(google-explicit-constructor)
  Cyclotomic(const Rational& value);  // NOLINT(google-explicit-constructor)

  // zeta_n^k.
  static Cyclotomic zeta(int n, long k = 1);
  // sum_k coeffs[k] * zeta_n^k for an arbitrary number of coefficients.
  static Cyclotomic from_powers(int n, std::vector<Rational> coeffs);

  int conductor() const { return conductor_; }
  std::span<const Rational> coefficients() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const { return conductor_ == 1; }
  // Throws std::domain_error when not rational.
  Rational to_rational() const;

  // Image under zeta -> zeta^-1; equals complex conjugation.
  Cyclotomic conj() const;
  // Throws std::domain_error on zero.
  Cyclotomic inverse() const;
  // Same element written over conductor m; m must be a multiple of
  // conductor().
  Cyclotomic lifted(int m) const;

  std::complex<double> to_complex() const;

  // "p/q" for rationals, otherwise a sum of terms c*zN^k.
  std::string to_string() const;

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& other);
  Cyclotomic& operator-=(const Cyclotomic& other);
  Cyclotomic& operator*=(const Cyclotomic& other);
  Cyclotomic& operator/=(const Cyclotomic& other);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

 private:
  Cyclotomic(int conductor, std::vector<Rational> coeffs);
  void normalize();

  int conductor_ = 1;
  std::vector<Rational> coeffs_;  // size phi(conductor_)
};

// Integer coefficients of the n-th cyclotomic polynomial, lowest degree first.
const std::vector<Integer>& cyclotomic_polynomial(int n);
int euler_phi(int n);

}  // namespace wml

#endif  // WML_CYCLOTOMIC_HPP_
