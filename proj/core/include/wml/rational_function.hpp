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
#ifndef WML_RATIONAL_FUNCTION_HPP_
#define WML_RATIONAL_FUNCTION_HPP_

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "wml/cyclotomic.hpp"

namespace wml {

// Polynomial in one variable with Cyclotomic coefficients, lowest degree
// first, never with a zero leading coefficient.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Cyclotomic> coeffs);
  static Polynomial constant(const Cyclotomic& c);
  // c * x^d.
  static Polynomial monomial(const Cyclotomic& c, int d);
  // x(x-1)...(x-t+1).
  static Polynomial falling_factorial(int t);

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Cyclotomic>& coefficients() const { return coeffs_; }
  Cyclotomic coefficient(int i) const;
  // Requires a non-zero polynomial.
  const Cyclotomic& lead() const { return coeffs_.back(); }

  Cyclotomic evaluate(const Cyclotomic& x) const;
  Polynomial monic() const;
  // Conductor lcm of the coefficients.
  int conductor() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator*(const Cyclotomic& c, const Polynomial& p);
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  // Quotient and remainder; throws std::domain_error when b is zero.
  static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a,
                                                  const Polynomial& b);
  // Monic gcd; gcd(0, 0) = 0.
  static Polynomial gcd(Polynomial a, Polynomial b);

  std::string to_string(const std::string& var = "n") const;

 private:
  void trim();
  std::vector<Cyclotomic> coeffs_;
};

// Ratio of polynomials in n, reduced and with monic denominator. Zero is
// 0/1.
class RationalFunctionN {
 public:
  RationalFunctionN();
  RationalFunctionN(const Cyclotomic& c);  // NOLINT(google-explicit-constructor)
  // Throws std::domain_error when den is zero.
  RationalFunctionN(const Polynomial& num, const Polynomial& den);
  // num / prod_j (n - j)^roots[j]; reduction only needs root tests, so this
  // avoids general gcds.
  static RationalFunctionN over_linear_factors(Polynomial num,
                                               std::map<long, int> roots);
  // (n)_a / (n)_b.
  static RationalFunctionN falling_ratio(const std::vector<int>& top,
                                         const std::vector<int>& bottom);

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  // Throws std::domain_error at a pole.
  Cyclotomic evaluate(const Cyclotomic& n) const;
  // Coefficients of n^e, n^{e-1}, ... (count terms) where
  // e = deg(num) - deg(den). Requires a non-zero function.
  std::vector<Cyclotomic> laurent(int count) const;

  RationalFunctionN operator-() const;
  RationalFunctionN& operator+=(const RationalFunctionN& o);
  RationalFunctionN& operator-=(const RationalFunctionN& o);
  RationalFunctionN& operator*=(const RationalFunctionN& o);
  RationalFunctionN& operator/=(const RationalFunctionN& o);
  friend RationalFunctionN operator+(RationalFunctionN a, const RationalFunctionN& b) { return a += b; }
  friend RationalFunctionN operator-(RationalFunctionN a, const RationalFunctionN& b) { return a -= b; }
  friend RationalFunctionN operator*(RationalFunctionN a, const RationalFunctionN& b) { return a *= b; }
  friend RationalFunctionN operator/(RationalFunctionN a, const RationalFunctionN& b) { return a /= b; }
  friend bool operator==(const RationalFunctionN& a, const RationalFunctionN& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string to_string(const std::string& var = "n") const;

 private:
  void normalize();
  Polynomial num_, den_;
};

}  // namespace wml

#endif  // WML_RATIONAL_FUNCTION_HPP_
