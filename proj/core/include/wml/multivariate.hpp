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
#ifndef WML_MULTIVARIATE_HPP_
#define WML_MULTIVARIATE_HPP_

#include <map>
#include <string>
#include <vector>

#include "wml/cyclotomic.hpp"
#include "wml/rational_function.hpp"

namespace wml {

// Polynomial in n_1, ..., n_k: exponent vector -> non-zero coefficient.
class MultiPolynomial {
 public:
  explicit MultiPolynomial(int vars = 0) : vars_(vars) {}
  // p(n_var) as a polynomial in vars variables.
  static MultiPolynomial from_univariate(const Polynomial& p, int var, int vars);

  int vars() const { return vars_; }
  const std::map<std::vector<int>, Cyclotomic>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add(const std::vector<int>& exps, const Cyclotomic& c);

  Cyclotomic evaluate(const std::vector<Cyclotomic>& point) const;

  MultiPolynomial& operator+=(const MultiPolynomial& o);
  MultiPolynomial& operator-=(const MultiPolynomial& o);
  friend MultiPolynomial operator*(const MultiPolynomial& a, const MultiPolynomial& b);
  friend MultiPolynomial operator+(MultiPolynomial a, const MultiPolynomial& b) { return a += b; }
  friend MultiPolynomial operator-(MultiPolynomial a, const MultiPolynomial& b) { return a -= b; }
  friend bool operator==(const MultiPolynomial& a, const MultiPolynomial& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

  std::string to_string() const;

 private:
  int vars_;
  std::map<std::vector<int>, Cyclotomic> terms_;
};

// sum_k c_k prod_i f_{k,i}(n_i): a sum of products of univariate rational
// functions, one factor per variable. Kept unexpanded; a common denominator
// is formed only on demand.
class SeparableSum {
 public:
  struct Term {
    Cyclotomic coeff;
    std::vector<RationalFunctionN> factors;
  };

  explicit SeparableSum(int vars = 1) : vars_(vars) {}
  static SeparableSum constant(int vars, const Cyclotomic& c);
  // f(n_var).
  static SeparableSum univariate(int vars, int var, const RationalFunctionN& f);

  int vars() const { return vars_; }
  const std::vector<Term>& terms() const { return terms_; }
  // Terms with identical factor lists are merged.
  void add_term(const Cyclotomic& coeff, std::vector<RationalFunctionN> factors);

  // Throws std::domain_error at a pole of some factor.
  Cyclotomic evaluate(const std::vector<Cyclotomic>& point) const;
  // All variables set to one n.
  RationalFunctionN diagonal() const;
  // Coefficient of prod n_i^{exps[i]} in the expansion in descending powers
  // of every variable.
  Cyclotomic laurent_coefficient(const std::vector<int>& exps) const;
  // Largest exponent of n_i occurring in any term.
  std::vector<int> max_exponents() const;

  // Numerator over prod_i D_i(n_i), each D_i the lcm of the denominators
  // in variable i.
  std::pair<MultiPolynomial, std::vector<Polynomial>> common_form() const;
  bool equals(const SeparableSum& o) const;

  SeparableSum& operator+=(const SeparableSum& o);
  SeparableSum& operator-=(const SeparableSum& o);
  friend SeparableSum operator+(SeparableSum a, const SeparableSum& b) { return a += b; }
  friend SeparableSum operator-(SeparableSum a, const SeparableSum& b) { return a -= b; }

  std::string to_string() const;

 private:
  int vars_;
  std::vector<Term> terms_;
  std::map<std::string, std::size_t> index_;
};

// Coefficient of n^e in the expansion of f in descending powers of n.
Cyclotomic laurent_coefficient(const RationalFunctionN& f, int e);
// deg(num) - deg(den); requires a non-zero function.
int leading_exponent(const RationalFunctionN& f);

}  // namespace wml

#endif  // WML_MULTIVARIATE_HPP_
