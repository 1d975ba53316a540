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
#include "wml/rational_function.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace wml {
namespace {

// p / (x - root), exact; the caller guarantees p(root) = 0.
Polynomial divide_linear(const Polynomial& p, const Cyclotomic& root) {
  const auto& a = p.coefficients();
  std::vector<Cyclotomic> b(a.size() - 1);
  Cyclotomic carry;
  for (std::size_t k = a.size() - 1; k >= 1; --k) {
    carry = a[k] + root * carry;
    b[k - 1] = carry;
  }
  return Polynomial(std::move(b));
}

Polynomial expand_roots(const std::map<long, int>& roots) {
  Polynomial p = Polynomial::constant(1);
  for (const auto& [r, m] : roots) {
    const Polynomial lin({Cyclotomic(-r), Cyclotomic(1)});
    for (int i = 0; i < m; ++i) p *= lin;
  }
  return p;
}

}  // namespace

Polynomial::Polynomial(std::vector<Cyclotomic> coeffs)
    : coeffs_(std::move(coeffs)) {
  trim();
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Polynomial Polynomial::constant(const Cyclotomic& c) {
  return Polynomial(std::vector<Cyclotomic>{c});
}

Polynomial Polynomial::monomial(const Cyclotomic& c, int d) {
  std::vector<Cyclotomic> v(d + 1);
  v[d] = c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::falling_factorial(int t) {
  Polynomial p = constant(1);
  for (int j = 0; j < t; ++j) p *= Polynomial({Cyclotomic(-j), Cyclotomic(1)});
  return p;
}

Cyclotomic Polynomial::coefficient(int i) const {
  return i >= 0 && i <= degree() ? coeffs_[i] : Cyclotomic(0);
}

Cyclotomic Polynomial::evaluate(const Cyclotomic& x) const {
  Cyclotomic s;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) s = s * x + *it;
  return s;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return lead().inverse() * *this;
}

int Polynomial::conductor() const {
  int c = 1;
  for (const auto& x : coeffs_) c = std::lcm(c, x.conductor());
  return c;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += -o; }

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Cyclotomic> r(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
      if (!o.coeffs_[j].is_zero()) r[i + j] += coeffs_[i] * o.coeffs_[j];
    }
  }
  coeffs_ = std::move(r);
  trim();
  return *this;
}

Polynomial operator*(const Cyclotomic& c, const Polynomial& p) {
  Polynomial r = p;
  for (auto& x : r.coeffs_) x *= c;
  r.trim();
  return r;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& a,
                                                     const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("Polynomial::divmod: zero divisor");
  std::vector<Cyclotomic> rem = a.coeffs_;
  const int db = b.degree();
  if (a.degree() < db) return {Polynomial(), a};
  std::vector<Cyclotomic> q(a.degree() - db + 1);
  const Cyclotomic inv_lead = b.lead().inverse();
  for (int i = a.degree(); i >= db; --i) {
    if (rem[i].is_zero()) continue;
    const Cyclotomic c = rem[i] * inv_lead;
    q[i - db] = c;
    for (int j = 0; j <= db; ++j) rem[i - db + j] -= c * b.coeffs_[j];
  }
  return {Polynomial(std::move(q)), Polynomial(std::move(rem))};
}

Polynomial Polynomial::gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = divmod(a, b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

std::string Polynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Cyclotomic& c = coeffs_[i];
    if (c.is_zero()) continue;
    std::string coef = c.to_string();
    const bool compound = coef.find_first_of("+ ") != std::string::npos ||
                          (coef.find('-', 1) != std::string::npos);
    if (compound) coef = "(" + coef + ")";
    std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
    std::string term;
    if (mono.empty()) {
      term = coef;
    } else if (coef == "1") {
      term = mono;
    } else if (coef == "-1") {
      term = "-" + mono;
    } else {
      term = coef + "*" + mono;
    }
    if (out.empty()) {
      out = term;
    } else if (term.front() == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out;
}

RationalFunctionN::RationalFunctionN() : den_(Polynomial::constant(1)) {}

RationalFunctionN::RationalFunctionN(const Cyclotomic& c)
    : num_(Polynomial::constant(c)), den_(Polynomial::constant(1)) {}

RationalFunctionN::RationalFunctionN(const Polynomial& num,
                                     const Polynomial& den)
    : num_(num), den_(den) {
  if (den_.is_zero()) {
    throw std::domain_error("RationalFunctionN: zero denominator");
  }
  normalize();
}

void RationalFunctionN::normalize() {
  if (num_.is_zero()) {
    den_ = Polynomial::constant(1);
    return;
  }
  if (den_.degree() > 0) {
    const Polynomial g = Polynomial::gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = Polynomial::divmod(num_, g).first;
      den_ = Polynomial::divmod(den_, g).first;
    }
  }
  const Cyclotomic inv = den_.lead().inverse();
  num_ = inv * num_;
  den_ = inv * den_;
}

RationalFunctionN RationalFunctionN::over_linear_factors(
    Polynomial num, std::map<long, int> roots) {
  RationalFunctionN f;
  if (num.is_zero()) return f;
  for (auto& [r, m] : roots) {
    while (m > 0 && num.evaluate(Cyclotomic(r)).is_zero()) {
      num = divide_linear(num, Cyclotomic(r));
      --m;
    }
  }
  f.num_ = std::move(num);
  f.den_ = expand_roots(roots);
  return f;
}

RationalFunctionN RationalFunctionN::falling_ratio(
    const std::vector<int>& top, const std::vector<int>& bottom) {
  std::map<long, int> up, down;
  for (int t : top) {
    for (int j = 0; j < t; ++j) ++up[j];
  }
  for (int t : bottom) {
    for (int j = 0; j < t; ++j) ++down[j];
  }
  for (auto& [r, m] : down) {
    auto it = up.find(r);
    if (it == up.end()) continue;
    const int c = std::min(m, it->second);
    m -= c;
    it->second -= c;
  }
  RationalFunctionN f;
  f.num_ = expand_roots(up);
  f.den_ = expand_roots(down);
  return f;
}

Cyclotomic RationalFunctionN::evaluate(const Cyclotomic& n) const {
  const Cyclotomic d = den_.evaluate(n);
  if (d.is_zero()) {
    throw std::domain_error("RationalFunctionN: pole at n = " + n.to_string());
  }
  return num_.evaluate(n) / d;
}

std::vector<Cyclotomic> RationalFunctionN::laurent(int count) const {
  if (is_zero()) throw std::domain_error("laurent: zero function");
  const auto& p = num_.coefficients();
  const auto& q = den_.coefficients();
  // In x = 1/n the reversed polynomials give a power series with
  // non-vanishing constant denominator.
  auto rev = [](const std::vector<Cyclotomic>& v, int k) {
    return k < static_cast<int>(v.size()) ? v[v.size() - 1 - k] : Cyclotomic(0);
  };
  const Cyclotomic q0_inv = rev(q, 0).inverse();
  std::vector<Cyclotomic> c;
  for (int k = 0; k < count; ++k) {
    Cyclotomic s = rev(p, k);
    for (int i = 1; i <= k; ++i) s -= rev(q, i) * c[k - i];
    c.push_back(s * q0_inv);
  }
  return c;
}

RationalFunctionN RationalFunctionN::operator-() const {
  RationalFunctionN r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunctionN& RationalFunctionN::operator+=(const RationalFunctionN& o) {
  if (o.is_zero()) return *this;
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

RationalFunctionN& RationalFunctionN::operator-=(const RationalFunctionN& o) {
  return *this += -o;
}

RationalFunctionN& RationalFunctionN::operator*=(const RationalFunctionN& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

RationalFunctionN& RationalFunctionN::operator/=(const RationalFunctionN& o) {
  if (o.is_zero()) throw std::domain_error("RationalFunctionN: division by zero");
  num_ *= o.den_;
  den_ *= o.num_;
  normalize();
  return *this;
}

std::string RationalFunctionN::to_string(const std::string& var) const {
  const std::string n = num_.to_string(var);
  if (den_.degree() == 0) return n;
  return "(" + n + ")/(" + den_.to_string(var) + ")";
}

}  // namespace wml
