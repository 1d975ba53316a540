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
#include "wml/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace wml {
namespace {

using QPoly = std::vector<Rational>;

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Reduces p in place modulo the monic integer polynomial m.
void reduce_mod(QPoly& p, const std::vector<Integer>& m) {
  const std::size_t d = m.size() - 1;
  for (std::size_t top = p.size(); top-- > d;) {
    if (p[top] == 0) continue;
    const Rational c = p[top];
    for (std::size_t i = 0; i <= d; ++i) p[top - d + i] -= c * m[i];
  }
  p.resize(d);
}

// Polynomial long division over Q by a trimmed divisor; returns the quotient
// and leaves the remainder in a.
QPoly divide(QPoly& a, const QPoly& b) {
  trim(a);
  if (a.size() < b.size()) return {};
  const std::size_t db = b.size() - 1;
  QPoly q(a.size() - db, Rational(0));
  for (std::size_t i = a.size(); i-- > db;) {
    if (a[i] == 0) continue;
    const Rational c = a[i] / b.back();
    const std::size_t shift = i - db;
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
  }
  trim(a);
  return q;
}

QPoly mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

QPoly sub(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

}  // namespace

int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

const std::vector<Integer>& cyclotomic_polynomial(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<Integer>> cache;
  if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: n < 1");
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  // x^n - 1 divided by every Phi_d with d | n, d < n.
  QPoly num(n + 1, Rational(0));
  num[0] = -1;
  num[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const auto& pd = cyclotomic_polynomial(d);
    QPoly den(pd.begin(), pd.end());
    num = divide(num, den);
  }
  std::vector<Integer> result;
  result.reserve(num.size());
  for (const auto& c : num) result.push_back(c.get_num());
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(n, std::move(result)).first->second;
}

Cyclotomic::Cyclotomic() : coeffs_{Rational(0)} {}
Cyclotomic::Cyclotomic(long value) : coeffs_{Rational(value)} {}
Cyclotomic::Cyclotomic(const Rational& value) : coeffs_{value} {
  coeffs_[0].canonicalize();
}

Cyclotomic::Cyclotomic(int conductor, std::vector<Rational> coeffs)
    : conductor_(conductor), coeffs_(std::move(coeffs)) {
  normalize();
}

Cyclotomic Cyclotomic::zeta(int n, long k) {
  if (n < 1) throw std::invalid_argument("Cyclotomic::zeta: n < 1");
  k %= n;
  if (k < 0) k += n;
  std::vector<Rational> coeffs(k + 1, Rational(0));
  coeffs[k] = 1;
  return from_powers(n, std::move(coeffs));
}

Cyclotomic Cyclotomic::from_powers(int n, std::vector<Rational> coeffs) {
  if (n < 1) throw std::invalid_argument("Cyclotomic::from_powers: n < 1");
  // zeta_n^n = 1, so exponents fold modulo n before reduction by Phi_n.
  // GMP arithmetic assumes canonical operands; callers may pass 2/4.
  QPoly p(n, Rational(0));
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    coeffs[k].canonicalize();
    p[k % n] += coeffs[k];
  }
  reduce_mod(p, cyclotomic_polynomial(n));
  return Cyclotomic(n, std::move(p));
}

void Cyclotomic::normalize() {
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    if (coeffs_[k] != 0) return;
  }
  coeffs_.resize(1);
  conductor_ = 1;
}

bool Cyclotomic::is_zero() const { return conductor_ == 1 && coeffs_[0] == 0; }

Rational Cyclotomic::to_rational() const {
  if (conductor_ != 1) {
    throw std::domain_error("Cyclotomic::to_rational: value is irrational");
  }
  return coeffs_[0];
}

Cyclotomic Cyclotomic::lifted(int m) const {
  if (m % conductor_ != 0) {
    throw std::invalid_argument("Cyclotomic::lifted: not a multiple");
  }
  if (m == conductor_ || conductor_ == 1) {
    Cyclotomic r = *this;
    if (conductor_ == 1 && m != 1) {
      r.conductor_ = m;
      r.coeffs_.assign(euler_phi(m), Rational(0));
      r.coeffs_[0] = coeffs_[0];
    }
    return r;
  }
  const int step = m / conductor_;
  QPoly p(m, Rational(0));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) p[k * step] = coeffs_[k];
  reduce_mod(p, cyclotomic_polynomial(m));
  Cyclotomic r;
  r.conductor_ = m;
  r.coeffs_ = std::move(p);
  return r;
}

Cyclotomic Cyclotomic::conj() const {
  if (conductor_ == 1) return *this;
  const int n = conductor_;
  QPoly p(n, Rational(0));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    p[(n - static_cast<int>(k)) % n] += coeffs_[k];
  }
  reduce_mod(p, cyclotomic_polynomial(n));
  return Cyclotomic(n, std::move(p));
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw std::domain_error("Cyclotomic::inverse: zero");
  if (conductor_ == 1) return Cyclotomic(Rational(1) / coeffs_[0]);
  // Extended Euclid against the irreducible Phi_N.
  const auto& phi = cyclotomic_polynomial(conductor_);
  QPoly r0(phi.begin(), phi.end());
  QPoly r1 = coeffs_;
  trim(r1);
  QPoly s0, s1{Rational(1)};
  while (!r1.empty()) {
    QPoly q = divide(r0, r1);  // r0 becomes the remainder
    QPoly s2 = sub(s0, mul(q, s1));
    s0 = std::move(s1);
    s1 = std::move(s2);
    std::swap(r0, r1);
  }
  // r0 is a non-zero constant: s0 * a = r0 (mod Phi_N).
  const Rational g = r0[0];
  for (auto& c : s0) c /= g;
  s0.resize(std::max<std::size_t>(s0.size(), 1), Rational(0));
  return from_powers(conductor_, std::move(s0));
}

std::complex<double> Cyclotomic::to_complex() const {
  std::complex<double> z = 0;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    const double angle =
        2.0 * std::numbers::pi * static_cast<double>(k) / conductor_;
    z += coeffs_[k].get_d() * std::polar(1.0, angle);
  }
  return z;
}

std::string Cyclotomic::to_string() const {
  if (conductor_ == 1) return wml::to_string(coeffs_[0]);
  std::string out;
  const std::string z = "z" + std::to_string(conductor_);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Rational& c = coeffs_[k];
    if (c == 0) continue;
    std::string term;
    if (k == 0) {
      term = wml::to_string(c);
    } else {
      const std::string power = k == 1 ? z : z + "^" + std::to_string(k);
      if (c == 1) {
        term = power;
      } else if (c == -1) {
        term = "-" + power;
      } else {
        term = wml::to_string(c) + "*" + power;
      }
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

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& other) {
  if (other.conductor_ == 1) {
    coeffs_[0] += other.coeffs_[0];
    return *this;
  }
  if (conductor_ != other.conductor_) {
    const int m = std::lcm(conductor_, other.conductor_);
    *this = lifted(m);
    Cyclotomic o = other.lifted(m);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  } else {
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      coeffs_[k] += other.coeffs_[k];
    }
  }
  normalize();
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& other) {
  return *this += -other;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& other) {
  if (other.conductor_ == 1) {
    for (auto& c : coeffs_) c *= other.coeffs_[0];
    normalize();
    return *this;
  }
  if (conductor_ == 1) {
    const Rational s = coeffs_[0];
    *this = other;
    for (auto& c : coeffs_) c *= s;
    normalize();
    return *this;
  }
  const int m = std::lcm(conductor_, other.conductor_);
  const Cyclotomic a = lifted(m);
  const Cyclotomic b = other.lifted(m);
  QPoly p = mul(a.coeffs_, b.coeffs_);
  reduce_mod(p, cyclotomic_polynomial(m));
  *this = Cyclotomic(m, std::move(p));
  return *this;
}

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& other) {
  return *this *= other.inverse();
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.conductor_ == b.conductor_) return a.coeffs_ == b.coeffs_;
  if (a.conductor_ == 1 || b.conductor_ == 1) return false;
  const int m = std::lcm(a.conductor_, b.conductor_);
  return a.lifted(m).coeffs_ == b.lifted(m).coeffs_;
}

}  // namespace wml
