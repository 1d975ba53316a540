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
#include "wml/multivariate.hpp"

#include <algorithm>
#include <climits>
#include <stdexcept>

#include "wml/error.hpp"

namespace wml {

MultiPolynomial MultiPolynomial::from_univariate(const Polynomial& p, int var,
                                                 int vars) {
  MultiPolynomial m(vars);
  for (int d = 0; d <= p.degree(); ++d) {
    std::vector<int> e(vars, 0);
    e[var] = d;
    m.add(e, p.coefficient(d));
  }
  return m;
}

void MultiPolynomial::add(const std::vector<int>& exps, const Cyclotomic& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Cyclotomic MultiPolynomial::evaluate(const std::vector<Cyclotomic>& point) const {
  Cyclotomic s;
  for (const auto& [e, c] : terms_) {
    Cyclotomic t = c;
    for (int i = 0; i < vars_; ++i) {
      for (int k = 0; k < e[i]; ++k) t *= point[i];
    }
    s += t;
  }
  return s;
}

MultiPolynomial& MultiPolynomial::operator+=(const MultiPolynomial& o) {
  for (const auto& [e, c] : o.terms_) add(e, c);
  return *this;
}

MultiPolynomial& MultiPolynomial::operator-=(const MultiPolynomial& o) {
  for (const auto& [e, c] : o.terms_) add(e, -c);
  return *this;
}

MultiPolynomial operator*(const MultiPolynomial& a, const MultiPolynomial& b) {
  MultiPolynomial r(a.vars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      std::vector<int> e(a.vars_);
      for (int i = 0; i < a.vars_; ++i) e[i] = ea[i] + eb[i];
      r.add(e, ca * cb);
    }
  }
  return r;
}

std::string MultiPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    std::string mono;
    for (int i = 0; i < vars_; ++i) {
      if (it->first[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "n" + std::to_string(i + 1);
      if (it->first[i] > 1) mono += "^" + std::to_string(it->first[i]);
    }
    std::string c = it->second.to_string();
    if (!it->second.is_rational()) c = "(" + c + ")";
    std::string term = mono.empty() ? c : (c == "1" ? mono : (c == "-1" ? "-" + mono : c + "*" + mono));
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

SeparableSum SeparableSum::constant(int vars, const Cyclotomic& c) {
  SeparableSum s(vars);
  s.add_term(c, std::vector<RationalFunctionN>(vars, RationalFunctionN(Cyclotomic(1))));
  return s;
}

SeparableSum SeparableSum::univariate(int vars, int var,
                                      const RationalFunctionN& f) {
  std::vector<RationalFunctionN> factors(vars, RationalFunctionN(Cyclotomic(1)));
  factors.at(var) = f;
  SeparableSum s(vars);
  s.add_term(1, std::move(factors));
  return s;
}

void SeparableSum::add_term(const Cyclotomic& coeff,
                            std::vector<RationalFunctionN> factors) {
  if (static_cast<int>(factors.size()) != vars_) {
    throw ValidationError("SeparableSum: factor count does not match variables");
  }
  if (coeff.is_zero()) return;
  for (const auto& f : factors) {
    if (f.is_zero()) return;
  }
  std::string key;
  for (const auto& f : factors) key += f.to_string() + "|";
  auto it = index_.find(key);
  if (it != index_.end()) {
    const std::size_t pos = it->second;
    terms_[pos].coeff += coeff;
    if (terms_[pos].coeff.is_zero()) {
      // Cancelled: swap the last term into the hole.
      index_.erase(it);
      if (pos + 1 != terms_.size()) {
        std::string last;
        for (const auto& f : terms_.back().factors) last += f.to_string() + "|";
        terms_[pos] = std::move(terms_.back());
        index_[last] = pos;
      }
      terms_.pop_back();
    }
    return;
  }
  index_.emplace(key, terms_.size());
  terms_.push_back({coeff, std::move(factors)});
}

Cyclotomic SeparableSum::evaluate(const std::vector<Cyclotomic>& point) const {
  if (static_cast<int>(point.size()) != vars_) {
    throw ValidationError("SeparableSum::evaluate: expected " +
                          std::to_string(vars_) + " values");
  }
  Cyclotomic s;
  for (const Term& t : terms_) {
    Cyclotomic p = t.coeff;
    for (int i = 0; i < vars_ && !p.is_zero(); ++i) p *= t.factors[i].evaluate(point[i]);
    s += p;
  }
  return s;
}

RationalFunctionN SeparableSum::diagonal() const {
  RationalFunctionN s;
  for (const Term& t : terms_) {
    RationalFunctionN p(t.coeff);
    for (const auto& f : t.factors) p *= f;
    s += p;
  }
  return s;
}

Cyclotomic SeparableSum::laurent_coefficient(const std::vector<int>& exps) const {
  Cyclotomic s;
  for (const Term& t : terms_) {
    Cyclotomic p = t.coeff;
    for (int i = 0; i < vars_ && !p.is_zero(); ++i) {
      p *= wml::laurent_coefficient(t.factors[i], exps[i]);
    }
    s += p;
  }
  return s;
}

std::vector<int> SeparableSum::max_exponents() const {
  std::vector<int> m(vars_, INT_MIN);
  for (const Term& t : terms_) {
    for (int i = 0; i < vars_; ++i) {
      m[i] = std::max(m[i], leading_exponent(t.factors[i]));
    }
  }
  return m;
}

std::pair<MultiPolynomial, std::vector<Polynomial>> SeparableSum::common_form() const {
  std::vector<Polynomial> dens(vars_, Polynomial::constant(1));
  for (const Term& t : terms_) {
    for (int i = 0; i < vars_; ++i) {
      const Polynomial& d = t.factors[i].den();
      const Polynomial g = Polynomial::gcd(dens[i], d);
      dens[i] = dens[i] * Polynomial::divmod(d, g).first;
    }
  }
  MultiPolynomial num(vars_);
  for (const Term& t : terms_) {
    MultiPolynomial p = MultiPolynomial::from_univariate(Polynomial::constant(t.coeff), 0, vars_);
    for (int i = 0; i < vars_; ++i) {
      const Polynomial cofactor = Polynomial::divmod(dens[i], t.factors[i].den()).first;
      p = p * MultiPolynomial::from_univariate(t.factors[i].num() * cofactor, i, vars_);
    }
    num += p;
  }
  return {num, dens};
}

bool SeparableSum::equals(const SeparableSum& o) const {
  if (vars_ != o.vars_) return false;
  auto [na, da] = common_form();
  auto [nb, db] = o.common_form();
  for (int i = 0; i < vars_; ++i) {
    na = na * MultiPolynomial::from_univariate(db[i], i, vars_);
    nb = nb * MultiPolynomial::from_univariate(da[i], i, vars_);
  }
  return na == nb;
}

SeparableSum& SeparableSum::operator+=(const SeparableSum& o) {
  if (o.vars_ != vars_) throw ValidationError("SeparableSum: variable mismatch");
  for (const Term& t : o.terms_) add_term(t.coeff, t.factors);
  return *this;
}

SeparableSum& SeparableSum::operator-=(const SeparableSum& o) {
  if (o.vars_ != vars_) throw ValidationError("SeparableSum: variable mismatch");
  for (const Term& t : o.terms_) add_term(-t.coeff, t.factors);
  return *this;
}

std::string SeparableSum::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const Term& t : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + t.coeff.to_string() + ")";
    for (int i = 0; i < vars_; ++i) {
      out += "*[" + t.factors[i].to_string("n" + std::to_string(i + 1)) + "]";
    }
  }
  return out;
}

int leading_exponent(const RationalFunctionN& f) {
  if (f.is_zero()) throw std::domain_error("leading_exponent: zero function");
  return f.num().degree() - f.den().degree();
}

Cyclotomic laurent_coefficient(const RationalFunctionN& f, int e) {
  if (f.is_zero()) return 0;
  const int top = leading_exponent(f);
  if (e > top) return 0;
  return f.laurent(top - e + 1).back();
}

}  // namespace wml
