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
#ifndef WML_MOBIUS_HPP_
#define WML_MOBIUS_HPP_

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "wml/core_graph.hpp"
#include "wml/error.hpp"
#include "wml/quotient_poset.hpp"
#include "wml/rational.hpp"
#include "wml/rational_function.hpp"

namespace wml {

// Function on the comparable pairs (i, j), i <= j, of a quotient poset.
// Values are stored sparsely; an unset comparable pair reads as zero.
// T needs value-initialization to zero together with + and *.
template <class T>
class PosetFunction {
 public:
  explicit PosetFunction(const QuotientPoset& p)
      : poset_(&p), rows_(p.size()) {}

  const QuotientPoset& poset() const { return *poset_; }

  // Throws ValidationError when i is not below j.
  T at(int i, int j) const {
    check(i, j);
    auto it = rows_[i].find(j);
    return it == rows_[i].end() ? T() : it->second;
  }
  void set(int i, int j, T v) {
    check(i, j);
    rows_[i][j] = std::move(v);
  }
  // Explicitly stored entries with first index i.
  const std::map<int, T>& row(int i) const { return rows_.at(i); }

  // 1 on isomorphisms (the diagonal, as nodes are isomorphism classes).
  static PosetFunction delta(const QuotientPoset& p, const T& one) {
    PosetFunction f(p);
    for (int i = 0; i < p.size(); ++i) f.rows_[i][i] = one;
    return f;
  }
  static PosetFunction constant(const QuotientPoset& p, const T& c) {
    return tabulate(p, [&](int, int) { return c; });
  }
  // f(i, j) for every comparable pair.
  template <class F>
  static PosetFunction tabulate(const QuotientPoset& p, F f) {
    PosetFunction out(p);
    for (int i = 0; i < p.size(); ++i) {
      for (int j : p.up_set(i)) out.rows_[i][j] = f(i, j);
    }
    return out;
  }

  template <class U, class F>
  PosetFunction<U> transform(F f) const {
    PosetFunction<U> out(*poset_);
    for (int i = 0; i < static_cast<int>(rows_.size()); ++i) {
      for (const auto& [j, v] : rows_[i]) out.set(i, j, f(v));
    }
    return out;
  }

  friend bool operator==(const PosetFunction& a, const PosetFunction& b) {
    if (a.poset_ != b.poset_) return false;
    for (int i = 0; i < a.poset_->size(); ++i) {
      for (int j : a.poset_->up_set(i)) {
        if (!(a.at(i, j) == b.at(i, j))) return false;
      }
    }
    return true;
  }

 private:
  void check(int i, int j) const {
    if (i < 0 || j < 0 || i >= poset_->size() || j >= poset_->size() ||
        !poset_->leq(i, j)) {
      throw ValidationError("PosetFunction: pair (" + std::to_string(i) +
                            ", " + std::to_string(j) + ") is not comparable");
    }
  }

  const QuotientPoset* poset_;
  std::vector<std::map<int, T>> rows_;
};

// (f * g)(i, j) = sum over i <= k <= j of f(i, k) g(k, j). Morphisms between
// core graphs are unique, so factorizations of i -> j through surjections
// are exactly the intermediate nodes. Throws ValidationError when the
// posets differ.
template <class T>
PosetFunction<T> convolve(const PosetFunction<T>& f, const PosetFunction<T>& g) {
  if (&f.poset() != &g.poset()) {
    throw ValidationError("convolve: functions live on different posets");
  }
  const QuotientPoset& p = f.poset();
  PosetFunction<T> out(p);
  for (int i = 0; i < p.size(); ++i) {
    std::map<int, T> acc;
    for (const auto& [k, fv] : f.row(i)) {
      for (const auto& [j, gv] : g.row(k)) acc[j] += fv * gv;
    }
    for (auto& [j, v] : acc) out.set(i, j, std::move(v));
  }
  return out;
}

// Inverse of the constant function 1 under convolution, by the recursion
// mu(i, i) = 1, mu(i, j) = -sum_{i <= k < j} mu(i, k).
PosetFunction<Integer> mobius_B(const QuotientPoset& p);

// Closed form prod_v (n)_{|fiber v|} / prod_e (n)_{|fiber e|}. Throws
// ValidationError unless eta is surjective on vertices and edges.
RationalFunctionN L_B(const GraphMorphism& eta);
RationalFunctionN L_B(const QuotientPoset& p, int i, int j);

// Exact value of L_B at an integer n >= 1. When some vertex fiber exceeds n
// there are no injective colorings and the value is 0; otherwise every edge
// fiber is at most its endpoints' fibers, so no factor of the denominator
// vanishes and the ratio is the count itself.
Rational L_B_value(const GraphMorphism& eta, long n);
Rational L_B_value(const QuotientPoset& p, int i, int j, long n);

// Vertex and edge fiber sizes of a surjective morphism.
std::pair<std::vector<int>, std::vector<int>> fibers(const GraphMorphism& eta);

}  // namespace wml

#endif  // WML_MOBIUS_HPP_
