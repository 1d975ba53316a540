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
#ifndef WML_PERM_ACTION_HPP_
#define WML_PERM_ACTION_HPP_

#include <string>
#include <vector>

#include "wml/core_graph.hpp"
#include "wml/limits.hpp"
#include "wml/rational.hpp"

namespace wml {

// A permutation group on the points 0..degree-1, stored as the full element
// list. Points are acted on from the right: x^(st) = (x^s)^t, and the
// element s maps x to s[x].
class PermAction {
 public:
  // Closure of the generators by breadth-first multiplication. Throws
  // ValidationError if a generator is not a bijection of the points and
  // BudgetError beyond limits.group_order elements.
  static PermAction from_generators(int degree,
                                    std::vector<std::vector<int>> generators,
                                    std::string name = "",
                                    const Limits& limits = Limits::defaults());
  // S_n on {0, ..., n-1}.
  static PermAction symmetric(int n, const Limits& limits = Limits::defaults());
  // S_n on the k-subsets of {0, ..., n-1}, subsets in lexicographic order.
  static PermAction symmetric_on_subsets(int n, int k,
                                         const Limits& limits = Limits::defaults());
  // GL_n(F_2) acting on column vectors of F_2^n; vector v is the point whose
  // binary digits are its coordinates. include_zero adds the zero vector.
  static PermAction general_linear_f2(int n, bool include_zero,
                                      const Limits& limits = Limits::defaults());

  int degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<std::vector<int>>& elements() const { return elements_; }
  const std::vector<std::vector<int>>& generators() const { return generators_; }
  // Index of the inverse of element i.
  int inverse(int i) const { return inverse_[i]; }
  // Element index of a permutation, or -1.
  int index_of(const std::vector<int>& perm) const;
  const std::string& name() const { return name_; }

 private:
  int degree_ = 0;
  std::string name_;
  std::vector<std::vector<int>> generators_;
  std::vector<std::vector<int>> elements_;  // element 0 is the identity
  std::vector<int> inverse_;
};

// Probability weights on the elements of a PermAction.
class LetterDistribution {
 public:
  static LetterDistribution uniform(const PermAction& a);
  // Uniform on {s : s^m = 1}.
  static LetterDistribution torsion(const PermAction& a, int m);
  // Uniform on fixed-point-free elements. Throws ValidationError if none.
  static LetterDistribution derangements(const PermAction& a);
  // Arbitrary weights, one per element; must be non-negative and sum to 1.
  static LetterDistribution custom(const PermAction& a,
                                   std::vector<Rational> weights);

  // Support as (element index, weight) pairs.
  const std::vector<std::pair<int, Rational>>& support() const { return support_; }

 private:
  static LetterDistribution from_subset(const std::vector<int>& subset,
                                        const char* what);
  std::vector<std::pair<int, Rational>> support_;
};

// Sum over injective colorings i: V(g) -> points of the product over labels
// b of the probability that a dists[b]-random element s satisfies
// s[i(src e)] = i(dst e) for every b-edge e. A single distribution applies
// to every label. Throws BudgetError when the search visits more than
// limits.enumeration partial colorings.
Rational L_general(const CoreGraph& g, const PermAction& action,
                   const std::vector<LetterDistribution>& dists,
                   const Limits& limits = Limits::defaults());

// Average over homomorphisms J -> Sigma (uniform on a free basis of J) of
// the number of points fixed by the image of H. Requires H <= J; throws
// BudgetError when |Sigma|^rank(J) exceeds limits.enumeration.
Rational expectation_action(const CoreGraph& h, const CoreGraph& j,
                            const PermAction& action,
                            const Limits& limits = Limits::defaults());

}  // namespace wml

#endif  // WML_PERM_ACTION_HPP_
