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
#ifndef WML_ORACLE_HPP_
#define WML_ORACLE_HPP_

#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include "wml/class_function.hpp"
#include "wml/cyclotomic.hpp"
#include "wml/limits.hpp"
#include "wml/perm_action.hpp"
#include "wml/word.hpp"

namespace wml {

// G wr_X Sigma for a finite G and a permutation group Sigma on X, as explicit
// elements (v, s) with v in G^X and s in Sigma. The product is
// (v1, s1)(v2, s2) = (v1 * (s1.v2), s1 s2) with (s.v)_x = v_{s(x)}, and
// s1 s2 applies s1 first.
class ExplicitWreath {
 public:
  struct Element {
    std::vector<int> v;
    int perm = 0;  // index into the action's element list
    friend bool operator==(const Element&, const Element&) = default;
  };

  // Throws BudgetError when |G|^|X| |Sigma| exceeds limits.group_order.
  ExplicitWreath(GroupPtr base, PermAction action,
                 const Limits& limits = Limits::defaults());
  // G wr S_n.
  static ExplicitWreath over_symmetric(GroupPtr base, int n,
                                       const Limits& limits = Limits::defaults());

  const GroupPtr& base() const { return base_; }
  const PermAction& action() const { return action_; }
  int degree() const { return action_.degree(); }
  std::int64_t order() const { return order_; }

  // Elements are numbered by v in base-|G| digits (coordinate 0 least
  // significant) followed by the permutation index.
  Element element(std::int64_t index) const;
  std::int64_t index(const Element& e) const;
  Element multiply(const Element& a, const Element& b) const;
  Element inverse(const Element& a) const;
  std::int64_t mul(std::int64_t a, std::int64_t b) const;
  std::int64_t inverse(std::int64_t a) const;
  std::int64_t identity() const { return 0; }

  // Ind_X phi(v, s) = sum over x fixed by s of phi(v_x).
  Cyclotomic ind(const ClassFunction& phi, const Element& e) const;
  std::vector<Cyclotomic> ind_values(const ClassFunction& phi) const;
  // The same character through the induction formula from the stabilizer
  // of point 0, with psi(v, s) = phi(v_0):
  // (1/|H|) sum over k with k g k^-1 in H of psi(k g k^-1). Costs |K|.
  Cyclotomic ind_by_induction(const ClassFunction& phi, const Element& e) const;

  // The wreath product as a table group with the same element numbering.
  // Throws BudgetError above 4096 elements.
  std::shared_ptr<const FiniteGroup> to_group() const;

 private:
  GroupPtr base_;
  PermAction action_;
  std::int64_t order_ = 0;
  std::int64_t coords_ = 1;  // |G|^|X|
  std::vector<int> perm_mul_;
};

// W_{n_1, ..., n_m}(G) = G wr S_{n_1} wr ... wr S_{n_m} as a table group,
// with Ind_{n_1, ..., n_m} phi on it.
struct IteratedWreath {
  std::shared_ptr<const FiniteGroup> group;
  ClassFunction character;
};
IteratedWreath build_iterated_wreath(const ClassFunction& phi,
                                     const std::vector<int>& ns,
                                     const Limits& limits = Limits::defaults());

// Exact average of chi(w(k_1, ..., k_r)) over K^r; chi given per element.
// Throws BudgetError when |K|^r exceeds limits.enumeration. Parallel over
// the first letter's value; per-worker integer histograms are joined in a
// fixed order.
Cyclotomic brute_expectation(const Word& w, const FiniteGroup& k,
                             const std::vector<Cyclotomic>& chi,
                             const Limits& limits = Limits::defaults());
Cyclotomic brute_expectation(const Word& w, const ClassFunction& chi,
                             const Limits& limits = Limits::defaults());
Cyclotomic brute_expectation(const Word& w, const ExplicitWreath& k,
                             const std::vector<Cyclotomic>& chi,
                             const Limits& limits = Limits::defaults());

// Averages chi over independent draws of each letter from its own list of
// elements (uniform on each list). Used for torsion-restricted measures.
Cyclotomic brute_expectation_restricted(const Word& w, const ExplicitWreath& k,
                                        const std::vector<Cyclotomic>& chi,
                                        const std::vector<std::vector<std::int64_t>>& support,
                                        const Limits& limits = Limits::defaults());

// (1/|K|) sum |chi(g)|^2.
Cyclotomic norm_squared(const std::vector<Cyclotomic>& chi);

struct SampleEstimate {
  double mean = 0;
  double mean_imag = 0;
  double stderr_ = 0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
};

// Monte Carlo estimate of E[chi(w)] with mt19937_64 streams derived from
// seed. The sample set depends only on (seed, samples), not on the thread
// count.
SampleEstimate monte_carlo_expectation(const Word& w, const ExplicitWreath& k,
                                       const std::vector<Cyclotomic>& chi,
                                       std::uint64_t samples, std::uint64_t seed,
                                       const Limits& limits = Limits::defaults());

// Orbits of the diagonal action on X^t, by union-find over generator images.
// Throws BudgetError when |X|^t exceeds limits.enumeration.
long orbit_count(const PermAction& action, int t,
                 const Limits& limits = Limits::defaults());
// Orbits on the injective t-tuples only.
long injective_orbit_count(const PermAction& action, int t,
                           const Limits& limits = Limits::defaults());

}  // namespace wml

#endif  // WML_ORACLE_HPP_
