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
#ifndef WML_WREATH_MEASURES_HPP_
#define WML_WREATH_MEASURES_HPP_

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "wml/character_spec.hpp"
#include "wml/expectation.hpp"
#include "wml/limits.hpp"
#include "wml/multivariate.hpp"
#include "wml/perm_action.hpp"
#include "wml/quotient_poset.hpp"
#include "wml/rational_function.hpp"
#include "wml/subgroup_basis.hpp"
#include "wml/word.hpp"

namespace wml {

// Data derived once per word: the quotient poset of its cyclic reduction,
// a spanning-tree basis of every quotient and the word rewritten in it.
// Relative expectations E_{w->H}[phi] are computed on demand and memoized.
class WordStudy {
 public:
  // Throws ValidationError on the identity word.
  static std::shared_ptr<WordStudy> create(const Word& w,
                                           const Limits& limits = Limits::defaults());

  const Word& word() const { return word_; }
  const QuotientPoset& poset() const { return poset_; }
  const Limits& limits() const { return limits_; }
  const SubgroupBasis& basis(int node) const { return bases_.at(node); }
  // The cyclically reduced word in the basis of node.
  const Word& rewritten(int node) const { return rewritten_.at(node); }

  Cyclotomic relative_expectation(const CharacterSpec& phi, int node);
  // relative_expectation for every node, in node order; parallel over
  // nodes when limits().threads != 1.
  std::vector<Cyclotomic> relative_expectations(const CharacterSpec& phi);

 private:
  WordStudy(const Word& w, QuotientPoset p, const Limits& limits);

  Word word_;
  QuotientPoset poset_;
  Limits limits_;
  std::vector<SubgroupBasis> bases_;
  std::vector<Word> rewritten_;
  MeasureCache cache_;
};

// E_w[Ind_n phi] = sum_H E_{w->H}[phi] L_B(H -> top)(n).
struct IndExpectation {
  // (node, E_{w->H}[phi]) for the non-zero terms.
  std::vector<std::pair<int, Cyclotomic>> terms;
  RationalFunctionN symbolic;
  std::shared_ptr<WordStudy> study;  // null for the identity word
  // For the identity word: Ind_n phi(1) = dim(phi) n.
  Cyclotomic identity_dimension;

  // Exact value at an integer n >= 1, through the fiber count, so also
  // below the poles of the closed form.
  Cyclotomic value_at(long n) const;
};

IndExpectation ind_expectation(const Word& w, const CharacterSpec& phi,
                               const Limits& limits = Limits::defaults());
IndExpectation ind_expectation(const std::shared_ptr<WordStudy>& study,
                               const CharacterSpec& phi);
RationalFunctionN ind_expectation_symbolic(const Word& w, const CharacterSpec& phi,
                                           const Limits& limits = Limits::defaults());
// As above, minus 1 when phi is trivial: the measure of chi_{phi,n}.
RationalFunctionN chi_expectation_symbolic(const Word& w, const CharacterSpec& phi,
                                           const Limits& limits = Limits::defaults());

struct WitnessEntry {
  int node = -1;  // -1 only for the identity word's trivial subgroup
  CoreGraph graph;
  int rank = 0;
  // E_{w->H}[phi]; 1 for the trivial character.
  Cyclotomic value;
  // nullopt when rank exceeds the Whitehead bound.
  std::optional<bool> algebraic;
};

struct WitnessReport {
  Word word;
  std::string phi;
  std::vector<WitnessEntry> entries;
  // nullopt means infinity.
  std::optional<int> pi;
  // Indices into entries.
  std::vector<int> crit;
  Cyclotomic crit_value;
  // Some quotient could not be decided within the Whitehead bound and the
  // minimal rank might be affected.
  bool partial = false;
  // Quotients skipped because their rank exceeds the Whitehead bound.
  int skipped = 0;
};

// Witnesses of phi: quotients H != <w> with E_{w->H}[phi] != 0, or, for the
// trivial character, with w non-primitive in H. Throws std::logic_error if a
// critical entry is not an algebraic extension.
WitnessReport witness_report(const Word& w, const CharacterSpec& phi,
                             const Limits& limits = Limits::defaults());
WitnessReport witness_report(const std::shared_ptr<WordStudy>& study,
                             const CharacterSpec& phi);

struct LaurentLeading {
  int exponent = 0;
  Cyclotomic coefficient;
};
// Throws std::domain_error on the zero function.
LaurentLeading leading_term(const RationalFunctionN& f);

// One summand of the chain form: nodes H_0 <= ... <= H_m = top and
// E_{w->H_0}[phi].
struct Chain {
  std::vector<int> nodes;
  Cyclotomic weight;
};

// E_w[Ind_{n_1, ..., n_m} phi] as a sum over chains of
// E_{w->H_0}[phi] L(H_0 -> H_1)(n_1) ... L(H_{m-1} -> top)(n_m).
struct IteratedExpectation {
  int levels = 1;
  std::vector<Chain> chains;
  SeparableSum sum;
  std::shared_ptr<WordStudy> study;
  Cyclotomic identity_dimension;  // identity word only

  // Exact at integers n_i >= 1.
  Cyclotomic value_at(const std::vector<long>& n) const;
};

// Throws BudgetError when the chain count exceeds limits.enumeration.
IteratedExpectation iterated_expectation(const Word& w, const CharacterSpec& phi,
                                         int levels,
                                         const Limits& limits = Limits::defaults());
IteratedExpectation iterated_expectation(const std::shared_ptr<WordStudy>& study,
                                         const CharacterSpec& phi, int levels);

// Fixed leaves of the spherically symmetric tree T_{n_1, ..., n_m}.
struct TreeExpectation {
  int levels = 1;
  // by_suffix[i] = E_w[Ind_{n_{i+1}, ..., n_m} 1] in all m variables,
  // i = 0..m-1; by_suffix[0] is the tree's permutation character and
  // by_suffix[m-1] the fixed points of S_{n_m}.
  std::vector<SeparableSum> by_suffix;
  // Irreducible pieces: [0] = 1, [1] = std_{n_m}, and [k] for k >= 2 is
  // Ind_{n_{m-k+2}, ..., n_m} std_{n_{m-k+1}}.
  std::vector<SeparableSum> pieces;
  SeparableSum total;
  // total - E_w[#fix(S_{n_m})].
  SeparableSum difference;
};

TreeExpectation tree_fix_expectation(const Word& w, int levels,
                                     const Limits& limits = Limits::defaults());

// Both sides of n_1...n_m = 1 + (n_m - 1) + n_m (n_{m-1} - 1) + ...
std::pair<SeparableSum, SeparableSum> tree_dimension_identity(int levels);

// pi_{std(S_n)}(w) for each n (nullopt for infinity); n must be in 2..5.
std::vector<std::optional<int>> pi_std_profile(const Word& w,
                                               const std::vector<int>& ns,
                                               const Limits& limits = Limits::defaults());

struct PGroupRow {
  std::string phi;
  std::optional<int> pi_phi;
};
struct PGroupReport {
  int p = 0;
  std::optional<int> pi_cp;
  std::vector<PGroupRow> rows;
  // Every row satisfies pi_phi >= pi_cp (infinity largest).
  bool holds = true;
};
// Throws ValidationError when the group is not a p-group.
PGroupReport p_group_bound_check(const Word& w, const CharacterTable& table,
                                 const Limits& limits = Limits::defaults());

struct OrbitBoundReport {
  Cyclotomic value;
  int points = 0;
  Cyclotomic dimension;
  // Per quotient J != <w>: (node, L_J, inj-orb(|V(J)|)).
  struct Row {
    int node;
    Rational l_value;
    long inj_orbits;
  };
  std::vector<Row> rows;
  long orbit_constant = 0;  // sum of inj_orbits
  double scaled = 0;        // |value| sqrt(points) / dimension
  bool holds = false;       // scaled <= orbit_constant
  bool per_quotient_holds = false;  // L_J <= inj_orbits / sqrt(points)
};
// E_w[Ind_X phi] on G wr_X Sigma for a word that is not a proper power.
// Throws ValidationError on proper powers.
OrbitBoundReport orbit_bound_check(const Word& w, const ClassFunction& phi,
                                   const PermAction& action,
                                   const Limits& limits = Limits::defaults());

// E_gamma[Ind_n phi] for gamma in C_m * ... * C_m written with exponents in
// 0..m-1, each letter an independent (Haar on G^n) x (uniform on
// {s in S_n : s^m = 1}). Throws ValidationError on negative exponents,
// gcd(|G|, m) != 1, or the circle of infinite order.
Cyclotomic torsion_product_expectation(const Word& gamma, const CharacterSpec& phi,
                                       int m, int n,
                                       const Limits& limits = Limits::defaults());

}  // namespace wml

#endif  // WML_WREATH_MEASURES_HPP_
