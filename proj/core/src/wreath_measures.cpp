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
#include "wml/wreath_measures.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "parallel.hpp"
#include "wml/builtin_groups.hpp"
#include "wml/error.hpp"
#include "wml/mobius.hpp"
#include "wml/oracle.hpp"
#include "wml/whitehead.hpp"

namespace wml {
namespace {

Word reduced(const Word& w) { return reduce(w.letters(), w.rank()); }

Cyclotomic dimension_of(const CharacterSpec& phi) { return phi.dimension(); }

RationalFunctionN n_times(const Cyclotomic& c) {
  return RationalFunctionN(Polynomial::monomial(c, 1), Polynomial::constant(1));
}

bool pi_at_least(const std::optional<int>& a, const std::optional<int>& b) {
  if (!a) return true;
  if (!b) return false;
  return *a >= *b;
}

}  // namespace

std::shared_ptr<WordStudy> WordStudy::create(const Word& w, const Limits& limits) {
  if (reduced(w).empty()) {
    throw ValidationError("the identity word has no quotient poset");
  }
  return std::shared_ptr<WordStudy>(
      new WordStudy(w, QuotientPoset::enumerate(w, limits), limits));
}

WordStudy::WordStudy(const Word& w, QuotientPoset p, const Limits& limits)
    : word_(w), poset_(std::move(p)), limits_(limits) {
  for (const QuotientNode& node : poset_.nodes()) {
    bases_.push_back(spanning_tree_basis(node.graph));
    rewritten_.push_back(rewrite_in_subgroup(poset_.word(), bases_.back()));
  }
}

Cyclotomic WordStudy::relative_expectation(const CharacterSpec& phi, int node) {
  const Word& v = rewritten_.at(node);
  switch (phi.kind()) {
    case CharacterSpec::Kind::kTrivial:
      return 1;
    case CharacterSpec::Kind::kCircle: {
      const auto m = phi.modulus();
      for (long e : v.exponent_sums()) {
        if (m ? e % *m != 0 : e != 0) return 0;
      }
      return 1;
    }
    case CharacterSpec::Kind::kFinite:
      break;
  }
  const ClassFunction& f = phi.function();
  return cache_.get(*f.group(), v, limits_).expect(f);
}

std::vector<Cyclotomic> WordStudy::relative_expectations(const CharacterSpec& phi) {
  std::vector<Cyclotomic> out(poset_.size());
  internal::parallel_blocks(out.size(), limits_.threads,
                            [&](int, std::size_t b, std::size_t e) {
                              for (std::size_t i = b; i < e; ++i) {
                                out[i] = relative_expectation(phi, static_cast<int>(i));
                              }
                            });
  return out;
}

Cyclotomic IndExpectation::value_at(long n) const {
  if (n < 1) throw ValidationError("n must be positive");
  if (!study) return identity_dimension * Cyclotomic(n);
  const QuotientPoset& p = study->poset();
  Cyclotomic s;
  for (const auto& [node, e] : terms) {
    s += e * Cyclotomic(L_B_value(p, node, p.top(), n));
  }
  return s;
}

IndExpectation ind_expectation(const std::shared_ptr<WordStudy>& study,
                               const CharacterSpec& phi) {
  IndExpectation out;
  out.study = study;
  const QuotientPoset& p = study->poset();
  const std::vector<Cyclotomic> e = study->relative_expectations(phi);
  for (int i = 0; i < p.size(); ++i) {
    if (e[i].is_zero()) continue;
    out.terms.emplace_back(i, e[i]);
    out.symbolic += RationalFunctionN(e[i]) * L_B(p, i, p.top());
  }
  return out;
}

IndExpectation ind_expectation(const Word& w, const CharacterSpec& phi,
                               const Limits& limits) {
  if (reduced(w).empty()) {
    IndExpectation out;
    out.identity_dimension = dimension_of(phi);
    out.symbolic = n_times(out.identity_dimension);
    return out;
  }
  return ind_expectation(WordStudy::create(w, limits), phi);
}

RationalFunctionN ind_expectation_symbolic(const Word& w, const CharacterSpec& phi,
                                           const Limits& limits) {
  return ind_expectation(w, phi, limits).symbolic;
}

RationalFunctionN chi_expectation_symbolic(const Word& w, const CharacterSpec& phi,
                                           const Limits& limits) {
  RationalFunctionN f = ind_expectation_symbolic(w, phi, limits);
  if (phi.is_trivial_character()) f -= RationalFunctionN(Cyclotomic(1));
  return f;
}

WitnessReport witness_report(const std::shared_ptr<WordStudy>& study,
                             const CharacterSpec& phi) {
  WitnessReport r;
  r.word = study->word();
  r.phi = phi.name();
  const QuotientPoset& p = study->poset();
  const Limits& limits = study->limits();
  const bool trivial = phi.is_trivial_character();

  std::vector<int> order(p.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return p.node(a).rank < p.node(b).rank; });

  std::vector<Cyclotomic> values;
  if (!trivial) values = study->relative_expectations(phi);
  int min_skipped_rank = INT_MAX;
  for (int i : order) {
    if (i == p.bottom()) continue;
    const QuotientNode& node = p.node(i);
    Cyclotomic value = 1;
    if (trivial) {
      if (node.rank > limits.whitehead_rank) {
        ++r.skipped;
        min_skipped_rank = std::min(min_skipped_rank, node.rank);
        continue;
      }
      if (is_primitive(study->rewritten(i), limits)) continue;
    } else {
      value = values[i];
      if (value.is_zero()) continue;
    }
    WitnessEntry e;
    e.node = i;
    e.graph = node.graph;
    e.rank = node.rank;
    e.value = value;
    if (node.rank <= limits.whitehead_rank) {
      e.algebraic = is_algebraic_cyclic_base(p.word(), node.graph, limits);
    }
    r.entries.push_back(std::move(e));
  }
  for (const WitnessEntry& e : r.entries) {
    if (!r.pi || e.rank < *r.pi) r.pi = e.rank;
  }
  r.partial = r.skipped > 0 && (!r.pi || min_skipped_rank <= *r.pi);
  for (int k = 0; k < static_cast<int>(r.entries.size()); ++k) {
    const WitnessEntry& e = r.entries[k];
    if (e.rank != *r.pi) continue;
    r.crit.push_back(k);
    r.crit_value += e.value;
    if (e.algebraic.has_value() && !*e.algebraic) {
      throw std::logic_error("critical witness " + e.graph.key() +
                             " is not an algebraic extension");
    }
  }
  return r;
}

WitnessReport witness_report(const Word& w, const CharacterSpec& phi,
                             const Limits& limits) {
  if (reduced(w).empty()) {
    WitnessReport r;
    r.word = w;
    r.phi = phi.name();
    WitnessEntry e;
    e.graph = CoreGraph(w.rank());
    e.value = phi.is_trivial_character() ? Cyclotomic(1) : dimension_of(phi);
    e.algebraic = true;
    r.entries.push_back(e);
    r.pi = 0;
    r.crit = {0};
    r.crit_value = e.value;
    return r;
  }
  return witness_report(WordStudy::create(w, limits), phi);
}

LaurentLeading leading_term(const RationalFunctionN& f) {
  if (f.is_zero()) throw std::domain_error("leading_term: zero function");
  return {f.num().degree() - f.den().degree(), f.num().lead()};
}

Cyclotomic IteratedExpectation::value_at(const std::vector<long>& n) const {
  if (static_cast<int>(n.size()) != levels) {
    throw ValidationError("expected " + std::to_string(levels) + " values of n");
  }
  for (long x : n) {
    if (x < 1) throw ValidationError("n must be positive");
  }
  if (!study) {
    Cyclotomic s = identity_dimension;
    for (long x : n) s *= Cyclotomic(x);
    return s;
  }
  const QuotientPoset& p = study->poset();
  Cyclotomic s;
  for (const Chain& c : chains) {
    Rational prod = 1;
    for (int k = 1; k <= levels && prod != 0; ++k) {
      prod *= L_B_value(p, c.nodes[k - 1], c.nodes[k], n[k - 1]);
    }
    s += c.weight * Cyclotomic(prod);
  }
  return s;
}

IteratedExpectation iterated_expectation(const std::shared_ptr<WordStudy>& study,
                                         const CharacterSpec& phi, int levels) {
  if (levels < 1) throw ValidationError("iterated expectation needs m >= 1");
  IteratedExpectation out;
  out.levels = levels;
  out.study = study;
  out.sum = SeparableSum(levels);
  const QuotientPoset& p = study->poset();
  const std::uint64_t budget = study->limits().enumeration;
  const std::vector<Cyclotomic> e = study->relative_expectations(phi);
  std::map<std::pair<int, int>, RationalFunctionN> memo;
  auto link = [&](int a, int b) -> const RationalFunctionN& {
    auto it = memo.find({a, b});
    if (it == memo.end()) it = memo.emplace(std::make_pair(a, b), L_B(p, a, b)).first;
    return it->second;
  };
  std::vector<int> chain;
  // Extends chain (ending below top) by the remaining links; the last link
  // always lands on top.
  auto extend = [&](auto&& self, const Cyclotomic& weight) -> void {
    const int depth = static_cast<int>(chain.size()) - 1;
    if (depth == levels - 1) {
      chain.push_back(p.top());
      out.chains.push_back({chain, weight});
      if (out.chains.size() > budget) {
        throw BudgetError("iterated expectation: more than " +
                          std::to_string(budget) + " chains");
      }
      std::vector<RationalFunctionN> factors;
      for (int k = 1; k <= levels; ++k) factors.push_back(link(chain[k - 1], chain[k]));
      out.sum.add_term(weight, std::move(factors));
      chain.pop_back();
      return;
    }
    for (int k : p.up_set(chain.back())) {
      chain.push_back(k);
      self(self, weight);
      chain.pop_back();
    }
  };
  for (int i = 0; i < p.size(); ++i) {
    if (e[i].is_zero()) continue;
    chain = {i};
    extend(extend, e[i]);
  }
  return out;
}

IteratedExpectation iterated_expectation(const Word& w, const CharacterSpec& phi,
                                         int levels, const Limits& limits) {
  if (levels < 1) throw ValidationError("iterated expectation needs m >= 1");
  if (reduced(w).empty()) {
    IteratedExpectation out;
    out.levels = levels;
    out.identity_dimension = dimension_of(phi);
    out.sum = SeparableSum(levels);
    out.sum.add_term(out.identity_dimension,
                     std::vector<RationalFunctionN>(levels, n_times(1)));
    return out;
  }
  return iterated_expectation(WordStudy::create(w, limits), phi, levels);
}

namespace {

// The m-variable function f(n_{offset+1}, ..., n_m) from an iterated
// expectation with m - offset levels.
SeparableSum shifted(const SeparableSum& f, int offset, int vars) {
  SeparableSum out(vars);
  for (const auto& t : f.terms()) {
    std::vector<RationalFunctionN> factors(offset, RationalFunctionN(Cyclotomic(1)));
    factors.insert(factors.end(), t.factors.begin(), t.factors.end());
    out.add_term(t.coeff, std::move(factors));
  }
  return out;
}

}  // namespace

TreeExpectation tree_fix_expectation(const Word& w, int levels,
                                     const Limits& limits) {
  if (levels < 1) throw ValidationError("tree needs m >= 1");
  TreeExpectation out;
  out.levels = levels;
  std::shared_ptr<WordStudy> study;
  if (!reduced(w).empty()) study = WordStudy::create(w, limits);
  const CharacterSpec one = CharacterSpec::trivial();
  for (int i = 0; i < levels; ++i) {
    const IteratedExpectation it =
        study ? iterated_expectation(study, one, levels - i)
              : iterated_expectation(w, one, levels - i, limits);
    out.by_suffix.push_back(shifted(it.sum, i, levels));
  }
  const SeparableSum unit = SeparableSum::constant(levels, 1);
  out.pieces.push_back(unit);
  out.pieces.push_back(out.by_suffix[levels - 1] - unit);
  for (int k = 2; k <= levels; ++k) {
    out.pieces.push_back(out.by_suffix[levels - k] - out.by_suffix[levels - k + 1]);
  }
  out.total = out.by_suffix[0];
  out.difference = out.total - out.by_suffix[levels - 1];
  return out;
}

std::pair<SeparableSum, SeparableSum> tree_dimension_identity(int levels) {
  if (levels < 1) throw ValidationError("tree needs m >= 1");
  const RationalFunctionN n = n_times(1);
  const RationalFunctionN n_minus_1 = n - RationalFunctionN(Cyclotomic(1));
  const RationalFunctionN one(Cyclotomic(1));
  SeparableSum lhs(levels);
  lhs.add_term(1, std::vector<RationalFunctionN>(levels, n));
  SeparableSum rhs = SeparableSum::constant(levels, 1);
  // Piece k: (n_{m-k+1} - 1) n_{m-k+2} ... n_m.
  for (int k = 1; k <= levels; ++k) {
    std::vector<RationalFunctionN> factors(levels, one);
    const int var = levels - k;
    factors[var] = n_minus_1;
    for (int j = var + 1; j < levels; ++j) factors[j] = n;
    rhs.add_term(1, std::move(factors));
  }
  return {lhs, rhs};
}

std::vector<std::optional<int>> pi_std_profile(const Word& w,
                                               const std::vector<int>& ns,
                                               const Limits& limits) {
  for (int n : ns) {
    if (n < 2 || n > 5) {
      throw ValidationError("std profile supports 2 <= n <= 5, got " + std::to_string(n));
    }
  }
  std::vector<std::optional<int>> out;
  if (reduced(w).empty()) {
    out.assign(ns.size(), 0);
    return out;
  }
  auto study = WordStudy::create(w, limits);
  for (int n : ns) {
    const CharacterTable t = symmetric_group(n);
    out.push_back(witness_report(study, CharacterSpec::finite(t.get("std"))).pi);
  }
  return out;
}

PGroupReport p_group_bound_check(const Word& w, const CharacterTable& table,
                                 const Limits& limits) {
  const auto p = table.group()->prime_power_base();
  if (!p) {
    throw ValidationError("group of order " + std::to_string(table.group()->order()) +
                          " is not a p-group");
  }
  PGroupReport r;
  r.p = *p;
  std::shared_ptr<WordStudy> study;
  if (!reduced(w).empty()) study = WordStudy::create(w, limits);
  auto pi_of = [&](const CharacterSpec& phi) {
    return study ? witness_report(study, phi).pi : witness_report(w, phi, limits).pi;
  };
  r.pi_cp = pi_of(CharacterSpec::circle(r.p));
  for (const ClassFunction& chi : table.irreducibles()) {
    if (chi.is_trivial()) continue;
    PGroupRow row{chi.name(), pi_of(CharacterSpec::finite(chi))};
    r.holds = r.holds && pi_at_least(row.pi_phi, r.pi_cp);
    r.rows.push_back(std::move(row));
  }
  return r;
}

OrbitBoundReport orbit_bound_check(const Word& w, const ClassFunction& phi,
                                   const PermAction& action,
                                   const Limits& limits) {
  const Word rw = reduced(w);
  if (rw.empty()) throw ValidationError("the identity word is excluded");
  if (primitive_root(rw).second > 1) {
    throw ValidationError("word " + rw.to_string() + " is a proper power");
  }
  auto study = WordStudy::create(rw, limits);
  const QuotientPoset& p = study->poset();
  const std::vector<Cyclotomic> e = study->relative_expectations(CharacterSpec::finite(phi));
  const std::vector<LetterDistribution> uniform{LetterDistribution::uniform(action)};
  OrbitBoundReport r;
  r.points = action.degree();
  r.dimension = phi.degree();
  r.per_quotient_holds = true;
  for (int i = 0; i < p.size(); ++i) {
    const Rational l = L_general(p.node(i).graph, action, uniform, limits);
    r.value += e[i] * Cyclotomic(l);
    if (i == p.bottom()) continue;
    const long inj = injective_orbit_count(action, p.node(i).graph.num_vertices(), limits);
    r.rows.push_back({i, l, inj});
    r.orbit_constant += inj;
    // L_J <= inj / sqrt|X|, squared to stay exact.
    if (l * l * r.points > Rational(inj) * inj) r.per_quotient_holds = false;
  }
  const double dim = std::abs(r.dimension.to_complex());
  r.scaled = std::abs(r.value.to_complex()) * std::sqrt(static_cast<double>(r.points)) / dim;
  const Cyclotomic norm2 = r.value * r.value.conj();
  if (norm2.is_rational() && r.dimension.is_rational()) {
    const Rational d = r.dimension.to_rational();
    const Rational bound = Rational(r.orbit_constant) * d;
    r.holds = norm2.to_rational() * r.points <= bound * bound;
  } else {
    r.holds = r.scaled <= static_cast<double>(r.orbit_constant) * (1 + 1e-12);
  }
  return r;
}

Cyclotomic torsion_product_expectation(const Word& gamma, const CharacterSpec& phi,
                                       int m, int n, const Limits& limits) {
  if (m < 2) throw ValidationError("torsion-letter measure needs m >= 2");
  if (n < 1) throw ValidationError("n must be positive");
  const Word g = reduced(gamma);
  std::size_t run = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i].sign < 0) {
      throw ValidationError("torsion-letter representatives use exponents 0..m-1; "
                            "found an inverse letter at position " + std::to_string(i));
    }
    run = (i > 0 && g[i] == g[i - 1]) ? run + 1 : 1;
    if (run >= static_cast<std::size_t>(m)) {
      throw ValidationError("exponent of a letter reaches m at position " +
                            std::to_string(i));
    }
  }
  switch (phi.kind()) {
    case CharacterSpec::Kind::kCircle:
      if (!phi.modulus()) throw ValidationError("the circle has infinite order");
      if (std::gcd(*phi.modulus(), m) != 1) {
        throw ValidationError("gcd(|G|, m) must be 1");
      }
      break;
    case CharacterSpec::Kind::kFinite:
      if (std::gcd(phi.function().group()->order(), m) != 1) {
        throw ValidationError("gcd(|G|, m) must be 1");
      }
      break;
    case CharacterSpec::Kind::kTrivial:
      break;
  }
  const PermAction sn = PermAction::symmetric(n, limits);
  if (g.empty()) return phi.dimension() * Cyclotomic(n);
  auto study = WordStudy::create(g, limits);
  const QuotientPoset& p = study->poset();
  const std::vector<LetterDistribution> d{LetterDistribution::torsion(sn, m)};
  const std::vector<Cyclotomic> e = study->relative_expectations(phi);
  Cyclotomic s;
  for (int i = 0; i < p.size(); ++i) {
    if (e[i].is_zero()) continue;
    s += e[i] * Cyclotomic(L_general(p.node(i).graph, sn, d, limits));
  }
  return s;
}

}  // namespace wml
