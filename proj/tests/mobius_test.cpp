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
#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "support.hpp"
#include "wml/error.hpp"
#include "wml/mobius.hpp"
#include "wml/multivariate.hpp"
#include "wml/perm_action.hpp"
#include "wml/quotient_poset.hpp"
#include "wml/rational_function.hpp"

namespace wml {
namespace {

using testing::Q;
using testing::W;

RationalFunctionN poly(std::vector<long> c) {
  std::vector<Cyclotomic> v;
  for (long x : c) v.emplace_back(x);
  return RationalFunctionN(Polynomial(v), Polynomial::constant(1));
}

TEST(RationalFunction, NormalizesAndEvaluates) {
  // (2n^2 - 2) / (4n - 4) = (n + 1) / 2.
  const RationalFunctionN f(Polynomial({Q(-2), Q(0), Q(2)}),
                            Polynomial({Q(-4), Q(4)}));
  EXPECT_EQ(f, poly({1, 1}) / RationalFunctionN(Q(2)));
  EXPECT_EQ(f.den().degree(), 0);
  EXPECT_EQ(f.evaluate(Q(3)), Q(2));
  const RationalFunctionN g = RationalFunctionN(Q(1)) / poly({-1, 1});
  EXPECT_EQ(g.den().lead(), Q(1));
  EXPECT_THROW(g.evaluate(Q(1)), std::domain_error);
  EXPECT_THROW(RationalFunctionN(Polynomial({Q(1)}), Polynomial()),
               std::domain_error);
  EXPECT_TRUE(RationalFunctionN().is_zero());
}

TEST(RationalFunction, FieldOperationsMatchPointEvaluation) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> c(-4, 4);
  auto random_fn = [&] {
    RationalFunctionN num = poly({c(rng), c(rng), c(rng)});
    RationalFunctionN den = poly({c(rng), 1});
    return num / den;
  };
  for (int trial = 0; trial < 50; ++trial) {
    const RationalFunctionN a = random_fn(), b = random_fn();
    for (long n : {7L, 11L, 13L}) {
      const Cyclotomic x(n);
      EXPECT_EQ((a + b).evaluate(x), a.evaluate(x) + b.evaluate(x));
      EXPECT_EQ((a * b).evaluate(x), a.evaluate(x) * b.evaluate(x));
      EXPECT_EQ((a - b).evaluate(x), a.evaluate(x) - b.evaluate(x));
      if (!b.is_zero() && !b.evaluate(x).is_zero()) {
        EXPECT_EQ((a / b).evaluate(x), a.evaluate(x) / b.evaluate(x));
      }
    }
  }
}

TEST(RationalFunction, LaurentExpansion) {
  // n / (n - 1) = 1 + n^-1 + n^-2 + ...
  const RationalFunctionN f = poly({0, 1}) / poly({-1, 1});
  EXPECT_EQ(f.laurent(4), (std::vector<Cyclotomic>{Q(1), Q(1), Q(1), Q(1)}));
  // 1 / (n^2 - n) = n^-2 + n^-3 + ...
  const RationalFunctionN g = RationalFunctionN(Q(1)) / poly({0, -1, 1});
  EXPECT_EQ(leading_exponent(g), -2);
  EXPECT_EQ(laurent_coefficient(g, -2), Q(1));
  EXPECT_EQ(laurent_coefficient(g, -1), Q(0));
  EXPECT_EQ(laurent_coefficient(g, -5), Q(1));
}

TEST(RationalFunction, FallingRatio) {
  const RationalFunctionN f = RationalFunctionN::falling_ratio({4}, {2, 2});
  // (n-2)(n-3) / (n(n-1)).
  EXPECT_EQ(f, poly({6, -5, 1}) / poly({0, -1, 1}));
  EXPECT_EQ(RationalFunctionN::falling_ratio({3}, {3}), RationalFunctionN(Q(1)));
}

TEST(LB, CommutatorCycleOntoBouquet) {
  const QuotientPoset p = QuotientPoset::enumerate(W("[a,b]"));
  const GraphMorphism eta = p.morphism_between(p.bottom(), p.top());
  EXPECT_EQ(L_B(eta), RationalFunctionN::falling_ratio({4}, {2, 2}));
  EXPECT_EQ(L_B_value(eta, 4), Rational(1, 6));
  EXPECT_EQ(L_B_value(eta, 3), 0);
  const auto [vf, ef] = fibers(eta);
  EXPECT_EQ(vf, std::vector<int>({4}));
  EXPECT_EQ(ef, std::vector<int>({2, 2}));
}

TEST(LB, CycleOntoSingleLetterAndIdentity) {
  const GraphMorphism cyc = *morphism(graph_of_word(W("aaa")), bouquet(1));
  EXPECT_EQ(L_B(cyc), RationalFunctionN(Q(1)));
  const CoreGraph g = graph_of_word(W("aab"));
  const GraphMorphism id = *morphism(g, g);
  EXPECT_EQ(L_B(id), RationalFunctionN(Q(1)));
  EXPECT_EQ(L_B_value(id, 1), 1);
}

TEST(LB, RejectsNonSurjective) {
  const GraphMorphism eta = *morphism(graph_of_word(W("a", 2)), bouquet(2));
  EXPECT_FALSE(eta.surjective());
  EXPECT_THROW(L_B(eta), ValidationError);
  EXPECT_THROW(L_B_value(eta, 3), ValidationError);
}

// Every comparable pair of the posets used below.
std::vector<Word> sample_words() {
  return {W("aa"), W("aaa"), W("[a,b]"), W("aabb"), W("abab"),
          W("abaB"), W("aaBaab")};
}

TEST(LB, LeadingTermIsEulerCharacteristic) {
  for (const Word& w : sample_words()) {
    const QuotientPoset p = QuotientPoset::enumerate(w);
    for (int i = 0; i < p.size(); ++i) {
      for (int j : p.up_set(i)) {
        const RationalFunctionN f = L_B(p, i, j);
        EXPECT_EQ(leading_exponent(f), p.node(i).graph.euler_characteristic())
            << w.to_string() << " " << i << "->" << j;
        EXPECT_EQ(f.laurent(1).front(), Q(1));
      }
    }
  }
}

TEST(LB, FiberBound) {
  for (const Word& w : sample_words()) {
    const QuotientPoset p = QuotientPoset::enumerate(w);
    for (int i = 0; i < p.size(); ++i) {
      for (int j : p.up_set(i)) {
        const GraphMorphism eta = p.morphism_between(i, j);
        const auto [vf, ef] = fibers(eta);
        for (int e = 0; e < eta.target.num_edges(); ++e) {
          const Edge& ed = eta.target.edges()[e];
          EXPECT_LE(ef[e], std::min(vf[ed.src], vf[ed.dst]));
        }
      }
    }
  }
}

TEST(Mobius, ChainAndSingleton) {
  const QuotientPoset chain = QuotientPoset::enumerate(W("aa"));
  ASSERT_EQ(chain.size(), 2);
  const auto mu = mobius_B(chain);
  EXPECT_EQ(mu.at(chain.bottom(), chain.bottom()), 1);
  EXPECT_EQ(mu.at(chain.bottom(), chain.top()), -1);
  EXPECT_THROW(mu.at(chain.top(), chain.bottom()), ValidationError);

  const QuotientPoset one = QuotientPoset::enumerate(W("a"));
  ASSERT_EQ(one.size(), 1);
  EXPECT_EQ(mobius_B(one).at(0, 0), 1);
}

TEST(Mobius, InvertsZeta) {
  for (const Word& w : sample_words()) {
    const QuotientPoset p = QuotientPoset::enumerate(w);
    const auto mu = mobius_B(p);
    const auto one = PosetFunction<Integer>::constant(p, Integer(1));
    const auto delta = PosetFunction<Integer>::delta(p, Integer(1));
    EXPECT_EQ(convolve(mu, one), delta) << w.to_string();
    EXPECT_EQ(convolve(one, mu), delta) << w.to_string();
  }
}

TEST(Convolve, IdentityAndAssociativity) {
  const QuotientPoset p = QuotientPoset::enumerate(W("[a,b]"));
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> c(-9, 9);
  auto random_fn = [&] {
    return PosetFunction<Integer>::tabulate(p, [&](int, int) { return Integer(c(rng)); });
  };
  const auto delta = PosetFunction<Integer>::delta(p, Integer(1));
  for (int trial = 0; trial < 5; ++trial) {
    const auto f = random_fn(), g = random_fn(), h = random_fn();
    EXPECT_EQ(convolve(f, delta), f);
    EXPECT_EQ(convolve(delta, f), f);
    EXPECT_EQ(convolve(convolve(f, g), h), convolve(f, convolve(g, h)));
  }
  const QuotientPoset other = QuotientPoset::enumerate(W("aa"));
  EXPECT_THROW(convolve(delta, PosetFunction<Integer>::delta(other, Integer(1))),
               ValidationError);
}

// Number of points fixed by s^2, by direct iteration over S_3.
TEST(ExpectationAction, SquareOnS3) {
  const PermAction s3 = PermAction::symmetric(3);
  Rational direct = 0;
  for (const auto& s : s3.elements()) {
    for (int x = 0; x < 3; ++x) direct += s[s[x]] == x ? 1 : 0;
  }
  direct /= static_cast<long>(s3.order());
  EXPECT_EQ(direct, 2);
  EXPECT_EQ(expectation_action(graph_of_word(W("aa")), bouquet(1), s3), direct);
  for (int n = 1; n <= 5; ++n) {
    EXPECT_EQ(expectation_action(bouquet(1), bouquet(1), PermAction::symmetric(n)), 1);
  }
}

// sum_{H <= M <= J} L_B(M -> J)(n) equals the average number of common fixed
// points, for every comparable pair.
TEST(ExpectationAction, InversionIdentity) {
  Limits limits;
  limits.enumeration = 2'000'000;
  for (const Word& w : sample_words()) {
    const QuotientPoset p = QuotientPoset::enumerate(w);
    for (int n = 1; n <= 6; ++n) {
      const PermAction sn = PermAction::symmetric(n);
      for (int i = 0; i < p.size(); ++i) {
        for (int j : p.up_set(i)) {
          const CoreGraph& jg = p.node(j).graph;
          double work = 1;
          for (int r = 0; r < jg.rank(); ++r) work *= static_cast<double>(sn.order());
          if (work > 60'000) continue;
          Rational sum = 0;
          for (int k : p.interval(i, j)) sum += L_B_value(p, k, j, n);
          EXPECT_EQ(sum, expectation_action(p.node(i).graph, jg, sn, limits))
              << w.to_string() << " n=" << n << " " << i << "->" << j;
        }
      }
    }
  }
}

// L_B is the left derivation mu * E at each fixed n.
TEST(ExpectationAction, LeftDerivationByConvolution) {
  const QuotientPoset p = QuotientPoset::enumerate(W("abaB"));
  for (int n = 2; n <= 5; ++n) {
    const PermAction sn = PermAction::symmetric(n);
    const auto e = PosetFunction<Rational>::tabulate(p, [&](int i, int j) {
      return expectation_action(p.node(i).graph, p.node(j).graph, sn);
    });
    const auto mu = mobius_B(p).transform<Rational>([](const Integer& x) { return Rational(x); });
    const auto lb = PosetFunction<Rational>::tabulate(
        p, [&](int i, int j) { return L_B_value(p, i, j, n); });
    EXPECT_EQ(convolve(mu, e), lb) << "n=" << n;
  }
}

TEST(LGeneral, UniformSymmetricMatchesClosedForm) {
  const QuotientPoset p = QuotientPoset::enumerate(W("[a,b]"));
  const GraphMorphism eta = p.morphism_between(p.bottom(), p.top());
  const CoreGraph& cycle = eta.source;
  for (int n = 1; n <= 5; ++n) {
    const PermAction sn = PermAction::symmetric(n);
    EXPECT_EQ(L_general(cycle, sn, {LetterDistribution::uniform(sn)}), L_B_value(eta, n));
  }
  const PermAction s4 = PermAction::symmetric(4);
  EXPECT_EQ(L_general(cycle, s4, {LetterDistribution::uniform(s4)}), Rational(1, 6));
  const PermAction s3 = PermAction::symmetric(3);
  EXPECT_EQ(L_general(cycle, s3, {LetterDistribution::uniform(s3)}), 0);

  for (const Word& w : sample_words()) {
    const QuotientPoset q = QuotientPoset::enumerate(w);
    for (int i = 0; i < q.size(); ++i) {
      const GraphMorphism m = q.morphism_between(i, q.top());
      for (int n = 1; n <= 4; ++n) {
        const PermAction sn = PermAction::symmetric(n);
        EXPECT_EQ(L_general(m.source, sn, {LetterDistribution::uniform(sn)}),
                  L_B_value(m, n));
      }
    }
  }
}

// Involution-or-identity distribution on S_3 against a direct count: the
// cycle of a^2 has two vertices, and an ordered pair (x, y) of distinct
// points needs s(x) = y and s(y) = x.
TEST(LGeneral, TorsionDistribution) {
  const PermAction s3 = PermAction::symmetric(3);
  const LetterDistribution inv = LetterDistribution::torsion(s3, 2);
  EXPECT_EQ(inv.support().size(), 4u);
  Rational direct = 0;
  for (int x = 0; x < 3; ++x) {
    for (int y = 0; y < 3; ++y) {
      if (x == y) continue;
      for (const auto& [e, wgt] : inv.support()) {
        const auto& s = s3.elements()[e];
        if (s[x] == y && s[y] == x) direct += wgt;
      }
    }
  }
  EXPECT_EQ(direct, Rational(3, 2));
  EXPECT_EQ(L_general(graph_of_word(W("aa")), s3, {inv}), direct);
}

TEST(LGeneral, DistributionValidation) {
  const PermAction s3 = PermAction::symmetric(3);
  EXPECT_EQ(LetterDistribution::derangements(s3).support().size(), 2u);
  EXPECT_THROW(LetterDistribution::derangements(PermAction::symmetric(1)), ValidationError);
  std::vector<Rational> bad(s3.order(), Rational(1, 5));
  EXPECT_THROW(LetterDistribution::custom(s3, bad), ValidationError);
  Limits tiny;
  tiny.enumeration = 10;
  const PermAction s6 = PermAction::symmetric(6);
  EXPECT_THROW(L_general(graph_of_word(W("[a,b]")), s6, {LetterDistribution::uniform(s6)}, tiny),
               BudgetError);
}

}  // namespace
}  // namespace wml
