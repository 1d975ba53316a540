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

#include <cmath>
#include <numeric>
#include <random>

#include "support.hpp"
#include "wml/builtin_groups.hpp"
#include "wml/character_spec.hpp"
#include "wml/error.hpp"
#include "wml/expectation.hpp"
#include "wml/oracle.hpp"

namespace wml {
namespace {

using testing::Q;
using testing::W;

TEST(ExplicitWreath, Orders) {
  EXPECT_EQ(ExplicitWreath::over_symmetric(cyclic_group(2).group(), 3).order(), 48);
  EXPECT_EQ(ExplicitWreath::over_symmetric(symmetric_group(3).group(), 2).order(), 72);
  const IteratedWreath tree = build_iterated_wreath(trivial_group().get("trivial"), {2, 2});
  EXPECT_EQ(tree.group->order(), 8);
  // The tree group acting on 4 leaves is dihedral: non-abelian of order 8
  // with 5 classes.
  EXPECT_FALSE(tree.group->is_abelian());
  EXPECT_EQ(tree.group->num_classes(), 5);
  Limits tiny;
  tiny.group_order = 40;
  EXPECT_THROW(ExplicitWreath::over_symmetric(cyclic_group(2).group(), 3, tiny), BudgetError);
}

TEST(ExplicitWreath, GroupAxioms) {
  for (const auto& [g, n] : {std::pair<const char*, int>{"C2", 3}, {"S3", 2}, {"C3", 3}}) {
    const ExplicitWreath k = ExplicitWreath::over_symmetric(builtin_group(g).group(), n);
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<std::int64_t> pick(0, k.order() - 1);
    for (int trial = 0; trial < 1000; ++trial) {
      const std::int64_t a = pick(rng), b = pick(rng), c = pick(rng);
      EXPECT_EQ(k.mul(k.mul(a, b), c), k.mul(a, k.mul(b, c)));
      EXPECT_EQ(k.mul(a, k.inverse(a)), k.identity());
      EXPECT_EQ(k.mul(k.identity(), a), a);
      EXPECT_EQ(k.index(k.element(a)), a);
    }
  }
}

// (v1, s1)(v2, s2) = (v1 (s1.v2), s1 s2) with (s.v)_x = v_{s(x)}.
TEST(ExplicitWreath, ProductRule) {
  const ExplicitWreath k = ExplicitWreath::over_symmetric(cyclic_group(3).group(), 3);
  const FiniteGroup& g = *k.base();
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<std::int64_t> pick(0, k.order() - 1);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = k.element(pick(rng)), b = k.element(pick(rng));
    const auto& s1 = k.action().elements()[a.perm];
    const auto& s2 = k.action().elements()[b.perm];
    const auto p = k.multiply(a, b);
    for (int x = 0; x < 3; ++x) EXPECT_EQ(p.v[x], g.mul(a.v[x], b.v[s1[x]]));
    std::vector<int> s12(3);
    for (int x = 0; x < 3; ++x) s12[x] = s2[s1[x]];
    EXPECT_EQ(k.action().elements()[p.perm], s12);
  }
}

TEST(ExplicitWreath, InducedCharacterTwoWays) {
  for (const char* g : {"C2", "C3", "S3"}) {
    const CharacterTable t = builtin_group(g);
    const ExplicitWreath k = ExplicitWreath::over_symmetric(t.group(), 2);
    for (const auto& chi : t.irreducibles()) {
      for (std::int64_t i = 0; i < k.order(); ++i) {
        const auto e = k.element(i);
        EXPECT_EQ(k.ind(chi, e), k.ind_by_induction(chi, e)) << g << " " << chi.name();
      }
    }
  }
}

TEST(ExplicitWreath, TableGroupKeepsNumbering) {
  const ExplicitWreath k = ExplicitWreath::over_symmetric(cyclic_group(2).group(), 3);
  const auto t = k.to_group();
  EXPECT_EQ(t->order(), 48);
  for (std::int64_t a = 0; a < 48; ++a) {
    for (std::int64_t b = 0; b < 48; ++b) {
      EXPECT_EQ(t->mul(static_cast<int>(a), static_cast<int>(b)), k.mul(a, b));
    }
  }
}

TEST(Irreducibility, InducedSignHasNormOne) {
  const CharacterTable c2 = cyclic_group(2);
  for (int n = 2; n <= 3; ++n) {
    const ExplicitWreath k = ExplicitWreath::over_symmetric(c2.group(), n);
    EXPECT_EQ(norm_squared(k.ind_values(c2.get("sign"))), Q(1));
    // Ind_n 1 is the permutation character: two orbits on pairs.
    EXPECT_EQ(norm_squared(k.ind_values(c2.get("trivial"))), Q(2));
  }
}

TEST(Brute, Examples) {
  const CharacterTable c2 = cyclic_group(2);
  const ExplicitWreath k2 = ExplicitWreath::over_symmetric(c2.group(), 2);
  EXPECT_EQ(brute_expectation(W("[a,b]"), k2, k2.ind_values(c2.get("sign"))), Q(1, 2));

  const ExplicitWreath fix3 =
      ExplicitWreath::over_symmetric(trivial_group().group(), 3);
  EXPECT_EQ(brute_expectation(W("aa"), fix3, fix3.ind_values(trivial_group().get("trivial"))),
            Q(2));

  for (const auto& chi : symmetric_group(4).irreducibles()) {
    if (CharacterSpec::finite(chi).is_trivial_character()) {
      EXPECT_EQ(brute_expectation(W("a"), chi), Q(1));
      continue;
    }
    EXPECT_EQ(brute_expectation(W("a"), chi), Q(0));
    EXPECT_EQ(brute_expectation(W("[a,b]"), chi), chi.degree().inverse());
  }
}

// Exhaustive enumeration against the class-distribution route of the
// expectation module.
TEST(Brute, MatchesClassDistribution) {
  for (const char* g : {"S3", "Q8", "D4", "C4"}) {
    for (const auto& chi : builtin_group(g).irreducibles()) {
      for (const Word& w : {W("aa"), W("aab"), W("abaB"), W("aaa"), W("aabb")}) {
        EXPECT_EQ(brute_expectation(w, chi), expectation_word(chi, w))
            << g << " " << chi.name() << " " << w.to_string();
      }
    }
  }
}

TEST(Brute, RestrictedWithFullSupportIsPlain) {
  const CharacterTable c2 = cyclic_group(2);
  const ExplicitWreath k = ExplicitWreath::over_symmetric(c2.group(), 2);
  std::vector<std::int64_t> all(k.order());
  std::iota(all.begin(), all.end(), 0);
  const auto chi = k.ind_values(c2.get("sign"));
  EXPECT_EQ(brute_expectation_restricted(W("abaB"), k, chi, {all, all}),
            brute_expectation(W("abaB"), k, chi));
}

TEST(Brute, Budget) {
  const CharacterTable s3 = symmetric_group(3);
  Limits tiny;
  tiny.enumeration = 10;
  EXPECT_THROW(brute_expectation(W("abc"), s3.get("std"), tiny), BudgetError);
}

class MonteCarlo : public ::testing::Test {
 protected:
  const CharacterTable c2 = cyclic_group(2);
  const ExplicitWreath k = ExplicitWreath::over_symmetric(c2.group(), 3);
  const std::vector<Cyclotomic> chi = k.ind_values(c2.get("sign"));
};

TEST_F(MonteCarlo, CalibratedAgainstBrute) {
  const double exact = brute_expectation(W("[a,b]"), k, chi).to_complex().real();
  EXPECT_DOUBLE_EQ(exact, 1.0 / 3);
  const SampleEstimate s = monte_carlo_expectation(W("[a,b]"), k, chi, 100000, 7);
  EXPECT_EQ(s.samples, 100000u);
  EXPECT_EQ(s.seed, 7u);
  EXPECT_GT(s.stderr_, 0);
  EXPECT_LE(std::abs(s.mean - exact), 4 * s.stderr_);
}

TEST_F(MonteCarlo, ZeroVariance) {
  const std::vector<Cyclotomic> one(k.order(), Q(1));
  const SampleEstimate s = monte_carlo_expectation(W("a"), k, one, 1000, 1);
  EXPECT_EQ(s.mean, 1.0);
  EXPECT_EQ(s.stderr_, 0.0);
}

TEST_F(MonteCarlo, SeedDeterminesOutput) {
  const SampleEstimate a = monte_carlo_expectation(W("aab"), k, chi, 5000, 99);
  const SampleEstimate b = monte_carlo_expectation(W("aab"), k, chi, 5000, 99);
  Limits threads;
  threads.threads = 3;
  const SampleEstimate c = monte_carlo_expectation(W("aab"), k, chi, 5000, 99, threads);
  const SampleEstimate d = monte_carlo_expectation(W("aab"), k, chi, 5000, 100);
  EXPECT_EQ(a.mean, b.mean);
  EXPECT_EQ(a.stderr_, b.stderr_);
  EXPECT_EQ(a.mean, c.mean);
  EXPECT_EQ(a.stderr_, c.stderr_);
  EXPECT_NE(a.mean, d.mean);
}

// Least-squares slope of log(stderr) against log(samples).
TEST_F(MonteCarlo, StandardErrorScaling) {
  std::vector<double> xs, ys;
  for (std::uint64_t n : {100u, 1000u, 10000u, 100000u}) {
    const SampleEstimate s = monte_carlo_expectation(W("[a,b]"), k, chi, n, 3);
    xs.push_back(std::log(static_cast<double>(n)));
    ys.push_back(std::log(s.stderr_));
  }
  const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / xs.size();
  const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / ys.size();
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  EXPECT_NEAR(sxy / sxx, -0.5, 0.1);
}

// Burnside: orbits on X^t = average of fix(g)^t; on injective tuples the
// average of the falling factorial (fix(g))_t.
std::pair<long, long> burnside(const PermAction& a, int t) {
  long all = 0, inj = 0;
  for (const auto& s : a.elements()) {
    long f = 0;
    for (int x = 0; x < a.degree(); ++x) f += s[x] == x ? 1 : 0;
    long p = 1, q = 1;
    for (int i = 0; i < t; ++i) {
      p *= f;
      q *= f - i;
    }
    all += p;
    inj += q;
  }
  const long order = static_cast<long>(a.order());
  return {all / order, inj / order};
}

TEST(Orbits, Examples) {
  EXPECT_EQ(orbit_count(PermAction::symmetric(3), 2), 2);
  EXPECT_EQ(orbit_count(PermAction::symmetric_on_subsets(4, 2), 2), 3);
  EXPECT_EQ(orbit_count(PermAction::general_linear_f2(2, false), 1), 1);
  EXPECT_EQ(orbit_count(PermAction::general_linear_f2(2, true), 1), 2);
}

TEST(Orbits, BurnsideAgrees) {
  const std::vector<PermAction> actions = {
      PermAction::symmetric(4), PermAction::symmetric_on_subsets(4, 2),
      PermAction::symmetric_on_subsets(5, 2), PermAction::general_linear_f2(3, true)};
  for (const PermAction& a : actions) {
    for (int t = 1; t <= 3; ++t) {
      const auto [all, inj] = burnside(a, t);
      EXPECT_EQ(orbit_count(a, t), all) << a.name() << " t=" << t;
      EXPECT_EQ(injective_orbit_count(a, t), inj) << a.name() << " t=" << t;
    }
  }
}

TEST(Orbits, SubsetBound) {
  for (int n = 4; n <= 6; ++n) {
    const PermAction a = PermAction::symmetric_on_subsets(n, 2);
    long bound = 3;  // (k + 1)^(2^t - 1) with k = 2
    for (int t = 1; t <= 3; ++t) {
      EXPECT_LE(orbit_count(a, t), bound) << n << " " << t;
      bound = bound * bound * 3;
    }
  }
  Limits tiny;
  tiny.enumeration = 100;
  EXPECT_THROW(orbit_count(PermAction::symmetric(5), 3, tiny), BudgetError);
}

}  // namespace
}  // namespace wml
