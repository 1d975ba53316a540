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
#include "wml/expectation.hpp"

#include <algorithm>
#include <string>

#include "wml/error.hpp"

namespace wml {
namespace {

ClassDistribution haar(const FiniteGroup& g) {
  ClassDistribution d;
  for (int c = 0; c < g.num_classes(); ++c) {
    d.prob.emplace_back(g.class_size(c), g.order());
    d.prob.back().canonicalize();
  }
  return d;
}

ClassDistribution point_mass(const FiniteGroup& g, int element) {
  ClassDistribution d;
  d.prob.assign(g.num_classes(), Rational(0));
  d.prob[g.class_of(element)] = 1;
  return d;
}

ClassDistribution from_counts(const FiniteGroup& g,
                              const std::vector<Integer>& per_element,
                              const Integer& total) {
  ClassDistribution d;
  d.prob.assign(g.num_classes(), Rational(0));
  for (int x = 0; x < g.order(); ++x) {
    d.prob[g.class_of(x)] += Rational(per_element[x], total);
  }
  for (auto& p : d.prob) p.canonicalize();
  return d;
}

}  // namespace

Cyclotomic ClassDistribution::expect(const ClassFunction& phi) const {
  Cyclotomic s;
  for (std::size_t c = 0; c < prob.size(); ++c) {
    if (prob[c] != 0) s += Cyclotomic(prob[c]) * phi.value(static_cast<int>(c));
  }
  return s;
}

ClassDistribution word_class_distribution(const FiniteGroup& g, const Word& v,
                                          const Limits& limits) {
  const Word c = cyclic_reduce(v).first.word();
  if (c.empty()) return point_mass(g, g.identity());

  // Compact the generators that occur.
  std::vector<int> compact(c.rank(), -1), occurrences;
  std::vector<std::pair<int, bool>> letters;  // (variable, inverted)
  for (const Letter& l : c.letters()) {
    if (compact[l.generator] < 0) {
      compact[l.generator] = static_cast<int>(occurrences.size());
      occurrences.push_back(0);
    }
    ++occurrences[compact[l.generator]];
    letters.emplace_back(compact[l.generator], l.sign < 0);
  }
  const int k = static_cast<int>(occurrences.size());
  if (std::find(occurrences.begin(), occurrences.end(), 1) !=
      occurrences.end()) {
    return haar(g);
  }
  const int n = g.order();

  if (g.is_abelian()) {
    std::vector<long> exps(k, 0);
    for (const auto& [var, inv] : letters) exps[var] += inv ? -1 : 1;
    std::vector<Integer> dist(n, 0);
    dist[g.identity()] = 1;
    Integer total = 1;
    for (int var = 0; var < k; ++var) {
      std::vector<Integer> push(n, 0);
      for (int x = 0; x < n; ++x) push[g.power(x, exps[var])] += 1;
      std::vector<Integer> next(n, 0);
      for (int x = 0; x < n; ++x) {
        if (dist[x] == 0) continue;
        for (int y = 0; y < n; ++y) {
          if (push[y] != 0) next[g.mul(x, y)] += dist[x] * push[y];
        }
      }
      dist = std::move(next);
      total *= n;
    }
    return from_counts(g, dist, total);
  }

  // The first variable runs over class representatives weighted by class
  // size: conjugating every argument conjugates the value.
  double work = g.num_classes();
  for (int i = 1; i < k; ++i) work *= n;
  if (work > static_cast<double>(limits.enumeration)) {
    throw BudgetError("word measure on " + g.name() + " needs " +
                      format_count(work) +
                      " evaluations, above the budget of " +
                      std::to_string(limits.enumeration));
  }
  std::vector<std::uint64_t> counts(n, 0);
  std::vector<int> tuple(k, 0);
  for (int cls = 0; cls < g.num_classes(); ++cls) {
    tuple[0] = g.class_representative(cls);
    const std::uint64_t weight = g.class_size(cls);
    std::fill(tuple.begin() + 1, tuple.end(), 0);
    while (true) {
      int prod = g.identity();
      for (const auto& [var, inv] : letters) {
        prod = g.mul(prod, inv ? g.inverse(tuple[var]) : tuple[var]);
      }
      counts[prod] += weight;
      int i = 1;
      while (i < k && ++tuple[i] == n) tuple[i++] = 0;
      if (i == k) break;
    }
  }
  std::vector<Integer> per_element(n);
  for (int x = 0; x < n; ++x) {
    per_element[x] = Integer(std::to_string(counts[x]));
  }
  Integer total = 1;
  for (int i = 0; i < k; ++i) total *= n;
  return from_counts(g, per_element, total);
}

Cyclotomic expectation_word(const ClassFunction& phi, const Word& v,
                            const Limits& limits) {
  return word_class_distribution(*phi.group(), v, limits).expect(phi);
}

Cyclotomic expectation_rel(const CharacterSpec& phi, const Word& w,
                           const SubgroupBasis& h, const Limits& limits) {
  const Word v = rewrite_in_subgroup(w, h);
  switch (phi.kind()) {
    case CharacterSpec::Kind::kTrivial:
      return Cyclotomic(1);
    case CharacterSpec::Kind::kCircle: {
      const auto m = phi.modulus();
      for (long e : v.exponent_sums()) {
        if (m ? e % *m != 0 : e != 0) return Cyclotomic(0);
      }
      return Cyclotomic(1);
    }
    case CharacterSpec::Kind::kFinite:
      break;
  }
  return expectation_word(phi.function(), v, limits);
}

Cyclotomic expectation_edge_based(const ClassFunction& phi, const Word& w,
                                  const CoreGraph& h, const Limits& limits) {
  const auto t = trace(h, w);
  if (!t || t->second != 0) {
    throw ValidationError("word " + w.to_string() +
                          " is not in the subgroup " + h.key());
  }
  const FiniteGroup& g = *phi.group();
  const int n = g.order();
  // Edges off the w-path integrate out; label only the ones it uses.
  std::vector<int> slot(h.num_edges(), -1);
  int used = 0;
  for (const PathStep& s : t->first) {
    if (slot[s.edge] < 0) slot[s.edge] = used++;
  }
  double work = 1;
  for (int i = 0; i < used; ++i) work *= n;
  if (work > static_cast<double>(limits.enumeration)) {
    throw BudgetError("edge-based expectation needs " +
                      format_count(work) +
                      " labelings, above the budget");
  }
  std::vector<std::uint64_t> counts(n, 0);
  std::vector<int> beta(used, 0);
  while (true) {
    int prod = g.identity();
    for (const PathStep& s : t->first) {
      const int x = beta[slot[s.edge]];
      prod = g.mul(prod, s.direction > 0 ? x : g.inverse(x));
    }
    ++counts[prod];
    int i = 0;
    while (i < used && ++beta[i] == n) beta[i++] = 0;
    if (i == used) break;
  }
  Cyclotomic sum;
  Integer total = 0;
  for (int x = 0; x < n; ++x) {
    if (counts[x] == 0) continue;
    const Integer cnt(std::to_string(counts[x]));
    sum += Cyclotomic(Rational(cnt)) * phi.at_element(x);
    total += cnt;
  }
  return sum / Cyclotomic(Rational(total));
}

ClassDistribution MeasureCache::get(const FiniteGroup& g, const Word& v,
                                    const Limits& limits) {
  auto key = std::make_pair(g.serial(), relabeling_key(v));
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
  }
  ClassDistribution d = word_class_distribution(g, v, limits);
  std::lock_guard<std::mutex> lock(mu_);
  return cache_.emplace(std::move(key), std::move(d)).first->second;
}

}  // namespace wml
