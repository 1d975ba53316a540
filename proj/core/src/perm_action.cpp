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
#include "wml/perm_action.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

#include "wml/error.hpp"
#include "wml/subgroup_basis.hpp"

namespace wml {
namespace {

bool is_bijection(const std::vector<int>& p, int degree) {
  if (static_cast<int>(p.size()) != degree) return false;
  std::vector<bool> seen(degree, false);
  for (int x : p) {
    if (x < 0 || x >= degree || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

}  // namespace

PermAction PermAction::from_generators(int degree,
                                       std::vector<std::vector<int>> generators,
                                       std::string name,
                                       const Limits& limits) {
  if (degree < 1) throw ValidationError("PermAction: degree must be positive");
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (!is_bijection(generators[i], degree)) {
      throw ValidationError("PermAction: generator " + std::to_string(i) +
                            " is not a permutation of " +
                            std::to_string(degree) + " points");
    }
  }
  PermAction a;
  a.degree_ = degree;
  a.name_ = std::move(name);
  a.generators_ = std::move(generators);
  std::vector<int> id(degree);
  std::iota(id.begin(), id.end(), 0);
  std::map<std::vector<int>, int> index{{id, 0}};
  a.elements_.push_back(id);
  for (std::size_t head = 0; head < a.elements_.size(); ++head) {
    for (const auto& g : a.generators_) {
      std::vector<int> prod(degree);
      const std::vector<int>& e = a.elements_[head];
      for (int x = 0; x < degree; ++x) prod[x] = g[e[x]];
      if (index.emplace(prod, static_cast<int>(a.elements_.size())).second) {
        a.elements_.push_back(std::move(prod));
        if (a.elements_.size() > limits.group_order) {
          throw BudgetError("PermAction: closure exceeds " +
                            std::to_string(limits.group_order) + " elements");
        }
      }
    }
  }
  a.inverse_.resize(a.elements_.size());
  for (std::size_t i = 0; i < a.elements_.size(); ++i) {
    std::vector<int> inv(degree);
    for (int x = 0; x < degree; ++x) inv[a.elements_[i][x]] = x;
    a.inverse_[i] = index.at(inv);
  }
  return a;
}

int PermAction::index_of(const std::vector<int>& perm) const {
  auto it = std::find(elements_.begin(), elements_.end(), perm);
  return it == elements_.end() ? -1 : static_cast<int>(it - elements_.begin());
}

PermAction PermAction::symmetric(int n, const Limits& limits) {
  if (n < 1) throw ValidationError("symmetric: n must be positive");
  std::vector<std::vector<int>> gens;
  if (n >= 2) {
    std::vector<int> swap(n), cycle(n);
    std::iota(swap.begin(), swap.end(), 0);
    std::swap(swap[0], swap[1]);
    for (int i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
    gens = {swap, cycle};
  }
  return from_generators(n, std::move(gens), "S" + std::to_string(n), limits);
}

PermAction PermAction::symmetric_on_subsets(int n, int k, const Limits& limits) {
  if (n < 1 || k < 0 || k > n) {
    throw ValidationError("symmetric_on_subsets: need 0 <= k <= n, n >= 1");
  }
  // Lexicographic k-subsets as bitmasks.
  std::vector<unsigned> subsets;
  std::vector<int> comb(k);
  std::iota(comb.begin(), comb.end(), 0);
  while (true) {
    unsigned mask = 0;
    for (int c : comb) mask |= 1u << c;
    subsets.push_back(mask);
    int i = k - 1;
    while (i >= 0 && comb[i] == n - k + i) --i;
    if (i < 0) break;
    ++comb[i];
    for (int t = i + 1; t < k; ++t) comb[t] = comb[t - 1] + 1;
  }
  std::map<unsigned, int> pos;
  for (std::size_t i = 0; i < subsets.size(); ++i) pos[subsets[i]] = static_cast<int>(i);
  const PermAction base = symmetric(n, limits);
  std::vector<std::vector<int>> gens;
  for (const auto& g : base.generators()) {
    std::vector<int> img(subsets.size());
    for (std::size_t i = 0; i < subsets.size(); ++i) {
      unsigned m = 0;
      for (int x = 0; x < n; ++x) {
        if (subsets[i] >> x & 1u) m |= 1u << g[x];
      }
      img[i] = pos.at(m);
    }
    gens.push_back(std::move(img));
  }
  return from_generators(static_cast<int>(subsets.size()), std::move(gens),
                         "S" + std::to_string(n) + " on " + std::to_string(k) +
                             "-subsets",
                         limits);
}

PermAction PermAction::general_linear_f2(int n, bool include_zero,
                                         const Limits& limits) {
  if (n < 1 || n > 8) throw ValidationError("general_linear_f2: need 1 <= n <= 8");
  const int points = (1 << n) - (include_zero ? 0 : 1);
  auto point_of = [&](unsigned v) { return static_cast<int>(v) - (include_zero ? 0 : 1); };
  // Transvections v -> v + v_j e_i generate GL_n(F_2).
  std::vector<std::vector<int>> gens;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      std::vector<int> img(points);
      for (unsigned v = include_zero ? 0u : 1u; v < (1u << n); ++v) {
        const unsigned w = v ^ (((v >> j) & 1u) << i);
        img[point_of(v)] = point_of(w);
      }
      gens.push_back(std::move(img));
    }
  }
  return from_generators(points, std::move(gens),
                         "GL" + std::to_string(n) + "(F2)", limits);
}

LetterDistribution LetterDistribution::from_subset(
    const std::vector<int>& subset, const char* what) {
  if (subset.empty()) {
    throw ValidationError(std::string("LetterDistribution: no ") + what);
  }
  LetterDistribution d;
  const Rational w(1, static_cast<long>(subset.size()));
  for (int i : subset) d.support_.emplace_back(i, w);
  return d;
}

LetterDistribution LetterDistribution::uniform(const PermAction& a) {
  std::vector<int> all(a.order());
  std::iota(all.begin(), all.end(), 0);
  return from_subset(all, "elements");
}

LetterDistribution LetterDistribution::torsion(const PermAction& a, int m) {
  if (m < 1) throw ValidationError("LetterDistribution::torsion: m must be positive");
  std::vector<int> sel;
  for (std::size_t i = 0; i < a.order(); ++i) {
    const auto& s = a.elements()[i];
    bool ok = true;
    for (int x = 0; x < a.degree() && ok; ++x) {
      int y = x;
      for (int t = 0; t < m; ++t) y = s[y];
      ok = y == x;
    }
    if (ok) sel.push_back(static_cast<int>(i));
  }
  return from_subset(sel, "solutions of s^m = 1");
}

LetterDistribution LetterDistribution::derangements(const PermAction& a) {
  std::vector<int> sel;
  for (std::size_t i = 0; i < a.order(); ++i) {
    const auto& s = a.elements()[i];
    bool ok = true;
    for (int x = 0; x < a.degree() && ok; ++x) ok = s[x] != x;
    if (ok) sel.push_back(static_cast<int>(i));
  }
  return from_subset(sel, "derangements");
}

LetterDistribution LetterDistribution::custom(const PermAction& a,
                                              std::vector<Rational> weights) {
  if (weights.size() != a.order()) {
    throw ValidationError("LetterDistribution::custom: expected " +
                          std::to_string(a.order()) + " weights");
  }
  LetterDistribution d;
  Rational total = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] < 0) {
      throw ValidationError("LetterDistribution::custom: negative weight");
    }
    total += weights[i];
    if (weights[i] != 0) d.support_.emplace_back(static_cast<int>(i), weights[i]);
  }
  if (total != 1) {
    throw ValidationError("LetterDistribution::custom: weights sum to " +
                          to_string(total));
  }
  return d;
}

namespace {

// Depth-first search over injective colorings, one vertex at a time in
// canonical (BFS) order, keeping for each label the support elements that
// are consistent with the edges colored so far.
class InjectionSearch {
 public:
  InjectionSearch(const CoreGraph& g, const PermAction& a,
                  const std::vector<LetterDistribution>& dists,
                  const Limits& limits)
      : g_(g), a_(a), limits_(limits), closing_(g.num_vertices()),
        color_(g.num_vertices(), -1), used_(a.degree(), false) {
    const int rank = g.rank_ambient();
    weights_.resize(rank);
    scale_.assign(rank, 1);
    std::vector<std::vector<int>> alive(rank);
    for (int b = 0; b < rank; ++b) {
      const LetterDistribution& d = dists.size() == 1 ? dists[0] : dists.at(b);
      Integer lcm = 1;
      for (const auto& [e, w] : d.support()) {
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), w.get_den_mpz_t());
      }
      scale_[b] = lcm;
      weights_[b].assign(a.order(), 0);
      for (const auto& [e, w] : d.support()) {
        weights_[b][e] = Integer(w * lcm);
        alive[b].push_back(e);
      }
    }
    for (int e = 0; e < g.num_edges(); ++e) {
      const Edge& ed = g.edges()[e];
      closing_[std::max(ed.src, ed.dst)].push_back(e);
    }
    label_used_.assign(rank, false);
    for (const Edge& ed : g.edges()) label_used_[ed.label] = true;
    alive_.push_back(std::move(alive));
  }

  Rational run() {
    if (g_.num_vertices() > a_.degree()) return 0;
    visit(0);
    Integer den = 1;
    for (std::size_t b = 0; b < scale_.size(); ++b) {
      if (label_used_[b]) den *= scale_[b];
    }
    Rational r(total_, den);
    r.canonicalize();
    return r;
  }

 private:
  void visit(int v) {
    if (v == g_.num_vertices()) {
      Integer prod = 1;
      const auto& alive = alive_.back();
      for (std::size_t b = 0; b < alive.size(); ++b) {
        if (!label_used_[b]) continue;
        Integer s = 0;
        for (int e : alive[b]) s += weights_[b][e];
        prod *= s;
      }
      total_ += prod;
      return;
    }
    for (int x = 0; x < a_.degree(); ++x) {
      if (used_[x]) continue;
      if (++visited_ > limits_.enumeration) {
        throw BudgetError("L_general: more than " +
                          std::to_string(limits_.enumeration) +
                          " partial colorings");
      }
      color_[v] = x;
      std::vector<std::vector<int>> next = alive_.back();
      bool dead = false;
      for (int e : closing_[v]) {
        const Edge& ed = g_.edges()[e];
        const int from = color_[ed.src], to = color_[ed.dst];
        auto& list = next[ed.label];
        std::erase_if(list, [&](int s) { return a_.elements()[s][from] != to; });
        if (list.empty()) {
          dead = true;
          break;
        }
      }
      if (!dead) {
        used_[x] = true;
        alive_.push_back(std::move(next));
        visit(v + 1);
        alive_.pop_back();
        used_[x] = false;
      }
      color_[v] = -1;
    }
  }

  const CoreGraph& g_;
  const PermAction& a_;
  const Limits& limits_;
  std::vector<std::vector<int>> closing_;
  std::vector<int> color_;
  std::vector<bool> used_;
  std::vector<bool> label_used_;
  std::vector<std::vector<Integer>> weights_;
  std::vector<Integer> scale_;
  std::vector<std::vector<std::vector<int>>> alive_;
  Integer total_ = 0;
  std::uint64_t visited_ = 0;
};

}  // namespace

Rational L_general(const CoreGraph& g, const PermAction& action,
                   const std::vector<LetterDistribution>& dists,
                   const Limits& limits) {
  if (dists.size() != 1 && static_cast<int>(dists.size()) != g.rank_ambient()) {
    throw ValidationError("L_general: need one distribution or one per letter");
  }
  return InjectionSearch(g, action, dists, limits).run();
}

Rational expectation_action(const CoreGraph& h, const CoreGraph& j,
                            const PermAction& action, const Limits& limits) {
  const SubgroupBasis jb = spanning_tree_basis(j);
  const SubgroupBasis hb = spanning_tree_basis(h);
  std::vector<Word> gens;
  for (const Word& u : hb.basis_words) gens.push_back(rewrite_in_subgroup(u, jb));
  const int r = jb.rank();
  const std::size_t order = action.order();
  Integer tuples = 1;
  for (int i = 0; i < r; ++i) tuples *= static_cast<unsigned long>(order);
  if (tuples > Integer(static_cast<unsigned long>(limits.enumeration))) {
    throw BudgetError("expectation_action: " + tuples.get_str() +
                      " homomorphisms exceed the budget");
  }
  const int d = action.degree();
  std::vector<int> tuple(r, 0);
  std::vector<int> image(d);
  Integer total = 0;
  while (true) {
    std::vector<bool> fixed(d, true);
    for (const Word& u : gens) {
      std::iota(image.begin(), image.end(), 0);
      for (const Letter& l : u.letters()) {
        const int s = l.sign > 0 ? tuple[l.generator] : action.inverse(tuple[l.generator]);
        const auto& p = action.elements()[s];
        for (int x = 0; x < d; ++x) image[x] = p[image[x]];
      }
      for (int x = 0; x < d; ++x) {
        if (image[x] != x) fixed[x] = false;
      }
    }
    total += static_cast<long>(std::count(fixed.begin(), fixed.end(), true));
    int i = 0;
    while (i < r && ++tuple[i] == static_cast<int>(order)) tuple[i++] = 0;
    if (i == r) break;
  }
  Rational res(total, tuples);
  res.canonicalize();
  return res;
}

}  // namespace wml
