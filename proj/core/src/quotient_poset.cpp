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
#include "wml/quotient_poset.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>
#include <tuple>

#include "wml/error.hpp"
#include "wml/whitehead.hpp"

namespace wml {
namespace {

int find(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

void unite(std::vector<int>& parent, int a, int b) {
  a = find(parent, a);
  b = find(parent, b);
  if (a != b) parent[std::max(a, b)] = std::min(a, b);
}

// Coarsens the partition until the quotient of the cycle is folded.
void fold_close(std::vector<int>& parent, const std::vector<Edge>& edges,
                int rank) {
  const int n = static_cast<int>(parent.size());
  std::vector<int> out(static_cast<std::size_t>(n) * rank);
  std::vector<int> in(static_cast<std::size_t>(n) * rank);
  bool changed = true;
  while (changed) {
    changed = false;
    std::fill(out.begin(), out.end(), -1);
    std::fill(in.begin(), in.end(), -1);
    for (const Edge& e : edges) {
      const int s = find(parent, e.src), d = find(parent, e.dst);
      int& o = out[s * rank + e.label];
      if (o < 0) {
        o = d;
      } else if (find(parent, o) != d) {
        unite(parent, o, d);
        changed = true;
      }
      const int s2 = find(parent, e.src);
      int& i = in[find(parent, e.dst) * rank + e.label];
      if (i < 0) {
        i = s2;
      } else if (find(parent, i) != s2) {
        unite(parent, i, s2);
        changed = true;
      }
    }
  }
}

// Restricted growth string of the partition: block ids by first appearance.
std::string encode(std::vector<int>& parent) {
  const int n = static_cast<int>(parent.size());
  std::vector<int> id(n, -1);
  std::string code(n, '\0');
  char next = 0;
  for (int i = 0; i < n; ++i) {
    const int r = find(parent, i);
    if (id[r] < 0) id[r] = next++;
    code[i] = static_cast<char>(id[r]);
  }
  return code;
}

}  // namespace

QuotientPoset QuotientPoset::enumerate(const Word& w, const Limits& limits) {
  QuotientPoset p;
  p.word_ = cyclic_reduce(w).first.word();
  if (p.word_.empty()) {
    throw ValidationError("quotient enumeration: identity word");
  }
  const int n = static_cast<int>(p.word_.size());
  if (n > limits.quotient_word_length || n > 120) {
    throw BudgetError("quotient enumeration: |w| = " + std::to_string(n) +
                      " exceeds bound " +
                      std::to_string(limits.quotient_word_length));
  }
  const int rank = p.word_.rank();
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    const Letter& l = p.word_[i];
    const int j = (i + 1) % n;
    edges.push_back(l.sign > 0 ? Edge{i, j, l.generator}
                               : Edge{j, i, l.generator});
  }

  // Breadth-first closure under "merge two blocks, then fold".
  std::vector<int> discrete(n);
  std::iota(discrete.begin(), discrete.end(), 0);
  std::set<std::string> seen{encode(discrete)};
  std::deque<std::string> queue{*seen.begin()};
  std::uint64_t work = 0;
  while (!queue.empty()) {
    const std::string code = std::move(queue.front());
    queue.pop_front();
    const int blocks = 1 + *std::max_element(code.begin(), code.end());
    std::vector<int> rep(blocks, -1);
    for (int i = 0; i < n; ++i) {
      if (rep[code[i]] < 0) rep[code[i]] = i;
    }
    for (int x = 0; x < blocks; ++x) {
      for (int y = x + 1; y < blocks; ++y) {
        if (++work > limits.enumeration) {
          throw BudgetError("quotient enumeration exceeded budget");
        }
        std::vector<int> parent(n);
        for (int i = 0; i < n; ++i) parent[i] = rep[code[i]];
        unite(parent, rep[x], rep[y]);
        fold_close(parent, edges, rank);
        std::string next = encode(parent);
        if (seen.insert(next).second) queue.push_back(std::move(next));
      }
    }
  }

  for (const std::string& code : seen) {
    const int blocks = 1 + *std::max_element(code.begin(), code.end());
    std::set<Edge> qedges;
    for (const Edge& e : edges) {
      qedges.insert({code[e.src], code[e.dst], e.label});
    }
    LabeledGraph g{rank, blocks, 0, {qedges.begin(), qedges.end()}};
    std::vector<int> renum;
    QuotientNode node{CoreGraph::from_edges(g, &renum), {}, {}, 0};
    node.vertex_map.resize(n);
    for (int i = 0; i < n; ++i) node.vertex_map[i] = renum[code[i]];
    node.edges_per_label = node.graph.edges_per_label();
    node.rank = node.graph.rank();
    p.nodes_.push_back(std::move(node));
  }
  std::sort(p.nodes_.begin(), p.nodes_.end(),
            [](const QuotientNode& a, const QuotientNode& b) {
              return std::make_tuple(a.rank, -a.graph.num_vertices(),
                                     a.graph.key()) <
                     std::make_tuple(b.rank, -b.graph.num_vertices(),
                                     b.graph.key());
            });
  for (int i = 0; i < p.size(); ++i) {
    p.by_key_.emplace(p.nodes_[i].graph.key(), i);
    if (p.nodes_[i].graph.num_vertices() == n) p.bottom_ = i;
    if (p.nodes_[i].graph.num_vertices() == 1) p.top_ = i;
  }
  return p;
}

std::optional<int> QuotientPoset::find(const CoreGraph& g) const {
  if (g.rank_ambient() != word_.rank()) return std::nullopt;
  auto it = by_key_.find(g.key());
  if (it == by_key_.end()) return std::nullopt;
  return it->second;
}

bool QuotientPoset::leq(int i, int j) const {
  const QuotientNode& a = nodes_.at(i);
  const QuotientNode& b = nodes_.at(j);
  std::vector<int> image(a.graph.num_vertices(), -1);
  for (std::size_t p = 0; p < a.vertex_map.size(); ++p) {
    int& slot = image[a.vertex_map[p]];
    if (slot < 0) {
      slot = b.vertex_map[p];
    } else if (slot != b.vertex_map[p]) {
      return false;
    }
  }
  return true;
}

GraphMorphism QuotientPoset::morphism_between(int i, int j) const {
  auto m = morphism(nodes_.at(i).graph, nodes_.at(j).graph);
  if (!m || !leq(i, j)) {
    throw std::invalid_argument("morphism_between: nodes are not comparable");
  }
  return *m;
}

const std::vector<int>& QuotientPoset::up_set(int i) const {
  std::lock_guard<std::mutex> lock(memo_->mu);
  auto it = memo_->up.find(i);
  if (it != memo_->up.end()) return it->second;
  std::vector<int> up;
  for (int j = 0; j < size(); ++j) {
    if (leq(i, j)) up.push_back(j);
  }
  return memo_->up.emplace(i, std::move(up)).first->second;
}

std::vector<int> QuotientPoset::interval(int i, int j) const {
  std::vector<int> out;
  for (int k : up_set(i)) {
    if (leq(k, j)) out.push_back(k);
  }
  return out;
}

const std::vector<int>& QuotientPoset::covers(int i) const {
  const std::vector<int>& up = up_set(i);
  {
    std::lock_guard<std::mutex> lock(memo_->mu);
    auto it = memo_->covers.find(i);
    if (it != memo_->covers.end()) return it->second;
  }
  std::vector<int> result;
  for (int k : up) {
    if (k == i) continue;
    bool minimal = true;
    for (int m : up) {
      if (m != i && m != k && leq(m, k)) {
        minimal = false;
        break;
      }
    }
    if (minimal) result.push_back(k);
  }
  std::lock_guard<std::mutex> lock(memo_->mu);
  return memo_->covers.emplace(i, std::move(result)).first->second;
}

std::vector<std::vector<int>> QuotientPoset::decomp(int i, int j,
                                                    int m) const {
  if (m < 1) throw std::invalid_argument("decomp: m must be positive");
  if (!leq(i, j)) return {};
  const std::vector<int> between = interval(i, j);
  std::vector<std::vector<int>> chains{{i}};
  for (int step = 1; step < m; ++step) {
    std::vector<std::vector<int>> longer;
    for (const auto& c : chains) {
      for (int k : between) {
        if (!leq(c.back(), k)) continue;
        auto d = c;
        d.push_back(k);
        longer.push_back(std::move(d));
      }
    }
    chains = std::move(longer);
  }
  for (auto& c : chains) c.push_back(j);
  return chains;
}

bool is_algebraic_cyclic_base(const Word& w, const CoreGraph& h,
                              const Limits& limits) {
  const SubgroupBasis basis = spanning_tree_basis(h);
  const Word v = rewrite_in_subgroup(w, basis);
  if (h.rank() > limits.whitehead_rank) {
    throw BudgetError("algebraicity test: rank " + std::to_string(h.rank()) +
                      " exceeds the Whitehead bound");
  }
  if (v.empty()) return false;
  return !lies_in_proper_free_factor(v, limits);
}

CoreGraph afd_cyclic(const Word& w, const CoreGraph& j, const Limits& limits) {
  if (!cyclic_reduce(w).second.empty()) {
    throw ValidationError("afd_cyclic: word must be cyclically reduced");
  }
  if (!contains(j, w)) {
    throw ValidationError("afd_cyclic: word is not in the target subgroup");
  }
  const QuotientPoset poset = QuotientPoset::enumerate(w, limits);
  std::vector<int> candidates;
  for (int i = 0; i < poset.size(); ++i) {
    const CoreGraph& g = poset.node(i).graph;
    if (morphism(g, j) && is_algebraic_cyclic_base(w, g, limits)) {
      candidates.push_back(i);
    }
  }
  std::vector<int> maximal;
  for (int c : candidates) {
    const bool dominated = std::any_of(
        candidates.begin(), candidates.end(),
        [&](int d) { return d != c && poset.leq(c, d); });
    if (!dominated) maximal.push_back(c);
  }
  if (maximal.size() != 1) {
    throw std::logic_error("afd_cyclic: algebraic part is not unique");
  }
  return poset.node(maximal.front()).graph;
}

}  // namespace wml
