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
#include "wml/core_graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>

#include "wml/error.hpp"

namespace wml {
namespace {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<int> parent_;
};

void check_edges(const LabeledGraph& g) {
  if (g.vertices < 1 || g.root < 0 || g.root >= g.vertices) {
    throw ValidationError("graph: bad vertex count or root");
  }
  for (const Edge& e : g.edges) {
    if (e.src < 0 || e.src >= g.vertices || e.dst < 0 ||
        e.dst >= g.vertices) {
      throw ValidationError("graph: edge endpoint out of range");
    }
    if (e.label < 0 || e.label >= g.rank) {
      throw ValidationError("graph: edge label out of range");
    }
  }
}

}  // namespace

CoreGraph::CoreGraph(int rank) : rank_(rank), vertices_(1) { index(); }

void CoreGraph::index() {
  out_.assign(static_cast<std::size_t>(vertices_) * rank_, -1);
  in_.assign(static_cast<std::size_t>(vertices_) * rank_, -1);
  for (int i = 0; i < num_edges(); ++i) {
    const Edge& e = edges_[i];
    out_[e.src * rank_ + e.label] = i;
    in_[e.dst * rank_ + e.label] = i;
  }
}

CoreGraph CoreGraph::from_edges(const LabeledGraph& g,
                                std::vector<int>* renumbering) {
  check_edges(g);
  const int r = g.rank;
  std::vector<int> out(static_cast<std::size_t>(g.vertices) * r, -1);
  std::vector<int> in(static_cast<std::size_t>(g.vertices) * r, -1);
  std::vector<int> degree(g.vertices, 0);
  for (int i = 0; i < static_cast<int>(g.edges.size()); ++i) {
    const Edge& e = g.edges[i];
    int& o = out[e.src * r + e.label];
    int& n = in[e.dst * r + e.label];
    if (o >= 0 || n >= 0) {
      throw ValidationError("graph: not folded at label " +
                            std::to_string(e.label));
    }
    o = n = i;
    ++degree[e.src];
    ++degree[e.dst];
  }
  for (int v = 0; v < g.vertices; ++v) {
    if (v != g.root && degree[v] < 2) {
      throw ValidationError("graph: vertex " + std::to_string(v) +
                            " has degree below 2");
    }
  }
  std::vector<int> order(g.vertices, -1);
  std::deque<int> queue{g.root};
  order[g.root] = 0;
  int next = 1;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (int b = 0; b < r; ++b) {
      for (int e : {out[v * r + b], in[v * r + b]}) {
        if (e < 0) continue;
        const Edge& ed = g.edges[e];
        const int u = ed.src == v && out[v * r + b] == e ? ed.dst : ed.src;
        if (order[u] < 0) {
          order[u] = next++;
          queue.push_back(u);
        }
      }
    }
  }
  if (next != g.vertices) throw ValidationError("graph: not connected");
  CoreGraph c(r);
  c.vertices_ = g.vertices;
  c.edges_.reserve(g.edges.size());
  for (const Edge& e : g.edges) {
    c.edges_.push_back({order[e.src], order[e.dst], e.label});
  }
  std::sort(c.edges_.begin(), c.edges_.end());
  c.index();
  if (renumbering) *renumbering = std::move(order);
  return c;
}

std::vector<int> CoreGraph::edges_per_label() const {
  std::vector<int> counts(rank_, 0);
  for (const Edge& e : edges_) ++counts[e.label];
  return counts;
}

std::string CoreGraph::key() const {
  std::string s = std::to_string(vertices_) + ":";
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(edges_[i].src) + ">" + std::to_string(edges_[i].dst) +
         std::string(1, kDefaultAlphabet[edges_[i].label % 26]);
  }
  return s;
}

bool GraphMorphism::surjective() const {
  std::vector<bool> hv(target.num_vertices(), false), he(target.num_edges(),
                                                         false);
  for (int v : vertex_map) hv[v] = true;
  for (int e : edge_map) he[e] = true;
  return std::all_of(hv.begin(), hv.end(), [](bool b) { return b; }) &&
         std::all_of(he.begin(), he.end(), [](bool b) { return b; });
}

bool GraphMorphism::injective() const {
  std::vector<int> v = vertex_map;
  std::sort(v.begin(), v.end());
  return std::adjacent_find(v.begin(), v.end()) == v.end();
}

CoreGraph fold(const LabeledGraph& g) {
  check_edges(g);
  const int r = g.rank;
  UnionFind uf(g.vertices);
  // Identify targets (sources) of same-label edges sharing a source
  // (target) until no conflicts remain.
  bool changed = true;
  std::vector<int> out(static_cast<std::size_t>(g.vertices) * r);
  std::vector<int> in(static_cast<std::size_t>(g.vertices) * r);
  while (changed) {
    changed = false;
    std::fill(out.begin(), out.end(), -1);
    std::fill(in.begin(), in.end(), -1);
    for (const Edge& e : g.edges) {
      const int s = uf.find(e.src), d = uf.find(e.dst);
      int& o = out[s * r + e.label];
      if (o < 0) {
        o = d;
      } else if (uf.find(o) != d) {
        changed |= uf.unite(o, d);
      }
      int& n = in[d * r + e.label];
      const int s2 = uf.find(e.src);
      if (n < 0) {
        n = s2;
      } else if (uf.find(n) != s2) {
        changed |= uf.unite(n, s2);
      }
    }
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges) {
    edges.push_back({uf.find(e.src), uf.find(e.dst), e.label});
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  // Prune hanging trees.
  const int root = uf.find(g.root);
  std::vector<bool> alive(g.vertices, false);
  for (int v = 0; v < g.vertices; ++v) alive[v] = uf.find(v) == v;
  std::vector<bool> edge_alive(edges.size(), true);
  bool pruned = true;
  while (pruned) {
    pruned = false;
    std::vector<int> degree(g.vertices, 0);
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (!edge_alive[i]) continue;
      ++degree[edges[i].src];
      ++degree[edges[i].dst];
    }
    for (int v = 0; v < g.vertices; ++v) {
      if (!alive[v] || v == root || degree[v] >= 2) continue;
      alive[v] = false;
      pruned = true;
      for (std::size_t i = 0; i < edges.size(); ++i) {
        if (edges[i].src == v || edges[i].dst == v) edge_alive[i] = false;
      }
    }
  }
  std::vector<int> compact(g.vertices, -1);
  int n = 0;
  for (int v = 0; v < g.vertices; ++v) {
    if (alive[v]) compact[v] = n++;
  }
  LabeledGraph h{r, n, compact[root], {}};
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (!edge_alive[i]) continue;
    h.edges.push_back(
        {compact[edges[i].src], compact[edges[i].dst], edges[i].label});
  }
  return CoreGraph::from_edges(h);
}

CoreGraph graph_of_word(const Word& w) {
  if (w.empty()) throw ValidationError("graph_of_word: identity word");
  const auto& l = w.letters();
  if (l.size() >= 2 && l.front() == l.back().inverse()) {
    throw ValidationError("graph_of_word: word is not cyclically reduced");
  }
  const int n = static_cast<int>(l.size());
  LabeledGraph g{w.rank(), n, 0, {}};
  for (int i = 0; i < n; ++i) {
    const int j = (i + 1) % n;
    if (l[i].sign > 0) {
      g.edges.push_back({i, j, l[i].generator});
    } else {
      g.edges.push_back({j, i, l[i].generator});
    }
  }
  return CoreGraph::from_edges(g);
}

CoreGraph subgroup_graph(int rank, const std::vector<Word>& generators) {
  LabeledGraph g{rank, 1, 0, {}};
  for (const Word& w : generators) {
    const auto& l = w.letters();
    if (l.empty()) continue;
    int prev = 0;
    for (std::size_t i = 0; i < l.size(); ++i) {
      const int next = i + 1 == l.size() ? 0 : g.vertices++;
      if (l[i].sign > 0) {
        g.edges.push_back({prev, next, l[i].generator});
      } else {
        g.edges.push_back({next, prev, l[i].generator});
      }
      prev = next;
    }
  }
  return fold(g);
}

CoreGraph bouquet(int rank) {
  LabeledGraph g{rank, 1, 0, {}};
  for (int b = 0; b < rank; ++b) g.edges.push_back({0, 0, b});
  return CoreGraph::from_edges(g);
}

CoreGraph wedge(const CoreGraph& a, const CoreGraph& b) {
  const int rank = std::max(a.rank_ambient(), b.rank_ambient());
  const int shift = a.num_vertices() - 1;
  LabeledGraph g{rank, a.num_vertices() + b.num_vertices() - 1, 0, a.edges()};
  auto place = [shift](int v) { return v == 0 ? 0 : v + shift; };
  for (const Edge& e : b.edges()) {
    g.edges.push_back({place(e.src), place(e.dst), e.label});
  }
  return fold(g);
}

std::optional<GraphMorphism> morphism(const CoreGraph& h, const CoreGraph& j) {
  if (h.rank_ambient() != j.rank_ambient()) return std::nullopt;
  const int r = h.rank_ambient();
  GraphMorphism m{h, j, std::vector<int>(h.num_vertices(), -1),
                  std::vector<int>(h.num_edges(), -1)};
  m.vertex_map[0] = 0;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    const int fv = m.vertex_map[v];
    for (int b = 0; b < r; ++b) {
      for (int dir : {1, -1}) {
        const int e = dir > 0 ? h.out_edge(v, b) : h.in_edge(v, b);
        if (e < 0) continue;
        const int fe = dir > 0 ? j.out_edge(fv, b) : j.in_edge(fv, b);
        if (fe < 0) return std::nullopt;
        const int u = dir > 0 ? h.edges()[e].dst : h.edges()[e].src;
        const int fu = dir > 0 ? j.edges()[fe].dst : j.edges()[fe].src;
        m.edge_map[e] = fe;
        if (m.vertex_map[u] < 0) {
          m.vertex_map[u] = fu;
          queue.push_back(u);
        } else if (m.vertex_map[u] != fu) {
          return std::nullopt;
        }
      }
    }
  }
  return m;
}

std::optional<std::pair<std::vector<PathStep>, int>> trace(const CoreGraph& g,
                                                           const Word& w) {
  std::vector<PathStep> path;
  path.reserve(w.size());
  int v = 0;
  for (const Letter& l : w.letters()) {
    if (l.generator >= g.rank_ambient()) return std::nullopt;
    const int e = l.sign > 0 ? g.out_edge(v, l.generator)
                             : g.in_edge(v, l.generator);
    if (e < 0) return std::nullopt;
    path.push_back({e, l.sign});
    v = l.sign > 0 ? g.edges()[e].dst : g.edges()[e].src;
  }
  return std::make_pair(std::move(path), v);
}

bool contains(const CoreGraph& g, const Word& w) {
  auto t = trace(g, w);
  return t && t->second == 0;
}

}  // namespace wml
