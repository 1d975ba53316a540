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
#include "wml/subgroup_basis.hpp"

#include <deque>

#include "wml/error.hpp"

namespace wml {

SubgroupBasis spanning_tree_basis(const CoreGraph& g) {
  const int r = g.rank_ambient();
  SubgroupBasis b{g, std::vector<bool>(g.num_edges(), false),
                  std::vector<int>(g.num_edges(), -1), {},
                  std::vector<Word>(g.num_vertices(), Word(r))};
  std::vector<bool> seen(g.num_vertices(), false);
  seen[0] = true;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (int label = 0; label < r; ++label) {
      for (int dir : {1, -1}) {
        const int e = dir > 0 ? g.out_edge(v, label) : g.in_edge(v, label);
        if (e < 0) continue;
        const int u = dir > 0 ? g.edges()[e].dst : g.edges()[e].src;
        if (seen[u]) continue;
        seen[u] = true;
        b.is_tree[e] = true;
        const Letter step{label, dir};
        b.vertex_paths[u] = b.vertex_paths[v] * reduce(std::vector{step}, r);
        queue.push_back(u);
      }
    }
  }
  for (int e = 0; e < g.num_edges(); ++e) {
    if (b.is_tree[e]) continue;
    const Edge& ed = g.edges()[e];
    b.basis_of_edge[e] = static_cast<int>(b.basis_words.size());
    const Letter step{ed.label, 1};
    b.basis_words.push_back(b.vertex_paths[ed.src] *
                            reduce(std::vector{step}, r) *
                            b.vertex_paths[ed.dst].inverse());
  }
  return b;
}

Word rewrite_in_subgroup(const Word& w, const SubgroupBasis& h) {
  const auto t = trace(h.graph, w);
  if (!t || t->second != 0) {
    throw ValidationError("word " + w.to_string() +
                          " is not in the subgroup " + h.graph.key());
  }
  std::vector<Letter> letters;
  for (const PathStep& s : t->first) {
    const int idx = h.basis_of_edge[s.edge];
    if (idx >= 0) letters.push_back({idx, s.direction});
  }
  return reduce(letters, h.rank());
}

}  // namespace wml
