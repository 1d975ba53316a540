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
#ifndef WML_SUBGROUP_BASIS_HPP_
#define WML_SUBGROUP_BASIS_HPP_

#include <vector>

#include "wml/core_graph.hpp"
#include "wml/word.hpp"

namespace wml {

// Free basis of the subgroup of a core graph read off a spanning tree: one
// basis word per non-tree edge e = (u -b-> v), namely path(u) b path(v)^-1.
struct SubgroupBasis {
  CoreGraph graph;
  // is_tree[e] for each edge of graph.
  std::vector<bool> is_tree;
  // Basis letter carried by each edge, -1 on tree edges.
  std::vector<int> basis_of_edge;
  // Reduced words over the ambient basis, in non-tree edge order.
  std::vector<Word> basis_words;
  // Tree path from the root to each vertex.
  std::vector<Word> vertex_paths;

  int rank() const { return static_cast<int>(basis_words.size()); }
};

// BFS tree from the root exploring, at each vertex, labels in increasing
// order with the outgoing edge first. Non-tree edges are numbered in the
// graph's canonical edge order.
SubgroupBasis spanning_tree_basis(const CoreGraph& g);

// Writes w in the basis of h. Throws ValidationError when w is not in the
// subgroup (its path cannot be traced or does not return to the root).
Word rewrite_in_subgroup(const Word& w, const SubgroupBasis& h);

}  // namespace wml

#endif  // WML_SUBGROUP_BASIS_HPP_
