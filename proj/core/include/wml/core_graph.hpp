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
#ifndef WML_CORE_GRAPH_HPP_
#define WML_CORE_GRAPH_HPP_

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wml/word.hpp"

namespace wml {

struct Edge {
  int src = 0;
  int dst = 0;
  int label = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Arbitrary rooted labeled digraph, the input to fold().
struct LabeledGraph {
  int rank = 0;
  int vertices = 1;
  int root = 0;
  std::vector<Edge> edges;
};

// Folded core graph in canonical form: vertices are numbered in BFS order
// from the root (root = 0), exploring at each vertex the labels in increasing
// order with the outgoing edge before the incoming one, and edges are sorted.
// Two CoreGraphs are therefore equal iff they are isomorphic as rooted
// labeled graphs.
class CoreGraph {
 public:
  // Single vertex, no edges: the trivial subgroup.
  explicit CoreGraph(int rank = 0);

  // Validates (connected, folded, no non-root vertex of degree < 2) and
  // canonicalizes. If renumbering is non-null it receives, for each input
  // vertex, its canonical index. Throws ValidationError on violations.
  static CoreGraph from_edges(const LabeledGraph& g,
                              std::vector<int>* renumbering = nullptr);

  int rank_ambient() const { return rank_; }
  int num_vertices() const { return vertices_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  int root() const { return 0; }
  const std::vector<Edge>& edges() const { return edges_; }

  // |V| - |E|.
  int euler_characteristic() const { return vertices_ - num_edges(); }
  // Rank of the subgroup: 1 - euler_characteristic().
  int rank() const { return 1 - euler_characteristic(); }
  std::vector<int> edges_per_label() const;

  // Index of the edge with the given label leaving / entering v, or -1.
  int out_edge(int v, int label) const { return out_[v * rank_ + label]; }
  int in_edge(int v, int label) const { return in_[v * rank_ + label]; }

  // Compact canonical text form, e.g. "3:0>1a,1>2b,...".
  std::string key() const;

  friend bool operator==(const CoreGraph& a, const CoreGraph& b) {
    return a.rank_ == b.rank_ && a.vertices_ == b.vertices_ &&
           a.edges_ == b.edges_;
  }
  friend auto operator<=>(const CoreGraph& a, const CoreGraph& b) {
    if (auto c = a.rank_ <=> b.rank_; c != 0) return c;
    if (auto c = a.vertices_ <=> b.vertices_; c != 0) return c;
    return a.edges_ <=> b.edges_;
  }

 private:
  void index();

  int rank_ = 0;
  int vertices_ = 1;
  std::vector<Edge> edges_;
  std::vector<int> out_, in_;
};

struct GraphMorphism {
  CoreGraph source;
  CoreGraph target;
  std::vector<int> vertex_map;
  std::vector<int> edge_map;

  bool surjective() const;
  bool injective() const;
};

// Stallings folding followed by removal of hanging trees away from the root.
CoreGraph fold(const LabeledGraph& g);

// The cycle spelling w from the root. Throws ValidationError if w is the
// identity or not cyclically reduced.
CoreGraph graph_of_word(const Word& w);

// Core graph of the subgroup generated by the given words (all of one rank).
CoreGraph subgroup_graph(int rank, const std::vector<Word>& generators);

// The bouquet of rank loops: the whole free group.
CoreGraph bouquet(int rank);

// Both graphs glued at the root and folded: the subgroup generated by the two.
CoreGraph wedge(const CoreGraph& a, const CoreGraph& b);

// The unique morphism H -> J when H <= J, built by simultaneous traversal
// from the roots; nullopt otherwise.
std::optional<GraphMorphism> morphism(const CoreGraph& h, const CoreGraph& j);

// A step of a traced path: edge index and traversal direction (+1 along the
// edge, -1 against it).
struct PathStep {
  int edge;
  int direction;
};

// Reads w from the root; nullopt when some letter cannot be followed.
// On success also reports the end vertex.
std::optional<std::pair<std::vector<PathStep>, int>> trace(const CoreGraph& g,
                                                           const Word& w);

// True iff w lies in the subgroup of g (its path closes at the root).
bool contains(const CoreGraph& g, const Word& w);

}  // namespace wml

#endif  // WML_CORE_GRAPH_HPP_
