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
#ifndef WML_QUOTIENT_POSET_HPP_
#define WML_QUOTIENT_POSET_HPP_

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "wml/core_graph.hpp"
#include "wml/limits.hpp"
#include "wml/subgroup_basis.hpp"
#include "wml/word.hpp"

namespace wml {

// One element of Q_B(w): a quotient of the w-cycle.
struct QuotientNode {
  CoreGraph graph;
  // Vertex i of the w-cycle (the vertex reached after reading i letters)
  // maps to vertex_map[i] of graph.
  std::vector<int> vertex_map;
  std::vector<int> edges_per_label;
  int rank = 0;
};

// All quotients of the core graph of a cyclically reduced word, ordered by
// the existence of morphisms. Quotients correspond to partitions of the
// cycle's vertices closed under folding; the order is refinement of those
// partitions.
class QuotientPoset {
 public:
  // Cyclically reduces w first; quotients of the reduced cycle describe the
  // conjugate subgroups. Throws ValidationError on the identity and
  // BudgetError when |w| exceeds limits.quotient_word_length.
  static QuotientPoset enumerate(const Word& w,
                                 const Limits& limits = Limits::defaults());

  QuotientPoset(QuotientPoset&&) noexcept = default;
  QuotientPoset& operator=(QuotientPoset&&) noexcept = default;

  // The cyclically reduced word whose cycle is the bottom node.
  const Word& word() const { return word_; }
  int size() const { return static_cast<int>(nodes_.size()); }
  const QuotientNode& node(int i) const { return nodes_.at(i); }
  const std::vector<QuotientNode>& nodes() const { return nodes_; }
  int bottom() const { return bottom_; }
  // Bouquet on the letters used by w.
  int top() const { return top_; }

  // Index of the node with this graph, if any.
  std::optional<int> find(const CoreGraph& g) const;
  // A morphism node(i) -> node(j) exists.
  bool leq(int i, int j) const;
  GraphMorphism morphism_between(int i, int j) const;
  // Nodes above / below i, including i, in increasing index order. Memoized.
  const std::vector<int>& up_set(int i) const;
  // Nodes k with i <= k <= j.
  std::vector<int> interval(int i, int j) const;
  // Nodes covering i. Memoized.
  const std::vector<int>& covers(int i) const;

  // Chains i = M_0 <= M_1 <= ... <= M_m = j, links may be isomorphisms.
  // Each chain has m + 1 entries.
  std::vector<std::vector<int>> decomp(int i, int j, int m) const;

 private:
  QuotientPoset() = default;

  Word word_;
  std::vector<QuotientNode> nodes_;
  std::map<std::string, int> by_key_;
  int bottom_ = 0;
  int top_ = 0;

  struct Memo {
    std::mutex mu;
    std::map<int, std::vector<int>> up, covers;
  };
  std::unique_ptr<Memo> memo_ = std::make_unique<Memo>();
};

// Whether <w> <= H is algebraic: the rewritten word lies in no proper free
// factor of H. Throws ValidationError when w is not in H and BudgetError when
// rank(H) exceeds the Whitehead bound.
bool is_algebraic_cyclic_base(const Word& w, const CoreGraph& h,
                              const Limits& limits = Limits::defaults());

// The unique L with <w> <=_alg L <=* J. w must be cyclically reduced and lie
// in J.
CoreGraph afd_cyclic(const Word& w, const CoreGraph& j,
                     const Limits& limits = Limits::defaults());

}  // namespace wml

#endif  // WML_QUOTIENT_POSET_HPP_
