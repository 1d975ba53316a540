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
#include <set>

#include "support.hpp"
#include "wml/core_graph.hpp"
#include "wml/error.hpp"
#include "wml/quotient_poset.hpp"
#include "wml/subgroup_basis.hpp"

namespace wml {
namespace {

using testing::P;
using testing::W;

// Expands a word over the basis of h back into the ambient free group.
Word expand(const Word& v, const SubgroupBasis& h) {
  Word out(h.graph.rank_ambient());
  for (const Letter& l : v.letters()) {
    const Word& b = h.basis_words.at(l.generator);
    out = out * (l.sign > 0 ? b : b.inverse());
  }
  return out;
}

// Oracle for quotient counts: every set partition of the cycle's vertices,
// glued and folded, deduplicated by canonical form.
std::set<std::string> quotients_by_partitions(const Word& w) {
  const CoreGraph cycle = graph_of_word(w);
  const int v = cycle.num_vertices();
  std::set<std::string> keys;
  std::vector<int> block(v, 0);
  auto rec = [&](auto&& self, int i, int blocks) -> void {
    if (i == v) {
      LabeledGraph g;
      g.rank = cycle.rank_ambient();
      g.vertices = blocks;
      g.root = block[0];
      for (const Edge& e : cycle.edges()) {
        g.edges.push_back({block[e.src], block[e.dst], e.label});
      }
      keys.insert(fold(g).key());
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      block[i] = b;
      self(self, i + 1, std::max(blocks, b + 1));
    }
  };
  rec(rec, 0, 0);
  return keys;
}

TEST(GraphOfWord, Examples) {
  const CoreGraph g = graph_of_word(W("abAB"));
  EXPECT_EQ(g.num_vertices(), 4);
  EXPECT_EQ(g.num_edges(), 4);
  EXPECT_EQ(g.euler_characteristic(), 0);
  EXPECT_EQ(g.rank(), 1);

  const CoreGraph aa = graph_of_word(W("aa"));
  EXPECT_EQ(aa.num_vertices(), 2);
  EXPECT_EQ(aa.num_edges(), 2);

  const CoreGraph a = graph_of_word(W("a"));
  EXPECT_EQ(a.num_vertices(), 1);
  EXPECT_EQ(a.num_edges(), 1);

  EXPECT_THROW(graph_of_word(Word(2)), ValidationError);
  EXPECT_THROW(graph_of_word(W("abA")), ValidationError);
}

TEST(Fold, SubgroupWithThreeGenerators) {
  // <c, aca, a^-1 b a>: c-loop at the root, a path a.c.a through two
  // vertices, and a b-loop at the vertex the last a leaves from.
  const CoreGraph g = subgroup_graph(3, {W("c", 3), W("aca"), W("Aba", 3)});
  EXPECT_EQ(g.num_vertices(), 3);
  EXPECT_EQ(g.num_edges(), 5);
  EXPECT_EQ(g.rank(), 3);
  EXPECT_EQ(spanning_tree_basis(g).rank(), 3);
}

TEST(Fold, IdempotentAndMergesParallelLoops) {
  const CoreGraph g = graph_of_word(W("aabAB"));
  LabeledGraph raw{g.rank_ambient(), g.num_vertices(), 0, g.edges()};
  EXPECT_EQ(fold(raw), g);

  LabeledGraph loops{1, 1, 0, {{0, 0, 0}, {0, 0, 0}}};
  EXPECT_EQ(fold(loops), bouquet(1));
}

TEST(Fold, ConfluentUnderRandomOrders) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    std::uniform_int_distribution<int> nv(1, 8), lab(0, 1);
    LabeledGraph g;
    g.rank = 2;
    g.vertices = nv(rng);
    for (int v = 1; v < g.vertices; ++v) {
      std::uniform_int_distribution<int> parent(0, v - 1);
      g.edges.push_back({parent(rng), v, lab(rng)});
    }
    std::uniform_int_distribution<int> any(0, g.vertices - 1), extra(0, 6);
    for (int k = extra(rng); k > 0; --k) g.edges.push_back({any(rng), any(rng), lab(rng)});
    const CoreGraph reference = fold(g);
    EXPECT_EQ(reference.rank() + reference.euler_characteristic(), 1);

    for (int shuffle = 0; shuffle < 3; ++shuffle) {
      std::vector<int> relabel(g.vertices);
      std::iota(relabel.begin(), relabel.end(), 0);
      std::shuffle(relabel.begin(), relabel.end(), rng);
      LabeledGraph h = g;
      h.root = relabel[g.root];
      for (Edge& e : h.edges) e = {relabel[e.src], relabel[e.dst], e.label};
      std::shuffle(h.edges.begin(), h.edges.end(), rng);
      EXPECT_EQ(fold(h), reference);
    }
  }
}

TEST(Morphism, Examples) {
  const CoreGraph w = graph_of_word(W("abAB"));
  EXPECT_TRUE(morphism(w, bouquet(2)).has_value());
  EXPECT_FALSE(morphism(graph_of_word(W("a", 2)), graph_of_word(W("b"))).has_value());

  const auto m = morphism(graph_of_word(W("aa")), graph_of_word(W("a")));
  ASSERT_TRUE(m.has_value());
  EXPECT_EQ(m->vertex_map, (std::vector<int>{0, 0}));
  EXPECT_TRUE(m->surjective());
  EXPECT_FALSE(m->injective());
}

TEST(Morphism, AgreesWithTracedVertexPaths) {
  const Word w = W("aabAbaBB");
  const QuotientPoset p = QuotientPoset::enumerate(w);
  for (int i = 0; i < p.size(); ++i) {
    const SubgroupBasis b = spanning_tree_basis(p.node(i).graph);
    for (int j : p.up_set(i)) {
      const auto m = morphism(p.node(i).graph, p.node(j).graph);
      ASSERT_TRUE(m.has_value());
      for (int v = 0; v < p.node(i).graph.num_vertices(); ++v) {
        const auto t = trace(p.node(j).graph, b.vertex_paths[v]);
        ASSERT_TRUE(t.has_value());
        EXPECT_EQ(t->second, m->vertex_map[v]);
      }
    }
  }
}

TEST(SpanningTree, Examples) {
  const SubgroupBasis top = spanning_tree_basis(bouquet(2));
  ASSERT_EQ(top.rank(), 2);
  EXPECT_EQ(top.basis_words[0], W("a", 2));
  EXPECT_EQ(top.basis_words[1], W("b"));

  const SubgroupBasis aa = spanning_tree_basis(graph_of_word(W("aa")));
  ASSERT_EQ(aa.rank(), 1);
  EXPECT_EQ(aa.basis_words[0], W("aa"));
  EXPECT_EQ(rewrite_in_subgroup(W("aa"), aa).size(), 1u);
}

TEST(Rewrite, Examples) {
  const Word w = W("aabb");
  EXPECT_EQ(rewrite_in_subgroup(w, spanning_tree_basis(bouquet(2))), w);

  // x^-3 (x y^6)^2 in <x, y^6>; x is generator 0 and y generator 1.
  const Word r = P("x^-3(xy^6)^2");
  const SubgroupBasis h = spanning_tree_basis(subgroup_graph(2, {W("a", 2), W("b").power(6)}));
  const Word v = rewrite_in_subgroup(r, h);
  EXPECT_EQ(v.size(), 5u);  // freely reduced form of x^-3 (x z)^2
  EXPECT_EQ(expand(v, h), r);
  EXPECT_THROW(rewrite_in_subgroup(W("b"), spanning_tree_basis(graph_of_word(W("a", 2)))),
               ValidationError);
}

TEST(Rewrite, ExpandsBackOnEveryQuotient) {
  for (const char* text : {"abAB", "aabb", "abab", "aabAbaBB", "abcACB"}) {
    const Word w = W(text);
    const QuotientPoset p = QuotientPoset::enumerate(w);
    for (const QuotientNode& n : p.nodes()) {
      const SubgroupBasis b = spanning_tree_basis(n.graph);
      EXPECT_EQ(b.rank(), n.graph.rank());
      const Word v = rewrite_in_subgroup(p.word(), b);
      EXPECT_LE(v.size(), p.word().size());
      EXPECT_EQ(expand(v, b), p.word()) << text << " in " << n.graph.key();
    }
  }
}

TEST(Quotients, SmallExamples) {
  const QuotientPoset aa = QuotientPoset::enumerate(W("aa"));
  EXPECT_EQ(aa.size(), 2);
  EXPECT_EQ(aa.node(aa.top()).graph, bouquet(1));
  EXPECT_EQ(aa.node(aa.bottom()).graph, graph_of_word(W("aa")));

  EXPECT_EQ(QuotientPoset::enumerate(W("a")).size(), 1);
  EXPECT_THROW(QuotientPoset::enumerate(Word(2)), ValidationError);
}

TEST(Quotients, MatchBruteForcePartitions) {
  for (const char* text : {"abAB", "aabb", "abab", "aabAbaBB", "abcACB", "aaa", "abAAB"}) {
    const Word w = W(text);
    const QuotientPoset p = QuotientPoset::enumerate(w);
    std::set<std::string> keys;
    for (const QuotientNode& n : p.nodes()) keys.insert(n.graph.key());
    EXPECT_EQ(keys, quotients_by_partitions(p.word())) << text;
  }
}

TEST(Quotients, EveryNodeIsASurjectiveImage) {
  for (const char* text : {"abAB", "aabb", "abcACB"}) {
    const QuotientPoset p = QuotientPoset::enumerate(W(text));
    EXPECT_EQ(p.node(p.top()).graph, bouquet(p.word().rank()));
    for (int i = 0; i < p.size(); ++i) {
      EXPECT_TRUE(p.leq(p.bottom(), i));
      EXPECT_TRUE(p.leq(i, p.top()));
      EXPECT_TRUE(p.morphism_between(p.bottom(), i).surjective());
      EXPECT_EQ(p.node(i).rank + p.node(i).graph.euler_characteristic(), 1);
    }
  }
}

TEST(Decomp, ChainCounts) {
  const QuotientPoset aa = QuotientPoset::enumerate(W("aa"));
  EXPECT_EQ(aa.decomp(aa.bottom(), aa.bottom(), 2).size(), 1u);
  EXPECT_EQ(aa.decomp(aa.bottom(), aa.top(), 2).size(), 2u);

  // Chains with three links split at their last intermediate node.
  const QuotientPoset p = QuotientPoset::enumerate(W("abAB"));
  for (int i = 0; i < p.size(); ++i) {
    for (int j : p.up_set(i)) {
      std::size_t expected = 0;
      for (int k : p.interval(i, j)) expected += p.decomp(i, k, 2).size();
      EXPECT_EQ(p.decomp(i, j, 3).size(), expected);
      for (const auto& chain : p.decomp(i, j, 3)) {
        ASSERT_EQ(chain.size(), 4u);
        EXPECT_EQ(chain.front(), i);
        EXPECT_EQ(chain.back(), j);
        for (std::size_t k = 1; k < chain.size(); ++k) {
          EXPECT_TRUE(p.leq(chain[k - 1], chain[k]));
        }
      }
    }
  }
}

TEST(Algebraic, CyclicBaseExamples) {
  EXPECT_TRUE(is_algebraic_cyclic_base(W("abAB"), bouquet(2)));
  EXPECT_FALSE(is_algebraic_cyclic_base(W("a", 2), bouquet(2)));
  EXPECT_TRUE(is_algebraic_cyclic_base(W("aabb"), bouquet(2)));
  EXPECT_TRUE(is_algebraic_cyclic_base(W("aa"), bouquet(1)));
}

TEST(Algebraic, InjectiveImageIsAFreeFactor) {
  for (const char* text : {"abAB", "aabb", "aaa"}) {
    const Word w = W(text, 3);
    const CoreGraph g = graph_of_word(cyclic_reduce(w).first.word());
    for (const char* extra : {"c", "cc", "cac", "bcbc"}) {
      const CoreGraph h = wedge(g, graph_of_word(cyclic_reduce(W(extra, 3)).first.word()));
      const auto m = morphism(g, h);
      ASSERT_TRUE(m.has_value());
      if (m->injective() && !(h == g)) {
        EXPECT_FALSE(is_algebraic_cyclic_base(w, h)) << text << " in " << h.key();
      }
    }
  }
}

TEST(Afd, Examples) {
  EXPECT_EQ(afd_cyclic(W("abAB"), bouquet(2)), bouquet(2));
  EXPECT_EQ(afd_cyclic(W("a", 2), bouquet(2)), graph_of_word(W("a", 2)));
  EXPECT_EQ(afd_cyclic(W("aa", 2), bouquet(2)), graph_of_word(W("a", 2)));
}

}  // namespace
}  // namespace wml
