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
#ifndef WML_EXPECTATION_HPP_
#define WML_EXPECTATION_HPP_

#include <map>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include "wml/character_spec.hpp"
#include "wml/core_graph.hpp"
#include "wml/limits.hpp"
#include "wml/subgroup_basis.hpp"
#include "wml/word.hpp"

namespace wml {

// Law of v(g_1, ..., g_k) for independent uniform g_i, pushed to conjugacy
// classes: prob[c] = P(v(g) in class c).
struct ClassDistribution {
  std::vector<Rational> prob;

  Cyclotomic expect(const ClassFunction& phi) const;
};

// Exact class distribution of the word map v on G. Uses conjugation
// invariance, the uniform law of words with a letter occurring once, and a
// convolution shortcut for abelian G; otherwise enumerates tuples. Throws
// BudgetError when the enumeration exceeds limits.enumeration.
ClassDistribution word_class_distribution(const FiniteGroup& g, const Word& v,
                                          const Limits& limits = Limits::defaults());

// E[phi(v(g_1, ..., g_k))] over uniform tuples.
Cyclotomic expectation_word(const ClassFunction& phi, const Word& v,
                            const Limits& limits = Limits::defaults());

// E over uniform homomorphisms H -> G of phi applied to the image of w.
// Circle(m) gives 1 exactly when every basis letter of H has exponent sum
// divisible by m in the rewritten word (zero for m = infinity).
Cyclotomic expectation_rel(const CharacterSpec& phi, const Word& w,
                           const SubgroupBasis& h,
                           const Limits& limits = Limits::defaults());

// The same quantity computed independently: averages phi over all edge
// labelings beta: E(H) -> G of the product of beta along the w-path, with
// edges traversed backwards contributing inverses.
Cyclotomic expectation_edge_based(const ClassFunction& phi, const Word& w,
                                  const CoreGraph& h,
                                  const Limits& limits = Limits::defaults());

// Thread-safe memo of class distributions keyed by group serial and
// relabeling_key(v).
class MeasureCache {
 public:
  ClassDistribution get(const FiniteGroup& g, const Word& v,
                        const Limits& limits);

 private:
  std::mutex mu_;
  std::map<std::pair<std::uint64_t, std::vector<int>>, ClassDistribution>
      cache_;
};

}  // namespace wml

#endif  // WML_EXPECTATION_HPP_
