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
#include "wml/mobius.hpp"

namespace wml {

PosetFunction<Integer> mobius_B(const QuotientPoset& p) {
  PosetFunction<Integer> mu(p);
  for (int i = 0; i < p.size(); ++i) {
    // Proper quotients have strictly fewer vertices, so this is a linear
    // extension of the interval above i.
    std::vector<int> up = p.up_set(i);
    std::stable_sort(up.begin(), up.end(), [&](int a, int b) {
      return p.node(a).graph.num_vertices() > p.node(b).graph.num_vertices();
    });
    std::map<int, Integer> row;
    for (std::size_t t = 0; t < up.size(); ++t) {
      const int j = up[t];
      if (j == i) {
        row[j] = 1;
        continue;
      }
      Integer s = 0;
      for (std::size_t u = 0; u < t; ++u) {
        const int k = up[u];
        if (p.leq(k, j)) s += row[k];
      }
      row[j] = -s;
    }
    for (auto& [j, v] : row) {
      if (v != 0) mu.set(i, j, v);
    }
  }
  return mu;
}

std::pair<std::vector<int>, std::vector<int>> fibers(const GraphMorphism& eta) {
  if (!eta.surjective()) {
    throw ValidationError("L_B: morphism is not surjective");
  }
  std::vector<int> fv(eta.target.num_vertices(), 0);
  std::vector<int> fe(eta.target.num_edges(), 0);
  for (int v : eta.vertex_map) ++fv[v];
  for (int e : eta.edge_map) ++fe[e];
  return {fv, fe};
}

RationalFunctionN L_B(const GraphMorphism& eta) {
  const auto [fv, fe] = fibers(eta);
  return RationalFunctionN::falling_ratio(fv, fe);
}

RationalFunctionN L_B(const QuotientPoset& p, int i, int j) {
  return L_B(p.morphism_between(i, j));
}

Rational L_B_value(const GraphMorphism& eta, long n) {
  if (n < 1) throw ValidationError("L_B_value: n must be positive");
  const auto [fv, fe] = fibers(eta);
  Integer num = 1, den = 1;
  for (int t : fv) {
    if (t > n) return 0;
    for (int k = 0; k < t; ++k) num *= n - k;
  }
  for (int t : fe) {
    for (int k = 0; k < t; ++k) den *= n - k;
  }
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational L_B_value(const QuotientPoset& p, int i, int j, long n) {
  return L_B_value(p.morphism_between(i, j), n);
}

}  // namespace wml
