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
#include "wml/finite_group.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <string>

#include "wml/error.hpp"

namespace wml {
namespace {

std::string cell(int row, int col) {
  return "row " + std::to_string(row) + ", column " + std::to_string(col);
}

}  // namespace

FiniteGroup FiniteGroup::from_table(
    int order, std::vector<int> table, std::string name,
    std::optional<std::vector<std::vector<int>>> classes) {
  if (order < 1) throw ValidationError("group table: order must be positive");
  if (table.size() != static_cast<std::size_t>(order) * order) {
    throw ValidationError("group table: expected " +
                          std::to_string(order) + " rows of " +
                          std::to_string(order) + " entries");
  }
  for (int i = 0; i < order; ++i) {
    for (int j = 0; j < order; ++j) {
      const int x = table[i * order + j];
      if (x < 0 || x >= order) {
        throw ValidationError("group table: entry out of range at " +
                              cell(i, j));
      }
    }
  }
  FiniteGroup g;
  g.order_ = order;
  g.name_ = std::move(name);
  g.table_ = std::move(table);
  // Latin square.
  for (int i = 0; i < order; ++i) {
    std::vector<bool> row(order, false), col(order, false);
    for (int j = 0; j < order; ++j) {
      if (row[g.mul(i, j)]) {
        throw ValidationError("group table: repeated entry in " + cell(i, j));
      }
      row[g.mul(i, j)] = true;
      if (col[g.mul(j, i)]) {
        throw ValidationError("group table: repeated entry in " + cell(j, i));
      }
      col[g.mul(j, i)] = true;
    }
  }
  g.identity_ = -1;
  for (int e = 0; e < order && g.identity_ < 0; ++e) {
    bool ok = true;
    for (int x = 0; x < order && ok; ++x) {
      ok = g.mul(e, x) == x && g.mul(x, e) == x;
    }
    if (ok) g.identity_ = e;
  }
  if (g.identity_ < 0) throw ValidationError("group table: no identity");
  auto check = [&g](int a, int b, int c) {
    if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) {
      throw ValidationError("group table: not associative at (" +
                            std::to_string(a) + ", " + std::to_string(b) +
                            ", " + std::to_string(c) + ")");
    }
  };
  if (order <= 64) {
    for (int a = 0; a < order; ++a) {
      for (int b = 0; b < order; ++b) {
        for (int c = 0; c < order; ++c) check(a, b, c);
      }
    }
  } else {
    std::uint64_t state = 0x9e3779b97f4a7c15ULL;
    auto next = [&state, order] {
      state ^= state << 13;
      state ^= state >> 7;
      state ^= state << 17;
      return static_cast<int>(state % static_cast<std::uint64_t>(order));
    };
    for (int t = 0; t < 20000; ++t) check(next(), next(), next());
  }
  g.derive(std::move(classes));
  return g;
}

FiniteGroup FiniteGroup::from_permutations(
    const std::vector<std::vector<int>>& generators, std::string name,
    const Limits& limits) {
  const int degree = generators.empty() ? 0 : generators[0].size();
  for (const auto& p : generators) {
    std::vector<int> s = p;
    std::sort(s.begin(), s.end());
    if (static_cast<int>(p.size()) != degree) {
      throw ValidationError("permutation generators: degree mismatch");
    }
    for (int i = 0; i < degree; ++i) {
      if (s[i] != i) {
        throw ValidationError("permutation generators: not a permutation");
      }
    }
  }
  std::vector<int> id(degree);
  std::iota(id.begin(), id.end(), 0);
  std::vector<std::vector<int>> elements{id};
  std::map<std::vector<int>, int> index{{id, 0}};
  auto compose = [degree](const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> c(degree);
    for (int i = 0; i < degree; ++i) c[i] = b[a[i]];
    return c;
  };
  for (std::size_t k = 0; k < elements.size(); ++k) {
    for (const auto& s : generators) {
      auto c = compose(elements[k], s);
      if (index.emplace(c, static_cast<int>(elements.size())).second) {
        elements.push_back(std::move(c));
        if (elements.size() > limits.group_order) {
          throw BudgetError("permutation closure exceeds " +
                            std::to_string(limits.group_order) + " elements");
        }
      }
    }
  }
  const int order = static_cast<int>(elements.size());
  if (static_cast<std::uint64_t>(order) * order > 4 * limits.enumeration) {
    throw BudgetError("permutation group of order " + std::to_string(order) +
                      " is too large for a multiplication table");
  }
  std::vector<int> table(static_cast<std::size_t>(order) * order);
  for (int a = 0; a < order; ++a) {
    for (int b = 0; b < order; ++b) {
      table[a * order + b] = index.at(compose(elements[a], elements[b]));
    }
  }
  return from_table(order, std::move(table), std::move(name));
}

void FiniteGroup::derive(std::optional<std::vector<std::vector<int>>> classes) {
  static std::atomic<std::uint64_t> next_serial{1};
  serial_ = next_serial++;
  const int n = order_;
  inverse_.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (mul(a, b) == identity_) {
        inverse_[a] = b;
        break;
      }
    }
  }
  element_order_.assign(n, 1);
  exponent_ = 1;
  for (int a = 0; a < n; ++a) {
    int k = 1;
    for (int x = a; x != identity_; x = mul(x, a)) ++k;
    element_order_[a] = k;
    exponent_ = std::lcm(exponent_, element_order_[a]);
  }
  abelian_ = true;
  for (int a = 0; a < n && abelian_; ++a) {
    for (int b = a + 1; b < n && abelian_; ++b) {
      abelian_ = mul(a, b) == mul(b, a);
    }
  }
  class_of_.assign(n, -1);
  std::vector<std::vector<int>> computed;
  // Identity class first, then by smallest element.
  std::vector<int> order_of_search(n);
  std::iota(order_of_search.begin(), order_of_search.end(), 0);
  std::stable_partition(order_of_search.begin(), order_of_search.end(),
                        [this](int x) { return x == identity_; });
  for (int a : order_of_search) {
    if (class_of_[a] >= 0) continue;
    const int c = static_cast<int>(computed.size());
    std::vector<int> members;
    for (int h = 0; h < n; ++h) {
      const int x = mul(mul(h, a), inverse_[h]);
      if (class_of_[x] < 0) {
        class_of_[x] = c;
        members.push_back(x);
      }
    }
    std::sort(members.begin(), members.end());
    // Representative first: the element the class was discovered from.
    std::iter_swap(members.begin(),
                   std::find(members.begin(), members.end(), a));
    computed.push_back(std::move(members));
  }
  if (!classes) {
    classes_ = std::move(computed);
    return;
  }
  // Supplied classes must coincide with the computed ones.
  std::vector<int> supplied_of(n, -1);
  for (std::size_t c = 0; c < classes->size(); ++c) {
    for (int x : (*classes)[c]) {
      if (x < 0 || x >= n || supplied_of[x] >= 0) {
        throw ValidationError("group classes: element " + std::to_string(x) +
                              " is out of range or listed twice");
      }
      supplied_of[x] = static_cast<int>(c);
    }
  }
  for (int x = 0; x < n; ++x) {
    if (supplied_of[x] < 0) {
      throw ValidationError("group classes: element " + std::to_string(x) +
                            " is missing");
    }
  }
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if ((class_of_[x] == class_of_[y]) != (supplied_of[x] == supplied_of[y])) {
        throw ValidationError("group classes: elements " + std::to_string(x) +
                              " and " + std::to_string(y) +
                              " disagree with conjugacy");
      }
    }
  }
  classes_ = std::move(*classes);
  for (auto& members : classes_) {
    for (int x : members) class_of_[x] = supplied_of[x];
  }
}

int FiniteGroup::power(int a, long k) const {
  if (k < 0) {
    a = inverse_[a];
    k = -k;
  }
  k %= element_order_[a];
  int result = identity_;
  for (long i = 0; i < k; ++i) result = mul(result, a);
  return result;
}

std::optional<int> FiniteGroup::prime_power_base() const {
  if (order_ < 2) return std::nullopt;
  int n = order_, p = 2;
  while (n % p != 0) ++p;
  while (n % p == 0) n /= p;
  if (n != 1) return std::nullopt;
  return p;
}

}  // namespace wml
