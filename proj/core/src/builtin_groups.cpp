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
#include "wml/builtin_groups.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <regex>
#include <set>

#include "wml/error.hpp"

namespace wml {
namespace {

using ElementFn = std::function<Cyclotomic(int)>;

ClassFunction make(const GroupPtr& g, const ElementFn& f, std::string name) {
  std::vector<Cyclotomic> values;
  values.reserve(g->order());
  for (int x = 0; x < g->order(); ++x) values.push_back(f(x));
  return ClassFunction::from_elements(g, values, std::move(name));
}

GroupPtr from_rule(int order, const std::function<int(int, int)>& mul,
                   std::string name) {
  std::vector<int> table(static_cast<std::size_t>(order) * order);
  for (int a = 0; a < order; ++a) {
    for (int b = 0; b < order; ++b) table[a * order + b] = mul(a, b);
  }
  return std::make_shared<const FiniteGroup>(
      FiniteGroup::from_table(order, std::move(table), std::move(name)));
}

void partitions(int n, int max_part, std::vector<int>& cur,
                std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(n, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions(n - p, p, cur, out);
    cur.pop_back();
  }
}

std::string partition_name(const std::vector<int>& lambda) {
  std::string s = "[";
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(lambda[i]);
  }
  return s + "]";
}

std::vector<int> cycle_type(const std::vector<int>& perm) {
  std::vector<bool> seen(perm.size(), false);
  std::vector<int> type;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = perm[j]) {
      seen[j] = true;
      ++len;
    }
    type.push_back(len);
  }
  std::sort(type.rbegin(), type.rend());
  return type;
}

// Character value on beta-set beta (distinct first-column hook lengths).
Integer mn_beta(std::set<int> beta, std::vector<int> mu) {
  if (mu.empty()) return 1;
  const int r = mu.back();
  mu.pop_back();
  Integer total = 0;
  for (int b : beta) {
    const int target = b - r;
    if (target < 0 || beta.count(target)) continue;
    int between = 0;
    for (int c : beta) {
      if (c > target && c < b) ++between;
    }
    std::set<int> next = beta;
    next.erase(b);
    next.insert(target);
    const Integer v = mn_beta(std::move(next), mu);
    total += between % 2 == 0 ? v : Integer(-v);
  }
  return total;
}

}  // namespace

std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

Integer symmetric_character(const std::vector<int>& lambda,
                            const std::vector<int>& mu) {
  const int len = static_cast<int>(lambda.size());
  std::set<int> beta;
  for (int i = 0; i < len; ++i) beta.insert(lambda[i] + (len - 1 - i));
  return mn_beta(std::move(beta), mu);
}

CharacterTable cyclic_group(int m) {
  if (m < 1 || m > 1000) {
    throw ValidationError("cyclic(m) requires 1 <= m <= 1000");
  }
  auto g = from_rule(m, [m](int a, int b) { return (a + b) % m; },
                     "C" + std::to_string(m));
  std::vector<ClassFunction> chars;
  for (int j = 0; j < m; ++j) {
    chars.push_back(make(
        g, [m, j](int k) { return Cyclotomic::zeta(m, static_cast<long>(j) * k); },
        "chi" + std::to_string(j)));
  }
  CharacterTable t(g, std::move(chars));
  t.add_alias("trivial", 0);
  if (m == 2) t.add_alias("sign", 1);
  return t;
}

CharacterTable symmetric_group(int n) {
  if (n < 1 || n > 5) {
    throw ValidationError("symmetric(n) requires 1 <= n <= 5");
  }
  const auto perms = all_permutations(n);
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < perms.size(); ++i) {
    index.emplace(perms[i], static_cast<int>(i));
  }
  auto g = from_rule(
      static_cast<int>(perms.size()),
      [&](int a, int b) {
        std::vector<int> c(n);
        for (int i = 0; i < n; ++i) c[i] = perms[b][perms[a][i]];
        return index.at(c);
      },
      "S" + std::to_string(n));
  std::vector<std::vector<int>> lambdas;
  std::vector<int> cur;
  partitions(n, n, cur, lambdas);
  std::vector<ClassFunction> chars;
  for (const auto& lambda : lambdas) {
    chars.push_back(make(
        g,
        [&](int x) {
          return Cyclotomic(Rational(symmetric_character(lambda, cycle_type(perms[x]))));
        },
        partition_name(lambda)));
  }
  CharacterTable t(g, std::move(chars));
  t.add_alias("trivial", 0);
  t.add_alias("sign", static_cast<int>(lambdas.size()) - 1);
  if (n >= 2) t.add_alias("std", 1);
  return t;
}

CharacterTable dihedral_group(int m) {
  if (m < 2 || m > 500) {
    throw ValidationError("dihedral(m) requires 2 <= m <= 500");
  }
  // Element k < m is r^k, element m + k is r^k s; s r s = r^-1.
  auto g = from_rule(
      2 * m,
      [m](int x, int y) {
        const int a = x % m, e = x / m, b = y % m, f = y / m;
        const int k = ((a + (e ? -b : b)) % m + m) % m;
        return k + m * ((e + f) % 2);
      },
      "D" + std::to_string(m));
  std::vector<ClassFunction> chars;
  auto linear = [&](int on_r, int on_s, const std::string& name) {
    chars.push_back(make(
        g,
        [m, on_r, on_s](int x) {
          long v = 1;
          if ((x % m) % 2 == 1 && on_r < 0) v = -v;
          if (x >= m && on_s < 0) v = -v;
          return Cyclotomic(v);
        },
        name));
  };
  linear(1, 1, "trivial");
  linear(1, -1, "lin1");
  if (m % 2 == 0) {
    linear(-1, 1, "lin2");
    linear(-1, -1, "lin3");
  }
  for (int h = 1; 2 * h < m; ++h) {
    chars.push_back(make(
        g,
        [m, h](int x) {
          if (x >= m) return Cyclotomic(0);
          const long k = static_cast<long>(h) * (x % m);
          return Cyclotomic::zeta(m, k) + Cyclotomic::zeta(m, -k);
        },
        "rho" + std::to_string(h)));
  }
  return CharacterTable(g, std::move(chars));
}

CharacterTable quaternion_group() {
  // Element 2u + s is (-1)^s times unit u of {1, i, j, k}.
  static const int kUnit[4][4] = {
      {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int kSign[4][4] = {
      {0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  auto g = from_rule(
      8,
      [](int x, int y) {
        const int u = x / 2, v = y / 2;
        return 2 * kUnit[u][v] + ((x % 2) ^ (y % 2) ^ kSign[u][v]);
      },
      "Q8");
  std::vector<ClassFunction> chars;
  chars.push_back(make(g, [](int) { return Cyclotomic(1); }, "trivial"));
  const char* names[3] = {"chi_i", "chi_j", "chi_k"};
  for (int keep = 1; keep <= 3; ++keep) {
    chars.push_back(make(
        g,
        [keep](int x) {
          const int u = x / 2;
          return Cyclotomic(u == 0 || u == keep ? 1L : -1L);
        },
        names[keep - 1]));
  }
  chars.push_back(make(
      g,
      [](int x) {
        if (x == 0) return Cyclotomic(2);
        if (x == 1) return Cyclotomic(-2);
        return Cyclotomic(0);
      },
      "rho"));
  return CharacterTable(g, std::move(chars));
}

CharacterTable trivial_group() {
  auto g = from_rule(1, [](int, int) { return 0; }, "1");
  return CharacterTable(
      g, {make(g, [](int) { return Cyclotomic(1); }, "trivial")});
}

CharacterTable builtin_group(const std::string& name) {
  static const std::regex pattern(
      R"(^\s*(C|cyclic|S|symmetric|D|dihedral)\s*\(?\s*(\d+)\s*\)?\s*$)");
  std::smatch m;
  if (std::regex_match(name, m, pattern)) {
    const std::string kind = m[1];
    if (m[2].length() > 4) throw ValidationError("group size too large");
    const int k = std::stoi(m[2]);
    if (kind == "C" || kind == "cyclic") return cyclic_group(k);
    if (kind == "S" || kind == "symmetric") return symmetric_group(k);
    return dihedral_group(k);
  }
  if (name == "Q8" || name == "quaternion8") return quaternion_group();
  if (name == "trivial" || name == "1") return trivial_group();
  throw ValidationError("unknown group '" + name +
                        "'; expected C<m>, S<n>, D<m>, Q8, trivial or a JSON file");
}

}  // namespace wml
