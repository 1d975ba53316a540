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
#ifndef WML_FINITE_GROUP_HPP_
#define WML_FINITE_GROUP_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wml/limits.hpp"

namespace wml {

// Finite group given by its multiplication table on elements 0..order-1.
class FiniteGroup {
 public:
  // Validates that table (row-major, order x order) is a group table:
  // entries in range, a two-sided identity, every row and column a
  // permutation, and associativity (exhaustive for order <= 64, otherwise on
  // a deterministic sample of triples). If classes are supplied they must be
  // exactly the conjugacy classes, and their order is kept; otherwise classes
  // are listed by smallest element. Errors name the offending row/column.
  static FiniteGroup from_table(
      int order, std::vector<int> table, std::string name = "",
      std::optional<std::vector<std::vector<int>>> classes = std::nullopt);

  // Closure of permutations of {0..degree-1}. Elements are numbered in
  // breadth-first discovery order from the identity; the product a*b applies
  // a first, then b. Throws BudgetError past limits.group_order elements.
  static FiniteGroup from_permutations(
      const std::vector<std::vector<int>>& generators, std::string name = "",
      const Limits& limits = Limits::defaults());

  int order() const { return order_; }
  const std::string& name() const { return name_; }
  int identity() const { return identity_; }
  int mul(int a, int b) const { return table_[a * order_ + b]; }
  int inverse(int a) const { return inverse_[a]; }
  int power(int a, long k) const;
  int element_order(int a) const { return element_order_[a]; }
  int exponent() const { return exponent_; }
  bool is_abelian() const { return abelian_; }

  int num_classes() const { return static_cast<int>(classes_.size()); }
  const std::vector<std::vector<int>>& classes() const { return classes_; }
  int class_of(int g) const { return class_of_[g]; }
  int class_size(int c) const { return static_cast<int>(classes_[c].size()); }
  int class_representative(int c) const { return classes_[c].front(); }

  const std::vector<int>& table() const { return table_; }

  // Distinct for every constructed group; copies share it. Keys caches.
  std::uint64_t serial() const { return serial_; }

  // Prime p when the order is a power of p (order > 1), else nullopt.
  std::optional<int> prime_power_base() const;

 private:
  FiniteGroup() = default;
  void derive(std::optional<std::vector<std::vector<int>>> classes);

  int order_ = 1;
  std::uint64_t serial_ = 0;
  std::string name_;
  std::vector<int> table_;
  int identity_ = 0;
  std::vector<int> inverse_;
  std::vector<int> element_order_;
  int exponent_ = 1;
  bool abelian_ = true;
  std::vector<std::vector<int>> classes_;
  std::vector<int> class_of_;
};

}  // namespace wml

#endif  // WML_FINITE_GROUP_HPP_
