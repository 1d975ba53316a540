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
#ifndef WML_CLASS_FUNCTION_HPP_
#define WML_CLASS_FUNCTION_HPP_

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wml/cyclotomic.hpp"
#include "wml/finite_group.hpp"

namespace wml {

using GroupPtr = std::shared_ptr<const FiniteGroup>;

// Function on a finite group constant on conjugacy classes, stored per class.
class ClassFunction {
 public:
  // Throws ValidationError when the number of values differs from the
  // number of classes.
  ClassFunction(GroupPtr group, std::vector<Cyclotomic> values,
                std::string name = "");

  // Aggregates per-element values; throws ValidationError when they are not
  // constant on a class.
  static ClassFunction from_elements(GroupPtr group,
                                     const std::vector<Cyclotomic>& values,
                                     std::string name = "");

  const GroupPtr& group() const { return group_; }
  const std::vector<Cyclotomic>& values() const { return values_; }
  const Cyclotomic& value(int cls) const { return values_[cls]; }
  const Cyclotomic& at_element(int g) const {
    return values_[group_->class_of(g)];
  }
  // Value at the identity.
  const Cyclotomic& degree() const {
    return values_[group_->class_of(group_->identity())];
  }
  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  bool is_trivial() const;

  // Set by CharacterTable::classify(); absent when not determined.
  std::optional<bool> is_character() const { return is_character_; }
  std::optional<bool> is_irreducible() const { return is_irreducible_; }

  ClassFunction conj() const;
  // Flags from necessary conditions alone, for functions outside a verified
  // table: not irreducible when <f, f> != 1, not a character when f(1) is
  // not a positive integer. Undecided flags stay empty.
  ClassFunction screened() const;

 private:
  friend class CharacterTable;

  GroupPtr group_;
  std::vector<Cyclotomic> values_;
  std::string name_;
  std::optional<bool> is_character_;
  std::optional<bool> is_irreducible_;
};

// (1/|G|) sum_classes |C| f(C) conj(g(C)). Throws ValidationError when the
// groups differ.
Cyclotomic inner_product(const ClassFunction& f, const ClassFunction& g);

// A group together with its complete list of irreducible characters.
class CharacterTable {
 public:
  // Verifies the table: one character per class, orthonormal, integral
  // positive degrees with sum of squares |G|. Throws ValidationError
  // otherwise. Marks every entry irreducible.
  CharacterTable(GroupPtr group, std::vector<ClassFunction> irreducibles);

  const GroupPtr& group() const { return group_; }
  const std::vector<ClassFunction>& irreducibles() const& {
    return irreducibles_;
  }
  // By value on temporaries, so range-for over builtin_group(..) is safe.
  std::vector<ClassFunction> irreducibles() && {
    return std::move(irreducibles_);
  }
  // By name; also accepts "#k" for the k-th irreducible. Throws
  // ValidationError when unknown.
  const ClassFunction& get(const std::string& name) const&;
  ClassFunction get(const std::string& name) && { return std::as_const(*this).get(name); }
  // Sets the is_character / is_irreducible flags of f from its
  // decomposition into irreducibles.
  ClassFunction classify(ClassFunction f) const;
  // Multiplicities <f, chi_i>.
  std::vector<Cyclotomic> decompose(const ClassFunction& f) const;
  // Frobenius-Schur indicator (1/|G|) sum_g chi(g^2) of the k-th irreducible.
  Cyclotomic frobenius_schur(int k) const;

  // Alternate names; looked up after the primary names.
  void add_alias(const std::string& alias, int index);

 private:
  GroupPtr group_;
  std::vector<ClassFunction> irreducibles_;
  std::vector<std::pair<std::string, int>> aliases_;
};

}  // namespace wml

#endif  // WML_CLASS_FUNCTION_HPP_
