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
#include "wml/class_function.hpp"

#include <stdexcept>

#include "wml/error.hpp"

namespace wml {

ClassFunction::ClassFunction(GroupPtr group, std::vector<Cyclotomic> values,
                             std::string name)
    : group_(std::move(group)), values_(std::move(values)),
      name_(std::move(name)) {
  if (!group_) throw ValidationError("class function: null group");
  if (static_cast<int>(values_.size()) != group_->num_classes()) {
    throw ValidationError("class function '" + name_ + "': expected " +
                          std::to_string(group_->num_classes()) +
                          " values, got " + std::to_string(values_.size()));
  }
}

ClassFunction ClassFunction::from_elements(
    GroupPtr group, const std::vector<Cyclotomic>& values, std::string name) {
  if (static_cast<int>(values.size()) != group->order()) {
    throw ValidationError("class function: one value per element required");
  }
  std::vector<Cyclotomic> per_class;
  for (const auto& members : group->classes()) {
    const Cyclotomic& v = values[members.front()];
    for (int x : members) {
      if (!(values[x] == v)) {
        throw ValidationError("function '" + name +
                              "' is not constant on conjugacy classes");
      }
    }
    per_class.push_back(v);
  }
  return ClassFunction(std::move(group), std::move(per_class),
                       std::move(name));
}

bool ClassFunction::is_trivial() const {
  for (const auto& v : values_) {
    if (!(v == Cyclotomic(1))) return false;
  }
  return true;
}

ClassFunction ClassFunction::conj() const {
  std::vector<Cyclotomic> v;
  v.reserve(values_.size());
  for (const auto& x : values_) v.push_back(x.conj());
  ClassFunction c(group_, std::move(v), name_ + "*");
  c.is_character_ = is_character_;
  c.is_irreducible_ = is_irreducible_;
  return c;
}

ClassFunction ClassFunction::screened() const {
  ClassFunction f = *this;
  const Cyclotomic d = degree();
  const bool integral_degree = d.is_rational() &&
                               d.to_rational().get_den() == 1 &&
                               d.to_rational() > 0;
  f.is_character_ = integral_degree ? std::nullopt : std::optional<bool>(false);
  f.is_irreducible_ = integral_degree && inner_product(f, f) == Cyclotomic(1)
                          ? std::nullopt
                          : std::optional<bool>(false);
  return f;
}

Cyclotomic inner_product(const ClassFunction& f, const ClassFunction& g) {
  if (f.group() != g.group()) {
    throw ValidationError("inner_product: class functions on different groups");
  }
  const FiniteGroup& G = *f.group();
  Cyclotomic s;
  for (int c = 0; c < G.num_classes(); ++c) {
    s += Cyclotomic(static_cast<long>(G.class_size(c))) * f.value(c) *
         g.value(c).conj();
  }
  return s / Cyclotomic(static_cast<long>(G.order()));
}

CharacterTable::CharacterTable(GroupPtr group,
                               std::vector<ClassFunction> irreducibles)
    : group_(std::move(group)), irreducibles_(std::move(irreducibles)) {
  const int k = group_->num_classes();
  if (static_cast<int>(irreducibles_.size()) != k) {
    throw ValidationError("character table: need " + std::to_string(k) +
                          " irreducibles, got " +
                          std::to_string(irreducibles_.size()));
  }
  Integer dims = 0;
  for (int i = 0; i < k; ++i) {
    const ClassFunction& chi = irreducibles_[i];
    if (chi.group() != group_) {
      throw ValidationError("character table: entry on a different group");
    }
    const Cyclotomic d = chi.degree();
    if (!d.is_rational() || d.to_rational().get_den() != 1 ||
        d.to_rational() <= 0) {
      throw ValidationError("character table: '" + chi.name() +
                            "' has a non-positive-integer degree");
    }
    dims += d.to_rational().get_num() * d.to_rational().get_num();
    for (int j = i; j < k; ++j) {
      const Cyclotomic ip = inner_product(chi, irreducibles_[j]);
      if (!(ip == Cyclotomic(i == j ? 1 : 0))) {
        throw ValidationError("character table: <" + chi.name() + ", " +
                              irreducibles_[j].name() + "> = " +
                              ip.to_string());
      }
    }
  }
  if (dims != group_->order()) {
    throw ValidationError("character table: squared degrees sum to " +
                          dims.get_str() + ", not |G|");
  }
  for (auto& chi : irreducibles_) {
    chi.is_character_ = true;
    chi.is_irreducible_ = true;
  }
}

const ClassFunction& CharacterTable::get(const std::string& name) const& {
  for (const auto& chi : irreducibles_) {
    if (chi.name() == name) return chi;
  }
  for (const auto& [alias, idx] : aliases_) {
    if (alias == name) return irreducibles_[idx];
  }
  if (name.size() > 1 && name[0] == '#') {
    try {
      const std::size_t idx = std::stoul(name.substr(1));
      if (idx < irreducibles_.size()) return irreducibles_[idx];
    } catch (const std::exception&) {
    }
  }
  std::string known;
  for (const auto& chi : irreducibles_) known += " " + chi.name();
  for (const auto& alias : aliases_) known += " " + alias.first;
  throw ValidationError("unknown character '" + name + "'; known:" + known);
}

void CharacterTable::add_alias(const std::string& alias, int index) {
  aliases_.emplace_back(alias, index);
}

std::vector<Cyclotomic> CharacterTable::decompose(
    const ClassFunction& f) const {
  std::vector<Cyclotomic> m;
  for (const auto& chi : irreducibles_) m.push_back(inner_product(f, chi));
  return m;
}

ClassFunction CharacterTable::classify(ClassFunction f) const {
  const auto m = decompose(f);
  bool character = true;
  Integer total = 0;
  for (const auto& x : m) {
    if (!x.is_rational() || x.to_rational().get_den() != 1 ||
        x.to_rational() < 0) {
      character = false;
      break;
    }
    total += x.to_rational().get_num();
  }
  f.is_character_ = character && total > 0;
  f.is_irreducible_ = character && total == 1;
  return f;
}

Cyclotomic CharacterTable::frobenius_schur(int k) const {
  const FiniteGroup& G = *group_;
  Cyclotomic s;
  for (int g = 0; g < G.order(); ++g) {
    s += irreducibles_.at(k).at_element(G.mul(g, g));
  }
  return s / Cyclotomic(static_cast<long>(G.order()));
}

}  // namespace wml
