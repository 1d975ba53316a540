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
#ifndef WML_CHARACTER_SPEC_HPP_
#define WML_CHARACTER_SPEC_HPP_

#include <optional>
#include <string>

#include "wml/class_function.hpp"

namespace wml {

// Character whose word measures are requested: a class function of a finite
// group, the standard embedding C_m -> S^1 (m = infinity is the identity
// character of the circle), or the trivial character.
class CharacterSpec {
 public:
  enum class Kind { kFinite, kCircle, kTrivial };

  static CharacterSpec finite(ClassFunction phi);
  // modulus >= 2, or nullopt for the circle itself.
  static CharacterSpec circle(std::optional<int> modulus);
  static CharacterSpec trivial();

  Kind kind() const { return kind_; }
  // Requires kind() == kFinite.
  const ClassFunction& function() const;
  std::optional<int> modulus() const { return modulus_; }

  // phi(1).
  Cyclotomic dimension() const;
  // Trivial, or a finite class function identically 1.
  bool is_trivial_character() const;
  std::string name() const;

 private:
  CharacterSpec() = default;

  Kind kind_ = Kind::kTrivial;
  std::optional<ClassFunction> function_;
  std::optional<int> modulus_;
};

}  // namespace wml

#endif  // WML_CHARACTER_SPEC_HPP_
