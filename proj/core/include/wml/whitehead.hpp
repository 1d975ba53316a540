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
#ifndef WML_WHITEHEAD_HPP_
#define WML_WHITEHEAD_HPP_

#include <cstdint>
#include <vector>

#include "wml/limits.hpp"
#include "wml/word.hpp"

namespace wml {

// Whitehead automorphism of F_rank.
//
// Type I permutes the basis and inverts some of its elements:
// b_i -> b_{perm[i]}^{invert[i] ? -1 : 1}.
// Type II has a multiplier letter a and a letter set A with a in A and
// a^-1 not in A; each generator x != a^{+-1} maps to
//   a^-1 x a  if x in A and x^-1 in A,
//   x a       if x in A only,
//   a^-1 x    if x^-1 in A only,
//   x         otherwise.
class WhiteheadAut {
 public:
  enum class Kind { kTypeI, kTypeII };

  static WhiteheadAut identity(int rank);
  // Throws ValidationError unless perm is a permutation of 0..rank-1.
  static WhiteheadAut type_one(int rank, std::vector<int> perm,
                               std::vector<bool> invert);
  // Throws ValidationError when a is missing from subset, a^-1 is in it, or
  // a letter is out of range.
  static WhiteheadAut type_two(int rank, Letter multiplier,
                               const std::vector<Letter>& subset);

  Kind kind() const { return kind_; }
  int rank() const { return rank_; }
  // Image of b_generator, reduced.
  Word image(int generator) const;
  WhiteheadAut inverse() const;

  // Image of every letter code, unreduced; used by the fast paths.
  const std::vector<std::vector<int>>& letter_images() const {
    return images_;
  }

 private:
  WhiteheadAut(Kind kind, int rank) : kind_(kind), rank_(rank) {}
  void build_images();

  Kind kind_;
  int rank_;
  std::vector<int> perm_;
  std::vector<bool> invert_;
  int multiplier_ = 0;     // letter code
  std::uint64_t set_ = 0;  // bitmask over letter codes
  std::vector<std::vector<int>> images_;
};

// Throws ValidationError when ranks differ.
Word apply_whitehead(const WhiteheadAut& aut, const Word& w);

// Type-II automorphisms that can change cyclic length: neither the identity
// nor conjugation by the multiplier.
std::vector<WhiteheadAut> whitehead_type_two_moves(int rank);
// All type-I automorphisms, identity included.
std::vector<WhiteheadAut> whitehead_type_one_moves(int rank);

struct WhiteheadResult {
  int min_len = 0;
  // Cyclic words of length min_len in the Aut(F_r)-orbit of w reachable by
  // length-preserving Whitehead moves, one per conjugacy class, sorted by
  // canonical key.
  std::vector<CyclicWord> level_set;
};

// Throws BudgetError when w.rank() exceeds limits.whitehead_rank.
WhiteheadResult whitehead_minimize(const Word& w,
                                   const Limits& limits = Limits::defaults());
// Minimal length only; cheaper than whitehead_minimize.
int whitehead_min_length(const Word& w,
                         const Limits& limits = Limits::defaults());
bool is_primitive(const Word& w, const Limits& limits = Limits::defaults());
// Vacuously true for the identity.
bool lies_in_proper_free_factor(const Word& w,
                                const Limits& limits = Limits::defaults());

}  // namespace wml

#endif  // WML_WHITEHEAD_HPP_
