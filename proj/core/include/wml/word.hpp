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
#ifndef WML_WORD_HPP_
#define WML_WORD_HPP_

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wml {

inline constexpr std::string_view kDefaultAlphabet = "abcdefghijklmnopqrstuvwxyz";

// A signed generator b_i^{+-1}. The packed code 2*generator + (sign < 0) is
// used wherever letters index arrays; code ^ 1 is the inverse letter.
struct Letter {
  int generator = 0;
  int sign = 1;

  static Letter from_code(int code) { return {code >> 1, (code & 1) ? -1 : 1}; }
  int code() const { return 2 * generator + (sign < 0 ? 1 : 0); }
  Letter inverse() const { return {generator, -sign}; }

  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

// Freely reduced word over the basis b_0, ..., b_{rank-1}.
class Word {
 public:
  explicit Word(int rank = 0) : rank_(rank) {}

  int rank() const { return rank_; }
  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }

  Word inverse() const;
  Word power(long k) const;
  // Same letters viewed in a free group of larger rank.
  Word with_rank(int rank) const;
  // Number of distinct generators occurring in the word.
  int support_size() const;
  // Signed exponent sum of each generator.
  std::vector<long> exponent_sums() const;

  // Lowercase letters for generators, uppercase for inverses; "1" for the
  // identity. Requires rank <= alphabet size.
  std::string to_string(std::string_view alphabet = kDefaultAlphabet) const;

  friend Word operator*(const Word& a, const Word& b);
  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word& a, const Word& b) {
    return a.letters_ <=> b.letters_;
  }

 private:
  friend Word reduce(std::span<const Letter> letters, int rank);
  int rank_;
  std::vector<Letter> letters_;
};

// Free reduction. Throws ValidationError when a generator index is not below
// rank.
Word reduce(std::span<const Letter> letters, int rank);

// Cyclically reduced word, considered up to rotation by canonical_key().
class CyclicWord {
 public:
  CyclicWord() = default;
  // Requires w to be cyclically reduced.
  explicit CyclicWord(Word w);

  const Word& word() const { return word_; }
  int rank() const { return word_.rank(); }
  std::size_t size() const { return word_.size(); }
  // Lexicographically least rotation; equal keys mean conjugate words.
  std::vector<Letter> canonical_key() const;
  std::string to_string(std::string_view alphabet = kDefaultAlphabet) const {
    return word_.to_string(alphabet);
  }

  friend bool operator==(const CyclicWord& a, const CyclicWord& b) {
    return a.rank() == b.rank() && a.canonical_key() == b.canonical_key();
  }

 private:
  Word word_;
};

// Returns (c, u) with w = u c u^-1 and c cyclically reduced.
std::pair<CyclicWord, Word> cyclic_reduce(const Word& w);

// If w is conjugate to u^k with k >= 2 maximal, returns (u cyclically
// reduced, k); otherwise (cyclic reduction of w, 1). The identity maps to
// (identity, 1).
std::pair<Word, int> primitive_root(const Word& w);

// Canonical form of w up to conjugation, permutation of the generators and
// inversion of individual generators, as letter codes. Word measures on any
// group are invariant under all three, so this keys measure caches.
std::vector<int> relabeling_key(const Word& w);

struct ParsedWord {
  Word word;
  // alphabet[i] is the input character naming generator i.
  std::string alphabet;
};

// Parses the word grammar
//   word   := factor+
//   factor := atom ('^' int)?
//   atom   := [a-z] | [A-Z] | '[' word ',' word ']' | '(' word ')'
// with whitespace ignored, uppercase meaning inverse and [u,v] = u v u^-1 v^-1.
// "1" and the empty string denote the identity. Generators are numbered by
// the sorted distinct letters of the input unless an alphabet is supplied;
// the rank is at least min_rank. Errors name the offending position.
ParsedWord parse_word_with_alphabet(std::string_view text,
                                    std::string_view alphabet = {},
                                    int min_rank = 0);
Word parse_word(std::string_view text, int min_rank = 0);

}  // namespace wml

#endif  // WML_WORD_HPP_
