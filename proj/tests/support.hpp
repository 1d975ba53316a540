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
#ifndef WML_TESTS_SUPPORT_HPP_
#define WML_TESTS_SUPPORT_HPP_

#include <algorithm>
#include <cctype>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "wml/cyclotomic.hpp"
#include "wml/rational_function.hpp"
#include "wml/word.hpp"

namespace wml::testing {

// Words in tests are spelled over a fixed alphabet so that "b" alone still
// means the second generator.
inline Word W(const std::string& text, int rank = 0) {
  int used = 0;
  for (char c : text) {
    if (std::isalpha(static_cast<unsigned char>(c))) {
      used = std::max(used, std::tolower(static_cast<unsigned char>(c)) - 'a' + 1);
    }
  }
  const std::string alphabet = std::string(kDefaultAlphabet).substr(0, used);
  return parse_word_with_alphabet(text, alphabet, rank).word;
}

// Words as parsed by the command line: generators numbered by sorted letters.
inline Word P(const std::string& text) { return parse_word(text); }

inline Cyclotomic Q(long p, long q = 1) { return Cyclotomic(Rational(p, q)); }

// Every reduced word of length exactly len over rank generators.
inline std::vector<Word> all_words(int rank, int len) {
  std::vector<Word> out;
  std::vector<Letter> cur;
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(cur.size()) == len) {
      out.push_back(reduce(cur, rank));
      return;
    }
    for (int code = 0; code < 2 * rank; ++code) {
      const Letter l = Letter::from_code(code);
      if (!cur.empty() && cur.back() == l.inverse()) continue;
      cur.push_back(l);
      self(self);
      cur.pop_back();
    }
  };
  rec(rec);
  return out;
}

inline Word random_word(std::mt19937_64& rng, int rank, int len) {
  std::vector<Letter> letters;
  std::uniform_int_distribution<int> pick(0, 2 * rank - 1);
  for (int i = 0; i < len; ++i) letters.push_back(Letter::from_code(pick(rng)));
  return reduce(letters, rank);
}

}  // namespace wml::testing

namespace wml {
// Readable gtest failure messages.
inline void PrintTo(const Cyclotomic& c, std::ostream* os) { *os << c.to_string(); }
inline void PrintTo(const Word& w, std::ostream* os) { *os << w.to_string(); }
inline void PrintTo(const RationalFunctionN& f, std::ostream* os) { *os << f.to_string(); }
}  // namespace wml

#endif  // WML_TESTS_SUPPORT_HPP_
