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
#include "wml/word.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <limits>

#include "wml/error.hpp"

namespace wml {
namespace {

// Letter named by its lowercase character.
struct RawLetter {
  char name;
  int sign;
};
using Raw = std::vector<RawLetter>;

constexpr std::size_t kMaxRawLength = 1'000'000;

Raw raw_inverse(const Raw& r) {
  Raw out(r.rbegin(), r.rend());
  for (auto& l : out) l.sign = -l.sign;
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Raw parse() {
    skip_space();
    if (pos_ == text_.size()) return {};
    if (text_[pos_] == '1') {
      ++pos_;
      skip_space();
      if (pos_ != text_.size()) fail("unexpected token after identity '1'");
      return {};
    }
    Raw r = word();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected token");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    std::string token = pos_ < text_.size() ? std::string(1, text_[pos_])
                                            : std::string("end of input");
    throw ValidationError("word parse error at position " +
                          std::to_string(pos_) + " ('" + token + "'): " + what);
  }

  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool at_atom_start() {
    skip_space();
    if (pos_ >= text_.size()) return false;
    const char c = text_[pos_];
    return std::isalpha(static_cast<unsigned char>(c)) || c == '[' || c == '(';
  }

  Raw word() {
    if (!at_atom_start()) fail("expected a letter, '[' or '('");
    Raw out;
    while (at_atom_start()) {
      Raw f = factor();
      out.insert(out.end(), f.begin(), f.end());
      if (out.size() > kMaxRawLength) fail("word too long");
    }
    return out;
  }

  Raw factor() {
    Raw a = atom();
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      skip_space();
      const long k = integer();
      if (k == 0) return {};
      const Raw base = k < 0 ? raw_inverse(a) : a;
      const unsigned long reps = static_cast<unsigned long>(std::labs(k));
      if (!base.empty() && reps > kMaxRawLength / base.size()) {
        fail("exponent too large");
      }
      Raw out;
      out.reserve(base.size() * reps);
      for (unsigned long i = 0; i < reps; ++i) {
        out.insert(out.end(), base.begin(), base.end());
      }
      return out;
    }
    return a;
  }

  long integer() {
    const std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      ++pos_;
    }
    const std::size_t digits = pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (pos_ == digits || pos_ - digits > 9) {
      pos_ = start;
      fail("expected an integer exponent");
    }
    return std::stol(std::string(text_.substr(start, pos_ - start)));
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c) {
      fail(std::string("expected '") + c + "'");
    }
    ++pos_;
  }

  Raw atom() {
    skip_space();
    const char c = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c))) {
      ++pos_;
      const bool upper = std::isupper(static_cast<unsigned char>(c));
      return {RawLetter{static_cast<char>(std::tolower(c)), upper ? -1 : 1}};
    }
    if (c == '(') {
      ++pos_;
      Raw w = word();
      expect(')');
      return w;
    }
    ++pos_;  // '['
    Raw u = word();
    expect(',');
    Raw v = word();
    expect(']');
    Raw out = u;
    out.insert(out.end(), v.begin(), v.end());
    Raw ui = raw_inverse(u), vi = raw_inverse(v);
    out.insert(out.end(), ui.begin(), ui.end());
    out.insert(out.end(), vi.begin(), vi.end());
    return out;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Word reduce(std::span<const Letter> letters, int rank) {
  Word w(rank);
  w.letters_.reserve(letters.size());
  for (const Letter& l : letters) {
    if (l.generator < 0 || l.generator >= rank || (l.sign != 1 && l.sign != -1)) {
      throw ValidationError("letter generator " + std::to_string(l.generator) +
                            " out of range for rank " + std::to_string(rank));
    }
    if (!w.letters_.empty() && w.letters_.back() == l.inverse()) {
      w.letters_.pop_back();
    } else {
      w.letters_.push_back(l);
    }
  }
  return w;
}

Word Word::inverse() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    out.push_back(it->inverse());
  }
  return reduce(out, rank_);
}

Word Word::power(long k) const {
  const Word base = k < 0 ? inverse() : *this;
  Word out(rank_);
  for (long i = 0; i < std::labs(k); ++i) out = out * base;
  return out;
}

Word Word::with_rank(int rank) const { return reduce(letters_, rank); }

int Word::support_size() const {
  std::vector<bool> seen(rank_, false);
  int count = 0;
  for (const Letter& l : letters_) {
    if (!seen[l.generator]) {
      seen[l.generator] = true;
      ++count;
    }
  }
  return count;
}

std::vector<long> Word::exponent_sums() const {
  std::vector<long> sums(rank_, 0);
  for (const Letter& l : letters_) sums[l.generator] += l.sign;
  return sums;
}

std::string Word::to_string(std::string_view alphabet) const {
  if (letters_.empty()) return "1";
  std::string out;
  out.reserve(letters_.size());
  for (const Letter& l : letters_) {
    const char c = alphabet.at(l.generator);
    out.push_back(l.sign > 0 ? c : static_cast<char>(std::toupper(c)));
  }
  return out;
}

Word operator*(const Word& a, const Word& b) {
  std::vector<Letter> all = a.letters_;
  all.insert(all.end(), b.letters_.begin(), b.letters_.end());
  return reduce(all, std::max(a.rank_, b.rank_));
}

CyclicWord::CyclicWord(Word w) : word_(std::move(w)) {
  const auto& l = word_.letters();
  if (l.size() >= 2 && l.front() == l.back().inverse()) {
    throw std::invalid_argument("CyclicWord: word is not cyclically reduced");
  }
}

std::vector<Letter> CyclicWord::canonical_key() const {
  const auto& l = word_.letters();
  const std::size_t n = l.size();
  std::size_t best = 0;
  for (std::size_t s = 1; s < n; ++s) {
    for (std::size_t i = 0; i < n; ++i) {
      const Letter& x = l[(s + i) % n];
      const Letter& y = l[(best + i) % n];
      if (x == y) continue;
      if (x < y) best = s;
      break;
    }
  }
  std::vector<Letter> key;
  key.reserve(n);
  for (std::size_t i = 0; i < n; ++i) key.push_back(l[(best + i) % n]);
  return key;
}

std::pair<CyclicWord, Word> cyclic_reduce(const Word& w) {
  const auto& l = w.letters();
  std::size_t lo = 0, hi = l.size();
  while (hi - lo >= 2 && l[lo] == l[hi - 1].inverse()) {
    ++lo;
    --hi;
  }
  std::vector<Letter> core(l.begin() + lo, l.begin() + hi);
  std::vector<Letter> conj(l.begin(), l.begin() + lo);
  return {CyclicWord(reduce(core, w.rank())), reduce(conj, w.rank())};
}

std::pair<Word, int> primitive_root(const Word& w) {
  const Word c = cyclic_reduce(w).first.word();
  const std::size_t n = c.size();
  for (std::size_t p = 1; p < n; ++p) {
    if (n % p != 0) continue;
    bool periodic = true;
    for (std::size_t i = p; i < n && periodic; ++i) {
      periodic = c[i] == c[i - p];
    }
    if (periodic) {
      std::vector<Letter> root(c.letters().begin(), c.letters().begin() + p);
      return {reduce(root, c.rank()), static_cast<int>(n / p)};
    }
  }
  return {c, 1};
}

std::vector<int> relabeling_key(const Word& w) {
  const CyclicWord c = cyclic_reduce(w).first;
  const auto& l = c.word().letters();
  const std::size_t n = l.size();
  std::vector<int> best, cur(n);
  std::vector<int> rename(w.rank());
  for (std::size_t s = 0; s < std::max<std::size_t>(n, 1); ++s) {
    std::fill(rename.begin(), rename.end(), -1);
    int next = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const int x = l[(s + i) % n].code();
      const int g = x >> 1;
      // First occurrence of g becomes the positive letter of the next name.
      if (rename[g] < 0) rename[g] = 2 * next++ + (x & 1);
      cur[i] = 2 * (rename[g] >> 1) + ((x & 1) ^ (rename[g] & 1));
    }
    if (s == 0 || cur < best) best = cur;
  }
  return best;
}

ParsedWord parse_word_with_alphabet(std::string_view text,
                                    std::string_view alphabet, int min_rank) {
  const Raw raw = Parser(text).parse();
  std::string names(alphabet);
  if (names.empty()) {
    for (const auto& l : raw) {
      if (names.find(l.name) == std::string::npos) names.push_back(l.name);
    }
    std::sort(names.begin(), names.end());
  }
  std::vector<Letter> letters;
  letters.reserve(raw.size());
  for (const auto& l : raw) {
    const auto idx = names.find(l.name);
    if (idx == std::string::npos) {
      throw ValidationError(std::string("letter '") + l.name +
                            "' is not in the alphabet '" + names + "'");
    }
    letters.push_back({static_cast<int>(idx), l.sign});
  }
  const int rank = std::max<int>(static_cast<int>(names.size()), min_rank);
  // Pad the alphabet so every generator has a printable name.
  for (char c = 'a'; static_cast<int>(names.size()) < rank && c <= 'z'; ++c) {
    if (names.find(c) == std::string::npos) names.push_back(c);
  }
  return {reduce(letters, rank), names};
}

Word parse_word(std::string_view text, int min_rank) {
  return parse_word_with_alphabet(text, {}, min_rank).word;
}

}  // namespace wml
