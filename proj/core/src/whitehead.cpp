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
#include "wml/whitehead.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <string>

#include "wml/error.hpp"

namespace wml {
namespace {

using Codes = std::vector<int>;

Codes to_codes(const Word& w) {
  Codes c;
  c.reserve(w.size());
  for (const Letter& l : w.letters()) c.push_back(l.code());
  return c;
}

Word from_codes(const Codes& c, int rank) {
  std::vector<Letter> letters;
  letters.reserve(c.size());
  for (int code : c) letters.push_back(Letter::from_code(code));
  return reduce(letters, rank);
}

// Free and then cyclic reduction in place.
void cyclic_reduce_codes(Codes& c) {
  std::size_t top = 0;
  for (int x : c) {
    if (top > 0 && c[top - 1] == (x ^ 1)) {
      --top;
    } else {
      c[top++] = x;
    }
  }
  c.resize(top);
  std::size_t lo = 0, hi = c.size();
  while (hi - lo >= 2 && c[lo] == (c[hi - 1] ^ 1)) {
    ++lo;
    --hi;
  }
  c = Codes(c.begin() + lo, c.begin() + hi);
}

Codes apply_codes(const std::vector<Codes>& images, const Codes& c) {
  Codes out;
  out.reserve(c.size() * 3);
  for (int x : c) out.insert(out.end(), images[x].begin(), images[x].end());
  cyclic_reduce_codes(out);
  return out;
}

Codes rotation_key(const Codes& c) {
  Codes best = c;
  Codes rot(c.size());
  for (std::size_t s = 1; s < c.size(); ++s) {
    for (std::size_t i = 0; i < c.size(); ++i) rot[i] = c[(s + i) % c.size()];
    if (rot < best) best = rot;
  }
  return best;
}

// Canonical representative under rotation and type-I automorphisms.
Codes relabel_key(const Codes& c, int rank) {
  return relabeling_key(from_codes(c, rank));
}

int support_of(const Codes& c, int rank) {
  std::vector<bool> seen(rank, false);
  int n = 0;
  for (int x : c) {
    if (!seen[x >> 1]) {
      seen[x >> 1] = true;
      ++n;
    }
  }
  return n;
}

void check_rank(const Word& w, const Limits& limits) {
  if (w.rank() > limits.whitehead_rank) {
    throw BudgetError("Whitehead minimization: rank " +
                      std::to_string(w.rank()) + " exceeds bound " +
                      std::to_string(limits.whitehead_rank));
  }
}

const std::vector<std::vector<Codes>>& type_two_images(int rank) {
  // Cached per thread so concurrent callers share nothing.
  thread_local std::vector<std::vector<std::vector<Codes>>> cache;
  if (static_cast<int>(cache.size()) <= rank) cache.resize(rank + 1);
  auto& slot = cache[rank];
  if (slot.empty()) {
    for (const auto& aut : whitehead_type_two_moves(rank)) {
      slot.push_back(aut.letter_images());
    }
  }
  return slot;
}

Codes minimize_codes(Codes c, int rank) {
  cyclic_reduce_codes(c);
  const auto& moves = type_two_images(rank);
  bool improved = true;
  while (improved) {
    improved = false;
    for (const auto& images : moves) {
      Codes img = apply_codes(images, c);
      if (img.size() < c.size()) {
        c = std::move(img);
        improved = true;
        break;
      }
    }
  }
  return c;
}

// Breadth-first search over length-preserving type-II moves, with states
// identified up to rotation and type-I automorphisms. Stops early and
// returns true as soon as stop(state) holds.
template <typename Stop>
bool explore_level(const Codes& start, int rank, std::vector<Codes>* reps,
                   Stop stop) {
  const auto& moves = type_two_images(rank);
  std::set<Codes> seen{relabel_key(start, rank)};
  std::deque<Codes> queue{start};
  while (!queue.empty()) {
    Codes cur = std::move(queue.front());
    queue.pop_front();
    if (stop(cur)) return true;
    for (const auto& images : moves) {
      Codes img = apply_codes(images, cur);
      if (img.size() != cur.size()) continue;
      if (seen.insert(relabel_key(img, rank)).second) queue.push_back(img);
    }
    if (reps) reps->push_back(std::move(cur));
  }
  return false;
}

}  // namespace

WhiteheadAut WhiteheadAut::identity(int rank) {
  std::vector<int> perm(rank);
  std::iota(perm.begin(), perm.end(), 0);
  return type_one(rank, std::move(perm), std::vector<bool>(rank, false));
}

WhiteheadAut WhiteheadAut::type_one(int rank, std::vector<int> perm,
                                    std::vector<bool> invert) {
  if (static_cast<int>(perm.size()) != rank ||
      static_cast<int>(invert.size()) != rank) {
    throw ValidationError("type-I automorphism: size mismatch");
  }
  std::vector<int> sorted = perm;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < rank; ++i) {
    if (sorted[i] != i) {
      throw ValidationError("type-I automorphism: not a permutation");
    }
  }
  WhiteheadAut a(Kind::kTypeI, rank);
  a.perm_ = std::move(perm);
  a.invert_ = std::move(invert);
  a.build_images();
  return a;
}

WhiteheadAut WhiteheadAut::type_two(int rank, Letter multiplier,
                                    const std::vector<Letter>& subset) {
  if (rank > 32) throw ValidationError("type-II automorphism: rank above 32");
  std::uint64_t set = 0;
  for (const Letter& l : subset) {
    if (l.generator < 0 || l.generator >= rank) {
      throw ValidationError("type-II automorphism: letter out of range");
    }
    set |= std::uint64_t{1} << l.code();
  }
  if (multiplier.generator < 0 || multiplier.generator >= rank) {
    throw ValidationError("type-II automorphism: multiplier out of range");
  }
  const int a = multiplier.code();
  if (!(set >> a & 1)) {
    throw ValidationError("type-II automorphism: set must contain multiplier");
  }
  if (set >> (a ^ 1) & 1) {
    throw ValidationError(
        "type-II automorphism: set must not contain the multiplier inverse");
  }
  WhiteheadAut w(Kind::kTypeII, rank);
  w.multiplier_ = a;
  w.set_ = set;
  w.build_images();
  return w;
}

void WhiteheadAut::build_images() {
  images_.assign(2 * rank_, {});
  for (int x = 0; x < rank_; ++x) {
    Codes img;
    if (kind_ == Kind::kTypeI) {
      img = {2 * perm_[x] + (invert_[x] ? 1 : 0)};
    } else {
      const int a = multiplier_;
      if (x == (a >> 1)) {
        img = {2 * x};
      } else {
        const bool in = set_ >> (2 * x) & 1;
        const bool inv_in = set_ >> (2 * x + 1) & 1;
        if (inv_in) img.push_back(a ^ 1);
        img.push_back(2 * x);
        if (in) img.push_back(a);
      }
    }
    Codes inv(img.rbegin(), img.rend());
    for (int& c : inv) c ^= 1;
    images_[2 * x] = std::move(img);
    images_[2 * x + 1] = std::move(inv);
  }
}

Word WhiteheadAut::image(int generator) const {
  return from_codes(images_.at(2 * generator), rank_);
}

WhiteheadAut WhiteheadAut::inverse() const {
  if (kind_ == Kind::kTypeI) {
    std::vector<int> perm(rank_);
    std::vector<bool> invert(rank_);
    for (int i = 0; i < rank_; ++i) {
      perm[perm_[i]] = i;
      invert[perm_[i]] = invert_[i];
    }
    return type_one(rank_, std::move(perm), std::move(invert));
  }
  std::vector<Letter> subset;
  for (int c = 0; c < 2 * rank_; ++c) {
    if (c == multiplier_) continue;
    if (set_ >> c & 1) subset.push_back(Letter::from_code(c));
  }
  subset.push_back(Letter::from_code(multiplier_ ^ 1));
  return type_two(rank_, Letter::from_code(multiplier_ ^ 1), subset);
}

Word apply_whitehead(const WhiteheadAut& aut, const Word& w) {
  if (aut.rank() != w.rank()) {
    throw ValidationError("apply_whitehead: rank mismatch");
  }
  Codes out;
  for (const Letter& l : w.letters()) {
    const auto& img = aut.letter_images()[l.code()];
    out.insert(out.end(), img.begin(), img.end());
  }
  return from_codes(out, w.rank());
}

std::vector<WhiteheadAut> whitehead_type_two_moves(int rank) {
  std::vector<WhiteheadAut> moves;
  for (int a = 0; a < 2 * rank; ++a) {
    std::vector<int> others;
    for (int c = 0; c < 2 * rank; ++c) {
      if ((c >> 1) != (a >> 1)) others.push_back(c);
    }
    const std::uint64_t full = (std::uint64_t{1} << others.size()) - 1;
    for (std::uint64_t mask = 1; mask < full; ++mask) {
      std::vector<Letter> subset{Letter::from_code(a)};
      for (std::size_t i = 0; i < others.size(); ++i) {
        if (mask >> i & 1) subset.push_back(Letter::from_code(others[i]));
      }
      moves.push_back(
          WhiteheadAut::type_two(rank, Letter::from_code(a), subset));
    }
  }
  return moves;
}

std::vector<WhiteheadAut> whitehead_type_one_moves(int rank) {
  std::vector<WhiteheadAut> moves;
  std::vector<int> perm(rank);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    for (std::uint32_t mask = 0; mask < (1u << rank); ++mask) {
      std::vector<bool> invert(rank);
      for (int i = 0; i < rank; ++i) invert[i] = mask >> i & 1;
      moves.push_back(WhiteheadAut::type_one(rank, perm, std::move(invert)));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return moves;
}

int whitehead_min_length(const Word& w, const Limits& limits) {
  check_rank(w, limits);
  return static_cast<int>(minimize_codes(to_codes(w), w.rank()).size());
}

WhiteheadResult whitehead_minimize(const Word& w, const Limits& limits) {
  check_rank(w, limits);
  const int rank = w.rank();
  const Codes start = minimize_codes(to_codes(w), rank);
  std::vector<Codes> reps;
  explore_level(start, rank, &reps, [](const Codes&) { return false; });

  std::set<Codes> keys;
  const auto type_one = whitehead_type_one_moves(rank);
  for (const Codes& r : reps) {
    for (const auto& aut : type_one) {
      keys.insert(rotation_key(apply_codes(aut.letter_images(), r)));
    }
  }
  WhiteheadResult result;
  result.min_len = static_cast<int>(start.size());
  for (const Codes& k : keys) {
    result.level_set.emplace_back(from_codes(k, rank));
  }
  return result;
}

bool is_primitive(const Word& w, const Limits& limits) {
  Codes c = to_codes(w);
  cyclic_reduce_codes(c);
  // A generator occurring exactly once makes w part of a basis.
  std::vector<int> count(w.rank(), 0);
  for (int x : c) ++count[x >> 1];
  if (std::find(count.begin(), count.end(), 1) != count.end()) return true;
  return whitehead_min_length(w, limits) == 1;
}

bool lies_in_proper_free_factor(const Word& w, const Limits& limits) {
  const int rank = w.rank();
  Codes c = to_codes(w);
  cyclic_reduce_codes(c);
  if (support_of(c, rank) < rank) return true;
  check_rank(w, limits);
  const Codes start = minimize_codes(std::move(c), rank);
  return explore_level(start, rank, nullptr, [rank](const Codes& s) {
    return support_of(s, rank) < rank;
  });
}

}  // namespace wml
