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
#include "wml/oracle.hpp"

#include <complex>
#include <numeric>
#include <random>
#include <unordered_map>

#include "parallel.hpp"
#include "wml/error.hpp"

namespace wml {
namespace {

constexpr std::int64_t kMaxTable = 4096;

struct VectorHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (int x : v) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
    return h;
  }
};

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Uniform integer in [0, bound) by rejection, identical on every platform.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

// Generators occurring in w, renumbered 0..k-1, with the word's letters
// rewritten accordingly.
struct CompactWord {
  std::vector<int> gens;          // original generator of each slot
  std::vector<std::pair<int, bool>> letters;  // (slot, inverted)
};

CompactWord compact(const Word& w) {
  CompactWord c;
  std::map<int, int> slot;
  for (const Letter& l : w.letters()) {
    auto [it, fresh] = slot.emplace(l.generator, static_cast<int>(c.gens.size()));
    if (fresh) c.gens.push_back(l.generator);
    c.letters.emplace_back(it->second, l.sign < 0);
  }
  return c;
}

// Histogram of w over all tuples drawn from per-slot element lists.
template <class Mul, class Inv>
std::vector<std::uint64_t> word_histogram(
    const CompactWord& cw, std::int64_t order,
    const std::vector<std::vector<std::int64_t>>& lists, std::int64_t identity,
    Mul mul, Inv inv, const Limits& limits) {
  const int r = static_cast<int>(cw.gens.size());
  std::vector<std::uint64_t> hist(order, 0);
  if (r == 0) {
    hist[identity] = 1;
    return hist;
  }
  double total = 1;
  for (const auto& l : lists) total *= static_cast<double>(l.size());
  if (total > static_cast<double>(limits.enumeration)) {
    throw BudgetError("brute force needs " + format_count(total) +
                      " tuples, above the budget of " + std::to_string(limits.enumeration));
  }
  const std::size_t first = lists[0].size();
  const int workers = internal::worker_count(limits.threads, first);
  std::vector<std::vector<std::uint64_t>> partial(workers, std::vector<std::uint64_t>(order, 0));
  internal::parallel_blocks(first, workers, [&](int worker, std::size_t b, std::size_t e) {
    auto& h = partial[worker];
    std::vector<std::size_t> pos(r, 0);
    std::vector<std::int64_t> val(r), val_inv(r);
    for (std::size_t f = b; f < e; ++f) {
      pos.assign(r, 0);
      pos[0] = f;
      for (int i = 0; i < r; ++i) {
        val[i] = lists[i][pos[i]];
        val_inv[i] = inv(val[i]);
      }
      while (true) {
        std::int64_t x = identity;
        for (const auto& [s, neg] : cw.letters) x = mul(x, neg ? val_inv[s] : val[s]);
        ++h[x];
        int i = 1;
        while (i < r && ++pos[i] == lists[i].size()) {
          pos[i] = 0;
          val[i] = lists[i][0];
          val_inv[i] = inv(val[i]);
          ++i;
        }
        if (i == r) break;
        val[i] = lists[i][pos[i]];
        val_inv[i] = inv(val[i]);
      }
    }
  });
  for (const auto& h : partial) {
    for (std::int64_t g = 0; g < order; ++g) hist[g] += h[g];
  }
  return hist;
}

Cyclotomic average(const std::vector<std::uint64_t>& hist,
                   const std::vector<Cyclotomic>& chi) {
  Cyclotomic s;
  Integer total = 0;
  for (std::size_t g = 0; g < hist.size(); ++g) {
    if (hist[g] == 0) continue;
    const Integer c(static_cast<unsigned long>(hist[g]));
    total += c;
    s += chi[g] * Cyclotomic(Rational(c));
  }
  return s * Cyclotomic(Rational(Integer(1), total));
}

std::vector<std::int64_t> all_elements(std::int64_t order) {
  std::vector<std::int64_t> v(order);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

}  // namespace

ExplicitWreath::ExplicitWreath(GroupPtr base, PermAction action, const Limits& limits)
    : base_(std::move(base)), action_(std::move(action)) {
  long double size = action_.order();
  for (int x = 0; x < action_.degree(); ++x) size *= base_->order();
  if (size > static_cast<long double>(limits.group_order)) {
    throw BudgetError("wreath product of order " + format_count(size) +
                      " exceeds the group budget of " + std::to_string(limits.group_order));
  }
  for (int x = 0; x < action_.degree(); ++x) coords_ *= base_->order();
  order_ = coords_ * static_cast<std::int64_t>(action_.order());
  const std::size_t s = action_.order();
  std::unordered_map<std::vector<int>, int, VectorHash> index;
  for (std::size_t i = 0; i < s; ++i) index.emplace(action_.elements()[i], static_cast<int>(i));
  perm_mul_.resize(s * s);
  std::vector<int> prod(action_.degree());
  for (std::size_t a = 0; a < s; ++a) {
    const auto& pa = action_.elements()[a];
    for (std::size_t b = 0; b < s; ++b) {
      const auto& pb = action_.elements()[b];
      for (int x = 0; x < action_.degree(); ++x) prod[x] = pb[pa[x]];
      perm_mul_[a * s + b] = index.at(prod);
    }
  }
}

ExplicitWreath ExplicitWreath::over_symmetric(GroupPtr base, int n, const Limits& limits) {
  return ExplicitWreath(std::move(base), PermAction::symmetric(n, limits), limits);
}

ExplicitWreath::Element ExplicitWreath::element(std::int64_t index) const {
  Element e;
  e.perm = static_cast<int>(index / coords_);
  std::int64_t rest = index % coords_;
  e.v.resize(degree());
  for (int x = 0; x < degree(); ++x) {
    e.v[x] = static_cast<int>(rest % base_->order());
    rest /= base_->order();
  }
  return e;
}

std::int64_t ExplicitWreath::index(const Element& e) const {
  std::int64_t idx = 0;
  for (int x = degree() - 1; x >= 0; --x) idx = idx * base_->order() + e.v[x];
  return idx + static_cast<std::int64_t>(e.perm) * coords_;
}

ExplicitWreath::Element ExplicitWreath::multiply(const Element& a, const Element& b) const {
  Element c;
  const auto& s1 = action_.elements()[a.perm];
  c.v.resize(degree());
  for (int x = 0; x < degree(); ++x) c.v[x] = base_->mul(a.v[x], b.v[s1[x]]);
  c.perm = perm_mul_[static_cast<std::size_t>(a.perm) * action_.order() + b.perm];
  return c;
}

ExplicitWreath::Element ExplicitWreath::inverse(const Element& a) const {
  // u_y = (v_{s^-1(y)})^-1.
  Element c;
  const auto& s = action_.elements()[a.perm];
  c.v.resize(degree());
  for (int x = 0; x < degree(); ++x) c.v[s[x]] = base_->inverse(a.v[x]);
  c.perm = action_.inverse(a.perm);
  return c;
}

std::int64_t ExplicitWreath::mul(std::int64_t a, std::int64_t b) const {
  return index(multiply(element(a), element(b)));
}

std::int64_t ExplicitWreath::inverse(std::int64_t a) const {
  return index(inverse(element(a)));
}

Cyclotomic ExplicitWreath::ind(const ClassFunction& phi, const Element& e) const {
  if (phi.group().get() != base_.get() && phi.group()->order() != base_->order()) {
    throw ValidationError("character lives on a different base group");
  }
  const auto& s = action_.elements()[e.perm];
  Cyclotomic sum;
  for (int x = 0; x < degree(); ++x) {
    if (s[x] == x) sum += phi.at_element(e.v[x]);
  }
  return sum;
}

std::vector<Cyclotomic> ExplicitWreath::ind_values(const ClassFunction& phi) const {
  std::vector<Cyclotomic> out(order_);
  for (std::int64_t i = 0; i < order_; ++i) out[i] = ind(phi, element(i));
  return out;
}

Cyclotomic ExplicitWreath::ind_by_induction(const ClassFunction& phi,
                                            const Element& g) const {
  Cyclotomic sum;
  for (std::int64_t i = 0; i < order_; ++i) {
    const Element k = element(i);
    const Element c = multiply(multiply(k, g), inverse(k));
    if (action_.elements()[c.perm][0] == 0) sum += phi.at_element(c.v[0]);
  }
  long stabilizer = 0;
  for (const auto& s : action_.elements()) stabilizer += s[0] == 0;
  return sum * Cyclotomic(Rational(1, coords_ * stabilizer));
}

std::shared_ptr<const FiniteGroup> ExplicitWreath::to_group() const {
  if (order_ > kMaxTable) {
    throw BudgetError("table of a group of order " + std::to_string(order_) +
                      " exceeds " + std::to_string(kMaxTable) + " elements");
  }
  const int n = static_cast<int>(order_);
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  std::vector<Element> el(n);
  for (int i = 0; i < n; ++i) el[i] = element(i);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      table[static_cast<std::size_t>(a) * n + b] =
          static_cast<int>(index(multiply(el[a], el[b])));
    }
  }
  return std::make_shared<const FiniteGroup>(FiniteGroup::from_table(
      n, std::move(table), base_->name() + " wr " + action_.name()));
}

IteratedWreath build_iterated_wreath(const ClassFunction& phi,
                                     const std::vector<int>& ns,
                                     const Limits& limits) {
  if (ns.empty()) throw ValidationError("need at least one degree");
  GroupPtr g = phi.group();
  ClassFunction chi = phi;
  for (int n : ns) {
    const ExplicitWreath w = ExplicitWreath::over_symmetric(g, n, limits);
    const std::vector<Cyclotomic> values = w.ind_values(chi);
    g = w.to_group();
    chi = ClassFunction::from_elements(g, values, "Ind" + std::to_string(n) + "(" + chi.name() + ")");
  }
  return {g, chi};
}

Cyclotomic brute_expectation(const Word& w, const FiniteGroup& k,
                             const std::vector<Cyclotomic>& chi, const Limits& limits) {
  if (static_cast<int>(chi.size()) != k.order()) {
    throw ValidationError("character has the wrong number of values");
  }
  const CompactWord cw = compact(reduce(w.letters(), w.rank()));
  std::vector<std::vector<std::int64_t>> lists(cw.gens.size(), all_elements(k.order()));
  const auto hist = word_histogram(
      cw, k.order(), lists, k.identity(),
      [&](std::int64_t a, std::int64_t b) -> std::int64_t { return k.mul(static_cast<int>(a), static_cast<int>(b)); },
      [&](std::int64_t a) -> std::int64_t { return k.inverse(static_cast<int>(a)); }, limits);
  return average(hist, chi);
}

Cyclotomic brute_expectation(const Word& w, const ClassFunction& chi, const Limits& limits) {
  const FiniteGroup& k = *chi.group();
  std::vector<Cyclotomic> values(k.order());
  for (int g = 0; g < k.order(); ++g) values[g] = chi.at_element(g);
  return brute_expectation(w, k, values, limits);
}

Cyclotomic brute_expectation_restricted(const Word& w, const ExplicitWreath& k,
                                        const std::vector<Cyclotomic>& chi,
                                        const std::vector<std::vector<std::int64_t>>& support,
                                        const Limits& limits) {
  if (static_cast<std::int64_t>(chi.size()) != k.order()) {
    throw ValidationError("character has the wrong number of values");
  }
  const CompactWord cw = compact(reduce(w.letters(), w.rank()));
  std::vector<std::vector<std::int64_t>> lists;
  for (int g : cw.gens) {
    if (support.empty()) {
      lists.push_back(all_elements(k.order()));
    } else {
      lists.push_back(support.size() == 1 ? support[0] : support.at(g));
      if (lists.back().empty()) throw ValidationError("empty support");
    }
  }
  if (k.order() <= kMaxTable) {
    const auto group = k.to_group();
    const auto hist = word_histogram(
        cw, k.order(), lists, 0,
        [&](std::int64_t a, std::int64_t b) -> std::int64_t { return group->mul(static_cast<int>(a), static_cast<int>(b)); },
        [&](std::int64_t a) -> std::int64_t { return group->inverse(static_cast<int>(a)); }, limits);
    return average(hist, chi);
  }
  const auto hist = word_histogram(
      cw, k.order(), lists, k.identity(),
      [&](std::int64_t a, std::int64_t b) { return k.mul(a, b); },
      [&](std::int64_t a) { return k.inverse(a); }, limits);
  return average(hist, chi);
}

Cyclotomic brute_expectation(const Word& w, const ExplicitWreath& k,
                             const std::vector<Cyclotomic>& chi, const Limits& limits) {
  return brute_expectation_restricted(w, k, chi, {}, limits);
}

Cyclotomic norm_squared(const std::vector<Cyclotomic>& chi) {
  Cyclotomic s;
  for (const auto& c : chi) s += c * c.conj();
  return s * Cyclotomic(Rational(1, static_cast<long>(chi.size())));
}

SampleEstimate monte_carlo_expectation(const Word& w, const ExplicitWreath& k,
                                       const std::vector<Cyclotomic>& chi,
                                       std::uint64_t samples, std::uint64_t seed,
                                       const Limits& limits) {
  constexpr int kStreams = 16;
  const CompactWord cw = compact(reduce(w.letters(), w.rank()));
  std::vector<std::complex<double>> value(chi.size());
  for (std::size_t i = 0; i < chi.size(); ++i) value[i] = chi[i].to_complex();
  std::shared_ptr<const FiniteGroup> table;
  if (k.order() <= kMaxTable) table = k.to_group();
  auto mul = [&](std::int64_t a, std::int64_t b) -> std::int64_t {
    return table ? table->mul(static_cast<int>(a), static_cast<int>(b)) : k.mul(a, b);
  };
  auto inv = [&](std::int64_t a) -> std::int64_t {
    return table ? table->inverse(static_cast<int>(a)) : k.inverse(a);
  };
  struct Acc {
    long double re = 0, im = 0, re2 = 0;
  };
  std::vector<Acc> acc(kStreams);
  internal::parallel_blocks(kStreams, limits.threads, [&](int, std::size_t b, std::size_t e) {
    for (std::size_t s = b; s < e; ++s) {
      std::mt19937_64 rng(splitmix64(seed ^ (0x632be59bd9b4e019ull * (s + 1))));
      const std::uint64_t count = samples / kStreams + (s < samples % kStreams ? 1 : 0);
      std::vector<std::int64_t> val(cw.gens.size()), val_inv(cw.gens.size());
      for (std::uint64_t t = 0; t < count; ++t) {
        for (std::size_t i = 0; i < val.size(); ++i) {
          val[i] = static_cast<std::int64_t>(bounded(rng, static_cast<std::uint64_t>(k.order())));
          val_inv[i] = inv(val[i]);
        }
        std::int64_t x = k.identity();
        for (const auto& [slot, neg] : cw.letters) x = mul(x, neg ? val_inv[slot] : val[slot]);
        acc[s].re += value[x].real();
        acc[s].im += value[x].imag();
        acc[s].re2 += value[x].real() * value[x].real();
      }
    }
  });
  Acc total;
  for (const Acc& a : acc) {
    total.re += a.re;
    total.im += a.im;
    total.re2 += a.re2;
  }
  SampleEstimate est;
  est.samples = samples;
  est.seed = seed;
  if (samples == 0) return est;
  const long double n = static_cast<long double>(samples);
  const long double mean = total.re / n;
  est.mean = static_cast<double>(mean);
  est.mean_imag = static_cast<double>(total.im / n);
  if (samples > 1) {
    long double var = (total.re2 - n * mean * mean) / (n - 1);
    if (var < 0) var = 0;
    est.stderr_ = static_cast<double>(std::sqrt(var / n));
  }
  return est;
}

namespace {

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::size_t> parent;
};

long tuple_orbits(const PermAction& action, int t, bool injective_only,
                  const Limits& limits) {
  if (t < 0) throw ValidationError("tuple length must be non-negative");
  const std::size_t d = action.degree();
  long double size = 1;
  for (int i = 0; i < t; ++i) size *= d;
  if (size > static_cast<long double>(limits.enumeration)) {
    throw BudgetError("orbit counting over " + format_count(size) +
                      " tuples exceeds the budget");
  }
  const std::size_t n = static_cast<std::size_t>(size);
  std::vector<bool> keep(n, true);
  if (injective_only) {
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t r = i;
      std::vector<bool> seen(d, false);
      for (int c = 0; c < t; ++c) {
        const std::size_t x = r % d;
        r /= d;
        if (seen[x]) keep[i] = false;
        seen[x] = true;
      }
    }
  }
  UnionFind uf(n);
  for (const auto& g : action.generators()) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!keep[i]) continue;
      std::size_t r = i, img = 0, scale = 1;
      for (int c = 0; c < t; ++c) {
        img += static_cast<std::size_t>(g[r % d]) * scale;
        r /= d;
        scale *= d;
      }
      uf.unite(i, img);
    }
  }
  long orbits = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (keep[i] && uf.find(i) == i) ++orbits;
  }
  return orbits;
}

}  // namespace

long orbit_count(const PermAction& action, int t, const Limits& limits) {
  return tuple_orbits(action, t, false, limits);
}

long injective_orbit_count(const PermAction& action, int t, const Limits& limits) {
  return tuple_orbits(action, t, true, limits);
}

}  // namespace wml
