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

#ifndef WML_LIMITS_HPP_
#define WML_LIMITS_HPP_

#include <cstdint>
#include <string>

namespace wml {

// Size guards shared by every enumeration in the library. Each operation that
// can blow up takes a Limits by const reference and throws BudgetError when
// the relevant bound would be crossed.
struct Limits {
  // Tuples visited by exhaustive word-measure enumeration.
  std::uint64_t enumeration = 10'000'000;
  // Elements of an explicitly constructed group (wreath products, closures).
  std::uint64_t group_order = 100'000;
  // Maximal rank handled by Whitehead minimization.
  int whitehead_rank = 4;
  // Maximal word length for quotient enumeration.
  int quotient_word_length = 16;
  // Worker threads used by parallel enumerations; 0 selects hardware count.
  int threads = 1;

  // Library defaults, with WML_BUDGET (if set to a positive integer)
  // overriding both the enumeration and the group-order budget.
  static const Limits& defaults();
};

// Parses a budget override such as "1e7" or "5000000". Throws
// ValidationError on malformed input.
std::uint64_t parse_budget(const std::string& text);

// A work estimate for diagnostics: exact digits below 1e15, else "1.2e+20".
std::string format_count(long double x);

}  // namespace wml

#endif  // WML_LIMITS_HPP_
