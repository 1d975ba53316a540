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

#ifndef WML_RATIONAL_HPP_
#define WML_RATIONAL_HPP_

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace wml {

using Integer = mpz_class;
using Rational = mpq_class;

// "p/q" in lowest terms, or "p" when q = 1.
std::string to_string(const Rational& q);

// Accepts "p", "p/q" and "-p/q"; the result is canonicalized. Throws
// ValidationError on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

}  // namespace wml

#endif  // WML_RATIONAL_HPP_
