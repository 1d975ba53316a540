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
#include "wml/limits.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "wml/error.hpp"

namespace wml {

std::uint64_t parse_budget(const std::string& text) {
  std::size_t used = 0;
  double value = 0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    throw ValidationError("malformed budget '" + text + "'");
  }
  if (used != text.size() || !(value >= 1) || value > 1e18 ||
      value != std::floor(value)) {
    throw ValidationError("malformed budget '" + text + "'");
  }
  return static_cast<std::uint64_t>(value);
}

std::string format_count(long double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, x < 1e15L ? "%.0Lf" : "%.3Le", x);
  return buf;
}

const Limits& Limits::defaults() {
  static const Limits limits = [] {
    Limits l;
    if (const char* env = std::getenv("WML_BUDGET"); env && *env) {
      const std::uint64_t b = parse_budget(env);
      l.enumeration = b;
      l.group_order = b;
    }
    return l;
  }();
  return limits;
}

}  // namespace wml
