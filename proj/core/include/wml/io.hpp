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
#ifndef WML_IO_HPP_
#define WML_IO_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "wml/character_spec.hpp"
#include "wml/class_function.hpp"
#include "wml/core_graph.hpp"
#include "wml/cyclotomic.hpp"
#include "wml/limits.hpp"
#include "wml/multivariate.hpp"
#include "wml/rational_function.hpp"
#include "wml/wreath_measures.hpp"

namespace wml {

// Keys keep insertion order so documents print in schema order.
using Json = nlohmann::ordered_json;

// Rationals are "p/q" strings (integers without "/1"). Other cyclotomics
// are {conductor, coeffs}, coeffs[k] multiplying zeta_conductor^k.
// Parsers also accept plain JSON integers and throw ValidationError on
// anything else.
Json to_json(const Cyclotomic& c);
Cyclotomic cyclotomic_from_json(const Json& j);

// Coefficient list, lowest degree first.
Json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j);

// {num, den, text}; text is informational and ignored when parsing.
Json to_json(const RationalFunctionN& f);
RationalFunctionN rational_function_from_json(const Json& j);

// {vars, terms: [{coeff, factors: [rational function per variable]}], text}.
Json to_json(const SeparableSum& s);
SeparableSum separable_sum_from_json(const Json& j);

// {rank, vertices, root, edges: [{src, dst, label}]}, edges in canonical
// order, so equal documents mean isomorphic graphs.
Json to_json(const CoreGraph& g);
CoreGraph graph_from_json(const Json& j);

// Integer, or the string "inf".
Json pi_to_json(const std::optional<int>& pi);
std::string pi_to_string(const std::optional<int>& pi);

// {word, phi, pi, crit: [{graph, rank, value}], crit_value, witnesses,
// partial, skipped}. Words print over the given alphabet.
Json to_json(const WitnessReport& r, std::string_view alphabet);

// {levels, chains: [{graphs, value_terms: {weight, factors}}], symbolic}.
Json to_json(const IteratedExpectation& e);

// A finite group with the class functions supplied for it. When they form
// a verified character table it is kept and every entry is flagged
// irreducible; otherwise each entry carries the flags of
// ClassFunction::screened().
struct GroupSpec {
  GroupPtr group;
  std::optional<CharacterTable> table;
  std::vector<ClassFunction> characters;
  // Why a complete set of functions was not accepted as a table, if so.
  std::string table_note;

  // By name or "#k"; throws ValidationError listing the known names.
  const ClassFunction& character(const std::string& name) const;
};

// Accepts
//   {order, mult: [[...]], classes?: [[...]], characters?: [...]}
//   {perm_generators: [[...]], class_representatives?: [[...]],
//    characters?: [...]}
// where a character is {name?, conductor?, values: [v per class]} and each
// v is a rational or a list of rational coefficients of powers of
// zeta_conductor. Permutations act on 0..d-1. With perm_generators,
// character values follow class_representatives when given, otherwise the
// library's class order.
GroupSpec group_spec_from_json(const Json& j, const std::string& name = "",
                               const Limits& limits = Limits::defaults());
// A builtin name, an inline JSON object, or the path of a JSON file.
GroupSpec parse_group_spec(const std::string& text,
                           const Limits& limits = Limits::defaults());
// Table form; re-parses to the same group and class order.
Json to_json(const GroupSpec& g);

// "trivial", "circle:inf", "circle:<m>", or a character name of group.
// Throws ValidationError when a group character is requested without a
// group.
CharacterSpec parse_character_spec(const std::string& text,
                                   const GroupSpec* group);

}  // namespace wml

#endif  // WML_IO_HPP_
