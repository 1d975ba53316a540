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
#include "wml/io.hpp"

#include <fstream>
#include <numeric>
#include <sstream>

#include "wml/builtin_groups.hpp"
#include "wml/error.hpp"
#include "wml/mobius.hpp"
#include "wml/perm_action.hpp"

namespace wml {
namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ValidationError(where + ": " + what);
}

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(where, std::string("missing field '") + key + "'");
  return *it;
}

long as_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where, "expected an integer, got " + j.dump());
  return j.get<long>();
}

const Json& as_array(const Json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array, got " + j.dump());
  return j;
}

Rational rational_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const ValidationError& e) {
      fail(where, e.what());
    }
  }
  fail(where, "expected a rational \"p/q\", got " + j.dump());
}

std::vector<int> int_list(const Json& j, const std::string& where) {
  std::vector<int> out;
  for (std::size_t i = 0; i < as_array(j, where).size(); ++i) {
    out.push_back(static_cast<int>(
        as_int(j[i], where + "[" + std::to_string(i) + "]")));
  }
  return out;
}

Json value_over(const Cyclotomic& c, int conductor) {
  if (c.is_rational()) return to_string(c.to_rational());
  Json coeffs = Json::array();
  const Cyclotomic lifted = c.lifted(conductor);
  for (const Rational& q : lifted.coefficients()) {
    coeffs.push_back(to_string(q));
  }
  return coeffs;
}

Cyclotomic value_from_json(const Json& j, int conductor,
                           const std::string& where) {
  if (!j.is_array()) return Cyclotomic(rational_from_json(j, where));
  std::vector<Rational> coeffs;
  for (std::size_t k = 0; k < j.size(); ++k) {
    coeffs.push_back(rational_from_json(j[k], where + "[" + std::to_string(k) + "]"));
  }
  return Cyclotomic::from_powers(conductor, std::move(coeffs));
}

std::shared_ptr<const FiniteGroup> group_from_permutations(
    const Json& j, const std::string& name, const Limits& limits,
    PermAction* action_out) {
  const Json& gens = as_array(field(j, "perm_generators", "group"),
                              "perm_generators");
  std::vector<std::vector<int>> perms;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    perms.push_back(int_list(gens[i], "perm_generators[" + std::to_string(i) + "]"));
  }
  const int degree = perms.empty() ? 1 : static_cast<int>(perms[0].size());
  PermAction action = PermAction::from_generators(degree, perms, name, limits);
  const int n = static_cast<int>(action.order());
  if (static_cast<std::uint64_t>(n) * n > limits.enumeration) {
    throw BudgetError("multiplication table of " + std::to_string(n) +
                      " elements exceeds the budget");
  }
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  std::vector<int> c(degree);
  for (int a = 0; a < n; ++a) {
    const auto& pa = action.elements()[a];
    for (int b = 0; b < n; ++b) {
      const auto& pb = action.elements()[b];
      for (int x = 0; x < degree; ++x) c[x] = pb[pa[x]];
      table[static_cast<std::size_t>(a) * n + b] = action.index_of(c);
    }
  }
  *action_out = std::move(action);
  return std::make_shared<const FiniteGroup>(
      FiniteGroup::from_table(n, std::move(table), name));
}

std::shared_ptr<const FiniteGroup> group_from_table(const Json& j,
                                                    const std::string& name) {
  const long order = as_int(field(j, "order", "group"), "order");
  if (order < 1 || order > 4096) fail("order", "must be in 1..4096");
  const Json& mult = as_array(field(j, "mult", "group"), "mult");
  if (static_cast<long>(mult.size()) != order) {
    fail("mult", "expected " + std::to_string(order) + " rows, got " +
                     std::to_string(mult.size()));
  }
  std::vector<int> table;
  table.reserve(order * order);
  for (long r = 0; r < order; ++r) {
    const std::string row = "mult row " + std::to_string(r);
    const Json& jr = as_array(mult[r], row);
    if (static_cast<long>(jr.size()) != order) {
      fail(row, "expected " + std::to_string(order) + " entries, got " +
                    std::to_string(jr.size()));
    }
    for (long c = 0; c < order; ++c) {
      table.push_back(static_cast<int>(
          as_int(jr[c], row + ", column " + std::to_string(c))));
    }
  }
  std::optional<std::vector<std::vector<int>>> classes;
  if (auto it = j.find("classes"); it != j.end()) {
    classes.emplace();
    for (std::size_t i = 0; i < as_array(*it, "classes").size(); ++i) {
      classes->push_back(int_list((*it)[i], "classes[" + std::to_string(i) + "]"));
    }
  }
  return std::make_shared<const FiniteGroup>(FiniteGroup::from_table(
      static_cast<int>(order), std::move(table), name, std::move(classes)));
}

}  // namespace

Json to_json(const Cyclotomic& c) {
  if (c.is_rational()) return to_string(c.to_rational());
  Json j;
  j["conductor"] = c.conductor();
  j["coeffs"] = value_over(c, c.conductor());
  return j;
}

Cyclotomic cyclotomic_from_json(const Json& j) {
  if (!j.is_object()) return Cyclotomic(rational_from_json(j, "value"));
  const long conductor = as_int(field(j, "conductor", "value"), "conductor");
  if (conductor < 1) fail("conductor", "must be positive");
  return value_from_json(as_array(field(j, "coeffs", "value"), "coeffs"),
                         static_cast<int>(conductor), "coeffs");
}

Json to_json(const Polynomial& p) {
  Json out = Json::array();
  for (const Cyclotomic& c : p.coefficients()) out.push_back(to_json(c));
  return out;
}

Polynomial polynomial_from_json(const Json& j) {
  std::vector<Cyclotomic> coeffs;
  for (const Json& c : as_array(j, "polynomial")) {
    coeffs.push_back(cyclotomic_from_json(c));
  }
  return Polynomial(std::move(coeffs));
}

Json to_json(const RationalFunctionN& f) {
  Json j;
  j["num"] = to_json(f.num());
  j["den"] = to_json(f.den());
  j["text"] = f.to_string();
  return j;
}

RationalFunctionN rational_function_from_json(const Json& j) {
  const Polynomial den = polynomial_from_json(field(j, "den", "rational function"));
  if (den.is_zero()) fail("rational function", "zero denominator");
  return RationalFunctionN(polynomial_from_json(field(j, "num", "rational function")),
                           den);
}

Json to_json(const SeparableSum& s) {
  Json j;
  j["vars"] = s.vars();
  Json terms = Json::array();
  for (const auto& t : s.terms()) {
    Json factors = Json::array();
    for (const auto& f : t.factors) factors.push_back(to_json(f));
    terms.push_back({{"coeff", to_json(t.coeff)}, {"factors", factors}});
  }
  j["terms"] = terms;
  j["text"] = s.to_string();
  return j;
}

SeparableSum separable_sum_from_json(const Json& j) {
  const long vars = as_int(field(j, "vars", "separable sum"), "vars");
  if (vars < 1) fail("vars", "must be positive");
  SeparableSum s(static_cast<int>(vars));
  const Json& terms = as_array(field(j, "terms", "separable sum"), "terms");
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string where = "terms[" + std::to_string(i) + "]";
    const Json& fs = as_array(field(terms[i], "factors", where), where);
    if (static_cast<long>(fs.size()) != vars) {
      fail(where, "expected one factor per variable");
    }
    std::vector<RationalFunctionN> factors;
    for (const Json& f : fs) factors.push_back(rational_function_from_json(f));
    s.add_term(cyclotomic_from_json(field(terms[i], "coeff", where)),
               std::move(factors));
  }
  return s;
}

Json to_json(const CoreGraph& g) {
  Json j;
  j["rank"] = g.rank_ambient();
  j["vertices"] = g.num_vertices();
  j["root"] = g.root();
  Json edges = Json::array();
  for (const Edge& e : g.edges()) {
    edges.push_back({{"src", e.src}, {"dst", e.dst}, {"label", e.label}});
  }
  j["edges"] = edges;
  return j;
}

CoreGraph graph_from_json(const Json& j) {
  LabeledGraph g;
  g.vertices = static_cast<int>(as_int(field(j, "vertices", "graph"), "vertices"));
  g.root = static_cast<int>(as_int(field(j, "root", "graph"), "root"));
  const Json& edges = as_array(field(j, "edges", "graph"), "edges");
  int max_label = -1;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string where = "edges[" + std::to_string(i) + "]";
    Edge e;
    e.src = static_cast<int>(as_int(field(edges[i], "src", where), where + ".src"));
    e.dst = static_cast<int>(as_int(field(edges[i], "dst", where), where + ".dst"));
    e.label = static_cast<int>(as_int(field(edges[i], "label", where), where + ".label"));
    max_label = std::max(max_label, e.label);
    g.edges.push_back(e);
  }
  g.rank = j.contains("rank") ? static_cast<int>(as_int(j["rank"], "rank"))
                              : max_label + 1;
  if (g.vertices < 1) fail("vertices", "must be positive");
  return CoreGraph::from_edges(g);
}

Json pi_to_json(const std::optional<int>& pi) {
  return pi ? Json(*pi) : Json("inf");
}

std::string pi_to_string(const std::optional<int>& pi) {
  return pi ? std::to_string(*pi) : "inf";
}

Json to_json(const WitnessReport& r, std::string_view alphabet) {
  auto entry = [](const WitnessEntry& e, bool with_flag) {
    Json j;
    j["graph"] = to_json(e.graph);
    j["rank"] = e.rank;
    j["value"] = to_json(e.value);
    if (with_flag) j["algebraic"] = e.algebraic ? Json(*e.algebraic) : Json();
    return j;
  };
  Json j;
  j["word"] = r.word.to_string(alphabet);
  j["phi"] = r.phi;
  j["pi"] = pi_to_json(r.pi);
  Json crit = Json::array();
  for (int i : r.crit) crit.push_back(entry(r.entries[i], false));
  j["crit"] = crit;
  j["crit_value"] = r.pi ? to_json(r.crit_value) : Json();
  Json all = Json::array();
  for (const auto& e : r.entries) all.push_back(entry(e, true));
  j["witnesses"] = all;
  j["partial"] = r.partial;
  j["skipped"] = r.skipped;
  return j;
}

Json to_json(const IteratedExpectation& e) {
  Json j;
  j["levels"] = e.levels;
  Json chains = Json::array();
  for (const Chain& c : e.chains) {
    const QuotientPoset& p = e.study->poset();
    Json graphs = Json::array();
    for (int node : c.nodes) graphs.push_back(to_json(p.node(node).graph));
    Json factors = Json::array();
    for (std::size_t k = 1; k < c.nodes.size(); ++k) {
      factors.push_back(to_json(L_B(p, c.nodes[k - 1], c.nodes[k])));
    }
    chains.push_back({{"graphs", graphs},
                      {"value_terms", {{"weight", to_json(c.weight)},
                                       {"factors", factors}}}});
  }
  j["chains"] = chains;
  j["symbolic"] = to_json(e.sum);
  return j;
}

const ClassFunction& GroupSpec::character(const std::string& name) const {
  if (table) return table->get(name);
  for (const auto& f : characters) {
    if (f.name() == name) return f;
  }
  if (name.size() > 1 && name[0] == '#') {
    try {
      const std::size_t k = std::stoul(name.substr(1));
      if (k < characters.size()) return characters[k];
    } catch (const std::exception&) {
    }
  }
  std::string known;
  for (const auto& f : characters) known += " " + f.name();
  throw ValidationError("unknown character '" + name + "'; known:" +
                        (known.empty() ? std::string(" (none)") : known));
}

GroupSpec group_spec_from_json(const Json& j, const std::string& name,
                               const Limits& limits) {
  if (!j.is_object()) fail("group", "expected a JSON object");
  const std::string gname =
      j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>()
                                                  : (name.empty() ? "G" : name);
  GroupSpec spec;
  PermAction action;
  const bool perm = j.contains("perm_generators");
  spec.group = perm ? group_from_permutations(j, gname, limits, &action)
                    : group_from_table(j, gname);
  const FiniteGroup& g = *spec.group;

  // Column k of a character refers to class column_class[k].
  std::vector<int> column_class(g.num_classes());
  std::iota(column_class.begin(), column_class.end(), 0);
  if (perm && j.contains("class_representatives")) {
    const Json& reps = as_array(j["class_representatives"], "class_representatives");
    if (static_cast<int>(reps.size()) != g.num_classes()) {
      fail("class_representatives", "expected " + std::to_string(g.num_classes()) +
                                        " representatives, got " +
                                        std::to_string(reps.size()));
    }
    std::vector<bool> seen(g.num_classes(), false);
    for (std::size_t k = 0; k < reps.size(); ++k) {
      const std::string where = "class_representatives[" + std::to_string(k) + "]";
      const int idx = action.index_of(int_list(reps[k], where));
      if (idx < 0) fail(where, "not an element of the group");
      const int c = g.class_of(idx);
      if (seen[c]) fail(where, "repeats a conjugacy class");
      seen[c] = true;
      column_class[k] = c;
    }
  }

  if (auto it = j.find("characters"); it != j.end()) {
    const Json& chars = as_array(*it, "characters");
    for (std::size_t i = 0; i < chars.size(); ++i) {
      const std::string where = "characters[" + std::to_string(i) + "]";
      const Json& c = chars[i];
      const long conductor =
          c.contains("conductor") ? as_int(c["conductor"], where + ".conductor") : 1;
      if (conductor < 1) fail(where, "conductor must be positive");
      const Json& values = as_array(field(c, "values", where), where + ".values");
      if (static_cast<int>(values.size()) != g.num_classes()) {
        fail(where, "expected " + std::to_string(g.num_classes()) +
                        " values (one per class), got " +
                        std::to_string(values.size()));
      }
      std::vector<Cyclotomic> per_class(g.num_classes());
      for (std::size_t k = 0; k < values.size(); ++k) {
        per_class[column_class[k]] = value_from_json(
            values[k], static_cast<int>(conductor),
            where + ".values[" + std::to_string(k) + "]");
      }
      const std::string cname =
          c.contains("name") && c["name"].is_string()
              ? c["name"].get<std::string>()
              : "chi" + std::to_string(i);
      spec.characters.emplace_back(spec.group, std::move(per_class), cname);
    }
  }

  if (!spec.characters.empty() &&
      static_cast<int>(spec.characters.size()) == g.num_classes()) {
    try {
      spec.table.emplace(spec.group, spec.characters);
      spec.characters = spec.table->irreducibles();
      return spec;
    } catch (const ValidationError& e) {
      spec.table_note = e.what();
    }
  }
  for (auto& f : spec.characters) f = f.screened();
  return spec;
}

GroupSpec parse_group_spec(const std::string& text, const Limits& limits) {
  const auto first = text.find_first_not_of(" \t\n");
  if (first != std::string::npos && text[first] == '{') {
    Json j;
    try {
      j = Json::parse(text);
    } catch (const Json::parse_error& e) {
      throw ValidationError(std::string("group JSON: ") + e.what());
    }
    return group_spec_from_json(j, "", limits);
  }
  std::ifstream in(text);
  if (in) {
    Json j;
    try {
      j = Json::parse(in);
    } catch (const Json::parse_error& e) {
      throw ValidationError("group file '" + text + "': " + e.what());
    }
    return group_spec_from_json(j, text, limits);
  }
  GroupSpec spec;
  CharacterTable t = builtin_group(text);
  spec.group = t.group();
  spec.characters = t.irreducibles();
  spec.table.emplace(std::move(t));
  return spec;
}

Json to_json(const GroupSpec& spec) {
  const FiniteGroup& g = *spec.group;
  Json j;
  j["name"] = g.name();
  j["order"] = g.order();
  Json mult = Json::array();
  for (int a = 0; a < g.order(); ++a) {
    Json row = Json::array();
    for (int b = 0; b < g.order(); ++b) row.push_back(g.mul(a, b));
    mult.push_back(row);
  }
  j["mult"] = mult;
  j["classes"] = g.classes();
  Json chars = Json::array();
  for (const auto& f : spec.characters) {
    int conductor = 1;
    for (const auto& v : f.values()) conductor = std::lcm(conductor, v.conductor());
    Json values = Json::array();
    for (const auto& v : f.values()) values.push_back(value_over(v, conductor));
    chars.push_back({{"name", f.name()}, {"conductor", conductor}, {"values", values}});
  }
  j["characters"] = chars;
  return j;
}

CharacterSpec parse_character_spec(const std::string& text,
                                   const GroupSpec* group) {
  if (text.rfind("circle:", 0) == 0) {
    const std::string m = text.substr(7);
    if (m == "inf") return CharacterSpec::circle(std::nullopt);
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(m, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != m.size() || v < 2 || v > 1'000'000) {
      throw ValidationError("character '" + text + "': invalid modulus '" + m +
                            "' at position 7; expected an integer >= 2 or inf");
    }
    return CharacterSpec::circle(static_cast<int>(v));
  }
  if (!group) {
    if (text == "trivial") return CharacterSpec::trivial();
    throw ValidationError("character '" + text + "' needs --group");
  }
  return CharacterSpec::finite(group->character(text));
}

}  // namespace wml
