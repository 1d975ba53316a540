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
#include "wml_cli/cli.hpp"

#include <cmath>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "wml/builtin_groups.hpp"
#include "wml/error.hpp"
#include "wml/io.hpp"
#include "wml/oracle.hpp"
#include "wml/perm_action.hpp"
#include "wml/whitehead.hpp"
#include "wml/word.hpp"
#include "wml/wreath_measures.hpp"

namespace wml::cli {
namespace {

struct Options {
  std::string word;
  std::string group;
  std::string character = "trivial";
  std::string format = "json";
  std::optional<long> n;
  std::string n_list;
  bool symbolic = false;
  int levels = 0;
  std::string budget;
  std::uint64_t seed = 1;
  std::uint64_t samples = 0;
  int threads = 1;
  int whitehead_rank_bound = 0;
  std::string action;
  int t = 1;
};

// "2,3,4": positive integers. Errors give the 0-based offset of the entry.
std::vector<long> parse_n_list(const std::string& text) {
  std::vector<long> out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    const std::string tok = text.substr(pos, comma == std::string::npos
                                                 ? std::string::npos
                                                 : comma - pos);
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (tok.empty() || used != tok.size() || v < 1) {
      throw ValidationError("--n-list: invalid entry '" + tok +
                            "' at position " + std::to_string(pos) +
                            "; expected positive integers separated by commas");
    }
    out.push_back(v);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

Limits make_limits(const Options& o) {
  Limits l = Limits::defaults();
  if (!o.budget.empty()) {
    const std::uint64_t b = parse_budget(o.budget);
    l.enumeration = b;
    l.group_order = b;
  }
  if (o.threads < 0) throw ValidationError("--threads must be >= 0");
  l.threads = o.threads;
  if (o.whitehead_rank_bound < 0) {
    throw ValidationError("--whitehead-rank-bound must be >= 0");
  }
  if (o.whitehead_rank_bound > 0) l.whitehead_rank = o.whitehead_rank_bound;
  return l;
}

struct Context {
  Options opt;
  Limits limits;
  ParsedWord parsed;
  std::optional<GroupSpec> group;

  const Word& word() const { return parsed.word; }
  std::string word_text() const { return parsed.word.to_string(parsed.alphabet); }

  CharacterSpec phi() const {
    return parse_character_spec(opt.character, group ? &*group : nullptr);
  }
  // A finite character, with the trivial group standing in when none is
  // given and the trivial character is requested.
  ClassFunction finite_phi() {
    if (!group && opt.character == "trivial") {
      group = parse_group_spec("trivial", limits);
    }
    const CharacterSpec c = phi();
    if (c.kind() != CharacterSpec::Kind::kFinite) {
      throw ValidationError("character '" + opt.character +
                            "' is not a class function of a finite group");
    }
    return c.function();
  }
  std::vector<long> n_values() const {
    std::vector<long> v;
    if (opt.n) {
      if (*opt.n < 1) throw ValidationError("--n must be >= 1");
      v.push_back(*opt.n);
    }
    if (!opt.n_list.empty()) {
      for (long x : parse_n_list(opt.n_list)) v.push_back(x);
    }
    return v;
  }
};

Json leading_json(const RationalFunctionN& f) {
  if (f.is_zero()) return Json();
  const LaurentLeading l = leading_term(f);
  return {{"exponent", l.exponent}, {"coefficient", to_json(l.coefficient)}};
}

Json cmd_rank(Context& c) {
  const WitnessReport r = witness_report(c.word(), CharacterSpec::trivial(), c.limits);
  return to_json(r, c.parsed.alphabet);
}

Json cmd_witnesses(Context& c) {
  const WitnessReport r = witness_report(c.word(), c.phi(), c.limits);
  Json j = to_json(r, c.parsed.alphabet);
  if (r.pi) {
    const RationalFunctionN chi = chi_expectation_symbolic(c.word(), c.phi(), c.limits);
    j["leading"] = leading_json(chi);
  }
  return j;
}

Json cmd_expect(Context& c) {
  const CharacterSpec phi = c.phi();
  const IndExpectation e = ind_expectation(c.word(), phi, c.limits);
  const std::vector<long> ns = c.n_values();
  Json j;
  j["word"] = c.word_text();
  j["phi"] = phi.name();
  if (c.opt.symbolic || ns.empty()) {
    j["symbolic"] = to_json(e.symbolic);
    RationalFunctionN chi = e.symbolic;
    if (phi.is_trivial_character()) chi -= RationalFunctionN(Cyclotomic(1));
    j["leading"] = leading_json(chi);
    Json terms = Json::array();
    for (const auto& [node, value] : e.terms) {
      terms.push_back({{"graph", to_json(e.study->poset().node(node).graph)},
                       {"value", to_json(value)}});
    }
    j["terms"] = terms;
  }
  if (!ns.empty()) {
    Json values = Json::array();
    for (long n : ns) values.push_back({{"n", n}, {"value", to_json(e.value_at(n))}});
    j["values"] = values;
  }
  return j;
}

int level_count(const Context& c, const std::vector<long>& ns) {
  if (c.opt.levels < 0) throw ValidationError("--levels must be positive");
  if (c.opt.levels > 0 && !ns.empty() &&
      static_cast<std::size_t>(c.opt.levels) != ns.size()) {
    throw ValidationError("--levels disagrees with the length of --n-list");
  }
  const int m = c.opt.levels > 0 ? c.opt.levels : static_cast<int>(ns.size());
  if (m < 1) throw ValidationError("give --n-list or --levels");
  return m;
}

std::vector<Cyclotomic> as_point(const std::vector<long>& ns) {
  std::vector<Cyclotomic> p;
  for (long n : ns) p.emplace_back(n);
  return p;
}

Json cmd_expect_iterated(Context& c) {
  if (c.opt.n) throw ValidationError("expect-iterated takes --n-list, not --n");
  const CharacterSpec phi = c.phi();
  const std::vector<long> ns = c.n_values();
  const int m = level_count(c, ns);
  const IteratedExpectation e = iterated_expectation(c.word(), phi, m, c.limits);
  Json j;
  j["word"] = c.word_text();
  j["phi"] = phi.name();
  const Json body = to_json(e);
  for (const auto& [k, v] : body.items()) j[k] = v;
  j["diagonal"] = to_json(e.sum.diagonal());
  if (!ns.empty()) {
    j["n_list"] = ns;
    std::vector<long> nl(ns.begin(), ns.end());
    j["value"] = to_json(e.value_at(nl));
  }
  return j;
}

Json cmd_tree(Context& c) {
  if (c.opt.n) throw ValidationError("tree takes --n-list, not --n");
  const std::vector<long> ns = c.n_values();
  const int m = level_count(c, ns);
  const TreeExpectation t = tree_fix_expectation(c.word(), m, c.limits);
  Json j;
  j["word"] = c.word_text();
  j["levels"] = m;
  Json by_suffix = Json::array(), pieces = Json::array();
  for (const auto& s : t.by_suffix) by_suffix.push_back(to_json(s));
  for (const auto& s : t.pieces) pieces.push_back(to_json(s));
  j["by_suffix"] = by_suffix;
  j["pieces"] = pieces;
  j["total"] = to_json(t.total);
  j["difference"] = to_json(t.difference);
  const RationalFunctionN diag = t.difference.diagonal();
  j["difference_diagonal"] = to_json(diag);
  j["difference_leading"] = leading_json(diag);
  if (!ns.empty()) {
    j["n_list"] = ns;
    j["total_value"] = to_json(t.total.evaluate(as_point(ns)));
    j["difference_value"] = to_json(t.difference.evaluate(as_point(ns)));
  }
  return j;
}

Json cmd_oracle(Context& c) {
  const ClassFunction phi = c.finite_phi();
  const CharacterSpec spec = CharacterSpec::finite(phi);
  const std::vector<long> ns = c.n_values();
  if (ns.empty()) throw ValidationError("oracle needs --n or --n-list");
  if (c.opt.n && !c.opt.n_list.empty()) {
    throw ValidationError("give either --n or --n-list");
  }
  Json j;
  j["word"] = c.word_text();
  j["phi"] = spec.name();
  if (ns.size() == 1) {
    const int n = static_cast<int>(ns[0]);
    const ExplicitWreath k = ExplicitWreath::over_symmetric(phi.group(), n, c.limits);
    const std::vector<Cyclotomic> chi = k.ind_values(phi);
    const Cyclotomic brute = brute_expectation(c.word(), k, chi, c.limits);
    const Cyclotomic symbolic = ind_expectation(c.word(), spec, c.limits).value_at(n);
    j["n"] = n;
    j["order"] = k.order();
    j["brute"] = to_json(brute);
    j["symbolic"] = to_json(symbolic);
    j["agree"] = brute == symbolic;
    if (c.opt.samples > 0) {
      const SampleEstimate s = monte_carlo_expectation(c.word(), k, chi, c.opt.samples,
                                                       c.opt.seed, c.limits);
      j["monte_carlo"] = {{"mean", s.mean},
                          {"mean_imag", s.mean_imag},
                          {"stderr", s.stderr_},
                          {"samples", s.samples},
                          {"seed", s.seed}};
    }
    return j;
  }
  if (c.opt.samples > 0) {
    throw ValidationError("--samples is supported for a single --n only");
  }
  std::vector<int> nsi(ns.begin(), ns.end());
  const IteratedWreath w = build_iterated_wreath(phi, nsi, c.limits);
  const Cyclotomic brute = brute_expectation(c.word(), w.character, c.limits);
  const Cyclotomic symbolic =
      iterated_expectation(c.word(), spec, static_cast<int>(ns.size()), c.limits)
          .value_at(ns);
  j["n_list"] = ns;
  j["order"] = w.group->order();
  j["brute"] = to_json(brute);
  j["symbolic"] = to_json(symbolic);
  j["agree"] = brute == symbolic;
  return j;
}

// sym:n | subsets:n:k | gl2:n | gl2zero:n
PermAction parse_action(const std::string& text, const Limits& limits,
                        std::optional<int>* subset_size) {
  std::vector<std::string> parts;
  std::vector<std::size_t> offsets;
  std::size_t pos = 0;
  while (true) {
    const std::size_t colon = text.find(':', pos);
    parts.push_back(text.substr(pos, colon == std::string::npos ? std::string::npos
                                                                 : colon - pos));
    offsets.push_back(pos);
    if (colon == std::string::npos) break;
    pos = colon + 1;
  }
  auto number = [&](std::size_t i) {
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(parts[i], &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != parts[i].size() || v < 1 || v > 64) {
      throw ValidationError("--action: invalid number '" + parts[i] +
                            "' at position " + std::to_string(offsets[i]));
    }
    return static_cast<int>(v);
  };
  const std::string& kind = parts[0];
  if (kind == "sym" && parts.size() == 2) return PermAction::symmetric(number(1), limits);
  if (kind == "subsets" && parts.size() == 3) {
    const int n = number(1), k = number(2);
    if (k > n) throw ValidationError("--action: subset size exceeds n");
    *subset_size = k;
    return PermAction::symmetric_on_subsets(n, k, limits);
  }
  if ((kind == "gl2" || kind == "gl2zero") && parts.size() == 2) {
    return PermAction::general_linear_f2(number(1), kind == "gl2zero", limits);
  }
  throw ValidationError("--action: unrecognized '" + text +
                        "' at position 0; expected sym:n, subsets:n:k, gl2:n "
                        "or gl2zero:n");
}

Json cmd_orbits(Context& c) {
  if (c.opt.action.empty()) throw ValidationError("orbits needs --action");
  if (c.opt.t < 1) throw ValidationError("--t must be >= 1");
  std::optional<int> k;
  const PermAction a = parse_action(c.opt.action, c.limits, &k);
  Json j;
  j["action"] = c.opt.action;
  j["degree"] = a.degree();
  j["order"] = a.order();
  j["t"] = c.opt.t;
  j["orbits"] = orbit_count(a, c.opt.t, c.limits);
  j["injective_orbits"] = injective_orbit_count(a, c.opt.t, c.limits);
  if (k) {
    // Orbits of S_n on t-tuples of k-subsets: at most (k+1)^(2^t - 1).
    const double bound = std::pow(*k + 1.0, std::pow(2.0, c.opt.t) - 1);
    j["bound"] = bound < 9e18 ? Json(static_cast<std::int64_t>(bound)) : Json(bound);
  }
  return j;
}

Json cmd_whitehead(Context& c) {
  const WhiteheadResult r = whitehead_minimize(c.word(), c.limits);
  Json j;
  j["word"] = c.word_text();
  j["rank"] = c.word().rank();
  j["min_len"] = r.min_len;
  Json level = Json::array();
  for (const auto& cw : r.level_set) level.push_back(cw.to_string(c.parsed.alphabet));
  j["level_set"] = level;
  j["primitive"] = is_primitive(c.word(), c.limits);
  j["proper_free_factor"] = lies_in_proper_free_factor(c.word(), c.limits);
  return j;
}

// Table view: one "path: value" line per leaf, with graphs, rational
// functions and cyclotomics collapsed to their text forms.
void render_table(const Json& j, const std::string& path, std::ostream& out) {
  auto line = [&](const std::string& v) {
    out << (path.empty() ? "value" : path) << ": " << v << "\n";
  };
  if (j.is_object()) {
    if (j.contains("edges") && j.contains("vertices")) {
      return line(graph_from_json(j).key());
    }
    if (j.contains("text") && (j.contains("num") || j.contains("terms"))) {
      return line(j["text"].get<std::string>());
    }
    if (j.size() == 2 && j.contains("conductor") && j.contains("coeffs")) {
      return line(cyclotomic_from_json(j).to_string());
    }
    for (const auto& [k, v] : j.items()) {
      render_table(v, path.empty() ? k : path + "." + k, out);
    }
    return;
  }
  if (j.is_array()) {
    bool scalars = true;
    for (const auto& v : j) scalars = scalars && v.is_primitive();
    if (scalars) {
      std::string s = "[";
      for (std::size_t i = 0; i < j.size(); ++i) {
        s += (i ? ", " : "") + (j[i].is_string() ? j[i].get<std::string>() : j[i].dump());
      }
      return line(s + "]");
    }
    for (std::size_t i = 0; i < j.size(); ++i) {
      render_table(j[i], path + "[" + std::to_string(i) + "]", out);
    }
    return;
  }
  line(j.is_string() ? j.get<std::string>() : j.dump());
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  Options o;
  CLI::App app{"Exact word measures on wreath products G wr S_n.", "wml"};
  app.require_subcommand(1);

  auto add_word = [&](CLI::App* s) {
    s->add_option("word", o.word,
                  "Word over a-z; uppercase is inverse, [u,v] a commutator, "
                  "x^k a power; 1 is the identity")
        ->required();
  };
  auto add_group = [&](CLI::App* s) {
    s->add_option("--group", o.group,
                  "Builtin (C<m>, S<n> with n <= 5, D<m>, Q8, trivial), inline "
                  "JSON or a JSON file");
    s->add_option("--char", o.character,
                  "Character name or #k, trivial, circle:<m> or circle:inf")
        ->capture_default_str();
  };
  auto add_common = [&](CLI::App* s) {
    s->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"json", "table"}))
        ->capture_default_str();
    s->add_option("--budget", o.budget,
                  "Enumeration and group-order budget (default 1e7 and 1e5, or "
                  "WML_BUDGET)");
    s->add_option("--threads", o.threads, "Worker threads; 0 uses all cores")
        ->capture_default_str();
    s->add_option("--whitehead-rank-bound", o.whitehead_rank_bound,
                  "Largest rank given to Whitehead's algorithm (default 4)");
  };
  auto add_n = [&](CLI::App* s, bool single) {
    if (single) s->add_option("--n", o.n, "Degree n of S_n");
    s->add_option("--n-list", o.n_list, "Comma-separated degrees n_1,...,n_m");
  };

  CLI::App* rank = app.add_subcommand("rank", "Primitivity rank and critical subgroups");
  add_word(rank);
  add_common(rank);

  CLI::App* wit = app.add_subcommand("witnesses", "phi-witnesses, pi_phi and Crit_phi");
  add_word(wit);
  add_group(wit);
  add_common(wit);

  CLI::App* expect = app.add_subcommand("expect", "E_w[Ind_n phi], symbolic or at n");
  add_word(expect);
  add_group(expect);
  add_n(expect, true);
  expect->add_flag("--symbolic", o.symbolic,
                   "Print the rational function (implied without --n/--n-list)");
  add_common(expect);

  CLI::App* iter = app.add_subcommand("expect-iterated",
                                      "E_w[Ind_{n_1,...,n_m} phi] as a chain sum");
  add_word(iter);
  add_group(iter);
  add_n(iter, false);
  iter->add_option("--levels", o.levels, "Number of levels when --n-list is absent");
  add_common(iter);

  CLI::App* tree = app.add_subcommand("tree", "Fixed leaves of the spherical tree");
  add_word(tree);
  add_n(tree, false);
  tree->add_option("--levels", o.levels, "Number of levels when --n-list is absent");
  add_common(tree);

  CLI::App* oracle = app.add_subcommand("oracle",
                                        "Brute force over the explicit wreath product");
  add_word(oracle);
  add_group(oracle);
  add_n(oracle, true);
  oracle->add_option("--samples", o.samples, "Monte Carlo samples (0 disables)")
      ->capture_default_str();
  oracle->add_option("--seed", o.seed, "Monte Carlo seed")->capture_default_str();
  add_common(oracle);

  CLI::App* orbits = app.add_subcommand("orbits", "Orbits on t-tuples by union-find");
  orbits->add_option("--action", o.action, "sym:n, subsets:n:k, gl2:n or gl2zero:n")
      ->required();
  orbits->add_option("--t", o.t, "Tuple length")->capture_default_str();
  add_common(orbits);

  CLI::App* wh = app.add_subcommand("whitehead", "Whitehead minimization and primitivity");
  add_word(wh);
  add_common(wh);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  }

  try {
    Context c{o, make_limits(o), ParsedWord{Word(0), ""}, std::nullopt};
    const CLI::App* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    if (name != "orbits") c.parsed = parse_word_with_alphabet(o.word);
    if (!o.group.empty()) c.group = parse_group_spec(o.group, c.limits);

    Json result;
    if (name == "rank") result = cmd_rank(c);
    else if (name == "witnesses") result = cmd_witnesses(c);
    else if (name == "expect") result = cmd_expect(c);
    else if (name == "expect-iterated") result = cmd_expect_iterated(c);
    else if (name == "tree") result = cmd_tree(c);
    else if (name == "oracle") result = cmd_oracle(c);
    else if (name == "orbits") result = cmd_orbits(c);
    else result = cmd_whitehead(c);

    if (c.group && !c.group->table_note.empty()) {
      result["note"] = "characters are not a verified table: " + c.group->table_note;
    }
    if (o.format == "table") {
      render_table(result, "", out);
    } else {
      out << result.dump(2) << "\n";
    }
    return kExitOk;
  } catch (const BudgetError& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace wml::cli
