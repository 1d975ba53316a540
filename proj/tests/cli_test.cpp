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
#include <gtest/gtest.h>

#include <sstream>

#include "wml/io.hpp"
#include "wml_cli/cli.hpp"

namespace wml {
namespace {

struct Result {
  int code;
  std::string out, err;
  Json json() const { return Json::parse(out); }
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  args.insert(args.begin(), "wml");
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, RankTable) {
  const std::vector<std::pair<std::string, Json>> rows = {
      {"1", 0}, {"a^2", 1}, {"[a,b]", 2}, {"a^2b^2", 2}, {"a^2b^2c^2", 3},
      {"a", "inf"}, {"ab", "inf"}};
  for (const auto& [word, pi] : rows) {
    const Result r = run_cli({"rank", word});
    ASSERT_EQ(r.code, cli::kExitOk) << word << ": " << r.err;
    EXPECT_EQ(r.json()["pi"], pi) << word;
  }
  const Json ab = run_cli({"rank", "[a,b]"}).json();
  ASSERT_EQ(ab["crit"].size(), 1u);
  EXPECT_EQ(graph_from_json(ab["crit"][0]["graph"]), bouquet(2));
}

TEST(Cli, TableFormat) {
  const Result r = run_cli({"rank", "[a,b]", "--format", "table"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("pi: 2"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("crit[0].graph: 1:0>0a,0>0b"), std::string::npos) << r.out;
  EXPECT_EQ(run_cli({"rank", "a", "--format", "xml"}).code, cli::kExitValidation);
}

TEST(Cli, Expect) {
  const Json sym = run_cli({"expect", "[a,b]", "--group", "S3", "--char", "std", "--symbolic"}).json();
  EXPECT_EQ(sym["symbolic"]["text"], "(1/2)/(n)");
  EXPECT_EQ(sym["leading"]["exponent"], -1);
  EXPECT_EQ(sym["leading"]["coefficient"], "1/2");
  const Json at = run_cli({"expect", "[a,b]", "--group", "S3", "--char", "std", "--n", "3"}).json();
  EXPECT_EQ(at["values"][0]["value"], "1/6");
  // The symbolic output re-parses under its schema.
  const RationalFunctionN f = rational_function_from_json(sym["symbolic"]);
  EXPECT_EQ(f.evaluate(Cyclotomic(3)), Cyclotomic(Rational(1, 6)));
  const Json circ = run_cli({"expect", "a^2", "--char", "circle:2", "--symbolic"}).json();
  EXPECT_EQ(circ["leading"]["exponent"], 0);
}

TEST(Cli, Witnesses) {
  const Result r = run_cli({"witnesses", "a^2", "--group", "Q8", "--char", "rho"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.json()["pi"], 1);
  EXPECT_EQ(r.json()["crit_value"], "-1");
}

TEST(Cli, OracleAgreesAndSeedIsDeterministic) {
  const std::vector<std::string> args = {"oracle", "[a,b]", "--group", "C2", "--char",
                                         "sign", "--n", "3", "--samples", "2000",
                                         "--seed", "11"};
  const Result a = run_cli(args), b = run_cli(args);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  std::vector<std::string> threaded = args;
  threaded.insert(threaded.end(), {"--threads", "2"});
  EXPECT_EQ(run_cli(threaded).out, a.out);
  const Json j = a.json();
  EXPECT_EQ(j["brute"], "1/3");
  EXPECT_EQ(j["agree"], true);
  EXPECT_EQ(j["order"], 48);
  EXPECT_EQ(j["monte_carlo"]["seed"], 11);

  const Json it = run_cli({"oracle", "[a,b]", "--group", "C2", "--char", "sign",
                           "--n-list", "2,2"}).json();
  EXPECT_EQ(it["agree"], true);
}

TEST(Cli, IteratedAndTree) {
  const Json it = run_cli({"expect-iterated", "[a,b]", "--group", "C2", "--char", "sign",
                           "--n-list", "2,2"}).json();
  EXPECT_EQ(it["value"], "1/4");
  EXPECT_EQ(it["diagonal"]["text"], "(1)/(n^2)");
  const Json tree = run_cli({"tree", "[a,b]", "--levels", "2"}).json();
  EXPECT_EQ(tree["difference_leading"]["exponent"], -2);
}

TEST(Cli, OrbitsAndWhitehead) {
  const Json o = run_cli({"orbits", "--action", "subsets:5:2", "--t", "2"}).json();
  EXPECT_EQ(o["orbits"], 3);
  EXPECT_EQ(o["bound"], 27);
  EXPECT_EQ(run_cli({"orbits", "--action", "gl2:2", "--t", "1"}).json()["orbits"], 1);
  EXPECT_EQ(run_cli({"orbits", "--action", "moebius:3"}).code, cli::kExitValidation);
  const Json w = run_cli({"whitehead", "abaab"}).json();
  EXPECT_EQ(w["primitive"], true);
  EXPECT_EQ(w["min_len"], 1);
  EXPECT_EQ(run_cli({"whitehead", "[a,b]"}).json()["primitive"], false);
}

TEST(Cli, ExitCodes) {
  const Result parse = run_cli({"rank", "ab^"});
  EXPECT_EQ(parse.code, cli::kExitValidation);
  EXPECT_NE(parse.err.find("position 3"), std::string::npos) << parse.err;
  const Result bracket = run_cli({"rank", "[a,b"});
  EXPECT_EQ(bracket.code, cli::kExitValidation);
  EXPECT_NE(bracket.err.find("position"), std::string::npos) << bracket.err;

  EXPECT_EQ(run_cli({"expect", "a", "--group", "S9"}).code, cli::kExitValidation);
  EXPECT_EQ(run_cli({"expect", "a", "--group", "S3", "--char", "nope"}).code,
            cli::kExitValidation);
  EXPECT_EQ(run_cli({"expect", "a", "--char", "std"}).code, cli::kExitValidation);
  EXPECT_EQ(run_cli({"rank", "a", "--budget", "lots"}).code, cli::kExitValidation);
  EXPECT_EQ(run_cli({}).code, cli::kExitValidation);

  const Result budget = run_cli({"oracle", "[a,b]", "--group", "S3", "--char", "std",
                                 "--n", "3", "--budget", "1000"});
  EXPECT_EQ(budget.code, cli::kExitBudget);
  EXPECT_NE(budget.err.find("budget"), std::string::npos) << budget.err;

  const Result malformed = run_cli({"expect", "[a,b]", "--group",
                                    R"({"order": 2, "mult": [[0, 1], [1, 1]]})"});
  EXPECT_EQ(malformed.code, cli::kExitValidation);
  EXPECT_NE(malformed.err.find("row 1"), std::string::npos) << malformed.err;
}

TEST(Cli, InlineGroupJson) {
  const Result r = run_cli({"expect", "[a,b]", "--group",
                            R"({"order": 2, "mult": [[0, 1], [1, 0]],
                                "characters": [{"values": [1, 1]},
                                               {"name": "s", "values": [1, -1]}]})",
                            "--char", "s", "--n", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.json()["values"][0]["value"], "1/2");
}

}  // namespace
}  // namespace wml
