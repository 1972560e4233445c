#include "glfix/cli.hpp"

#include <gtest/gtest.h>

#include <sstream>

namespace glfix::cli {
namespace {

Report run_args(const std::vector<std::string>& args) { return run(parse_command(args)); }

TEST(CommandTest, ParsesSubcommandAndFlags) {
  const auto cmd = parse_command({"count", "translation", "--p", "2", "--subspace", "1", "--degree", "4", "--brute-force"});
  EXPECT_EQ(cmd.path, (std::vector<std::string>{"count", "translation"}));
  EXPECT_EQ(cmd.p, 2u);
  EXPECT_EQ(cmd.k, 1u);
  EXPECT_EQ(cmd.subspace, "1");
  EXPECT_EQ(cmd.degree, 4u);
  EXPECT_TRUE(cmd.brute_force);
  EXPECT_FALSE(cmd.json);
  EXPECT_EQ(cmd.cap, kDefaultCap);
}

TEST(CommandTest, RejectsBadArguments) {
  EXPECT_THROW(parse_command({}), Error);
  EXPECT_THROW(parse_command({"count"}), Error);
  EXPECT_THROW(parse_command({"count", "translation", "--p", "2", "--degree", "4"}), Error);
  EXPECT_THROW(parse_command({"act", "--p", "two", "--matrix", "[[1,0],[0,1]]", "--poly", "x"}), Error);
  EXPECT_THROW(parse_command({"fixed", "--p", "2", "--poly", "x", "--mode", "loose"}), Error);
  EXPECT_THROW(parse_command({"pgl-scan", "--p", "2", "--max-degree", "3", "--subspace", "1"}), Error);
  EXPECT_THROW(parse_command({"--help"}), HelpRequested);
}

TEST(CommandTest, FormatThenParseRoundTrips) {
  const std::vector<std::vector<std::string>> samples{
      {"count", "translation", "--p", "2", "--subspace", "1", "--degree", "4", "--brute-force"},
      {"count", "homothety", "--p", "5", "--scalar", "-1", "--degree", "2", "--json", "--cap", "100"},
      {"count", "psubgroup", "--p", "2", "--k", "2", "--generators", "[[1,1],[0,1]];[[1,t],[0,1]]", "--degree", "4"},
      {"enumerate", "translation", "--p", "3", "--k", "2", "--modulus", "t^2+1", "--subspace", "t", "--degree", "3"},
      {"enumerate", "homothety", "--p", "7", "--scalar", "2", "--degree", "3"},
      {"decompose", "translation", "--p", "2", "--subspace", "1", "--poly", "x^4+x+1"},
      {"decompose", "homothety", "--p", "5", "--scalar", "4", "--poly", "x^2 + 3"},
      {"act", "--p", "3", "--matrix", "[[0,1],[1,0]]", "--poly", "-x^2+x+2"},
      {"fixed", "--p", "5", "--matrix", "[[4,0],[0,1]]", "--poly", "x^2+2", "--mode", "strict"},
      {"fixed", "--p", "2", "--generators", "[[1,1],[0,1]]", "--poly", "x^2+x+1"},
      {"pgl-scan", "--p", "2", "--max-degree", "8"},
      {"psubgroup", "conjugate", "--p", "2", "--generators", "[[1,0],[1,1]]"},
      {"verify", "all", "--max-q", "5", "--max-degree", "6", "--json"},
  };
  for (const auto& args : samples) {
    const Command cmd = parse_command(args);
    EXPECT_EQ(parse_command(format_command(cmd)), cmd) << cmd.name();
  }
}

TEST(RunTest, CountTranslation) {
  const auto r = run_args({"count", "translation", "--p", "2", "--k", "1", "--subspace", "1", "--degree", "4", "--brute-force"});
  const auto& res = r.doc.at("result");
  EXPECT_EQ(res.at("formula_count"), 1);
  EXPECT_EQ(res.at("brute_force_count"), 1);
  EXPECT_EQ(res.at("match"), true);
  EXPECT_EQ(exit_status(r), 0);
  for (const char* key : {"version", "command", "params", "result", "checks"}) EXPECT_TRUE(r.doc.contains(key)) << key;
}

TEST(RunTest, CountHomothetyAndPSubgroup) {
  auto r = run_args({"count", "homothety", "--p", "7", "--scalar", "2", "--degree", "3", "--brute-force"});
  EXPECT_EQ(r.doc.at("result").at("formula_count"), 4);
  EXPECT_EQ(r.doc.at("result").at("composition_count"), 4);
  EXPECT_EQ(exit_status(r), 0);
  r = run_args({"count", "psubgroup", "--p", "2", "--generators", "[[1,0],[1,1]]", "--degree", "4", "--brute-force"});
  EXPECT_EQ(r.doc.at("result").at("formula_count"), 1);
  EXPECT_EQ(r.doc.at("result").at("brute_force_count"), 1);
}

TEST(RunTest, PglScan) {
  const auto r = run_args({"pgl-scan", "--p", "2", "--k", "1", "--max-degree", "8"});
  EXPECT_EQ(r.doc.at("result").at("polynomials"), Json::array({"x^2 + x + 1"}));
}

TEST(RunTest, EnumerationIsCanonicallyOrdered) {
  const auto r = run_args({"enumerate", "homothety", "--p", "5", "--scalar", "4", "--degree", "4"});
  std::vector<Poly> polys;
  const auto F = make_field(5, 1);
  for (const auto& s : r.doc.at("result").at("polynomials")) polys.push_back(parse_poly(F, s.get<std::string>()));
  EXPECT_TRUE(std::is_sorted(polys.begin(), polys.end(), canonical_less));
  EXPECT_EQ(r.doc.at("result").at("count"), homothety_invariant_formula(F, 2, 4));
}

TEST(RunTest, DecomposeActFixedConjugate) {
  auto r = run_args({"decompose", "translation", "--p", "2", "--subspace", "1", "--poly", "x^4+x+1"});
  EXPECT_EQ(r.doc.at("result").at("outer"), "x^2 + x + 1");
  r = run_args({"decompose", "homothety", "--p", "5", "--scalar", "4", "--poly", "x^2+3"});
  EXPECT_EQ(r.doc.at("result").at("outer"), "x + 4");
  r = run_args({"act", "--p", "3", "--matrix", "[[0,1],[1,0]]", "--poly", "x^2+x+2"});
  EXPECT_EQ(r.doc.at("result").at("image"), "2*x^2 + x + 1");
  r = run_args({"fixed", "--p", "5", "--matrix", "[[4,0],[0,1]]", "--poly", "x^2+2", "--mode", "strict"});
  EXPECT_EQ(r.doc.at("result").at("fixed"), true);
  r = run_args({"fixed", "--p", "5", "--matrix", "[[2,0],[0,1]]", "--poly", "x^2+2"});
  EXPECT_EQ(r.doc.at("result").at("fixed"), false);
  r = run_args({"psubgroup", "conjugate", "--p", "2", "--k", "2", "--generators", "[[1,1],[0,1]];[[1,t],[0,1]]"});
  EXPECT_EQ(r.doc.at("result").at("dimension"), 2);
  EXPECT_EQ(exit_status(r), 0);
}

TEST(RunTest, VerifyExitStatusReflectsChecks) {
  const auto r = run_args({"verify", "all", "--max-q", "3", "--max-degree", "4"});
  bool all = true;
  for (const auto& c : r.doc.at("checks")) all = all && c.at("passed").get<bool>();
  EXPECT_EQ(exit_status(r), all ? 0 : 1);
  for (const auto& c : r.doc.at("result").at("criteria")) {
    if (c.at("id") != "AC9") {
      EXPECT_TRUE(c.at("passed").get<bool>()) << c.at("id");
    }
  }
}

TEST(RunTest, SingleFailedCheckGivesNonzeroExit) {
  Report r;
  r.doc = Json{{"checks", Json::array({Json{{"name", "a"}, {"passed", true}}, Json{{"name", "b"}, {"passed", true}}})}};
  EXPECT_EQ(exit_status(r), 0);
  r.doc["checks"][1]["passed"] = false;
  EXPECT_EQ(exit_status(r), 1);
}

TEST(MainTest, ErrorsExitWithTwo) {
  std::ostringstream out, err;
  EXPECT_EQ(main_entry({"act", "--p", "3", "--matrix", "[[1,1],[1,1]]", "--poly", "x"}, out, err), 2);
  EXPECT_NE(err.str().find("Singular"), std::string::npos);

  out.str("");
  EXPECT_EQ(main_entry({"act", "--p", "3", "--matrix", "[[1,0],[0,1]]", "--poly", "x^", "--json"}, out, err), 2);
  const auto doc = Json::parse(out.str());
  EXPECT_EQ(doc.at("error").at("code"), "SyntaxError");
  EXPECT_EQ(doc.at("error").at("position"), 2);

  EXPECT_EQ(main_entry({"count", "translation", "--p", "4", "--subspace", "1", "--degree", "2"}, out, err), 2);
  EXPECT_EQ(main_entry({"count", "translation", "--p", "2", "--subspace", "1", "--degree", "30", "--brute-force"}, out, err),
            2);
  EXPECT_EQ(main_entry({"--help"}, out, err), 0);
}

TEST(MainTest, OutputIsByteStable) {
  const std::vector<std::string> args{"enumerate", "translation", "--p", "3", "--k", "2", "--subspace", "t", "--degree", "6", "--json"};
  std::ostringstream a, b, err;
  EXPECT_EQ(main_entry(args, a, err), 0);
  EXPECT_EQ(main_entry(args, b, err), 0);
  EXPECT_EQ(a.str(), b.str());
  EXPECT_FALSE(a.str().empty());
}

}  // namespace
}  // namespace glfix::cli
