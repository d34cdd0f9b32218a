#include <gtest/gtest.h>

#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "diophant/cli.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
  nlohmann::json doc() const { return nlohmann::json::parse(out); }
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = diophant::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

Outcome run_json(std::vector<std::string> args) {
  args.insert(args.begin(), {"--format", "json"});
  return run(std::move(args));
}

std::string data(const std::string& name) { return std::string(DIOPHANT_TEST_DATA) + "/" + name; }

}  // namespace

TEST(Cli, PellTable) {
  const auto r = run({"nt", "pell", "--a", "2", "--n", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("(26,15)"), std::string::npos) << r.out;
}

TEST(Cli, PellJson) {
  const auto r = run_json({"nt", "pell", "--a", "3", "--n", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.doc().at("x"), 17);
  EXPECT_EQ(r.doc().at("y"), 6);
}

TEST(Cli, FormatAfterSubcommand) {
  const auto r = run({"nt", "pellfund", "2", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.doc().at("x"), 3);
}

TEST(Cli, FourSquaresAndAlpha) {
  EXPECT_EQ(run_json({"nt", "foursquares", "34"}).doc(), nlohmann::json::parse("[5,3,0,0]"));
  EXPECT_EQ(run_json({"nt", "alpha", "--n", "5"}).doc().at("alpha"), 209);
  EXPECT_EQ(run_json({"nt", "alpha", "--n", "5", "--mod", "7"}).doc().at("alpha"), 209 % 7);
  EXPECT_TRUE(run_json({"nt", "lemma5", "--a", "2", "--n", "2", "--k", "3"}).doc().at("holds").get<bool>());
}

TEST(Cli, ValidationErrorsExitOne) {
  EXPECT_EQ(run({"enum", "poly", "0"}).code, 1);
  EXPECT_EQ(run({"nt", "pell", "--a", "1", "--n", "1"}).code, 1);
  const auto r = run({"formal", "quine", "--template", data("two_holes.template")});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("MalformedTemplate"), std::string::npos);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run({"nt", "pell", "--a", "x", "--n", "1"}).code, 2);
  EXPECT_EQ(run({"nosuch"}).code, 2);
  EXPECT_EQ(run({"--format", "xml", "nt", "pellfund", "2"}).code, 2);
}

TEST(Cli, EnumPolyAndDiag) {
  const auto p = run_json({"enum", "poly", "5"});
  ASSERT_EQ(p.code, 0) << p.err;
  EXPECT_EQ(p.doc().at("text"), "x1");
  const auto d = run_json({"enum", "diag", "--max", "4"});
  ASSERT_EQ(d.code, 0) << d.err;
  ASSERT_EQ(d.doc().size(), 4u);
  for (const auto& row : d.doc()) {
    const auto state = row.at("state").get<std::string>();
    if (state == "member") EXPECT_EQ(row.at("chi_v"), 0);
    if (state == "nonmember") EXPECT_EQ(row.at("chi_v"), 1);
  }
}

TEST(Cli, ReduceQuadEmitsVanishingWitness) {
  const auto r = run_json({"reduce", "quad", "--d", "2", "--equation", data("two.eq"), "--emit-witness", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.doc().at("vanishes").get<bool>());
  EXPECT_EQ(r.doc().at("arity"), 45);
}

TEST(Cli, GaussRoundTripThroughVerify) {
  const auto w = run({"reduce", "gauss", "--a", "0"});
  ASSERT_EQ(w.code, 0) << w.err;
  EXPECT_EQ(w.doc().at("values").at("x").at(0), 10864);
  const std::string path = testing::TempDir() + "gauss_witness.json";
  {
    std::ofstream f(path);
    f << w.out;
  }
  const auto v = run_json({"reduce", "gauss-verify", path});
  EXPECT_EQ(v.code, 0) << v.err;
  EXPECT_TRUE(v.doc().at("holds").get<bool>());

  auto doc = w.doc();
  doc["values"]["y"] = nlohmann::json::array({40546, 0});
  {
    std::ofstream f(path);
    f << doc.dump();
  }
  const auto bad = run_json({"reduce", "gauss-verify", path});
  EXPECT_NE(bad.code, 0);
  EXPECT_FALSE(bad.doc().at("holds").get<bool>());
}

TEST(Cli, AlphaSolutions) {
  const auto r = run_json({"reduce", "alpha-solutions", "--bound", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.doc().size(), 4u);
}

TEST(Cli, SearchAndCompile) {
  const auto s = run_json({"search", "--set", data("even_set.json"), "--radius", "4", "--witness-radius", "4"});
  ASSERT_EQ(s.code, 0) << s.err;
  for (const auto& row : s.doc()) {
    const auto x = row.at("point").at(0).at(0).get<int>();
    EXPECT_EQ(row.at("state") == "member", x % 2 == 0) << x;
  }
  const auto c = run({"set", "compile", "--formula", data("even.formula")});
  ASSERT_EQ(c.code, 0) << c.err;
  EXPECT_EQ(c.doc().at("params"), 1);
}

TEST(Cli, Formal) {
  const auto liar = run_json({"formal", "liar", "--size", "2"});
  ASSERT_EQ(liar.code, 0) << liar.err;
  EXPECT_EQ(liar.doc().at("counterexamples"), 0);
  const auto one = run_json({"formal", "liar", "--system", data("liar_system.json")});
  ASSERT_EQ(one.code, 0) << one.err;
  EXPECT_TRUE(one.doc().at("confirmed").get<bool>());
  const auto diag = run_json({"formal", "diag", "--file", data("swap_g.json"), "--alpha", "swap"});
  ASSERT_EQ(diag.code, 0) << diag.err;
  EXPECT_TRUE(diag.doc().at("matching_columns").empty());
  const auto quine = run_json({"formal", "quine", "--template", data("quine.template")});
  ASSERT_EQ(quine.code, 0) << quine.err;
  EXPECT_TRUE(quine.doc().at("holds").get<bool>());
}

TEST(Cli, Selfcheck) {
  EXPECT_EQ(run({"selfcheck"}).code, 0);
  EXPECT_EQ(run({"selfcheck", "--inject-fault", "conjoin-product"}).code, 3);
  // The fault switch must not leak into later runs.
  EXPECT_EQ(run({"selfcheck"}).code, 0);
}
