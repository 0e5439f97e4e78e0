#include "idpcheck_cli/cli.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <sstream>

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

std::string data(const std::string& name) { return std::string(IDPCHECK_TEST_DATA) + "/" + name; }

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = idpcheck::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, AnalyzeText) {
  auto r = run({"analyze", data("rem32.mat")});
  EXPECT_EQ(r.code, idpcheck::cli::kExitOk);
  EXPECT_EQ(r.out.rfind("verdict: not_normal\nrule: thm-4.1", 0), 0u) << r.out;
}

TEST(Cli, AnalyzeJson) {
  auto r = run({"analyze", data("solv3.ideal"), "--format", "json"});
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["rule"], "thm-4.5");
  EXPECT_EQ(j["witness"]["degree"], 3);
}

TEST(Cli, UndecidedExitCode) {
  auto r = run({"analyze", data("k24.ideal"), "--no-oracle", "--no-minors", "--oracle-max-degree", "2"});
  EXPECT_EQ(r.code, 0);
  auto o = run({"oracle", data("k24.ideal"), "--oracle-max-degree", "2"});
  EXPECT_EQ(o.code, idpcheck::cli::kExitUndecided) << o.out;
}

TEST(Cli, Oracle) {
  auto r = run({"oracle", data("rem32.mat"), "--format", "json"});
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["verdict"], "not_normal");
  EXPECT_EQ(j["witness"]["point"], nlohmann::json::array({1, 1, 1, 1, 1, 1, 1}));
}

TEST(Cli, Hypergraph) {
  auto r = run({"hypergraph", data("fig1.ideal")});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("{2,3,4}: i, j"), std::string::npos) << r.out;
}

TEST(Cli, Reduce) {
  auto r = run({"reduce", data("fig1.ideal"), "--format", "json"});
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["reductions"].size(), 2u);
  EXPECT_EQ(j["verdict"], "normal");
}

TEST(Cli, Verify) {
  auto r = run({"verify", data("tri.ideal"), "--witness", data("bad.w")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("invalid: ", 0), 0u) << r.out;
  EXPECT_EQ(run({"verify", data("tri.ideal")}).code, idpcheck::cli::kExitInputError);
}

TEST(Cli, InputErrors) {
  EXPECT_EQ(run({"analyze", data("missing.ideal")}).code, idpcheck::cli::kExitInputError);
  EXPECT_EQ(run({}).code, idpcheck::cli::kExitInputError);
  EXPECT_EQ(run({"analyze", data("fig1.ideal"), "--format", "xml"}).code, idpcheck::cli::kExitInputError);
  EXPECT_EQ(run({"bogus"}).code, idpcheck::cli::kExitInputError);
}

TEST(Cli, Crosscheck) {
  auto r = run({"crosscheck", "--seed", "7", "--count", "40"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("mismatches: 0"), std::string::npos) << r.out;
  EXPECT_EQ(run({"crosscheck"}).code, idpcheck::cli::kExitInputError);
}

TEST(Cli, Help) {
  auto r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("analyze"), std::string::npos);
}
