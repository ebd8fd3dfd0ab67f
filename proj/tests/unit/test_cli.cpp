#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "stardmp/cli/commands.hpp"

using namespace stardmp;
using cli::json;
namespace fs = std::filesystem;

namespace {

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("stardmp_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                        "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const auto p = (dir_ / name).string();
    std::ofstream(p) << text;
    return p;
  }

  int call(std::vector<std::string> args) {
    args.insert(args.begin(), "stardmp");
    out_.str({});
    err_.str({});
    return cli::run(args, out_, err_);
  }

  json report() const { return json::parse(out_.str()); }

  static std::string gaussian(const std::string& rows, const std::string& inv = "transpose") {
    return R"({"ring":{"kind":"gaussian-rational-matrix","n":2,"involution":")" + inv + R"("},"value":)" + rows + "}";
  }

  fs::path dir_;
  std::ostringstream out_, err_;
};

}  // namespace

TEST_F(Cli, InverseExists) {
  const auto a = write("a.json", gaussian(R"([["i","0"],["0","0"]])"));
  EXPECT_EQ(call({"inverse", a, "--kind", "pseudo-core"}), cli::kExitOk);
  const auto r = report();
  EXPECT_EQ(r["command"], "inverse");
  EXPECT_EQ(r["config"]["budget"], finite::budget_from_env());
  EXPECT_EQ(r["result"]["witness"], json::parse(R"([["-i","0"],["0","0"]])"));
  EXPECT_EQ(r["result"]["index"], 1);
  EXPECT_EQ(r["result"]["verified"], true);
}

TEST_F(Cli, InverseAbsent) {
  const auto s = write("s.json", gaussian(R"([["i","0"],["-1","0"]])"));
  EXPECT_EQ(call({"inverse", s, "--kind", "pseudo-core"}), cli::kExitNegative);
  EXPECT_EQ(report()["result"]["exists"], false);
}

TEST_F(Cli, IdentityMoorePenrose) {
  const auto one = write("one.json", gaussian(R"([["1","0"],["0","1"]])", "conjugate-transpose"));
  EXPECT_EQ(call({"inverse", one, "--kind", "mp"}), cli::kExitOk);
  EXPECT_EQ(report()["result"]["witness"], json::parse(R"([["1","0"],["0","1"]])"));
}

TEST_F(Cli, MalformedDocumentNamesField) {
  const auto bad = write("bad.json", gaussian(R"([["i","0"],["-1",0]])"));
  EXPECT_EQ(call({"inverse", bad, "--kind", "mp"}), cli::kExitInput);
  EXPECT_NE(err_.str().find("/value/1/1"), std::string::npos) << err_.str();
  const auto kind = write("kind.json", R"({"ring":{"kind":"torus","n":2},"value":[]})");
  EXPECT_EQ(call({"classify", kind}), cli::kExitInput);
  EXPECT_NE(err_.str().find("/ring/kind"), std::string::npos) << err_.str();
  const auto syntax = write("syntax.json", "{");
  EXPECT_EQ(call({"classify", syntax}), cli::kExitInput);
  EXPECT_EQ(call({"inverse", bad, "--kind", "left"}), cli::kExitInput);
  EXPECT_EQ(call({"inverse", (dir_ / "missing.json").string(), "--kind", "mp"}), cli::kExitInput);
  EXPECT_EQ(call({"frobnicate"}), cli::kExitInput);
}

TEST_F(Cli, Classify) {
  const auto a = write("a.json", gaussian(R"([["i","0"],["0","0"]])"));
  EXPECT_EQ(call({"classify", a}), cli::kExitOk);
  const auto r = report()["result"];
  EXPECT_EQ(r["star_dmp"], true);
  EXPECT_EQ(r["index"], 1);
  for (const auto& key : {"drazin", "power_moore_penrose", "pseudo_core", "dual_pseudo_core"})
    EXPECT_FALSE(r["witnesses"][key].is_null()) << key;
  for (const auto& v : r["characterizations"]) EXPECT_EQ(v["agrees"], true) << v["id"];
}

TEST_F(Cli, DecomposeNilpotent) {
  const auto n = write("n.json", gaussian(R"([["0","1"],["0","0"]])", "conjugate-transpose"));
  for (const char* which : {"pseudo-core", "core-nilpotent"}) {
    EXPECT_EQ(call({"decompose", n, "--which", which}), cli::kExitOk);
    const auto r = report()["result"];
    EXPECT_EQ(r["a1"], json::parse(R"([["0","0"],["0","0"]])"));
    EXPECT_EQ(r["a2"], json::parse(R"([["0","1"],["0","0"]])"));
    EXPECT_EQ(r["axioms_hold"], true);
  }
}

TEST_F(Cli, OrderAndMismatch) {
  const auto z = write("z.json", R"({"ring":{"kind":"zp-matrix","p":2,"k":2},"value":[[0,0],[0,0]]})");
  const auto n = write("n.json", R"({"ring":{"kind":"zp-matrix","p":2,"k":2},"value":[[0,0],[1,0]]})");
  EXPECT_EQ(call({"order", z, n, "--relation", "pseudo-core"}), cli::kExitOk);
  EXPECT_EQ(call({"order", n, z}), cli::kExitOk);
  EXPECT_EQ(call({"order", n, z, "--relation", "core"}), cli::kExitNegative);
  const auto other = write("o.json", R"({"ring":{"kind":"zn","n":4},"value":2})");
  EXPECT_EQ(call({"order", n, other}), cli::kExitInput);
  EXPECT_NE(err_.str().find("carrier"), std::string::npos);
}

TEST_F(Cli, BudgetFlag) {
  // the ideal characterizations enumerate the carrier
  const auto m = write("m.json", R"({"ring":{"kind":"zp-matrix","p":3,"k":2},"value":[[1,0],[0,0]]})");
  EXPECT_EQ(call({"classify", m, "--budget", "10"}), cli::kExitInput);
  EXPECT_NE(err_.str().find("budget"), std::string::npos);
  EXPECT_EQ(call({"--budget", "100", "classify", m}), cli::kExitOk);
  EXPECT_EQ(report()["config"]["budget"], 100);
}

TEST_F(Cli, VerifyEchoesConfigAndWritesOut) {
  const auto path = (dir_ / "v.json").string();
  EXPECT_EQ(call({"verify", "--id", "E2.17,T3.", "--seed", "7", "--samples", "4", "--universe", "fixture", "--out",
                  path}),
            cli::kExitOk);
  EXPECT_TRUE(out_.str().empty());
  std::ifstream in(path);
  const auto r = json::parse(in);
  EXPECT_EQ(r["config"]["seed"], 7);
  EXPECT_EQ(r["config"]["samples"], 4);
  EXPECT_EQ(r["config"]["out"], path);
  EXPECT_EQ(r["config"]["ids"], json::parse(R"(["E2.17","T3.1","T3.2","T3.3","T3.4"])"));
  EXPECT_EQ(r["summary"]["fail"], 0);
}

TEST_F(Cli, VerifyFailureExitsNegative) {
  EXPECT_EQ(call({"verify", "--id", "T2.7", "--universe", "zp:2:2"}), cli::kExitNegative);
  EXPECT_EQ(report()["theorems"][0]["verdict"], "fail");
}

TEST_F(Cli, VerifyRejectsUnknownFilter) {
  EXPECT_EQ(call({"verify", "--id", "T8."}), cli::kExitInput);
  EXPECT_EQ(call({"verify", "--universe", "zq:3"}), cli::kExitInput);
}
