#include <gtest/gtest.h>

#include <fstream>
#include <set>

#include "stardmp/suite/suite.hpp"

using namespace stardmp;
using namespace stardmp::suite;

namespace {

json load_fixture(const std::string& name) {
  std::ifstream in(std::string(STARDMP_FIXTURE_DIR) + "/" + name);
  EXPECT_TRUE(in.good()) << name;
  return json::parse(in);
}

RunConfig small_config() {
  RunConfig c;
  c.samples = 6;
  c.pair_samples = 6;
  c.triple_samples = 3;
  return c;
}

}  // namespace

TEST(Catalog, Complete) {
  const std::vector<std::string> want{"L2.1", "L2.2", "L2.3", "T2.4", "C2.5",  "T2.6", "T2.7", "C2.8",
                                      "T2.9", "T2.10", "T2.11", "L2.12", "T2.13", "T2.14", "T2.15", "T2.16",
                                      "E2.17", "T3.1", "T3.2", "T3.3", "T3.4", "R3.5", "T4.2", "T4.3",
                                      "T4.4", "T4.5", "P5.1", "T5.2", "C5.3"};
  std::vector<std::string> got;
  for (const auto& t : catalog()) {
    got.push_back(t.id);
    EXPECT_FALSE(t.statement.empty()) << t.id;
    EXPECT_FALSE(default_universes(t.role).empty()) << t.id;
  }
  EXPECT_EQ(got, want);
}

TEST(Catalog, Select) {
  EXPECT_EQ(select_ids("T4."), (std::vector<std::string>{"T4.2", "T4.3", "T4.4", "T4.5"}));
  EXPECT_EQ(select_ids("C5.3,L2.1"), (std::vector<std::string>{"L2.1", "C5.3"}));
  EXPECT_THROW(select_ids("T9."), DomainError);
  EXPECT_THROW(select_ids("T2.1"), DomainError);
  EXPECT_THROW(find_theorem("X1.1"), DomainError);
}

TEST(Universe, Parse) {
  EXPECT_EQ(parse_universe("zn:2-5").moduli, (std::vector<int>{2, 3, 4, 5}));
  EXPECT_EQ(parse_universe("zp:3:2").prime, 3);
  EXPECT_EQ(parse_universe("random").sizes, (std::vector<int>{1, 2, 3, 4}));
  EXPECT_EQ(parse_universe("random:2").sizes, (std::vector<int>{2}));
  EXPECT_TRUE(parse_universe("zn:7").finite());
  for (const char* bad : {"zn:1", "zn:5-3", "zp:4:2", "random:9", "torus", "zn:"})
    EXPECT_THROW(parse_universe(bad), DomainError) << bad;
}

TEST(Suite, ExhaustivePass) {
  const auto cfg = small_config();
  for (const char* id : {"L2.3", "T2.4", "T2.10", "C5.3", "T3.2"}) {
    const auto r = run_theorem(id, parse_universe("zn:2-12"), cfg);
    EXPECT_EQ(r.verdict, Outcome::pass) << id;
    EXPECT_EQ(r.violation_count, 0U) << id;
  }
}

TEST(Suite, FixtureBound) {
  const auto cfg = small_config();
  EXPECT_EQ(run_theorem("E2.17", parse_universe("fixture"), cfg).verdict, Outcome::pass);
  const auto elsewhere = run_theorem("E2.17", parse_universe("zn:4"), cfg);
  EXPECT_EQ(elsewhere.verdict, Outcome::vacuous);
  EXPECT_FALSE(elsewhere.notes.empty());
}

TEST(Suite, BudgetHonored) {
  auto cfg = small_config();
  cfg.budget = 100;
  EXPECT_THROW(run_theorem("T4.2", parse_universe("zp:2:2"), cfg), BudgetExceeded);
}

TEST(Suite, Deterministic) {
  auto cfg = small_config();
  cfg.ids = {"L2.1", "T2.15", "T4.4"};
  cfg.universes = {"random:1-3", "zn:6"};
  const auto a = report_to_json(run_suite(cfg)).dump();
  const auto b = report_to_json(run_suite(cfg)).dump();
  EXPECT_EQ(a, b);
  cfg.seed += 1;
  EXPECT_NE(report_to_json(run_suite(cfg)).dump(), a);
}

TEST(Suite, OracleAgreement) {
  const auto cfg = small_config();
  const auto r = oracle_agreement(parse_universe("zn:2-12"), cfg);
  EXPECT_EQ(r.verdict, Outcome::pass);
  EXPECT_THROW(oracle_agreement(parse_universe("random:2"), cfg), DomainError);
}

// The least-index reading of the normal power characterization does not hold:
// the involutory upper triangular matrix over Z_2 is a counterexample.
TEST(KnownFailure, NormalPowerIndex) {
  const auto r = run_theorem("T2.7", parse_universe("zp:2:2"), small_config());
  EXPECT_EQ(r.verdict, Outcome::fail);
  const auto want = load_fixture("counterexamples.json").at("T2.7");
  EXPECT_EQ(r.violation_count, want.at("violation_count").get<std::size_t>());
  ASSERT_EQ(r.violations.size(), want.at("violations").size());
  for (std::size_t i = 0; i < r.violations.size(); ++i) EXPECT_EQ(r.violations[i], want.at("violations")[i]);
  // commutative carriers are unaffected
  EXPECT_EQ(run_theorem("T2.7", parse_universe("zn:2-24"), small_config()).verdict, Outcome::pass);
}

TEST(Counterexamples, MatchPersisted) {
  const auto stored = load_fixture("counterexamples.json").at("search");
  ASSERT_EQ(stored.size(), counterexample_properties().size());
  const auto cfg = small_config();
  for (const auto& entry : stored) {
    const auto property = entry.at("property").get<std::string>();
    const auto universe = entry.at("universe").get<std::string>();
    const auto found = search_counterexample(property, parse_universe(universe), cfg);
    ASSERT_TRUE(found.has_value()) << property;
    EXPECT_EQ(*found, entry.at("instance")) << property;
  }
  EXPECT_THROW(search_counterexample("nonsense", parse_universe("zn:4"), cfg), DomainError);
}

TEST(Counterexamples, AntisymmetryWitnessStored) {
  const auto r = run_theorem("T4.2", parse_universe("zp:2:2"), small_config());
  EXPECT_EQ(r.verdict, Outcome::pass);
  EXPECT_EQ(r.instances, 16U + 16U * 16U * 16U);
  const auto stored = load_fixture("counterexamples.json").at("search");
  for (const auto& entry : stored)
    if (entry.at("property") == "order-antisymmetry") {
      json w = r.witness;
      json s = entry.at("instance");
      EXPECT_EQ(w.at("a"), s.at("a"));
      EXPECT_EQ(w.at("b"), s.at("b"));
    }
}
