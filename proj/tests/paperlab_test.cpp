#include <gtest/gtest.h>

#include <set>

#include "pcsc/faults.hpp"
#include "pcsc/paperlab.hpp"

using namespace pcsc;

namespace {

std::set<std::string> failing_fixtures(const PaperSuiteReport& rep) {
  std::set<std::string> out;
  for (const auto& r : rep.results)
    if (!r.passed) out.insert(r.fixture);
  return out;
}

}  // namespace

TEST(PaperSuite, AllFactsHold) {
  const auto rep = verify_paper_suite();
  for (const auto& r : rep.results)
    EXPECT_TRUE(r.passed) << r.fixture << ": " << r.claim << "\n expected " << r.expected << "\n observed " << r.observed;
  EXPECT_TRUE(rep.ok());
  EXPECT_EQ(rep.passed, rep.results.size());
}

TEST(PaperSuite, EveryFixtureCarriesFacts) {
  const auto names = fixture_names();
  EXPECT_EQ(names.size(), 21u);
  for (const auto& name : names) {
    const Fixture f = fixture(name);
    EXPECT_EQ(f.name, name);
    EXPECT_FALSE(f.notes.empty()) << name;
    EXPECT_FALSE(f.facts.empty()) << name;
  }
}

TEST(PaperSuite, FlippedPcSignIsCaught) {
  ScopedFault fault(Fault::FlipPcSign);
  const auto rep = verify_paper_suite();
  EXPECT_FALSE(rep.ok());
  const auto bad = failing_fixtures(rep);
  for (const char* n : {"rd_example", "ml_manipulation_R", "prop5_cycle", "thm3_R1"}) EXPECT_TRUE(bad.count(n)) << n;
}

TEST(PaperSuite, BrokenMlTiebreakIsCaught) {
  {
    ScopedFault fault(Fault::DegenerateMlTiebreak);
    const auto rep = verify_paper_suite();
    EXPECT_FALSE(rep.ok());
    EXPECT_EQ(failing_fixtures(rep), (std::set<std::string>{"ml_manipulation_R", "ml_manipulation_Rprime"}));
  }
  EXPECT_TRUE(verify_paper_suite().ok());
}

TEST(Fixture, LookupErrors) {
  EXPECT_THROW(fixture("nope"), DomainError);
  EXPECT_THROW(fixture_text("nope"), DomainError);
}

TEST(Fixture, CycleLotteries) {
  const Fixture f = fixture("prop5_cycle");
  EXPECT_EQ(f.lotteries.at("p1").to_string(), "a:1/2,b:1/2");
  EXPECT_EQ(f.lotteries.at("p2").to_string(), "c:1");
  EXPECT_EQ(f.lotteries.at("p3").to_string(), "d:1/2,e:1/2");
  EXPECT_TRUE(fixture("rd_example").lotteries.empty());
}

TEST(Fixture, AlternativeSymmetries) {
  const Profile r1 = fixture("thm3_R1").profile, r3 = fixture("thm3_R3").profile;
  EXPECT_TRUE(paper_data::symmetric_in(r1, {1, 2}));
  EXPECT_FALSE(paper_data::symmetric_in(r1, {1, 3}));
  EXPECT_TRUE(paper_data::symmetric_in(r3, {1, 2, 3}));
  EXPECT_FALSE(paper_data::symmetric_in(fixture("thm3_R2").profile, {1, 2, 3}));
}

TEST(Fixture, VerifyFixtureReportsExceptions) {
  Fixture f = fixture("rd_example");
  f.facts.push_back({"throws", "x", [] () -> std::string { throw DomainError("boom"); }});
  const auto results = verify_fixture(f);
  ASSERT_FALSE(results.empty());
  EXPECT_FALSE(results.back().passed);
  EXPECT_EQ(results.back().observed, "error: boom");
}
