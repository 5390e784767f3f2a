#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "pcsc/faults.hpp"
#include "pcsc/io.hpp"
#include "pcsc/paperlab.hpp"
#include "pcsc/rules.hpp"

using namespace pcsc;

namespace {

Profile named(const std::string& n) { return fixture(n).profile; }
Lottery L(const Profile& p, const char* s) { return parse_lottery(s, p.alternatives()); }

// sum_y g(x, y) p(y) <= 0 for every x, with margins from the pairwise oracle.
bool maximal_by_oracle(const Profile& prof, const Lottery& p) {
  for (Alt x : prof.alternatives().all()) {
    Rational s = 0;
    for (Alt y : prof.alternatives().all())
      if (x != y) s += oracle::margin(prof, x, y) * p[y];
    if (s > 0) return false;
  }
  return true;
}

}  // namespace

TEST(Rd, Examples) {
  const Profile p = named("rd_example");
  EXPECT_EQ(rd(p), L(p, "a:3/5,b:1/5,c:1/5"));
  const Profile u = oracle::profile({"b,a,c", "b,c,a"});
  EXPECT_EQ(rd(u), L(u, "b:1"));
  const Profile two = oracle::profile({"a,b,c", "b,a,c"});
  EXPECT_EQ(rd(two), L(two, "a:1/2,b:1/2"));
}

TEST(Ml, ManipulationExample) {
  const Profile r = named("ml_manipulation_R"), rp = named("ml_manipulation_Rprime");
  EXPECT_EQ(ml(r), L(r, "a:3/5,b:1/5,c:1/5"));
  EXPECT_EQ(ml(rp), L(rp, "c:3/5,a:1/5,b:1/5"));
  EXPECT_TRUE(ml_is_unique(r));
  EXPECT_TRUE(ml_is_unique(rp));
}

TEST(Ml, CondorcetWinnerIsDegenerate) {
  const Profile p = named("thm1_R2");
  EXPECT_EQ(ml(p), L(p, "b:1"));
  EXPECT_TRUE(is_maximal_lottery(p, L(p, "b:1")));
}

TEST(IsMaximalLottery, Examples) {
  const Profile r = named("ml_manipulation_R");
  EXPECT_TRUE(is_maximal_lottery(r, L(r, "a:3/5,b:1/5,c:1/5")));
  EXPECT_FALSE(is_maximal_lottery(r, Lottery::uniform(r.alternatives())));
  EXPECT_FALSE(maximal_by_oracle(r, Lottery::uniform(r.alternatives())));
  EXPECT_THROW(is_maximal_lottery(r, Lottery::uniform(AlternativeSet::letters(4))), DomainError);
}

TEST(Ml, TiedProfileIsInteriorAndNotUnique) {
  // All margins vanish, so every lottery is maximal.
  const Profile p = oracle::profile({"a,b,c", "c,b,a"});
  EXPECT_FALSE(ml_is_unique(p));
  const Lottery out = ml(p);
  EXPECT_FALSE(out.is_degenerate());
  EXPECT_TRUE(is_maximal_lottery(p, out));
  for (Alt x : p.alternatives().all()) EXPECT_GT(out[x], 0);
}

TEST(Ml, RandomProfilesAgainstOracle) {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 400; ++t) {
    const std::size_t m = 2 + t % 3, n = 1 + t % 7;
    const Profile p = oracle::random_profile(m, n, rng);
    const Lottery out = ml(p);
    ASSERT_TRUE(maximal_by_oracle(p, out)) << format_profile(p);
    EXPECT_TRUE(is_maximal_lottery(p, out));
    if (out.is_degenerate()) { EXPECT_TRUE(ml_is_unique(p)) << format_profile(p); }
    if (auto w = condorcet_winner(p)) { EXPECT_EQ(out, Lottery::degenerate(p.alternatives(), *w)); }
    // Every maximal lottery other than out must be ruled out on a small grid when unique.
    if (m == 3 && ml_is_unique(p)) {
      for (const auto& q : oracle::grid(p.alternatives(), 6))
        if (maximal_by_oracle(p, q)) { EXPECT_EQ(q, out); }
    }
  }
}

TEST(Ml, DegenerateTiebreakFault) {
  const Profile p = oracle::profile({"a,b,c", "c,b,a"});
  const Lottery honest = ml(p);
  ScopedFault f(Fault::DegenerateMlTiebreak);
  const Lottery broken = ml(p);
  EXPECT_TRUE(broken.is_degenerate());
  EXPECT_NE(broken, honest);
}

TEST(CondorcetUniform, Examples) {
  const Profile r2 = named("thm1_R2"), r1 = named("thm1_R1");
  EXPECT_EQ(condorcet_uniform(r2), L(r2, "b:1"));
  EXPECT_EQ(condorcet_uniform(r1), Lottery::uniform(r1.alternatives()));
  const Profile single = oracle::profile({"c,a,b,d"});
  EXPECT_EQ(condorcet_uniform(single), L(single, "c:1"));
}

TEST(F1, Cases) {
  const Profile cw = oracle::profile({"a,b,c", "a,c,b", "b,a,c"});
  EXPECT_EQ(f1(cw), L(cw, "a:1"));
  const Profile two = oracle::profile({"a,b,c", "b,a,c"});
  EXPECT_EQ(f1(two), L(two, "a:1/2,b:1/2"));
  const Profile c24 = named("prop3_case24_211");
  EXPECT_EQ(f1(c24), L(c24, "a:3/5,b:1/5,c:1/5"));
  const Profile cycle = oracle::profile({"a,b,c", "b,c,a", "c,a,b"});
  EXPECT_EQ(f1(cycle), Lottery::uniform(cycle.alternatives()));
}

TEST(F2, Cases) {
  const Profile rdp = named("rd_example");
  EXPECT_EQ(f2(rdp), L(rdp, "a:1"));
  const Profile p = oracle::profile({"a,b,c", "a,b,c", "c,a,b"});
  EXPECT_EQ(f2(p), L(p, "a:2/3,c:1/3"));
  const Profile none = oracle::profile({"a,b,c", "b,c,a", "c,a,b"});
  EXPECT_TRUE(never_bottom_set(none).empty());
  EXPECT_EQ(f2(none), rd(none));
  const Profile both = oracle::profile({"a,b,c", "b,a,c"});
  EXPECT_EQ(never_bottom_set(both).size(), 2u);
  EXPECT_EQ(f2(both), rd(both));
}

TEST(Rules, ThreeAlternativeRulesRejectOtherSizes) {
  const Profile four = named("thm1_R1");
  EXPECT_THROW(f1(four), ApplicabilityError);
  EXPECT_THROW(f2(four), ApplicabilityError);
  EXPECT_THROW(rule_by_name("f1")(four), ApplicabilityError);
  EXPECT_NO_THROW(rule_by_name("ml")(four));
}

TEST(Rules, LookupAndOutputsAreLotteries) {
  for (const auto& name : rule_names()) EXPECT_EQ(rule_by_name(name).name, name);
  EXPECT_THROW(rule_by_name("borda"), DomainError);
  std::mt19937_64 rng(23);
  for (int t = 0; t < 100; ++t) {
    const Profile p = oracle::random_profile(3, 1 + t % 6, rng);
    for (const auto& name : rule_names()) {
      const Lottery out = rule_by_name(name)(p);
      Rational sum = 0;
      for (const auto& v : out.probabilities()) {
        EXPECT_GE(v, 0);
        sum += v;
      }
      EXPECT_EQ(sum, 1);
    }
  }
}
