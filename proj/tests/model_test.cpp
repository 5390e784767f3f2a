#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "pcsc/io.hpp"
#include "pcsc/model.hpp"
#include "pcsc/paperlab.hpp"

using namespace pcsc;

namespace {

Profile rd_profile() { return oracle::profile({"a,b,c", "a,b,c", "a,b,c", "b,a,c", "c,a,b"}); }
Profile named(const std::string& n) { return fixture(n).profile; }
Alt at(const Profile& p, const char* l) { return p.alternatives().at(l); }

}  // namespace

TEST(AlternativeSet, RejectsDuplicatesAndEmpty) {
  EXPECT_THROW(AlternativeSet({"a", "a"}), DomainError);
  EXPECT_THROW(AlternativeSet(std::vector<std::string>{}), DomainError);
  EXPECT_THROW(AlternativeSet::letters(0), DomainError);
  const auto alts = AlternativeSet::letters(3);
  EXPECT_EQ(alts.name(Alt{2}), "c");
  EXPECT_THROW(alts.at("z"), DomainError);
}

TEST(Ranking, MustBePermutation) {
  const auto alts = AlternativeSet::letters(3);
  EXPECT_THROW(Ranking(alts, {Alt{0}, Alt{0}, Alt{1}}), DomainError);
  EXPECT_THROW(Ranking(alts, {Alt{0}, Alt{1}}), DomainError);
  EXPECT_THROW(Ranking(alts, {Alt{0}, Alt{1}, Alt{5}}), DomainError);
  const Ranking r = Ranking::from_labels(alts, {"b", "c", "a"});
  EXPECT_EQ(r.top(), Alt{1});
  EXPECT_EQ(r.bottom(), Alt{0});
  EXPECT_TRUE(r.prefers(Alt{2}, Alt{0}));
  EXPECT_EQ(r.reversed().to_string(), "a,c,b");
}

TEST(Ranking, AllRankingsCount) {
  EXPECT_EQ(all_rankings(AlternativeSet::letters(3)).size(), 6u);
  EXPECT_EQ(all_rankings(AlternativeSet::letters(4)).size(), 24u);
}

TEST(Lottery, Validation) {
  const auto alts = AlternativeSet::letters(2);
  EXPECT_THROW(Lottery(alts, {ratio(1, 2), ratio(1, 3)}), DomainError);
  EXPECT_THROW(Lottery(alts, {ratio(3, 2), ratio(-1, 2)}), DomainError);
  EXPECT_THROW(Lottery(alts, {Rational(1)}), DomainError);
  const Lottery p(alts, {ratio(2, 4), ratio(1, 2)});
  EXPECT_EQ(p.to_string(), "a:1/2,b:1/2");
  EXPECT_FALSE(p.is_degenerate());
  EXPECT_TRUE(Lottery::degenerate(alts, Alt{1}).is_degenerate());
  EXPECT_THROW(ratio(1, 0), DomainError);
}

TEST(MajorityMargin, RdExample) {
  const Profile p = rd_profile();
  EXPECT_EQ(majority_margin(p, at(p, "a"), at(p, "b")), 3);
  EXPECT_THROW(majority_margin(p, at(p, "a"), at(p, "a")), DomainError);
  EXPECT_THROW(majority_margin(p, Alt{7}, at(p, "a")), DomainError);
}

TEST(MajorityMargin, BBeatsEveryAlternative) {
  const Profile p = named("thm1_R2");
  for (const char* y : {"a", "c", "d"}) EXPECT_EQ(majority_margin(p, at(p, "b"), at(p, y)), 1) << y;
}

TEST(MajorityMargin, SkewSymmetryAndParityOnRandomProfiles) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    const std::size_t m = 2 + t % 4, n = 1 + t % 7;
    const Profile p = oracle::random_profile(m, n, rng);
    const MarginMatrix g(p);
    for (std::size_t x = 0; x < m; ++x) {
      EXPECT_EQ(g(Alt{x}, Alt{x}), 0);
      for (std::size_t y = 0; y < m; ++y) {
        if (x == y) continue;
        const long v = majority_margin(p, Alt{x}, Alt{y});
        EXPECT_EQ(v, oracle::margin(p, Alt{x}, Alt{y}));
        EXPECT_EQ(v, g(Alt{x}, Alt{y}));
        EXPECT_EQ(v, -majority_margin(p, Alt{y}, Alt{x}));
        EXPECT_EQ((v + static_cast<long>(n)) % 2, 0);
        EXPECT_LE(std::abs(v), static_cast<long>(n));
      }
    }
  }
}

TEST(TopCount, Examples) {
  const Profile p = rd_profile();
  EXPECT_EQ(top_count(p, at(p, "a")), 3u);
  EXPECT_EQ(top_count(p, at(p, "b")), 1u);
  EXPECT_EQ(top_count(p, at(p, "c")), 1u);
  const Profile u = oracle::profile({"b,a,c", "b,a,c", "b,a,c"});
  EXPECT_EQ(top_count(u, at(u, "b")), 3u);
  const Profile r1 = named("thm3_R1");
  EXPECT_EQ(top_count(r1, at(r1, "a")), 6u);
  EXPECT_EQ(top_count(r1, at(r1, "b")), 2u);
  EXPECT_EQ(top_count(r1, at(r1, "c")), 2u);
  EXPECT_EQ(top_count(r1, at(r1, "d")), 0u);
  EXPECT_THROW(top_count(p, Alt{3}), DomainError);
}

TEST(CondorcetWinner, FourAlternativeFixtures) {
  const std::vector<std::pair<const char*, const char*>> expected = {
      {"thm1_R1", nullptr}, {"thm1_R2", "b"}, {"thm1_R3", "a"}, {"thm1_R4", "d"},
      {"thm1_R5", nullptr}, {"thm1_R6", "b"}, {"thm1_R7", "a"}, {"thm1_R8", "c"}};
  for (auto [name, w] : expected) {
    const Profile p = named(name);
    const auto cw = condorcet_winner(p);
    if (w) {
      ASSERT_TRUE(cw && *cw == at(p, w)) << name;
    } else {
      EXPECT_FALSE(cw) << name;
    }
  }
}

TEST(CondorcetWinner, SingleVoterAndInvariants) {
  const Profile single = oracle::profile({"c,a,b"});
  EXPECT_EQ(condorcet_winner(single), at(single, "c"));
  std::mt19937_64 rng(3);
  for (int t = 0; t < 300; ++t) {
    const Profile p = oracle::random_profile(3 + t % 2, 1 + t % 6, rng);
    if (auto w = condorcet_winner(p)) { EXPECT_EQ(weak_condorcet_winners(p), AltSet{*w}); }
    for (Alt x : p.alternatives().all())
      if (2 * top_count(p, x) > p.num_voters()) { EXPECT_EQ(condorcet_winner(p), x); }
    const AltSet dominated = pareto_dominated_set(p);
    for (const auto& r : p.ballots())
      EXPECT_EQ(std::count(dominated.begin(), dominated.end(), r.top()), 0);
  }
}

TEST(WeakCondorcetWinners, Examples) {
  const Profile two = oracle::profile({"a,b,c", "b,a,c"});
  EXPECT_EQ(weak_condorcet_winners(two), (AltSet{Alt{0}, Alt{1}}));
  const Profile cycle = oracle::profile({"a,b,c", "b,c,a", "c,a,b"});
  EXPECT_TRUE(weak_condorcet_winners(cycle).empty());
}

TEST(ParetoDominated, Examples) {
  const Profile r1 = named("thm3_R1");
  EXPECT_EQ(pareto_dominated_set(r1), AltSet{at(r1, "d")});
  const Profile u = oracle::profile({"a,b,c", "a,b,c"});
  EXPECT_EQ(pareto_dominated_set(u), (AltSet{Alt{1}, Alt{2}}));
  EXPECT_TRUE(pareto_dominated_set(named("prop5_cycle")).empty());
}

TEST(NeverBottom, Examples) {
  const Profile p = rd_profile();
  EXPECT_EQ(never_bottom_set(p), AltSet{at(p, "a")});
  EXPECT_EQ(never_bottom_set(oracle::profile({"a,b,c"})), (AltSet{Alt{0}, Alt{1}}));
  EXPECT_EQ(never_bottom_set(oracle::profile({"a,b,c", "c,b,a"})), AltSet{Alt{1}});
}

TEST(Rank, Examples) {
  const auto alts = AlternativeSet({"w", "x", "y", "z"});
  const Ranking r = Ranking::from_labels(AlternativeSet::letters(4), {"a", "b", "c", "d"});
  EXPECT_EQ(rank(r, Alt{0}), 1u);
  EXPECT_EQ(rank(r, Alt{3}), 4u);
  const Ranking s = Ranking::from_labels(alts, {"x", "z", "w", "y"});
  EXPECT_EQ(rank(s, alts.at("w")), 3u);
  EXPECT_THROW(rank(s, Alt{9}), DomainError);
}

TEST(RemoveVoter, Examples) {
  const Profile r2 = named("thm3_R2");
  EXPECT_EQ(remove_voter(r2, 11), named("thm3_R1"));
  const Profile p = rd_profile();
  for (std::size_t i = 1; i <= p.num_voters(); ++i) EXPECT_EQ(insert_voter(remove_voter(p, i), i, p.voter(i)), p);
  const Profile two = oracle::profile({"a,b", "b,a"});
  EXPECT_EQ(remove_voter(two, 2).num_voters(), 1u);
  EXPECT_THROW(remove_voter(two, 3), DomainError);
  EXPECT_THROW(remove_voter(two, 0), DomainError);
  EXPECT_THROW(remove_voter(remove_voter(two, 1), 1), DomainError);
}

TEST(Relabel, IdentityInverseAndMargins) {
  const Profile p = named("thm3_R1");
  EXPECT_EQ(relabel(p, std::nullopt, std::nullopt), p);
  const std::vector<std::size_t> id = {0, 1, 2, 3};
  EXPECT_EQ(relabel(p, std::nullopt, id), p);
  const std::vector<std::size_t> pi = {2, 0, 3, 1}, inv = {1, 3, 0, 2};
  EXPECT_EQ(relabel(relabel(p, std::nullopt, pi), std::nullopt, inv), p);
  const Profile q = relabel(p, std::nullopt, pi);
  for (std::size_t x = 0; x < 4; ++x)
    for (std::size_t y = 0; y < 4; ++y)
      if (x != y) { EXPECT_EQ(majority_margin(q, Alt{pi[x]}, Alt{pi[y]}), majority_margin(p, Alt{x}, Alt{y})); }
  EXPECT_THROW(relabel(p, std::nullopt, std::vector<std::size_t>{0, 0, 1, 2}), DomainError);
  EXPECT_THROW(relabel(p, std::vector<std::size_t>{0, 1}, std::nullopt), DomainError);
}

TEST(Relabel, SwappingBAndCIsAVoterReordering) {
  const Profile p = named("thm3_R1");
  const Profile swapped = relabel(p, std::nullopt, std::vector<std::size_t>{0, 2, 1, 3});
  EXPECT_NE(swapped, p);
  EXPECT_EQ(ballot_multiset(swapped), ballot_multiset(p));
}

TEST(Support, Examples) {
  const auto alts = AlternativeSet::letters(5);
  EXPECT_EQ(support(Lottery::degenerate(alts, Alt{0})), AltSet{Alt{0}});
  EXPECT_EQ(support(parse_lottery("a:1/2,b:1/2", alts)), (AltSet{Alt{0}, Alt{1}}));
  EXPECT_EQ(support(Lottery::uniform(AlternativeSet::letters(4))).size(), 4u);
}
