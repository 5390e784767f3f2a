#pragma once

#include <functional>
#include <future>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pcsc/axioms.hpp"
#include "pcsc/efficiency.hpp"
#include "pcsc/extensions.hpp"
#include "pcsc/io.hpp"
#include "pcsc/model.hpp"
#include "pcsc/rules.hpp"

namespace pcsc {

// A checkable claim. `observe` recomputes the value through the library; the
// fact holds when it renders exactly as `expected`.
struct Fact {
  std::string claim;
  std::string expected;
  std::function<std::string()> observe;
};

struct Fixture {
  std::string name;
  std::string notes;
  Profile profile;
  std::map<std::string, Lottery> lotteries;
  std::vector<Fact> facts;
};

struct FactResult {
  std::string fixture;
  std::string claim;
  std::string expected;
  std::string observed;
  bool passed = false;
};

struct PaperSuiteReport {
  std::vector<FactResult> results;
  std::size_t passed = 0;
  std::size_t failed = 0;
  bool ok() const { return failed == 0 && passed > 0; }
};

namespace paper_data {

struct Source {
  const char* name;
  const char* notes;
  const char* text;
};

inline const std::vector<Source>& sources() {
  static const std::vector<Source> s = {
      {"rd_example", "random dictatorship fails the absolute winner property and PC1-efficiency",
       "alternatives: a b c\n3: a > b > c\n1: b > a > c\n1: c > a > b\n"},
      {"ml_manipulation_R", "voter 4 manipulates maximal lotteries by switching to ml_manipulation_Rprime",
       "alternatives: a b c\n2: a > b > c\n2: b > c > a\n1: c > a > b\n"},
      {"ml_manipulation_Rprime", "voter 4 reports c > a > b",
       "alternatives: a b c\n2: a > b > c\n1: b > c > a\n2: c > a > b\n"},
      {"thm1_R1", "no Condorcet winner; constraints force f(R1) uniform on {a,b,d}",
       "alternatives: a b c d\n1: a > b > d > c\n1: d > b > a > c\n1: a > d > c > b\n1: c > d > b > a\n"
       "1: c > b > a > d\n"},
      {"thm1_R2", "voter 3 of R1 reports a > b > c > d",
       "alternatives: a b c d\n1: a > b > d > c\n1: d > b > a > c\n1: a > b > c > d\n1: c > d > b > a\n"
       "1: c > b > a > d\n"},
      {"thm1_R3", "voter 4 of R1 reports c > d > a > b",
       "alternatives: a b c d\n1: a > b > d > c\n1: d > b > a > c\n1: a > d > c > b\n1: c > d > a > b\n"
       "1: c > b > a > d\n"},
      {"thm1_R4", "voter 3 of R1 reports d > a > c > b",
       "alternatives: a b c d\n1: a > b > d > c\n1: d > b > a > c\n1: d > a > c > b\n1: c > d > b > a\n"
       "1: c > b > a > d\n"},
      {"thm1_R5", "no Condorcet winner",
       "alternatives: a b c d\n1: a > b > d > c\n1: b > d > a > c\n1: a > d > c > b\n1: c > d > b > a\n"
       "1: c > b > a > d\n"},
      {"thm1_R6", "voter 5 of R5 reports b > c > a > d",
       "alternatives: a b c d\n1: a > b > d > c\n1: b > d > a > c\n1: a > d > c > b\n1: c > d > b > a\n"
       "1: b > c > a > d\n"},
      {"thm1_R7", "voter 4 of R5 reports c > d > a > b",
       "alternatives: a b c d\n1: a > b > d > c\n1: b > d > a > c\n1: a > d > c > b\n1: c > d > a > b\n"
       "1: c > b > a > d\n"},
      {"thm1_R8", "voter 2 of R5 reports b > c > d > a",
       "alternatives: a b c d\n1: a > b > d > c\n1: b > c > d > a\n1: a > d > c > b\n1: c > d > b > a\n"
       "1: c > b > a > d\n"},
      {"thm2_R1", "n = 8; b and c symmetric; deg(a) PC-dominates every p with p(b) = p(c) > 0",
       "alternatives: a b c d\n1: a > b > c > d\n1: a > c > b > d\n3: b > a > c > d\n3: c > a > b > d\n"},
      {"thm3_R1", "ten voters; a Pareto-dominates d; b and c symmetric",
       "alternatives: a b c d\n1: a > b > c > d\n1: a > b > d > c\n1: a > c > b > d\n1: a > c > d > b\n"
       "1: a > d > b > c\n1: a > d > c > b\n1: b > a > c > d\n1: b > a > d > c\n1: c > a > b > d\n"
       "1: c > a > d > b\n"},
      {"thm3_R2", "thm3_R1 plus voter 11 with d > a > b > c",
       "alternatives: a b c d\n1: a > b > c > d\n1: a > b > d > c\n1: a > c > b > d\n1: a > c > d > b\n"
       "1: a > d > b > c\n1: a > d > c > b\n1: b > a > c > d\n1: b > a > d > c\n1: c > a > b > d\n"
       "1: c > a > d > b\n1: d > a > b > c\n"},
      {"thm3_R3", "thm3_R2 plus voter 12 with d > a > c > b; b, c and d symmetric",
       "alternatives: a b c d\n1: a > b > c > d\n1: a > b > d > c\n1: a > c > b > d\n1: a > c > d > b\n"
       "1: a > d > b > c\n1: a > d > c > b\n1: b > a > c > d\n1: b > a > d > c\n1: c > a > b > d\n"
       "1: c > a > d > b\n1: d > a > b > c\n1: d > a > c > b\n"},
      {"prop5_cycle", "p1 -> p2 -> p3 -> p1 is a cycle of PC-improvements",
       "alternatives: a b c d e\n1: b > d > c > a > e\n1: a > e > c > b > d\n1: d > c > a > b > e\n"
       "1: e > c > a > b > d\n1: b > d > e > c > a\n1: a > e > d > c > b\n1: b > e > d > c > a\n"
       "1: a > d > e > c > b\n"},
      {"lemma1a_R", "n = 5; claimed f(R) uniform on {a,b,c}",
       "alternatives: a b c d\n2: a > d > b > c\n1: b > c > d > a\n2: c > a > d > b\n"},
      {"lemma1a_Rprime", "n = 5; voter 3 reports b > d > c > a",
       "alternatives: a b c d\n2: a > d > b > c\n1: b > d > c > a\n2: c > a > d > b\n"},
      {"prop3_case24_211", "2 x a > b > c, 1 x b > c > a, 1 x c > a > b",
       "alternatives: a b c\n2: a > b > c\n1: b > c > a\n1: c > a > b\n"},
      {"prop3_case24_312", "3 x a > b > c, 1 x b > c > a, 2 x c > a > b",
       "alternatives: a b c\n3: a > b > c\n1: b > c > a\n2: c > a > b\n"},
      {"prop3_case24_321", "3 x a > b > c, 2 x b > c > a, 1 x c > a > b",
       "alternatives: a b c\n3: a > b > c\n2: b > c > a\n1: c > a > b\n"},
  };
  return s;
}

inline std::string show(bool b) { return b ? "true" : "false"; }

inline std::string show(const std::optional<Alt>& x, const AlternativeSet& alts) {
  return x ? alts.name(*x) : "none";
}

inline std::string show(const std::optional<DominanceCertificate>& c) {
  return c ? c->dominator.to_string() : "none";
}

inline std::string show(const std::vector<Comparison>& cs) {
  std::string s;
  for (auto c : cs) s += (s.empty() ? "" : ",") + std::string(to_string(c));
  return s;
}

// Every permutation of `group` (alternative indices) maps the profile to a voter
// reordering of itself.
inline bool symmetric_in(const Profile& p, const std::vector<std::size_t>& group) {
  std::vector<std::size_t> g = group;
  std::sort(g.begin(), g.end());
  const auto base = ballot_multiset(p);
  do {
    std::vector<std::size_t> perm(p.num_alternatives());
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    for (std::size_t k = 0; k < group.size(); ++k) perm[group[k]] = g[k];
    if (ballot_multiset(relabel(p, std::nullopt, perm)) != base) return false;
  } while (std::next_permutation(g.begin(), g.end()));
  return true;
}

inline Lottery lot(const AlternativeSet& alts, const char* spec) { return parse_lottery(spec, alts); }

inline void add_facts(Fixture& f, const std::map<std::string, Profile>& all) {
  const Profile P = f.profile;
  const AlternativeSet A = P.alternatives();
  auto fact = [&](std::string claim, std::string expected, std::function<std::string()> observe) {
    f.facts.push_back({std::move(claim), std::move(expected), std::move(observe)});
  };
  auto cw = [P, A] { return show(condorcet_winner(P), A); };
  const std::string& n = f.name;

  if (n == "rd_example") {
    fact("rd output", "a:3/5,b:1/5,c:1/5", [P] { return rd(P).to_string(); });
    fact("g(a,b)", "3", [P, A] { return std::to_string(majority_margin(P, A.at("a"), A.at("b"))); });
    fact("never bottom-ranked", "{a}", [P, A] { return to_string(never_bottom_set(P), A); });
    fact("rd violates the absolute winner property", "true",
         [P] { return show(check_decisiveness(rule_by_name("rd"), P, DecisivenessLevel::AbsoluteWinner).has_value()); });
    fact("PC1 dominator of rd", "a:1", [P] { return show(pc1_find_dominator(P, rd(P))); });
    fact("rd is SD-efficient", "true", [P] { return show(is_efficient(P, rd(P), EfficiencyNotion::SD)); });
    fact("rd is PC-efficient", "false", [P] { return show(is_efficient(P, rd(P), EfficiencyNotion::PC)); });
    fact("f2 output", "a:1", [P] { return f2(P).to_string(); });
  } else if (n == "ml_manipulation_R") {
    fact("ml output", "a:3/5,b:1/5,c:1/5", [P] { return ml(P).to_string(); });
    fact("unique maximal lottery", "true", [P] { return show(ml_is_unique(P)); });
    fact("uniform lottery is maximal", "false", [P, A] { return show(is_maximal_lottery(P, Lottery::uniform(A))); });
    fact("weak Condorcet winners", "{}", [P, A] { return to_string(weak_condorcet_winners(P), A); });
    const Profile Rp = all.at("ml_manipulation_Rprime");
    fact("voter 4 weakly PC-manipulates via c > a > b", "true", [P, Rp] {
      for (const auto& w : all_manipulations(rule_by_name("ml"), P, Extension::PC, ManipulationMode::Weak, 4))
        if (*w.other == Rp && revalidate(rule_by_name("ml"), w)) return show(true);
      return show(false);
    });
    fact("voter 4 PC score of ml(R') against ml(R)", "8/25",
         [P, Rp] { return pc_score(P.voter(4), ml(Rp), ml(P)).get_str(); });
  } else if (n == "ml_manipulation_Rprime") {
    fact("ml output", "a:1/5,b:1/5,c:3/5", [P] { return ml(P).to_string(); });
  } else if (n.rfind("thm1_R", 0) == 0) {
    static const std::map<std::string, std::string> winners = {{"thm1_R1", "none"}, {"thm1_R2", "b"}, {"thm1_R3", "a"},
                                                               {"thm1_R4", "d"},    {"thm1_R5", "none"}, {"thm1_R6", "b"},
                                                               {"thm1_R7", "a"},    {"thm1_R8", "c"}};
    fact("Condorcet winner", winners.at(n), cw);
    if (n == "thm1_R2")
      fact("margins of b over a, c, d", "1,1,1", [P, A] {
        const Alt b = A.at("b");
        return std::to_string(majority_margin(P, b, A.at("a"))) + "," +
               std::to_string(majority_margin(P, b, A.at("c"))) + "," + std::to_string(majority_margin(P, b, A.at("d")));
      });
    if (n == "thm1_R1" || n == "thm1_R5")
      fact("condorcet-uniform output", "a:1/4,b:1/4,c:1/4,d:1/4", [P] { return condorcet_uniform(P).to_string(); });
    else
      fact("ml output is the Condorcet winner", winners.at(n) + ":1", [P] { return ml(P).to_string(); });
  } else if (n == "thm2_R1") {
    fact("Pareto-dominated", "{d}", [P, A] { return to_string(pareto_dominated_set(P), A); });
    fact("b and c symmetric", "true", [P] { return show(symmetric_in(P, {1, 2})); });
    for (const char* spec : {"b:1/2,c:1/2", "a:1/2,b:1/4,c:1/4", "a:1/3,b:1/3,c:1/3"}) {
      const Lottery p = lot(A, spec);
      const Lottery q = Lottery::degenerate(A, A.at("a"));
      fact(std::string("a:1 PC-dominates ") + spec, "true", [P, p, q] { return show(dominates(P, Extension::PC, q, p)); });
    }
  } else if (n == "thm3_R1") {
    fact("top counts a,b,c,d", "6,2,2,0", [P, A] {
      std::string s;
      for (Alt x : A.all()) s += (s.empty() ? "" : ",") + std::to_string(top_count(P, x));
      return s;
    });
    fact("Pareto-dominated", "{d}", [P, A] { return to_string(pareto_dominated_set(P), A); });
    fact("b and c symmetric", "true", [P] { return show(symmetric_in(P, {1, 2})); });
    for (const char* spec : {"a:1/4,b:1/4,c:1/4,d:1/4", "b:1/3,c:1/3,d:1/3"}) {
      const Lottery p = lot(A, spec);
      fact(std::string("PC1 dominator of ") + spec, "a:1", [P, p] { return show(pc1_find_dominator(P, p)); });
    }
  } else if (n == "thm3_R2") {
    const Profile R1 = all.at("thm3_R1");
    fact("removing voter 11 gives thm3_R1", "true", [P, R1] { return show(remove_voter(P, 11) == R1); });
  } else if (n == "thm3_R3") {
    const Profile R2 = all.at("thm3_R2");
    fact("removing voter 12 gives thm3_R2", "true", [P, R2] { return show(remove_voter(P, 12) == R2); });
    fact("b, c and d symmetric", "true", [P] { return show(symmetric_in(P, {1, 2, 3})); });
    const Lottery p = lot(A, "b:1/3,c:1/3,d:1/3");
    fact("PC1 dominator of b:1/3,c:1/3,d:1/3", "a:1", [P, p] { return show(pc1_find_dominator(P, p)); });
    fact("all twelve voters strictly prefer a:1", "12", [P, A, p] {
      std::size_t k = 0;
      for (auto c : voter_comparisons(P, Extension::PC1, Lottery::degenerate(A, A.at("a")), p))
        k += c == Comparison::StrictlyPreferred;
      return std::to_string(k);
    });
  } else if (n == "prop5_cycle") {
    const Lottery p1 = f.lotteries.at("p1"), p2 = f.lotteries.at("p2"), p3 = f.lotteries.at("p3");
    fact("Pareto-dominated", "{}", [P, A] { return to_string(pareto_dominated_set(P), A); });
    fact("p2 PC-dominates p1", "true", [P, p1, p2] { return show(dominates(P, Extension::PC, p2, p1)); });
    fact("p3 PC-dominates p2", "true", [P, p2, p3] { return show(dominates(P, Extension::PC, p3, p2)); });
    fact("p1 PC-dominates p3", "true", [P, p1, p3] { return show(dominates(P, Extension::PC, p1, p3)); });
    fact("p2 against p1, per voter", "indifferent,indifferent,strictly-preferred,strictly-preferred,indifferent,"
                                     "indifferent,indifferent,indifferent",
         [P, p1, p2] { return show(voter_comparisons(P, Extension::PC, p2, p1)); });
    for (const char* k : {"p1", "p2", "p3"}) {
      const Lottery p = f.lotteries.at(k);
      fact(std::string(k) + " is PC-efficient", "false", [P, p] { return show(is_efficient(P, p, EfficiencyNotion::PC)); });
    }
    fact("LP dominators of p1 keep q(d) = q(e) = 0 and q(a) = q(b) < 1/2", "true", [P, p1, A] {
      const auto c = find_dominator(P, p1, Extension::PC);
      if (!c) return show(false);
      const Lottery& q = c->dominator;
      return show(q["d"] == 0 && q["e"] == 0 && q["a"] == q["b"] && q["a"] < Rational(1, 2));
    });
    fact("improvement path from p1 never reaches efficiency", "true", [P, p1] {
      return show(improvement_path(P, p1, 50).termination != PathTermination::ReachedEfficient);
    });
  } else if (n == "lemma1a_R" || n == "lemma1a_Rprime") {
    fact("Condorcet winner", "none", cw);
    fact("weak Condorcet winners", "{}", [P, A] { return to_string(weak_condorcet_winners(P), A); });
  } else if (n.rfind("prop3_case24_", 0) == 0) {
    fact("Condorcet winner", "none", cw);
    fact("weak Condorcet winners", "{a}", [P, A] { return to_string(weak_condorcet_winners(P), A); });
    fact("f1 output", "a:3/5,b:1/5,c:1/5", [P] { return f1(P).to_string(); });
    fact("f1 output passes the three-alternative certificate", "true",
         [P] { return show(m3_efficiency_certificate(P, f1(P))); });
  }
}

}  // namespace paper_data

inline std::vector<std::string> fixture_names() {
  std::vector<std::string> out;
  for (const auto& s : paper_data::sources()) out.emplace_back(s.name);
  return out;
}

// Profile text in the profile document format.
inline std::string fixture_text(const std::string& name) {
  for (const auto& s : paper_data::sources())
    if (name == s.name) return s.text;
  throw DomainError("unknown fixture '" + name + "'");
}

inline Fixture fixture(const std::string& name) {
  std::map<std::string, Profile> all;
  for (const auto& s : paper_data::sources()) all.emplace(s.name, parse_profile(s.text));
  const auto it = all.find(name);
  if (it == all.end()) throw DomainError("unknown fixture '" + name + "'");
  std::string notes;
  for (const auto& s : paper_data::sources())
    if (name == s.name) notes = s.notes;
  Fixture f{name, notes, it->second, {}, {}};
  if (name == "prop5_cycle") {
    const AlternativeSet& A = f.profile.alternatives();
    f.lotteries.emplace("p1", paper_data::lot(A, "a:1/2,b:1/2"));
    f.lotteries.emplace("p2", paper_data::lot(A, "c:1"));
    f.lotteries.emplace("p3", paper_data::lot(A, "d:1/2,e:1/2"));
  }
  paper_data::add_facts(f, all);
  return f;
}

inline std::vector<FactResult> verify_fixture(const Fixture& f) {
  std::vector<FactResult> out;
  for (const auto& fact : f.facts) {
    FactResult r{f.name, fact.claim, fact.expected, {}, false};
    try {
      r.observed = fact.observe();
      r.passed = r.observed == fact.expected;
    } catch (const std::exception& e) {
      r.observed = std::string("error: ") + e.what();
    }
    out.push_back(std::move(r));
  }
  return out;
}

inline PaperSuiteReport verify_paper_suite() {
  std::vector<std::future<std::vector<FactResult>>> jobs;
  for (const auto& name : fixture_names())
    jobs.push_back(std::async(std::launch::async, [name] { return verify_fixture(fixture(name)); }));
  PaperSuiteReport report;
  for (auto& j : jobs)
    for (auto& r : j.get()) {
      (r.passed ? report.passed : report.failed)++;
      report.results.push_back(std::move(r));
    }
  return report;
}

}  // namespace pcsc
