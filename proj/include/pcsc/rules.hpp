#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pcsc/errors.hpp"
#include "pcsc/faults.hpp"
#include "pcsc/model.hpp"
#include "pcsc/ratlp.hpp"

namespace pcsc {

// A social decision scheme: Profile -> Lottery, defined on the profiles accepted
// by `applicable`.
struct Rule {
  std::string name;
  std::function<Lottery(const Profile&)> eval;
  std::function<bool(const Profile&)> applicable = [](const Profile&) { return true; };

  Lottery operator()(const Profile& profile) const {
    if (!applicable(profile)) throw ApplicabilityError(name + " is not defined on this profile");
    return eval(profile);
  }
};

// Random dictatorship: probability proportional to top-rank counts.
inline Lottery rd(const Profile& profile) {
  const auto n = static_cast<long>(profile.num_voters());
  std::vector<Rational> p(profile.num_alternatives(), Rational(0));
  for (const auto& r : profile.ballots()) p[r.top().index] += ratio(1, n);
  return Lottery(profile.alternatives(), std::move(p));
}

// Variables p_0..p_{m-1}, v (free). maximize v s.t. sum_x p(x) g(x,y) >= v for
// all y, p in the simplex. The value of a symmetric game is 0.
inline LinearProgram matrix_game_lp(const MarginMatrix& g) {
  const std::size_t m = g.size();
  LinearProgram lp(m + 1);
  std::vector<Rational> c(m + 1, Rational(0));
  c[m] = 1;
  lp.set_objective(c);
  lp.set_free(m);
  for (std::size_t y = 0; y < m; ++y) {
    std::vector<Rational> row(m + 1, Rational(0));
    for (std::size_t x = 0; x < m; ++x)
      if (x != y) row[x] = g(Alt{x}, Alt{y});
    row[m] = -1;
    lp.add_constraint(std::move(row), Relation::GreaterEqual, 0);
  }
  std::vector<Rational> ones(m + 1, Rational(1));
  ones[m] = 0;
  lp.add_constraint(std::move(ones), Relation::Equal, 1);
  return lp;
}

// {p in simplex : (G p)_x <= 0 for all x}, over m variables.
inline LinearProgram maximal_lottery_polytope(const MarginMatrix& g) {
  const std::size_t m = g.size();
  LinearProgram lp(m);
  for (std::size_t x = 0; x < m; ++x) {
    std::vector<Rational> row(m, Rational(0));
    for (std::size_t y = 0; y < m; ++y)
      if (x != y) row[y] = g(Alt{x}, Alt{y});
    lp.add_constraint(std::move(row), Relation::LessEqual, 0);
  }
  lp.add_constraint(std::vector<Rational>(m, Rational(1)), Relation::Equal, 1);
  return lp;
}

namespace detail {
inline Rational optimize_coordinate(LinearProgram lp, std::size_t x, int sense) {
  std::vector<Rational> c(lp.num_vars(), Rational(0));
  c[x] = sense;
  lp.set_objective(std::move(c));
  const LpOutcome out = lp_solve(lp);
  if (out.status != LpStatus::Optimal) throw std::logic_error("maximal lottery polytope is empty");
  return sense * out.value;
}
}  // namespace detail

inline bool is_maximal_lottery(const Profile& profile, const Lottery& p) {
  check_same_alternatives(profile.alternatives(), p.alternatives());
  const MarginMatrix g(profile);
  for (std::size_t x = 0; x < g.size(); ++x) {
    Rational s = 0;
    for (std::size_t y = 0; y < g.size(); ++y)
      if (x != y) s += g(Alt{x}, Alt{y}) * p.probabilities()[y];
    if (s > 0) return false;
  }
  return true;
}

// True iff the set of maximal lotteries is a single point.
inline bool ml_is_unique(const Profile& profile) {
  const LinearProgram face = maximal_lottery_polytope(MarginMatrix(profile));
  for (std::size_t x = 0; x < profile.num_alternatives(); ++x)
    if (detail::optimize_coordinate(face, x, +1) != detail::optimize_coordinate(face, x, -1)) return false;
  return true;
}

// Maximal lottery. Among all maximal lotteries, returns the basic optimum of
// max t s.t. p(x) >= t on the union S of their supports, which has support S;
// hence the result is degenerate only if the maximal lottery is unique.
inline Lottery ml(const Profile& profile) {
  const std::size_t m = profile.num_alternatives();
  const LinearProgram face = maximal_lottery_polytope(MarginMatrix(profile));
  std::vector<bool> in_support(m, false);
  for (std::size_t x = 0; x < m; ++x) in_support[x] = detail::optimize_coordinate(face, x, +1) > 0;

  LinearProgram lp(m + 1);
  for (const auto& c : face.constraints()) {
    std::vector<Rational> row = c.coeffs;
    row.emplace_back(0);
    lp.add_constraint(std::move(row), c.relation, c.rhs);
  }
  for (std::size_t x = 0; x < m; ++x) {
    std::vector<Rational> row(m + 1, Rational(0));
    row[x] = 1;
    if (in_support[x]) {
      row[m] = -1;
      lp.add_constraint(std::move(row), Relation::GreaterEqual, 0);
    } else {
      lp.add_constraint(std::move(row), Relation::Equal, 0);
    }
  }
  std::vector<Rational> c(m + 1, Rational(0));
  c[m] = 1;
  lp.set_objective(std::move(c));
  const LpOutcome out = lp_solve(lp);
  if (out.status != LpStatus::Optimal) throw std::logic_error("tie-break LP failed");
  std::vector<Rational> p(out.solution.begin(), out.solution.begin() + static_cast<std::ptrdiff_t>(m));

  if (faults().degenerate_ml_tiebreak.load(std::memory_order_relaxed)) {
    const auto best = std::max_element(p.begin(), p.end()) - p.begin();
    return Lottery::degenerate(profile.alternatives(), Alt{static_cast<std::size_t>(best)});
  }
  return Lottery(profile.alternatives(), std::move(p));
}

// Condorcet winner if any, uniform lottery otherwise.
inline Lottery condorcet_uniform(const Profile& profile) {
  if (auto w = condorcet_winner(profile)) return Lottery::degenerate(profile.alternatives(), *w);
  return Lottery::uniform(profile.alternatives());
}

inline bool has_three_alternatives(const Profile& profile) { return profile.num_alternatives() == 3; }

inline Lottery f1(const Profile& profile) {
  if (!has_three_alternatives(profile)) throw ApplicabilityError("f1 is defined for three alternatives only");
  const auto& alts = profile.alternatives();
  if (auto w = condorcet_winner(profile)) return Lottery::degenerate(alts, *w);
  const AltSet wcw = weak_condorcet_winners(profile);
  if (wcw.size() == 2) return Lottery::uniform_over(alts, wcw);
  if (wcw.size() == 1) {
    std::vector<Rational> p(3, ratio(1, 5));
    p[wcw.front().index] = ratio(3, 5);
    return Lottery(alts, std::move(p));
  }
  return Lottery::uniform(alts);
}

// Delete the minimum-plurality alternatives besides the unique never-bottom one
// (both on a tie) and run random dictatorship on what is left.
inline Lottery f2(const Profile& profile) {
  if (!has_three_alternatives(profile)) throw ApplicabilityError("f2 is defined for three alternatives only");
  const AltSet b = never_bottom_set(profile);
  if (b.size() != 1) return rd(profile);
  const Alt x = b.front();
  const auto n = static_cast<long>(profile.num_voters());
  std::size_t least = profile.num_voters() + 1;
  for (Alt y : profile.alternatives().all())
    if (y != x) least = std::min(least, top_count(profile, y));
  std::vector<Rational> p(3, Rational(0));
  long to_x = static_cast<long>(top_count(profile, x));
  for (Alt y : profile.alternatives().all()) {
    if (y == x) continue;
    const auto ny = static_cast<long>(top_count(profile, y));
    if (static_cast<std::size_t>(ny) == least)
      to_x += ny;
    else
      p[y.index] = ratio(ny, n);
  }
  p[x.index] = ratio(to_x, n);
  return Lottery(profile.alternatives(), std::move(p));
}

inline std::vector<std::string> rule_names() { return {"rd", "ml", "f1", "f2", "condorcet-uniform"}; }

inline Rule rule_by_name(const std::string& name) {
  if (name == "rd") return {name, rd};
  if (name == "ml") return {name, ml};
  if (name == "condorcet-uniform") return {name, condorcet_uniform};
  if (name == "f1") return {name, f1, has_three_alternatives};
  if (name == "f2") return {name, f2, has_three_alternatives};
  throw DomainError("unknown rule '" + name + "'");
}

}  // namespace pcsc
