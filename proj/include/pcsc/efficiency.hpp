#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "pcsc/errors.hpp"
#include "pcsc/extensions.hpp"
#include "pcsc/model.hpp"
#include "pcsc/ratlp.hpp"

namespace pcsc {

struct DominanceCertificate {
  Lottery dominated;
  Lottery dominator;
  Extension extension;
  std::vector<Comparison> outcomes;  // voter i: dominator vs dominated

  bool revalidate(const Profile& profile) const { return dominates(profile, extension, dominator, dominated); }
};

inline DominanceCertificate make_certificate(const Profile& profile, Extension ext, const Lottery& q, const Lottery& p) {
  return {p, q, ext, voter_comparisons(profile, ext, q, p)};
}

// Optimum of the dominance LP: q ranges over the simplex, each voter's slack must
// be nonnegative, the objective is the total slack. Positive iff p is dominated.
struct DominanceOptimum {
  Rational value;
  Lottery witness;
};

// weights: per-voter objective weights (all 1 when empty).
inline LinearProgram dominance_lp(const Profile& profile, const Lottery& p, Extension ext,
                                  const std::vector<Rational>& weights = {}) {
  if (ext == Extension::PC1) throw DomainError("PC1 dominance has no single LP form");
  check_same_alternatives(profile.alternatives(), p.alternatives());
  const std::size_t m = profile.num_alternatives();
  const auto& alts = profile.alternatives();
  LinearProgram lp(m);
  std::vector<Rational> objective(m, Rational(0));
  for (std::size_t i = 0; i < profile.num_voters(); ++i) {
    const Ranking& r = profile.ballots()[i];
    const Rational w = weights.empty() ? Rational(1) : weights.at(i);
    if (ext == Extension::PC) {
      std::vector<Rational> row(m);
      for (std::size_t x = 0; x < m; ++x) row[x] = pc_score(r, Lottery::degenerate(alts, Alt{x}), p);
      for (std::size_t x = 0; x < m; ++x) objective[x] += w * row[x];
      lp.add_constraint(std::move(row), Relation::GreaterEqual, 0);
    } else {
      std::vector<Rational> row(m, Rational(0));
      Rational p_prefix = 0;
      for (std::size_t k = 0; k + 1 < m; ++k) {
        const Alt y = r.at(k);
        row[y.index] = 1;
        p_prefix += p[y];
        for (std::size_t x = 0; x < m; ++x) objective[x] += w * row[x];
        lp.add_constraint(row, Relation::GreaterEqual, p_prefix);
      }
    }
  }
  lp.add_constraint(std::vector<Rational>(m, Rational(1)), Relation::Equal, 1);
  lp.set_objective(std::move(objective));
  return lp;
}

inline DominanceOptimum dominance_optimum(const Profile& profile, const Lottery& p, Extension ext,
                                          const std::vector<Rational>& weights = {}) {
  const LinearProgram lp = dominance_lp(profile, p, ext, weights);
  const LpOutcome out = lp_solve(lp);
  if (out.status != LpStatus::Optimal) throw std::logic_error("dominance LP is not optimal");
  // The SD objective sums prefixes of q; subtract those of p.
  const Rational offset = lp.evaluate(p.probabilities());
  return {out.value - offset, Lottery(profile.alternatives(), out.solution)};
}

inline std::optional<DominanceCertificate> pc1_find_dominator(const Profile& profile, const Lottery& p) {
  check_same_alternatives(profile.alternatives(), p.alternatives());
  for (Alt x : profile.alternatives().all()) {
    const Lottery q = Lottery::degenerate(profile.alternatives(), x);
    if (dominates(profile, Extension::PC1, q, p)) return make_certificate(profile, Extension::PC1, q, p);
  }
  if (p.is_degenerate()) {
    const DominanceOptimum opt = dominance_optimum(profile, p, Extension::PC);
    if (opt.value > 0) return make_certificate(profile, Extension::PC1, opt.witness, p);
  }
  return std::nullopt;
}

inline std::optional<DominanceCertificate> find_dominator(const Profile& profile, const Lottery& p, Extension ext) {
  if (ext == Extension::PC1) return pc1_find_dominator(profile, p);
  const DominanceOptimum opt = dominance_optimum(profile, p, ext);
  if (opt.value <= 0) return std::nullopt;
  return make_certificate(profile, ext, opt.witness, p);
}

enum class EfficiencyNotion { PC, PC1, SD, ExPost };

inline std::string_view to_string(EfficiencyNotion e) {
  switch (e) {
    case EfficiencyNotion::PC: return "pc";
    case EfficiencyNotion::PC1: return "pc1";
    case EfficiencyNotion::SD: return "sd";
    case EfficiencyNotion::ExPost: return "ex-post";
  }
  return "?";
}

inline EfficiencyNotion parse_efficiency_notion(std::string_view s) {
  if (s == "ex-post" || s == "expost") return EfficiencyNotion::ExPost;
  switch (parse_extension(s)) {
    case Extension::PC: return EfficiencyNotion::PC;
    case Extension::PC1: return EfficiencyNotion::PC1;
    case Extension::SD: return EfficiencyNotion::SD;
  }
  throw DomainError("unknown efficiency notion");
}

inline bool is_efficient(const Profile& profile, const Lottery& p, EfficiencyNotion notion) {
  check_same_alternatives(profile.alternatives(), p.alternatives());
  switch (notion) {
    case EfficiencyNotion::ExPost:
      for (Alt x : pareto_dominated_set(profile))
        if (p[x] != 0) return false;
      return true;
    case EfficiencyNotion::PC: return !find_dominator(profile, p, Extension::PC);
    case EfficiencyNotion::PC1: return !pc1_find_dominator(profile, p);
    case EfficiencyNotion::SD: return !find_dominator(profile, p, Extension::SD);
  }
  return false;
}

// Roles of the four alternatives in the perturbation below.
struct Lemma4Roles {
  Alt w, x, y, z;
};

namespace detail {
inline void check_roles(const Lottery& p, const Lemma4Roles& roles) {
  if (p.size() != 4) throw DomainError("the perturbation needs exactly four alternatives");
  check_permutation({roles.w.index, roles.x.index, roles.y.index, roles.z.index}, 4, "role");
}
}  // namespace detail

// Moves mass from x and y to z:
//   q(x) = p(x) - e/(p(x)+p(z)), q(y) = p(y) - e/(p(y)+p(z)),
//   q(z) = p(z) + e/(p(x)+p(z)) + e/(p(y)+p(z)), q(w) = p(w).
inline Lottery lemma4_perturb(const Lottery& p, const Lemma4Roles& roles, const Rational& epsilon) {
  detail::check_roles(p, roles);
  if (p[roles.x] <= 0 || p[roles.y] <= 0) throw DomainError("p(x) and p(y) must be positive");
  if (epsilon <= 0) throw DomainError("epsilon must be positive");
  const Rational dx = epsilon / (p[roles.x] + p[roles.z]);
  const Rational dy = epsilon / (p[roles.y] + p[roles.z]);
  std::vector<Rational> q = p.probabilities();
  q[roles.x.index] -= dx;
  q[roles.y.index] -= dy;
  q[roles.z.index] += dx + dy;
  if (q[roles.x.index] < 0 || q[roles.y.index] < 0) throw DomainError("epsilon too large");
  return Lottery(p.alternatives(), std::move(q));
}

// The opposite move, starting from q with q(z) > 0:
//   p(x) = q(x) + e'/(q(x)+q(z)), p(y) = q(y) + e'/(q(y)+q(z)),
//   p(z) = q(z) - e'/(q(x)+q(z)) - e'/(q(y)+q(z)), p(w) = q(w).
inline Lottery lemma4_reverse_perturb(const Lottery& q, const Lemma4Roles& roles, const Rational& epsilon_prime) {
  detail::check_roles(q, roles);
  if (q[roles.z] <= 0) throw DomainError("q(z) must be positive");
  if (epsilon_prime <= 0) throw DomainError("epsilon must be positive");
  const Rational dx = epsilon_prime / (q[roles.x] + q[roles.z]);
  const Rational dy = epsilon_prime / (q[roles.y] + q[roles.z]);
  std::vector<Rational> p = q.probabilities();
  p[roles.x.index] += dx;
  p[roles.y.index] += dy;
  p[roles.z.index] -= dx + dy;
  if (p[roles.z.index] < 0) throw DomainError("epsilon too large");
  return Lottery(q.alternatives(), std::move(p));
}

// The e for which lemma4_perturb(lemma4_reverse_perturb(q, e'), e) == q.
inline Rational lemma4_reverse_epsilon(const Lottery& q, const Lemma4Roles& roles, const Rational& epsilon_prime) {
  return epsilon_prime -
         epsilon_prime * epsilon_prime / ((q[roles.x] + q[roles.z]) * (q[roles.y] + q[roles.z]));
}

// Sufficient condition for PC-efficiency with three alternatives.
inline bool m3_efficiency_certificate(const Profile& profile, const Lottery& p) {
  if (profile.num_alternatives() != 3) throw ApplicabilityError("the certificate needs exactly three alternatives");
  check_same_alternatives(profile.alternatives(), p.alternatives());
  for (Alt x : pareto_dominated_set(profile))
    if (p[x] != 0) return false;
  const AltSet never_bottom = never_bottom_set(profile);
  for (Alt x : profile.alternatives().all()) {
    const bool top_once = top_count(profile, x) > 0;
    const bool never_bot = std::find(never_bottom.begin(), never_bottom.end(), x) != never_bottom.end();
    if (never_bot && top_once) {
      bool some_zero = false;
      for (Alt y : profile.alternatives().all())
        if (y != x && p[y] == 0) some_zero = true;
      if (!some_zero) return false;
    }
    if (!top_once && !never_bot && p[x] != 0) return false;
  }
  return true;
}

enum class PathTermination { ReachedEfficient, MaxSteps, CycleDetected };

inline std::string_view to_string(PathTermination t) {
  switch (t) {
    case PathTermination::ReachedEfficient: return "reached-efficient";
    case PathTermination::MaxSteps: return "max-steps";
    case PathTermination::CycleDetected: return "cycle-detected";
  }
  return "?";
}

struct ImprovementPath {
  std::vector<Lottery> lotteries;   // start first
  std::vector<std::string> steps;   // steps[k] describes lotteries[k] -> lotteries[k+1]
  PathTermination termination = PathTermination::MaxSteps;
};

// Follows PC-improvements from start. Without a seed each step is the dominance
// LP's optimum; with a seed the voter weights are random and the step moves a
// random fraction of the way towards it.
inline ImprovementPath improvement_path(const Profile& profile, const Lottery& start, std::size_t max_steps,
                                        std::optional<std::uint64_t> seed = std::nullopt) {
  if (max_steps < 1) throw DomainError("max_steps must be at least 1");
  check_same_alternatives(profile.alternatives(), start.alternatives());
  std::mt19937_64 rng(seed.value_or(0));
  ImprovementPath path;
  path.lotteries.push_back(start);
  for (std::size_t step = 0; step < max_steps; ++step) {
    const Lottery& p = path.lotteries.back();
    std::vector<Rational> weights;
    if (seed)
      for (std::size_t i = 0; i < profile.num_voters(); ++i)
        weights.push_back(ratio(static_cast<long>(1 + rng() % 9)));
    const DominanceOptimum opt = dominance_optimum(profile, p, Extension::PC, weights);
    if (opt.value <= 0) {
      path.termination = PathTermination::ReachedEfficient;
      return path;
    }
    Lottery next = opt.witness;
    std::string how = "lp optimum";
    if (seed) {
      const Rational t = ratio(static_cast<long>(1 + rng() % 8), 8);
      std::vector<Rational> mix(p.size());
      for (std::size_t x = 0; x < p.size(); ++x)
        mix[x] = p.probabilities()[x] + t * (next.probabilities()[x] - p.probabilities()[x]);
      next = Lottery(p.alternatives(), std::move(mix));
      how = "weighted lp optimum, step " + t.get_str();
    }
    if (!dominates(profile, Extension::PC, next, p)) throw std::logic_error("improvement step is not a PC-improvement");
    path.steps.push_back(how + ": " + p.to_string() + " -> " + next.to_string());
    const bool seen = std::find(path.lotteries.begin(), path.lotteries.end(), next) != path.lotteries.end();
    path.lotteries.push_back(std::move(next));
    if (seen) {
      path.termination = PathTermination::CycleDetected;
      return path;
    }
  }
  path.termination = PathTermination::MaxSteps;
  return path;
}

}  // namespace pcsc
