#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <functional>
#include <limits>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "pcsc/efficiency.hpp"
#include "pcsc/errors.hpp"
#include "pcsc/extensions.hpp"
#include "pcsc/model.hpp"
#include "pcsc/rules.hpp"

namespace pcsc {

enum class ManipulationMode { Strong, Weak };
enum class DecisivenessLevel { Unanimity, AbsoluteWinner, CondorcetConsistency };

enum class AxiomKind {
  Strategyproofness,
  Participation,
  Anonymity,
  Neutrality,
  Cancellation,
  Decisiveness,
  Efficiency,
};

struct AxiomSpec {
  AxiomKind kind = AxiomKind::Anonymity;
  Extension extension = Extension::PC;
  ManipulationMode mode = ManipulationMode::Strong;
  bool strict = false;
  DecisivenessLevel level = DecisivenessLevel::Unanimity;
  EfficiencyNotion notion = EfficiencyNotion::PC;

  std::string name() const {
    const std::string ext(to_string(extension));
    switch (kind) {
      case AxiomKind::Strategyproofness:
        return (mode == ManipulationMode::Weak ? "weak-" : "") + ext + "-strategyproofness";
      case AxiomKind::Participation: return (strict ? "strict-" : "") + ext + "-participation";
      case AxiomKind::Anonymity: return "anonymity";
      case AxiomKind::Neutrality: return "neutrality";
      case AxiomKind::Cancellation: return "cancellation";
      case AxiomKind::Decisiveness:
        switch (level) {
          case DecisivenessLevel::Unanimity: return "unanimity";
          case DecisivenessLevel::AbsoluteWinner: return "absolute-winner";
          case DecisivenessLevel::CondorcetConsistency: return "condorcet-consistency";
        }
        break;
      case AxiomKind::Efficiency: return std::string(to_string(notion)) + "-efficiency";
    }
    return "?";
  }
};

// Names: [weak-]{pc,pc1,sd}-strategyproofness, [strict-]{pc,pc1,sd}-participation,
// anonymity, neutrality, cancellation, unanimity, absolute-winner,
// condorcet-consistency, {pc,pc1,sd,ex-post}-efficiency.
inline AxiomSpec parse_axiom(std::string_view name) {
  AxiomSpec s;
  auto strip = [&](std::string_view prefix) {
    if (name.substr(0, prefix.size()) != prefix) return false;
    name.remove_prefix(prefix.size());
    return true;
  };
  auto ends = [&](std::string_view suffix, std::string_view& head) {
    if (name.size() <= suffix.size() || name.substr(name.size() - suffix.size()) != suffix) return false;
    head = name.substr(0, name.size() - suffix.size());
    return true;
  };
  const std::string original(name);
  try {
    if (name == "anonymity") {
      s.kind = AxiomKind::Anonymity;
      return s;
    }
    if (name == "neutrality") {
      s.kind = AxiomKind::Neutrality;
      return s;
    }
    if (name == "cancellation") {
      s.kind = AxiomKind::Cancellation;
      return s;
    }
    s.kind = AxiomKind::Decisiveness;
    if (name == "unanimity") {
      s.level = DecisivenessLevel::Unanimity;
      return s;
    }
    if (name == "absolute-winner") {
      s.level = DecisivenessLevel::AbsoluteWinner;
      return s;
    }
    if (name == "condorcet-consistency") {
      s.level = DecisivenessLevel::CondorcetConsistency;
      return s;
    }
    std::string_view head;
    if (ends("-efficiency", head)) {
      s.kind = AxiomKind::Efficiency;
      s.notion = parse_efficiency_notion(head);
      return s;
    }
    const bool weak = strip("weak-");
    const bool strict = strip("strict-");
    if (!weak && ends("-participation", head)) {
      s.kind = AxiomKind::Participation;
      s.strict = strict;
      s.extension = parse_extension(head);
      return s;
    }
    if (!strict && ends("-strategyproofness", head)) {
      s.kind = AxiomKind::Strategyproofness;
      s.mode = weak ? ManipulationMode::Weak : ManipulationMode::Strong;
      s.extension = parse_extension(head);
      return s;
    }
  } catch (const DomainError&) {
  }
  throw DomainError("unknown axiom '" + original + "'");
}

// A violation. `profile` is where the rule is evaluated first; `other` is the
// misreported, reduced, permuted or extended profile it is compared against.
struct Witness {
  AxiomSpec axiom;
  Profile profile;
  Lottery outcome;
  std::optional<Profile> other;
  std::optional<Lottery> other_outcome;
  std::optional<std::size_t> voter;                  // 1-based
  std::optional<std::vector<std::size_t>> permutation;  // voters (anonymity) or alternatives (neutrality)
  std::optional<DominanceCertificate> certificate;
  std::string description;
};

enum class Verdict { Holds, Violated };

inline std::string_view to_string(Verdict v) { return v == Verdict::Holds ? "holds" : "violated"; }

struct AxiomReport {
  std::string axiom;
  std::string rule;
  Verdict verdict = Verdict::Holds;
  std::vector<Witness> witnesses;  // enumeration order
  std::size_t profiles_checked = 0;
};

// ---------------------------------------------------------------- strategyproofness

namespace detail {
inline Profile replace_ballot(const Profile& profile, std::size_t voter, const Ranking& ballot) {
  std::vector<Ranking> ballots = profile.ballots();
  ballots[voter - 1] = ballot;
  return Profile(profile.alternatives(), std::move(ballots));
}

inline bool manipulates(ManipulationMode mode, Extension ext, const Ranking& truth, const Lottery& honest,
                        const Lottery& lied) {
  if (mode == ManipulationMode::Strong) return !weakly_prefers(ext, truth, honest, lied);
  return strictly_prefers(ext, truth, lied, honest);
}
}  // namespace detail

// Every (voter, misreport) pair that manipulates; voters restricted to `only_voter` if set.
inline std::vector<Witness> all_manipulations(const Rule& rule, const Profile& profile, Extension ext,
                                              ManipulationMode mode, std::optional<std::size_t> only_voter = {},
                                              bool stop_at_first = false) {
  AxiomSpec spec;
  spec.kind = AxiomKind::Strategyproofness;
  spec.extension = ext;
  spec.mode = mode;
  const Lottery honest = rule(profile);
  const std::vector<Ranking> rankings = all_rankings(profile.alternatives());
  std::vector<Witness> out;
  for (std::size_t i = 1; i <= profile.num_voters(); ++i) {
    if (only_voter && *only_voter != i) continue;
    const Ranking& truth = profile.voter(i);
    for (const auto& lie : rankings) {
      if (lie == truth) continue;
      Profile deviated = detail::replace_ballot(profile, i, lie);
      Lottery lied = rule(deviated);
      if (!detail::manipulates(mode, ext, truth, honest, lied)) continue;
      out.push_back({spec, profile, honest, std::move(deviated), lied, i, std::nullopt, std::nullopt,
                     "voter " + std::to_string(i) + " reports " + lie.to_string() + " instead of " +
                         truth.to_string() + ": " + honest.to_string() + " -> " + lied.to_string()});
      if (stop_at_first) return out;
    }
  }
  return out;
}

inline std::optional<Witness> find_manipulation(const Rule& rule, const Profile& profile, Extension ext,
                                                ManipulationMode mode, std::optional<std::size_t> only_voter = {}) {
  auto all = all_manipulations(rule, profile, ext, mode, only_voter, true);
  if (all.empty()) return std::nullopt;
  return std::move(all.front());
}

// ---------------------------------------------------------------- participation

// Some lottery is strictly better than r for this voter, decided by an LP.
inline bool exists_strict_improvement_lp(const Ranking& ranking, const Lottery& r, Extension ext) {
  const Profile single(ranking.alternatives(), {ranking});
  return dominance_optimum(single, r, ext == Extension::SD ? Extension::SD : Extension::PC).value > 0;
}

// Closed form of the same test for PC and SD: the top alternative is not yet certain.
inline bool exists_strict_improvement(const Ranking& ranking, const Lottery& r) { return r[ranking.top()] < 1; }

inline std::optional<Witness> check_participation(const Rule& rule, const Profile& profile, Extension ext,
                                                  bool strict) {
  if (profile.num_voters() < 2) throw DomainError("participation needs at least two voters");
  AxiomSpec spec;
  spec.kind = AxiomKind::Participation;
  spec.extension = ext;
  spec.strict = strict;
  const Lottery with = rule(profile);
  for (std::size_t i = 1; i <= profile.num_voters(); ++i) {
    const Ranking& r = profile.voter(i);
    Profile reduced = remove_voter(profile, i);
    Lottery without = rule(reduced);
    std::string why;
    if (!weakly_prefers(ext, r, with, without))
      why = "voter " + std::to_string(i) + " is better off abstaining";
    else if (strict && exists_strict_improvement(r, without) && !strictly_prefers(ext, r, with, without))
      why = "voter " + std::to_string(i) + " gains nothing by voting";
    if (why.empty()) continue;
    return Witness{spec, profile, with, std::move(reduced), without, i, std::nullopt, std::nullopt,
                   why + ": " + with.to_string() + " with, " + without.to_string() + " without"};
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- symmetry

inline std::optional<Witness> check_anonymity(const Rule& rule, const Profile& profile) {
  AxiomSpec spec;
  spec.kind = AxiomKind::Anonymity;
  const std::size_t n = profile.num_voters();
  const Lottery base = rule(profile);
  auto test = [&](const std::vector<std::size_t>& perm) -> std::optional<Witness> {
    Profile permuted = relabel(profile, perm, std::nullopt);
    Lottery out = rule(permuted);
    if (out == base) return std::nullopt;
    return Witness{spec, profile, base, std::move(permuted), out, std::nullopt, perm, std::nullopt,
                   "reordering voters changes " + base.to_string() + " to " + out.to_string()};
  };
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  if (n <= 5) {
    while (std::next_permutation(perm.begin(), perm.end()))
      if (auto w = test(perm)) return w;
  } else {
    for (std::size_t k = 0; k + 1 < n; ++k) {
      std::vector<std::size_t> swap = perm;
      std::swap(swap[k], swap[k + 1]);
      if (auto w = test(swap)) return w;
    }
  }
  return std::nullopt;
}

inline std::optional<Witness> check_neutrality(const Rule& rule, const Profile& profile) {
  AxiomSpec spec;
  spec.kind = AxiomKind::Neutrality;
  const std::size_t m = profile.num_alternatives();
  const Lottery base = rule(profile);
  std::vector<std::size_t> perm(m);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  while (std::next_permutation(perm.begin(), perm.end())) {
    Profile renamed = relabel(profile, std::nullopt, perm);
    Lottery out = rule(renamed);
    const Lottery expected = relabel(base, perm);
    if (out == expected) continue;
    return Witness{spec, profile, base, std::move(renamed), out, std::nullopt, perm, std::nullopt,
                   "renaming alternatives gives " + out.to_string() + ", expected " + expected.to_string()};
  }
  return std::nullopt;
}

inline std::optional<Witness> check_symmetry(const Rule& rule, const Profile& profile) {
  if (auto w = check_anonymity(rule, profile)) return w;
  return check_neutrality(rule, profile);
}

// ---------------------------------------------------------------- cancellation

inline std::optional<Witness> check_cancellation(const Rule& rule, const Profile& profile) {
  AxiomSpec spec;
  spec.kind = AxiomKind::Cancellation;
  const Lottery base = rule(profile);
  for (const auto& r : all_rankings(profile.alternatives())) {
    Profile extended = add_voter(add_voter(profile, r), r.reversed());
    Lottery out = rule(extended);
    if (out == base) continue;
    return Witness{spec, profile, base, std::move(extended), out, std::nullopt, std::nullopt, std::nullopt,
                   "adding " + r.to_string() + " and " + r.reversed().to_string() + " changes " + base.to_string() +
                       " to " + out.to_string()};
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- decisiveness

inline std::optional<Alt> decisiveness_trigger(const Profile& profile, DecisivenessLevel level) {
  switch (level) {
    case DecisivenessLevel::Unanimity: {
      const Alt t = profile.ballots().front().top();
      if (top_count(profile, t) == profile.num_voters()) return t;
      return std::nullopt;
    }
    case DecisivenessLevel::AbsoluteWinner:
      for (Alt x : profile.alternatives().all())
        if (2 * top_count(profile, x) > profile.num_voters()) return x;
      return std::nullopt;
    case DecisivenessLevel::CondorcetConsistency: return condorcet_winner(profile);
  }
  return std::nullopt;
}

inline std::optional<Witness> check_decisiveness(const Rule& rule, const Profile& profile, DecisivenessLevel level) {
  AxiomSpec spec;
  spec.kind = AxiomKind::Decisiveness;
  spec.level = level;
  const auto x = decisiveness_trigger(profile, level);
  if (!x) return std::nullopt;
  const Lottery out = rule(profile);
  if (out[*x] == 1) return std::nullopt;
  return Witness{spec, profile, out, std::nullopt, std::nullopt, std::nullopt, std::nullopt, std::nullopt,
                 profile.alternatives().name(*x) + " should be chosen for sure, got " + out.to_string()};
}

// ---------------------------------------------------------------- efficiency

inline std::optional<Witness> check_efficiency(const Rule& rule, const Profile& profile, EfficiencyNotion notion) {
  AxiomSpec spec;
  spec.kind = AxiomKind::Efficiency;
  spec.notion = notion;
  const Lottery out = rule(profile);
  std::optional<DominanceCertificate> cert;
  switch (notion) {
    case EfficiencyNotion::ExPost:
      if (is_efficient(profile, out, notion)) return std::nullopt;
      return Witness{spec, profile, out, std::nullopt, std::nullopt, std::nullopt, std::nullopt, std::nullopt,
                     "positive probability on a Pareto-dominated alternative: " + out.to_string()};
    case EfficiencyNotion::PC: cert = find_dominator(profile, out, Extension::PC); break;
    case EfficiencyNotion::PC1: cert = pc1_find_dominator(profile, out); break;
    case EfficiencyNotion::SD: cert = find_dominator(profile, out, Extension::SD); break;
  }
  if (!cert) return std::nullopt;
  std::string d = out.to_string() + " is dominated by " + cert->dominator.to_string();
  return Witness{spec, profile, out, std::nullopt, cert->dominator, std::nullopt, std::nullopt, std::move(cert),
                 std::move(d)};
}

// ---------------------------------------------------------------- dispatch

inline std::optional<Witness> check_axiom(const Rule& rule, const Profile& profile, const AxiomSpec& spec) {
  switch (spec.kind) {
    case AxiomKind::Strategyproofness: return find_manipulation(rule, profile, spec.extension, spec.mode);
    case AxiomKind::Participation:
      if (profile.num_voters() < 2) return std::nullopt;
      return check_participation(rule, profile, spec.extension, spec.strict);
    case AxiomKind::Anonymity: return check_anonymity(rule, profile);
    case AxiomKind::Neutrality: return check_neutrality(rule, profile);
    case AxiomKind::Cancellation: return check_cancellation(rule, profile);
    case AxiomKind::Decisiveness: return check_decisiveness(rule, profile, spec.level);
    case AxiomKind::Efficiency: return check_efficiency(rule, profile, spec.notion);
  }
  return std::nullopt;
}

// Recomputes the rule outputs and comparisons behind a witness from scratch.
inline bool revalidate(const Rule& rule, const Witness& w) {
  const Lottery out = rule(w.profile);
  if (!(out == w.outcome)) return false;
  const AxiomSpec& s = w.axiom;
  switch (s.kind) {
    case AxiomKind::Strategyproofness: {
      if (!w.other || !w.voter) return false;
      const Profile& dev = *w.other;
      if (dev.num_voters() != w.profile.num_voters()) return false;
      for (std::size_t i = 1; i <= dev.num_voters(); ++i)
        if (i != *w.voter && !(dev.voter(i) == w.profile.voter(i))) return false;
      return detail::manipulates(s.mode, s.extension, w.profile.voter(*w.voter), out, rule(dev));
    }
    case AxiomKind::Participation: {
      if (!w.voter) return false;
      const Ranking& r = w.profile.voter(*w.voter);
      const Lottery without = rule(remove_voter(w.profile, *w.voter));
      if (!weakly_prefers(s.extension, r, out, without)) return true;
      return s.strict && exists_strict_improvement(r, without) && !strictly_prefers(s.extension, r, out, without);
    }
    case AxiomKind::Anonymity:
      return w.permutation && !(rule(relabel(w.profile, *w.permutation, std::nullopt)) == out);
    case AxiomKind::Neutrality:
      return w.permutation && !(rule(relabel(w.profile, std::nullopt, *w.permutation)) == relabel(out, *w.permutation));
    case AxiomKind::Cancellation: {
      if (!w.other) return false;
      const std::size_t n = w.profile.num_voters();
      const Profile& ext = *w.other;
      if (ext.num_voters() != n + 2 || !(ext.voter(n + 2) == ext.voter(n + 1).reversed())) return false;
      for (std::size_t i = 1; i <= n; ++i)
        if (!(ext.voter(i) == w.profile.voter(i))) return false;
      return !(rule(ext) == out);
    }
    case AxiomKind::Decisiveness: {
      const auto x = decisiveness_trigger(w.profile, s.level);
      return x && out[*x] != 1;
    }
    case AxiomKind::Efficiency:
      if (s.notion == EfficiencyNotion::ExPost) return !is_efficient(w.profile, out, s.notion);
      return w.certificate && w.certificate->dominated == out && w.certificate->revalidate(w.profile);
  }
  return false;
}

// ---------------------------------------------------------------- enumeration

inline std::uint64_t count_profiles(std::size_t m, std::size_t n, bool up_to_anonymity) {
  std::uint64_t k = 1;
  for (std::size_t i = 2; i <= m; ++i) k *= i;
  const std::uint64_t cap = std::numeric_limits<std::uint64_t>::max() / 64;
  std::uint64_t total = 1;
  if (up_to_anonymity) {
    // C(k + n - 1, n)
    for (std::uint64_t i = 1; i <= n; ++i) {
      total = total * (k + i - 1) / i;
      if (total > cap) return cap;
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      total *= k;
      if (total > cap) return cap;
    }
  }
  return total;
}

inline constexpr std::uint64_t kDefaultProfileBudget = 2'000'000;

// Ranking indices (into all_rankings) of every profile, in enumeration order.
inline std::vector<std::vector<std::size_t>> enumerate_ballot_indices(std::size_t m, std::size_t n,
                                                                      bool up_to_anonymity,
                                                                      std::uint64_t budget = kDefaultProfileBudget) {
  if (m < 1 || m > 4) throw DomainError("profile enumeration supports 1..4 alternatives");
  if (n < 1) throw DomainError("profile enumeration needs at least one voter");
  const std::uint64_t count = count_profiles(m, n, up_to_anonymity);
  if (count > budget)
    throw BudgetError(std::to_string(count) + " profiles exceed the budget of " + std::to_string(budget));
  std::size_t k = 1;
  for (std::size_t i = 2; i <= m; ++i) k *= i;
  std::vector<std::vector<std::size_t>> out;
  out.reserve(count);
  std::vector<std::size_t> idx(n, 0);
  for (;;) {
    out.push_back(idx);
    // Odometer; with anonymity indices stay non-decreasing.
    std::size_t pos = n;
    while (pos > 0 && idx[pos - 1] + 1 == k) --pos;
    if (pos == 0) break;
    ++idx[pos - 1];
    for (std::size_t j = pos; j < n; ++j) idx[j] = up_to_anonymity ? idx[pos - 1] : 0;
  }
  return out;
}

inline Profile profile_from_indices(const AlternativeSet& alts, const std::vector<Ranking>& rankings,
                                    const std::vector<std::size_t>& idx) {
  std::vector<Ranking> ballots;
  ballots.reserve(idx.size());
  for (std::size_t i : idx) ballots.push_back(rankings.at(i));
  return Profile(alts, std::move(ballots));
}

inline std::vector<Profile> enumerate_profiles(std::size_t m, std::size_t n, bool up_to_anonymity,
                                               std::uint64_t budget = kDefaultProfileBudget) {
  const auto indices = enumerate_ballot_indices(m, n, up_to_anonymity, budget);
  const AlternativeSet alts = AlternativeSet::letters(m);
  const auto rankings = all_rankings(alts);
  std::vector<Profile> out;
  out.reserve(indices.size());
  for (const auto& idx : indices) out.push_back(profile_from_indices(alts, rankings, idx));
  return out;
}

struct ScanOptions {
  bool up_to_anonymity = false;
  std::size_t n_min = 1;
  unsigned workers = 0;  // 0: hardware concurrency
  bool collect_all = false;
  std::uint64_t budget = kDefaultProfileBudget;
};

// Runs the axiom on every profile with m alternatives and n_min..n_max voters.
// Without collect_all the first witness in enumeration order is reported, no
// matter how work was split across threads.
inline AxiomReport exhaustive_scan(const Rule& rule, std::size_t m, std::size_t n_max, const AxiomSpec& spec,
                                   const ScanOptions& opt = {}) {
  const AlternativeSet alts = AlternativeSet::letters(m);
  const auto rankings = all_rankings(alts);
  std::vector<std::vector<std::size_t>> work;
  std::size_t n_min = std::max<std::size_t>(opt.n_min, 1);
  if (spec.kind == AxiomKind::Participation) n_min = std::max<std::size_t>(n_min, 2);
  {
    std::uint64_t total = 0;
    for (std::size_t n = n_min; n <= n_max; ++n) total += count_profiles(m, n, opt.up_to_anonymity);
    if (total > opt.budget)
      throw BudgetError(std::to_string(total) + " profiles exceed the budget of " + std::to_string(opt.budget));
    for (std::size_t n = n_min; n <= n_max; ++n) {
      auto part = enumerate_ballot_indices(m, n, opt.up_to_anonymity, opt.budget);
      work.insert(work.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
  }
  if (!rule.applicable(profile_from_indices(alts, rankings, {0})))
    throw ApplicabilityError(rule.name + " is not defined for " + std::to_string(m) + " alternatives");

  const std::size_t total = work.size();
  unsigned workers = opt.workers ? opt.workers : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(total, 1)));

  std::atomic<std::size_t> first_hit{total};
  std::mutex mu;
  std::vector<std::pair<std::size_t, Witness>> hits;
  std::exception_ptr error;

  auto run = [&](unsigned w) {
    try {
      for (std::size_t k = w; k < total; k += workers) {
        if (!opt.collect_all && k > first_hit.load(std::memory_order_relaxed)) return;
        auto witness = check_axiom(rule, profile_from_indices(alts, rankings, work[k]), spec);
        if (!witness) continue;
        std::lock_guard lock(mu);
        hits.emplace_back(k, std::move(*witness));
        std::size_t cur = first_hit.load();
        while (k < cur && !first_hit.compare_exchange_weak(cur, k)) {
        }
      }
    } catch (...) {
      std::lock_guard lock(mu);
      if (!error) error = std::current_exception();
      first_hit.store(0);
    }
  };
  if (workers <= 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);

  std::sort(hits.begin(), hits.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  AxiomReport report{spec.name(), rule.name, Verdict::Holds, {}, total};
  if (!hits.empty()) {
    report.verdict = Verdict::Violated;
    if (!opt.collect_all) hits.erase(hits.begin() + 1, hits.end());
    for (auto& h : hits) report.witnesses.push_back(std::move(h.second));
  }
  return report;
}

// ---------------------------------------------------------------- ladder

// Strong-manipulation implications between extensions: a weak PC1 manipulation is
// a PC manipulation, and a PC manipulation is an SD manipulation. Returns a
// description of the first broken implication, if any.
inline std::optional<std::string> ladder_inconsistency(const Rule& rule, const Profile& profile) {
  const Lottery honest = rule(profile);
  const auto rankings = all_rankings(profile.alternatives());
  for (std::size_t i = 1; i <= profile.num_voters(); ++i) {
    const Ranking& truth = profile.voter(i);
    for (const auto& lie : rankings) {
      if (lie == truth) continue;
      const Lottery lied = rule(detail::replace_ballot(profile, i, lie));
      const bool pc1_weak = detail::manipulates(ManipulationMode::Weak, Extension::PC1, truth, honest, lied);
      const bool pc = detail::manipulates(ManipulationMode::Strong, Extension::PC, truth, honest, lied);
      const bool sd = detail::manipulates(ManipulationMode::Strong, Extension::SD, truth, honest, lied);
      if ((pc1_weak && !pc) || (pc && !sd))
        return "voter " + std::to_string(i) + " misreport " + lie.to_string() + " breaks the implication ladder";
    }
  }
  return std::nullopt;
}

}  // namespace pcsc
