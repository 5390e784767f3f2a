#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "pcsc/faults.hpp"
#include "pcsc/model.hpp"

namespace pcsc {

enum class Comparison { StrictlyPreferred, Indifferent, StrictlyDispreferred, Incomparable };

enum class Extension { PC, PC1, SD };

inline std::string_view to_string(Comparison c) {
  switch (c) {
    case Comparison::StrictlyPreferred: return "strictly-preferred";
    case Comparison::Indifferent: return "indifferent";
    case Comparison::StrictlyDispreferred: return "strictly-dispreferred";
    case Comparison::Incomparable: return "incomparable";
  }
  return "?";
}

inline std::string_view to_string(Extension e) {
  switch (e) {
    case Extension::PC: return "pc";
    case Extension::PC1: return "pc1";
    case Extension::SD: return "sd";
  }
  return "?";
}

inline Extension parse_extension(std::string_view s) {
  if (s == "pc") return Extension::PC;
  if (s == "pc1") return Extension::PC1;
  if (s == "sd") return Extension::SD;
  throw DomainError("unknown extension '" + std::string(s) + "'");
}

inline Comparison reverse(Comparison c) {
  switch (c) {
    case Comparison::StrictlyPreferred: return Comparison::StrictlyDispreferred;
    case Comparison::StrictlyDispreferred: return Comparison::StrictlyPreferred;
    default: return c;
  }
}

namespace detail {
inline void check_lotteries(const Ranking& r, const Lottery& p, const Lottery& q) {
  check_same_alternatives(r.alternatives(), p.alternatives());
  check_same_alternatives(r.alternatives(), q.alternatives());
}
}  // namespace detail

// P(p beats q) - P(q beats p) for a voter with ranking r:
//   sum_{x > y} p(x) q(y) - sum_{x > y} q(x) p(y).
inline Rational pc_score(const Ranking& r, const Lottery& p, const Lottery& q) {
  detail::check_lotteries(r, p, q);
  Rational p_above = 0, q_above = 0, score = 0;
  for (Alt y : r.order()) {
    score += p_above * q[y] - q_above * p[y];
    p_above += p[y];
    q_above += q[y];
  }
  if (faults().flip_pc_sign.load(std::memory_order_relaxed)) score = -score;
  return score;
}

inline Comparison pc_compare(const Ranking& r, const Lottery& p, const Lottery& q) {
  const int s = sgn(pc_score(r, p, q));
  return s > 0 ? Comparison::StrictlyPreferred : s < 0 ? Comparison::StrictlyDispreferred : Comparison::Indifferent;
}

// Compares the cumulative probability of every upper contour set of r.
inline Comparison sd_compare(const Ranking& r, const Lottery& p, const Lottery& q) {
  detail::check_lotteries(r, p, q);
  Rational p_prefix = 0, q_prefix = 0;
  bool p_ge = true, q_ge = true;
  for (Alt y : r.order()) {
    p_prefix += p[y];
    q_prefix += q[y];
    if (p_prefix < q_prefix) p_ge = false;
    if (q_prefix < p_prefix) q_ge = false;
  }
  if (p_ge && q_ge) return Comparison::Indifferent;
  if (p_ge) return Comparison::StrictlyPreferred;
  if (q_ge) return Comparison::StrictlyDispreferred;
  return Comparison::Incomparable;
}

// PC restricted to pairs containing a degenerate lottery.
inline Comparison pc1_compare(const Ranking& r, const Lottery& p, const Lottery& q) {
  detail::check_lotteries(r, p, q);
  if (!p.is_degenerate() && !q.is_degenerate()) return Comparison::Incomparable;
  return pc_compare(r, p, q);
}

inline Comparison compare(Extension ext, const Ranking& r, const Lottery& p, const Lottery& q) {
  switch (ext) {
    case Extension::PC: return pc_compare(r, p, q);
    case Extension::PC1: return pc1_compare(r, p, q);
    case Extension::SD: return sd_compare(r, p, q);
  }
  throw DomainError("unknown extension");
}

inline bool weakly_prefers(Extension ext, const Ranking& r, const Lottery& p, const Lottery& q) {
  const Comparison c = compare(ext, r, p, q);
  return c == Comparison::StrictlyPreferred || c == Comparison::Indifferent;
}

inline bool strictly_prefers(Extension ext, const Ranking& r, const Lottery& p, const Lottery& q) {
  return compare(ext, r, p, q) == Comparison::StrictlyPreferred;
}

inline std::vector<Comparison> voter_comparisons(const Profile& profile, Extension ext, const Lottery& q,
                                                 const Lottery& p) {
  std::vector<Comparison> out;
  out.reserve(profile.num_voters());
  for (const auto& r : profile.ballots()) out.push_back(compare(ext, r, q, p));
  return out;
}

// q X-dominates p: every voter weakly X-prefers q, at least one strictly.
inline bool dominates(const Profile& profile, Extension ext, const Lottery& q, const Lottery& p) {
  check_same_alternatives(profile.alternatives(), q.alternatives());
  check_same_alternatives(profile.alternatives(), p.alternatives());
  bool strict = false;
  for (const auto& r : profile.ballots()) {
    const Comparison c = compare(ext, r, q, p);
    if (c == Comparison::StrictlyPreferred)
      strict = true;
    else if (c != Comparison::Indifferent)
      return false;
  }
  return strict;
}

}  // namespace pcsc
