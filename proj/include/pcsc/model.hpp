#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pcsc/errors.hpp"
#include "pcsc/rational.hpp"

namespace pcsc {

// An alternative, identified by its position in the owning AlternativeSet.
struct Alt {
  std::size_t index = 0;
  constexpr auto operator<=>(const Alt&) const = default;
};

using AltSet = std::vector<Alt>;  // sorted ascending, no duplicates

// Ordered list of distinct labels. Cheap to copy; the labels are shared.
class AlternativeSet {
 public:
  AlternativeSet() : names_(std::make_shared<const std::vector<std::string>>()) {}

  explicit AlternativeSet(std::vector<std::string> names) {
    if (names.empty()) throw DomainError("an alternative set needs at least one alternative");
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (names[i].empty()) throw DomainError("empty alternative label");
      for (std::size_t j = 0; j < i; ++j)
        if (names[i] == names[j]) throw DomainError("duplicate alternative label '" + names[i] + "'");
    }
    names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
  }

  // Single-letter labels a, b, c, ... (m <= 26).
  static AlternativeSet letters(std::size_t m) {
    if (m == 0 || m > 26) throw DomainError("letters() supports 1..26 alternatives");
    std::vector<std::string> names;
    for (std::size_t i = 0; i < m; ++i) names.emplace_back(1, static_cast<char>('a' + i));
    return AlternativeSet(std::move(names));
  }

  std::size_t size() const noexcept { return names_->size(); }
  const std::vector<std::string>& names() const noexcept { return *names_; }

  const std::string& name(Alt x) const {
    check(x);
    return (*names_)[x.index];
  }

  std::optional<Alt> find(const std::string& label) const {
    for (std::size_t i = 0; i < names_->size(); ++i)
      if ((*names_)[i] == label) return Alt{i};
    return std::nullopt;
  }

  Alt at(const std::string& label) const {
    if (auto x = find(label)) return *x;
    throw DomainError("unknown alternative '" + label + "'");
  }

  void check(Alt x) const {
    if (x.index >= names_->size())
      throw DomainError("alternative index " + std::to_string(x.index) + " out of range");
  }

  AltSet all() const {
    AltSet out;
    for (std::size_t i = 0; i < size(); ++i) out.push_back(Alt{i});
    return out;
  }

  friend bool operator==(const AlternativeSet& a, const AlternativeSet& b) {
    return a.names_ == b.names_ || *a.names_ == *b.names_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

// A strict total order over an AlternativeSet, best first.
class Ranking {
 public:
  Ranking(AlternativeSet alts, std::vector<Alt> order) : alts_(std::move(alts)), order_(std::move(order)) {
    const std::size_t m = alts_.size();
    if (order_.size() != m)
      throw DomainError("ranking lists " + std::to_string(order_.size()) + " alternatives, expected " +
                        std::to_string(m));
    position_.assign(m, m);
    for (std::size_t k = 0; k < m; ++k) {
      alts_.check(order_[k]);
      if (position_[order_[k].index] != m)
        throw DomainError("alternative '" + alts_.name(order_[k]) + "' appears twice in a ranking");
      position_[order_[k].index] = k;
    }
  }

  static Ranking from_labels(const AlternativeSet& alts, const std::vector<std::string>& labels) {
    std::vector<Alt> order;
    order.reserve(labels.size());
    for (const auto& l : labels) order.push_back(alts.at(l));
    return Ranking(alts, std::move(order));
  }

  const AlternativeSet& alternatives() const noexcept { return alts_; }
  const std::vector<Alt>& order() const noexcept { return order_; }
  std::size_t size() const noexcept { return order_.size(); }

  // 0-based position, 0 = best.
  std::size_t position(Alt x) const {
    alts_.check(x);
    return position_[x.index];
  }
  bool prefers(Alt x, Alt y) const { return position(x) < position(y); }
  Alt top() const { return order_.front(); }
  Alt bottom() const { return order_.back(); }
  Alt at(std::size_t k) const { return order_.at(k); }

  Ranking reversed() const { return Ranking(alts_, std::vector<Alt>(order_.rbegin(), order_.rend())); }

  std::string to_string(const char* sep = ",") const {
    std::string s;
    for (std::size_t k = 0; k < order_.size(); ++k) {
      if (k) s += sep;
      s += alts_.name(order_[k]);
    }
    return s;
  }

  friend bool operator==(const Ranking& a, const Ranking& b) {
    return a.order_ == b.order_ && a.alts_ == b.alts_;
  }

 private:
  AlternativeSet alts_;
  std::vector<Alt> order_;
  std::vector<std::size_t> position_;
};

// All m! rankings of the set, in lexicographic order of their index sequences.
inline std::vector<Ranking> all_rankings(const AlternativeSet& alts) {
  std::vector<Alt> order = alts.all();
  std::vector<Ranking> out;
  do {
    out.emplace_back(alts, order);
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

// Voter i is ballot i (1-based in every public operation that takes a voter).
class Profile {
 public:
  Profile(AlternativeSet alts, std::vector<Ranking> ballots) : alts_(std::move(alts)), ballots_(std::move(ballots)) {
    if (ballots_.empty()) throw DomainError("a profile needs at least one voter");
    for (const auto& b : ballots_)
      if (!(b.alternatives() == alts_)) throw DomainError("ballot over a different alternative set");
  }

  const AlternativeSet& alternatives() const noexcept { return alts_; }
  const std::vector<Ranking>& ballots() const noexcept { return ballots_; }
  std::size_t num_voters() const noexcept { return ballots_.size(); }
  std::size_t num_alternatives() const noexcept { return alts_.size(); }

  const Ranking& voter(std::size_t i) const {
    check_voter(i);
    return ballots_[i - 1];
  }

  void check_voter(std::size_t i) const {
    if (i < 1 || i > ballots_.size())
      throw DomainError("voter " + std::to_string(i) + " out of range 1.." + std::to_string(ballots_.size()));
  }

  friend bool operator==(const Profile& a, const Profile& b) {
    return a.alts_ == b.alts_ && a.ballots_ == b.ballots_;
  }

 private:
  AlternativeSet alts_;
  std::vector<Ranking> ballots_;
};

// Exact probability distribution over an AlternativeSet.
class Lottery {
 public:
  Lottery(AlternativeSet alts, std::vector<Rational> probs) : alts_(std::move(alts)), probs_(std::move(probs)) {
    if (probs_.size() != alts_.size()) throw DomainError("lottery size does not match alternative set");
    Rational sum = 0;
    for (auto& v : probs_) {
      v.canonicalize();
      if (v < 0) throw DomainError("negative probability " + v.get_str());
      sum += v;
    }
    if (sum != 1) throw DomainError("probabilities sum to " + sum.get_str() + ", not 1");
  }

  static Lottery degenerate(const AlternativeSet& alts, Alt x) {
    alts.check(x);
    std::vector<Rational> p(alts.size(), Rational(0));
    p[x.index] = 1;
    return Lottery(alts, std::move(p));
  }

  static Lottery uniform(const AlternativeSet& alts) { return uniform_over(alts, alts.all()); }

  static Lottery uniform_over(const AlternativeSet& alts, const AltSet& subset) {
    if (subset.empty()) throw DomainError("uniform lottery over an empty set");
    std::vector<Rational> p(alts.size(), Rational(0));
    for (Alt x : subset) {
      alts.check(x);
      p[x.index] = ratio(1, static_cast<long>(subset.size()));
    }
    return Lottery(alts, std::move(p));
  }

  static Lottery from_pairs(const AlternativeSet& alts, const std::vector<std::pair<std::string, Rational>>& entries) {
    std::vector<Rational> p(alts.size(), Rational(0));
    for (const auto& [label, value] : entries) p[alts.at(label).index] += value;
    return Lottery(alts, std::move(p));
  }

  const AlternativeSet& alternatives() const noexcept { return alts_; }
  const std::vector<Rational>& probabilities() const noexcept { return probs_; }
  std::size_t size() const noexcept { return probs_.size(); }

  const Rational& operator[](Alt x) const {
    alts_.check(x);
    return probs_[x.index];
  }
  const Rational& operator[](const std::string& label) const { return probs_[alts_.at(label).index]; }

  std::optional<Alt> degenerate_on() const {
    for (std::size_t i = 0; i < probs_.size(); ++i)
      if (probs_[i] == 1) return Alt{i};
    return std::nullopt;
  }
  bool is_degenerate() const { return degenerate_on().has_value(); }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < probs_.size(); ++i) {
      if (probs_[i] == 0) continue;
      if (!s.empty()) s += ",";
      s += alts_.name(Alt{i}) + ":" + probs_[i].get_str();
    }
    return s;
  }

  friend bool operator==(const Lottery& a, const Lottery& b) { return a.alts_ == b.alts_ && a.probs_ == b.probs_; }

 private:
  AlternativeSet alts_;
  std::vector<Rational> probs_;
};

// Skew-symmetric matrix of majority margins g(x, y).
class MarginMatrix {
 public:
  explicit MarginMatrix(const Profile& profile) : m_(profile.num_alternatives()), g_(m_ * m_, 0) {
    for (const auto& r : profile.ballots()) {
      const auto& ord = r.order();
      for (std::size_t i = 0; i < m_; ++i)
        for (std::size_t j = i + 1; j < m_; ++j) {
          ++g_[ord[i].index * m_ + ord[j].index];
          --g_[ord[j].index * m_ + ord[i].index];
        }
    }
  }

  std::size_t size() const noexcept { return m_; }
  long operator()(Alt x, Alt y) const { return g_[x.index * m_ + y.index]; }

 private:
  std::size_t m_;
  std::vector<long> g_;
};

inline void check_same_alternatives(const AlternativeSet& a, const AlternativeSet& b) {
  if (!(a == b)) throw DomainError("mismatched alternative sets");
}

inline long majority_margin(const Profile& profile, Alt x, Alt y) {
  const auto& alts = profile.alternatives();
  alts.check(x);
  alts.check(y);
  if (x == y) throw DomainError("majority margin of an alternative against itself");
  long g = 0;
  for (const auto& r : profile.ballots()) g += r.prefers(x, y) ? 1 : -1;
  return g;
}

inline std::size_t top_count(const Profile& profile, Alt x) {
  profile.alternatives().check(x);
  return static_cast<std::size_t>(
      std::count_if(profile.ballots().begin(), profile.ballots().end(), [&](const Ranking& r) { return r.top() == x; }));
}

inline std::optional<Alt> condorcet_winner(const Profile& profile) {
  const MarginMatrix g(profile);
  const std::size_t m = g.size();
  for (std::size_t x = 0; x < m; ++x) {
    bool wins = true;
    for (std::size_t y = 0; y < m && wins; ++y)
      if (x != y && g(Alt{x}, Alt{y}) <= 0) wins = false;
    if (wins) return Alt{x};
  }
  return std::nullopt;
}

// Raw set {x : g(x,y) >= 0 for all y != x}; no gating on the Condorcet winner.
inline AltSet weak_condorcet_winners(const Profile& profile) {
  const MarginMatrix g(profile);
  AltSet out;
  for (std::size_t x = 0; x < g.size(); ++x) {
    bool ok = true;
    for (std::size_t y = 0; y < g.size() && ok; ++y)
      if (x != y && g(Alt{x}, Alt{y}) < 0) ok = false;
    if (ok) out.push_back(Alt{x});
  }
  return out;
}

inline AltSet pareto_dominated_set(const Profile& profile) {
  const std::size_t m = profile.num_alternatives();
  const auto n = static_cast<long>(profile.num_voters());
  const MarginMatrix g(profile);
  AltSet out;
  for (std::size_t y = 0; y < m; ++y)
    for (std::size_t x = 0; x < m; ++x)
      if (x != y && g(Alt{x}, Alt{y}) == n) {
        out.push_back(Alt{y});
        break;
      }
  return out;
}

inline AltSet never_bottom_set(const Profile& profile) {
  std::vector<bool> bottom(profile.num_alternatives(), false);
  for (const auto& r : profile.ballots()) bottom[r.bottom().index] = true;
  AltSet out;
  for (std::size_t x = 0; x < bottom.size(); ++x)
    if (!bottom[x]) out.push_back(Alt{x});
  return out;
}

// 1 + number of alternatives strictly preferred to x.
inline std::size_t rank(const Ranking& ranking, Alt x) { return ranking.position(x) + 1; }

// Deletes voter i (1-based); the remaining voters keep their relative order.
inline Profile remove_voter(const Profile& profile, std::size_t i) {
  profile.check_voter(i);
  if (profile.num_voters() < 2) throw DomainError("cannot remove the only voter of a profile");
  std::vector<Ranking> ballots = profile.ballots();
  ballots.erase(ballots.begin() + static_cast<std::ptrdiff_t>(i - 1));
  return Profile(profile.alternatives(), std::move(ballots));
}

// Inserts a ballot so that it becomes voter i (1 <= i <= n + 1).
inline Profile insert_voter(const Profile& profile, std::size_t i, const Ranking& ballot) {
  if (i < 1 || i > profile.num_voters() + 1) throw DomainError("insertion position out of range");
  std::vector<Ranking> ballots = profile.ballots();
  ballots.insert(ballots.begin() + static_cast<std::ptrdiff_t>(i - 1), ballot);
  return Profile(profile.alternatives(), std::move(ballots));
}

inline Profile add_voter(const Profile& profile, const Ranking& ballot) {
  return insert_voter(profile, profile.num_voters() + 1, ballot);
}

inline void check_permutation(const std::vector<std::size_t>& perm, std::size_t n, const char* what) {
  if (perm.size() != n) throw DomainError(std::string(what) + " permutation has wrong size");
  std::vector<bool> seen(n, false);
  for (std::size_t v : perm) {
    if (v >= n || seen[v]) throw DomainError(std::string(what) + " mapping is not a bijection");
    seen[v] = true;
  }
}

// Rewrites a ranking alternative-wise: pi(x) is preferred to pi(y) iff x is preferred to y.
inline Ranking relabel(const Ranking& r, const std::vector<std::size_t>& alt_perm) {
  check_permutation(alt_perm, r.size(), "alternative");
  std::vector<Alt> order;
  order.reserve(r.size());
  for (Alt x : r.order()) order.push_back(Alt{alt_perm[x.index]});
  return Ranking(r.alternatives(), std::move(order));
}

// voter_perm is 0-based: new ballot k is old ballot voter_perm[k]. alt_perm maps
// alternative index x to alt_perm[x].
inline Profile relabel(const Profile& profile, const std::optional<std::vector<std::size_t>>& voter_perm,
                       const std::optional<std::vector<std::size_t>>& alt_perm) {
  const std::size_t n = profile.num_voters();
  std::vector<Ranking> ballots;
  ballots.reserve(n);
  if (voter_perm) check_permutation(*voter_perm, n, "voter");
  for (std::size_t k = 0; k < n; ++k) {
    const Ranking& src = profile.ballots()[voter_perm ? (*voter_perm)[k] : k];
    ballots.push_back(alt_perm ? relabel(src, *alt_perm) : src);
  }
  return Profile(profile.alternatives(), std::move(ballots));
}

// The lottery assigning p(x) to alt_perm[x].
inline Lottery relabel(const Lottery& p, const std::vector<std::size_t>& alt_perm) {
  check_permutation(alt_perm, p.size(), "alternative");
  std::vector<Rational> out(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) out[alt_perm[x]] = p.probabilities()[x];
  return Lottery(p.alternatives(), std::move(out));
}

inline AltSet support(const Lottery& p) {
  AltSet out;
  for (std::size_t x = 0; x < p.size(); ++x)
    if (p.probabilities()[x] > 0) out.push_back(Alt{x});
  return out;
}

// Ballots sorted into a canonical order; equal iff the profiles agree up to voter renaming.
inline std::vector<std::vector<Alt>> ballot_multiset(const Profile& profile) {
  std::vector<std::vector<Alt>> out;
  for (const auto& r : profile.ballots()) out.push_back(r.order());
  std::sort(out.begin(), out.end());
  return out;
}

inline std::string to_string(const AltSet& set, const AlternativeSet& alts) {
  std::string s = "{";
  for (std::size_t k = 0; k < set.size(); ++k) {
    if (k) s += ",";
    s += alts.name(set[k]);
  }
  return s + "}";
}

}  // namespace pcsc
