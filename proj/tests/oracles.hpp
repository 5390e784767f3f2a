#pragma once

// Slow, independent reference implementations used by the tests.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "pcsc/model.hpp"
#include "pcsc/ratlp.hpp"

namespace oracle {

using pcsc::Alt;
using pcsc::AlternativeSet;
using pcsc::Lottery;
using pcsc::Profile;
using pcsc::Ranking;
using pcsc::Rational;

// Double loop over ordered pairs.
inline Rational pc_score(const Ranking& r, const Lottery& p, const Lottery& q) {
  Rational s = 0;
  const auto& ord = r.order();
  for (std::size_t i = 0; i < ord.size(); ++i)
    for (std::size_t j = i + 1; j < ord.size(); ++j) s += p[ord[i]] * q[ord[j]] - q[ord[i]] * p[ord[j]];
  return s;
}

// +1: p SD-dominates q strictly, 0: equal, -1: q dominates p, 2: incomparable.
inline int sd(const Ranking& r, const Lottery& p, const Lottery& q) {
  bool p_ge = true, q_ge = true;
  for (std::size_t k = 1; k <= r.size(); ++k) {
    Rational a = 0, b = 0;
    for (std::size_t t = 0; t < k; ++t) {
      a += p[r.at(t)];
      b += q[r.at(t)];
    }
    p_ge = p_ge && a >= b;
    q_ge = q_ge && b >= a;
  }
  if (p_ge && q_ge) return 0;
  if (p_ge) return 1;
  if (q_ge) return -1;
  return 2;
}

inline long margin(const Profile& prof, Alt x, Alt y) {
  long g = 0;
  for (const auto& r : prof.ballots()) {
    for (Alt z : r.order()) {
      if (z == x) {
        ++g;
        break;
      }
      if (z == y) {
        --g;
        break;
      }
    }
  }
  return g;
}

// All lotteries over m alternatives whose probabilities are multiples of 1/den.
inline std::vector<Lottery> grid(const AlternativeSet& alts, long den) {
  const std::size_t m = alts.size();
  std::vector<Lottery> out;
  std::vector<long> k(m, 0);
  auto rec = [&](auto&& self, std::size_t i, long left) -> void {
    if (i + 1 == m) {
      k[i] = left;
      std::vector<Rational> p;
      for (long v : k) p.push_back(pcsc::ratio(v, den));
      out.emplace_back(alts, std::move(p));
      return;
    }
    for (long v = 0; v <= left; ++v) {
      k[i] = v;
      self(self, i + 1, left - v);
    }
  };
  rec(rec, 0, den);
  return out;
}

inline Lottery random_lottery(const AlternativeSet& alts, std::mt19937_64& rng, long max_weight = 6,
                              double zero_chance = 0.2) {
  std::vector<long> w(alts.size());
  long total = 0;
  while (total == 0) {
    total = 0;
    for (auto& v : w) {
      v = std::uniform_real_distribution<>(0, 1)(rng) < zero_chance
              ? 0
              : std::uniform_int_distribution<long>(1, max_weight)(rng);
      total += v;
    }
  }
  std::vector<Rational> p;
  for (long v : w) p.push_back(pcsc::ratio(v, total));
  return Lottery(alts, std::move(p));
}

inline Ranking random_ranking(const AlternativeSet& alts, std::mt19937_64& rng) {
  std::vector<Alt> order = alts.all();
  std::shuffle(order.begin(), order.end(), rng);
  return Ranking(alts, std::move(order));
}

inline Profile random_profile(std::size_t m, std::size_t n, std::mt19937_64& rng) {
  const AlternativeSet alts = AlternativeSet::letters(m);
  std::vector<Ranking> b;
  for (std::size_t i = 0; i < n; ++i) b.push_back(random_ranking(alts, rng));
  return Profile(alts, std::move(b));
}

// Profiles from lines like "a,b,c".
inline Profile profile(const std::vector<std::string>& ballots) {
  std::vector<std::string> first;
  std::string cur;
  for (char ch : ballots.at(0)) {
    if (ch == ',') {
      first.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  first.push_back(cur);
  std::sort(first.begin(), first.end());
  const AlternativeSet alts(first);
  std::vector<Ranking> out;
  for (const auto& line : ballots) {
    std::vector<std::string> labels;
    cur.clear();
    for (char ch : line) {
      if (ch == ',') {
        labels.push_back(cur);
        cur.clear();
      } else {
        cur += ch;
      }
    }
    labels.push_back(cur);
    out.push_back(Ranking::from_labels(alts, labels));
  }
  return Profile(alts, std::move(out));
}

// ------------------------------------------------------------ LP by vertex enumeration

struct Row {
  std::vector<Rational> a;
  pcsc::Relation rel;
  Rational b;
};

// Solves the square system; nullopt if singular.
inline std::optional<std::vector<Rational>> solve_square(std::vector<std::vector<Rational>> m, std::vector<Rational> rhs) {
  const std::size_t n = rhs.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = n;
    for (std::size_t r = c; r < n; ++r)
      if (m[r][c] != 0) {
        piv = r;
        break;
      }
    if (piv == n) return std::nullopt;
    std::swap(m[c], m[piv]);
    std::swap(rhs[c], rhs[piv]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m[r][c] == 0) continue;
      const Rational f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
      rhs[r] -= f * rhs[c];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = rhs[i] / m[i][i];
  return x;
}

inline bool satisfies(const std::vector<Row>& rows, const std::vector<Rational>& x) {
  for (const auto& v : x)
    if (v < 0) return false;
  for (const auto& r : rows) {
    Rational s = 0;
    for (std::size_t j = 0; j < x.size(); ++j) s += r.a[j] * x[j];
    if (r.rel == pcsc::Relation::LessEqual && s > r.b) return false;
    if (r.rel == pcsc::Relation::GreaterEqual && s < r.b) return false;
    if (r.rel == pcsc::Relation::Equal && s != r.b) return false;
  }
  return true;
}

// Maximum of c.x over the vertices of {x >= 0, rows}; nullopt if there are none.
inline std::optional<Rational> best_vertex(const std::vector<Rational>& c, const std::vector<Row>& rows) {
  const std::size_t n = c.size();
  // Candidate tight constraints: the rows, then x_j = 0.
  std::vector<Row> cand = rows;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Rational> e(n, Rational(0));
    e[j] = 1;
    cand.push_back({e, pcsc::Relation::Equal, 0});
  }
  std::optional<Rational> best;
  std::vector<bool> pick(cand.size(), false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(std::min(n, cand.size())), true);
  if (cand.size() < n) return std::nullopt;
  do {
    std::vector<std::vector<Rational>> m;
    std::vector<Rational> rhs;
    for (std::size_t k = 0; k < cand.size(); ++k)
      if (pick[k]) {
        m.push_back(cand[k].a);
        rhs.push_back(cand[k].b);
      }
    auto x = solve_square(m, rhs);
    if (!x || !satisfies(rows, *x)) continue;
    Rational v = 0;
    for (std::size_t j = 0; j < n; ++j) v += c[j] * (*x)[j];
    if (!best || v > *best) best = v;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return best;
}

struct BruteResult {
  pcsc::LpStatus status;
  Rational value;
};

// max c.x s.t. rows, x >= 0.
inline BruteResult brute_force_lp(const std::vector<Rational>& c, const std::vector<Row>& rows) {
  const auto v = best_vertex(c, rows);
  if (!v) return {pcsc::LpStatus::Infeasible, 0};
  // Recession directions d >= 0 with the homogeneous rows and sum(d) = 1.
  std::vector<Row> cone;
  for (const auto& r : rows) cone.push_back({r.a, r.rel, 0});
  cone.push_back({std::vector<Rational>(c.size(), Rational(1)), pcsc::Relation::Equal, 1});
  const auto ray = best_vertex(c, cone);
  if (ray && *ray > 0) return {pcsc::LpStatus::Unbounded, 0};
  return {pcsc::LpStatus::Optimal, *v};
}

struct RandomLp {
  std::vector<Rational> c;
  std::vector<Row> rows;

  pcsc::LinearProgram program() const {
    pcsc::LinearProgram lp(c.size());
    lp.set_objective(c);
    for (const auto& r : rows) lp.add_constraint(r.a, r.rel, r.b);
    return lp;
  }
};

inline RandomLp random_lp(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> nv(1, 4), nr(1, 6), coef(-5, 5), rhs(-4, 10), rel(0, 9);
  RandomLp lp;
  const int n = nv(rng), m = nr(rng);
  for (int j = 0; j < n; ++j) lp.c.emplace_back(coef(rng));
  for (int i = 0; i < m; ++i) {
    Row r;
    for (int j = 0; j < n; ++j) r.a.emplace_back(coef(rng));
    const int k = rel(rng);
    r.rel = k < 6 ? pcsc::Relation::LessEqual : k < 9 ? pcsc::Relation::GreaterEqual : pcsc::Relation::Equal;
    r.b = rhs(rng);
    lp.rows.push_back(std::move(r));
  }
  return lp;
}

}  // namespace oracle
