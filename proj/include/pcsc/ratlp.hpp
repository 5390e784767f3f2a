#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pcsc/errors.hpp"
#include "pcsc/rational.hpp"

// Exact rational linear programming. Dense two-phase tableau simplex with
// Bland's rule; the instances in this library have at most a few dozen rows.
namespace pcsc {

enum class Relation { LessEqual, Equal, GreaterEqual };

struct LinearConstraint {
  std::vector<Rational> coeffs;
  Relation relation = Relation::LessEqual;
  Rational rhs;
};

// maximize objective . x  subject to constraints and per-variable bounds.
// Variables default to x >= 0 with no upper bound.
class LinearProgram {
 public:
  explicit LinearProgram(std::size_t num_vars)
      : num_vars_(num_vars), objective_(num_vars, Rational(0)), lower_(num_vars, Rational(0)), upper_(num_vars) {}

  std::size_t num_vars() const noexcept { return num_vars_; }

  void set_objective(std::vector<Rational> c) {
    if (c.size() != num_vars_) throw DomainError("objective has " + std::to_string(c.size()) + " coefficients, expected " + std::to_string(num_vars_));
    objective_ = std::move(c);
  }

  void add_constraint(std::vector<Rational> coeffs, Relation rel, Rational rhs) {
    if (coeffs.size() != num_vars_)
      throw DomainError("constraint has " + std::to_string(coeffs.size()) + " coefficients, expected " + std::to_string(num_vars_));
    constraints_.push_back({std::move(coeffs), rel, std::move(rhs)});
  }

  void set_lower(std::size_t j, std::optional<Rational> lb) { lower_.at(j) = std::move(lb); }
  void set_upper(std::size_t j, std::optional<Rational> ub) { upper_.at(j) = std::move(ub); }
  void set_free(std::size_t j) {
    lower_.at(j).reset();
    upper_.at(j).reset();
  }

  const std::vector<Rational>& objective() const noexcept { return objective_; }
  const std::vector<LinearConstraint>& constraints() const noexcept { return constraints_; }
  const std::optional<Rational>& lower(std::size_t j) const { return lower_.at(j); }
  const std::optional<Rational>& upper(std::size_t j) const { return upper_.at(j); }

  // Throws DomainError if some row or the objective has the wrong width.
  void validate() const {
    if (objective_.size() != num_vars_) throw DomainError("objective dimension mismatch");
    for (const auto& c : constraints_)
      if (c.coeffs.size() != num_vars_) throw DomainError("constraint dimension mismatch");
    if (lower_.size() != num_vars_ || upper_.size() != num_vars_) throw DomainError("bound dimension mismatch");
  }

  // True iff x satisfies every constraint and bound exactly.
  bool satisfied_by(const std::vector<Rational>& x) const {
    if (x.size() != num_vars_) return false;
    for (std::size_t j = 0; j < num_vars_; ++j) {
      if (lower_[j] && x[j] < *lower_[j]) return false;
      if (upper_[j] && x[j] > *upper_[j]) return false;
    }
    for (const auto& c : constraints_) {
      Rational lhs = 0;
      for (std::size_t j = 0; j < num_vars_; ++j) lhs += c.coeffs[j] * x[j];
      if (c.relation == Relation::LessEqual && lhs > c.rhs) return false;
      if (c.relation == Relation::GreaterEqual && lhs < c.rhs) return false;
      if (c.relation == Relation::Equal && lhs != c.rhs) return false;
    }
    return true;
  }

  Rational evaluate(const std::vector<Rational>& x) const {
    Rational v = 0;
    for (std::size_t j = 0; j < num_vars_; ++j) v += objective_[j] * x[j];
    return v;
  }

 private:
  std::size_t num_vars_;
  std::vector<Rational> objective_;
  std::vector<LinearConstraint> constraints_;
  std::vector<std::optional<Rational>> lower_;
  std::vector<std::optional<Rational>> upper_;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

inline std::string_view to_string(LpStatus s) {
  switch (s) {
    case LpStatus::Optimal: return "optimal";
    case LpStatus::Infeasible: return "infeasible";
    case LpStatus::Unbounded: return "unbounded";
  }
  return "?";
}

struct LpOutcome {
  LpStatus status = LpStatus::Infeasible;
  std::vector<Rational> solution;  // only on Optimal
  Rational value;                  // only on Optimal
};

namespace detail {

class Tableau {
 public:
  // rows: [coeffs over all columns | rhs], rhs >= 0; basis: one column per row.
  Tableau(std::vector<std::vector<Rational>> rows, std::vector<std::size_t> basis, std::size_t num_cols)
      : rows_(std::move(rows)), basis_(std::move(basis)), num_cols_(num_cols), allowed_(num_cols, true) {}

  void forbid(std::size_t col) { allowed_[col] = false; }

  // Installs objective c (maximize) and prices out the basic columns.
  void set_objective(const std::vector<Rational>& c) {
    obj_.assign(num_cols_ + 1, Rational(0));
    for (std::size_t j = 0; j < num_cols_; ++j) obj_[j] = c[j];
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Rational cb = obj_[basis_[i]];
      if (cb != 0) axpy(obj_, cb, rows_[i]);
    }
  }

  // Bland's rule: lowest-index improving column enters; ratio ties go to the
  // lowest-index basic column.
  bool optimize() {
    for (;;) {
      std::size_t enter = num_cols_;
      for (std::size_t j = 0; j < num_cols_; ++j)
        if (allowed_[j] && obj_[j] > 0) {
          enter = j;
          break;
        }
      if (enter == num_cols_) return true;
      std::size_t leave = rows_.size();
      Rational best;
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Rational& a = rows_[i][enter];
        if (a <= 0) continue;
        Rational ratio = rows_[i][num_cols_] / a;
        if (leave == rows_.size() || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = std::move(ratio);
        }
      }
      if (leave == rows_.size()) return false;
      pivot(leave, enter);
    }
  }

  Rational value() const { return -obj_[num_cols_]; }

  void pivot(std::size_t r, std::size_t col) {
    const Rational inv = 1 / rows_[r][col];
    for (auto& v : rows_[r])
      if (v != 0) v *= inv;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i == r) continue;
      const Rational f = rows_[i][col];
      if (f != 0) axpy(rows_[i], f, rows_[r]);
    }
    if (!obj_.empty()) {
      const Rational f = obj_[col];
      if (f != 0) axpy(obj_, f, rows_[r]);
    }
    basis_[r] = col;
  }

  // Pivots basic columns >= first_forbidden out of the basis where possible and
  // drops rows that turn out to be redundant.
  void expel(std::size_t first_forbidden) {
    for (std::size_t i = 0; i < rows_.size();) {
      if (basis_[i] < first_forbidden) {
        ++i;
        continue;
      }
      std::size_t col = first_forbidden;
      for (std::size_t j = 0; j < first_forbidden; ++j)
        if (rows_[i][j] != 0) {
          col = j;
          break;
        }
      if (col < first_forbidden) {
        pivot(i, col);
        ++i;
      } else {
        rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(i));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
      }
    }
  }

  std::vector<Rational> primal() const {
    std::vector<Rational> x(num_cols_, Rational(0));
    for (std::size_t i = 0; i < rows_.size(); ++i) x[basis_[i]] = rows_[i][num_cols_];
    return x;
  }

 private:
  // row -= f * src
  static void axpy(std::vector<Rational>& row, const Rational& f, const std::vector<Rational>& src) {
    for (std::size_t k = 0; k < row.size(); ++k)
      if (src[k] != 0) row[k] -= f * src[k];
  }

  std::vector<std::vector<Rational>> rows_;
  std::vector<std::size_t> basis_;
  std::size_t num_cols_;
  std::vector<bool> allowed_;
  std::vector<Rational> obj_;
};

// x_j = offset + sum(sign * y_col) with y >= 0.
struct VariableMap {
  Rational offset;
  std::vector<std::pair<std::size_t, int>> terms;
};

}  // namespace detail

inline LpOutcome lp_solve(const LinearProgram& lp) {
  lp.validate();
  const std::size_t n = lp.num_vars();

  std::vector<detail::VariableMap> maps(n);
  std::size_t num_struct = 0;
  std::vector<LinearConstraint> rows = lp.constraints();
  for (std::size_t j = 0; j < n; ++j) {
    const auto& lo = lp.lower(j);
    const auto& hi = lp.upper(j);
    auto& vm = maps[j];
    if (lo) {
      vm.offset = *lo;
      vm.terms.push_back({num_struct++, +1});
      if (hi) {
        std::vector<Rational> e(n, Rational(0));
        e[j] = 1;
        rows.push_back({std::move(e), Relation::LessEqual, *hi});
      }
    } else if (hi) {
      vm.offset = *hi;
      vm.terms.push_back({num_struct++, -1});
    } else {
      vm.offset = 0;
      vm.terms.push_back({num_struct++, +1});
      vm.terms.push_back({num_struct++, -1});
    }
  }

  // Rewrite rows over y, normalise rhs >= 0.
  struct Row {
    std::vector<Rational> a;
    Relation rel;
    Rational b;
  };
  std::vector<Row> std_rows;
  std_rows.reserve(rows.size());
  for (const auto& c : rows) {
    Row r{std::vector<Rational>(num_struct, Rational(0)), c.relation, c.rhs};
    for (std::size_t j = 0; j < n; ++j) {
      if (c.coeffs[j] == 0) continue;
      r.b -= c.coeffs[j] * maps[j].offset;
      for (auto [col, sign] : maps[j].terms) r.a[col] += sign * c.coeffs[j];
    }
    if (r.b < 0) {
      for (auto& v : r.a) v = -v;
      r.b = -r.b;
      if (r.rel == Relation::LessEqual)
        r.rel = Relation::GreaterEqual;
      else if (r.rel == Relation::GreaterEqual)
        r.rel = Relation::LessEqual;
    }
    std_rows.push_back(std::move(r));
  }

  // Columns: structural | slack/surplus | artificial.
  std::size_t num_slack = 0, num_art = 0;
  for (const auto& r : std_rows) {
    if (r.rel != Relation::Equal) ++num_slack;
    if (r.rel != Relation::LessEqual) ++num_art;
  }
  const std::size_t first_art = num_struct + num_slack;
  const std::size_t num_cols = first_art + num_art;

  std::vector<std::vector<Rational>> tab;
  std::vector<std::size_t> basis;
  std::size_t slack = num_struct, art = first_art;
  for (const auto& r : std_rows) {
    std::vector<Rational> row(num_cols + 1, Rational(0));
    for (std::size_t k = 0; k < num_struct; ++k) row[k] = r.a[k];
    row[num_cols] = r.b;
    if (r.rel == Relation::LessEqual) {
      row[slack] = 1;
      basis.push_back(slack++);
    } else {
      if (r.rel == Relation::GreaterEqual) row[slack++] = -1;
      row[art] = 1;
      basis.push_back(art++);
    }
    tab.push_back(std::move(row));
  }

  detail::Tableau t(std::move(tab), std::move(basis), num_cols);

  if (num_art > 0) {
    std::vector<Rational> phase1(num_cols, Rational(0));
    for (std::size_t k = first_art; k < num_cols; ++k) phase1[k] = -1;
    t.set_objective(phase1);
    t.optimize();  // bounded by 0
    if (t.value() < 0) return {LpStatus::Infeasible, {}, Rational(0)};
    t.expel(first_art);
    for (std::size_t k = first_art; k < num_cols; ++k) t.forbid(k);
  }

  std::vector<Rational> c(num_cols, Rational(0));
  Rational constant = 0;
  for (std::size_t j = 0; j < n; ++j) {
    const Rational& cj = lp.objective()[j];
    if (cj == 0) continue;
    constant += cj * maps[j].offset;
    for (auto [col, sign] : maps[j].terms) c[col] += sign * cj;
  }
  t.set_objective(c);
  if (!t.optimize()) return {LpStatus::Unbounded, {}, Rational(0)};

  const std::vector<Rational> y = t.primal();
  std::vector<Rational> x(n);
  for (std::size_t j = 0; j < n; ++j) {
    x[j] = maps[j].offset;
    for (auto [col, sign] : maps[j].terms) x[j] += sign * y[col];
  }
  return {LpStatus::Optimal, std::move(x), t.value() + constant};
}

struct Feasibility {
  bool feasible = false;
  std::vector<Rational> witness;  // a basic feasible point when feasible
};

// Phase-one feasibility of the constraint system; the objective is ignored.
inline Feasibility lp_feasible(const LinearProgram& system) {
  LinearProgram lp = system;
  lp.set_objective(std::vector<Rational>(lp.num_vars(), Rational(0)));
  LpOutcome out = lp_solve(lp);
  if (out.status != LpStatus::Optimal) return {false, {}};
  return {true, std::move(out.solution)};
}

}  // namespace pcsc
