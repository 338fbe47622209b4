#pragma once

#include "padic_codes/rational.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace padic_codes {

enum class Relation { less_equal, greater_equal, equal };
enum class Sense { minimize, maximize };
enum class LpStatus { optimal, infeasible, unbounded };

inline const char* to_string(LpStatus s) {
  switch (s) {
    case LpStatus::optimal: return "optimal";
    case LpStatus::infeasible: return "infeasible";
    case LpStatus::unbounded: return "unbounded";
  }
  return "?";
}

struct LinearConstraint {
  std::vector<Rational> coefficients;
  Relation relation;
  Rational rhs;
};

/// Variables are non-negative unless flagged in free_variables.
struct LinearProgram {
  Sense sense = Sense::minimize;
  std::vector<Rational> objective;
  std::vector<LinearConstraint> constraints;
  std::vector<bool> free_variables;
};

struct LpSolution {
  LpStatus status = LpStatus::infeasible;
  Rational objective_value;
  std::vector<Rational> values;
};

namespace simplex_detail {

class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols) : t_(rows, std::vector<Rational>(cols + 1)), basis_(rows) {}

  std::size_t rows() const { return t_.size(); }
  std::size_t cols() const { return t_.empty() ? 0 : t_[0].size() - 1; }
  Rational& at(std::size_t i, std::size_t j) { return t_[i][j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return t_[i][j]; }
  Rational& rhs(std::size_t i) { return t_[i].back(); }
  const Rational& rhs(std::size_t i) const { return t_[i].back(); }
  std::vector<std::size_t>& basis() { return basis_; }

  void pivot(std::size_t row, std::size_t col) {
    Rational inv = 1 / t_[row][col];
    for (auto& x : t_[row]) x *= inv;
    for (std::size_t i = 0; i < t_.size(); ++i) {
      if (i == row || t_[i][col] == 0) continue;
      Rational f = t_[i][col];
      for (std::size_t j = 0; j < t_[i].size(); ++j) {
        if (t_[row][j] != 0) t_[i][j] -= f * t_[row][j];
      }
    }
    basis_[row] = col;
  }

  void drop_row(std::size_t row) {
    t_.erase(t_.begin() + static_cast<std::ptrdiff_t>(row));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(row));
  }

  /// Minimizes cost . x over the current basis, entering only allowed columns.
  /// Bland's rule: lowest-index improving column, ties in the ratio test to the lowest basic index.
  bool minimize(const std::vector<Rational>& cost, const std::vector<bool>& allowed) {
    for (;;) {
      std::optional<std::size_t> entering;
      for (std::size_t j = 0; j < cols() && !entering; ++j) {
        if (!allowed[j]) continue;
        Rational reduced = cost[j];
        for (std::size_t i = 0; i < rows(); ++i) {
          if (t_[i][j] != 0) reduced -= cost[basis_[i]] * t_[i][j];
        }
        if (reduced < 0) entering = j;
      }
      if (!entering) return true;
      std::optional<std::size_t> leaving;
      Rational best_ratio;
      for (std::size_t i = 0; i < rows(); ++i) {
        if (t_[i][*entering] <= 0) continue;
        Rational ratio = rhs(i) / t_[i][*entering];
        if (!leaving || ratio < best_ratio || (ratio == best_ratio && basis_[i] < basis_[*leaving])) {
          leaving = i;
          best_ratio = ratio;
        }
      }
      if (!leaving) return false;
      pivot(*leaving, *entering);
    }
  }

 private:
  std::vector<std::vector<Rational>> t_;
  std::vector<std::size_t> basis_;
};

}  // namespace simplex_detail

/// Exact two-phase simplex over the rationals with Bland's anti-cycling rule.
inline LpSolution rational_simplex(const LinearProgram& lp) {
  using simplex_detail::Tableau;
  const std::size_t n = lp.objective.size();
  std::vector<bool> is_free = lp.free_variables;
  is_free.resize(n, false);
  for (const auto& c : lp.constraints) {
    if (c.coefficients.size() != n) throw std::invalid_argument("constraint width does not match the objective");
  }

  // Column layout: structural columns (free variables get a second, negated column),
  // then one slack/surplus per inequality, then artificials.
  std::vector<std::size_t> plus_col(n), minus_col(n, SIZE_MAX);
  std::size_t cols = 0;
  for (std::size_t j = 0; j < n; ++j) {
    plus_col[j] = cols++;
    if (is_free[j]) minus_col[j] = cols++;
  }
  const std::size_t structural = cols;
  struct Row {
    std::vector<Rational> a;
    Relation rel;
    Rational b;
  };
  std::vector<Row> rows;
  for (const auto& c : lp.constraints) {
    Row r{std::vector<Rational>(structural), c.relation, c.rhs};
    for (std::size_t j = 0; j < n; ++j) {
      r.a[plus_col[j]] = c.coefficients[j];
      if (is_free[j]) r.a[minus_col[j]] = -c.coefficients[j];
    }
    if (r.b < 0) {
      for (auto& x : r.a) x = -x;
      r.b = -r.b;
      if (r.rel == Relation::less_equal) {
        r.rel = Relation::greater_equal;
      } else if (r.rel == Relation::greater_equal) {
        r.rel = Relation::less_equal;
      }
    }
    rows.push_back(std::move(r));
  }
  std::size_t slack_count = 0, artificial_count = 0;
  for (const auto& r : rows) {
    if (r.rel != Relation::equal) ++slack_count;
    if (r.rel != Relation::less_equal) ++artificial_count;
  }
  const std::size_t first_artificial = structural + slack_count;
  const std::size_t total_cols = first_artificial + artificial_count;

  Tableau t(rows.size(), total_cols);
  std::size_t next_slack = structural, next_artificial = first_artificial;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < structural; ++j) t.at(i, j) = rows[i].a[j];
    t.rhs(i) = rows[i].b;
    if (rows[i].rel == Relation::less_equal) {
      t.at(i, next_slack) = 1;
      t.basis()[i] = next_slack++;
    } else {
      if (rows[i].rel == Relation::greater_equal) t.at(i, next_slack++) = -1;
      t.at(i, next_artificial) = 1;
      t.basis()[i] = next_artificial++;
    }
  }

  LpSolution solution;
  std::vector<bool> allowed(total_cols, true);
  if (artificial_count > 0) {
    std::vector<Rational> phase1(total_cols);
    for (std::size_t j = first_artificial; j < total_cols; ++j) phase1[j] = 1;
    t.minimize(phase1, allowed);  // bounded below by 0
    Rational infeasibility = 0;
    for (std::size_t i = 0; i < t.rows(); ++i) {
      if (t.basis()[i] >= first_artificial) infeasibility += t.rhs(i);
    }
    if (infeasibility > 0) {
      solution.status = LpStatus::infeasible;
      return solution;
    }
    // Drive zero-level artificials out of the basis; rows where that is impossible are redundant.
    for (std::size_t i = t.rows(); i-- > 0;) {
      if (t.basis()[i] < first_artificial) continue;
      std::optional<std::size_t> col;
      for (std::size_t j = 0; j < first_artificial && !col; ++j) {
        if (t.at(i, j) != 0) col = j;
      }
      if (col) {
        t.pivot(i, *col);
      } else {
        t.drop_row(i);
      }
    }
    for (std::size_t j = first_artificial; j < total_cols; ++j) allowed[j] = false;
  }

  std::vector<Rational> cost(total_cols);
  const Rational sign = lp.sense == Sense::minimize ? 1 : -1;
  for (std::size_t j = 0; j < n; ++j) {
    cost[plus_col[j]] = sign * lp.objective[j];
    if (is_free[j]) cost[minus_col[j]] = -sign * lp.objective[j];
  }
  if (!t.minimize(cost, allowed)) {
    solution.status = LpStatus::unbounded;
    return solution;
  }

  std::vector<Rational> column_value(total_cols);
  for (std::size_t i = 0; i < t.rows(); ++i) column_value[t.basis()[i]] = t.rhs(i);
  solution.status = LpStatus::optimal;
  solution.values.resize(n);
  solution.objective_value = 0;
  for (std::size_t j = 0; j < n; ++j) {
    solution.values[j] = column_value[plus_col[j]];
    if (is_free[j]) solution.values[j] -= column_value[minus_col[j]];
    solution.objective_value += lp.objective[j] * solution.values[j];
  }
  return solution;
}

}  // namespace padic_codes
