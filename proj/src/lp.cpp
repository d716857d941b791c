// Copyright 2026 The ciqp authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ciqp/lp.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace ciqp {

void LpProblem::ensure_bound_arrays() {
  lower.resize(c.size());
  upper.resize(c.size());
}

void LpProblem::tighten_lower(int var, const Rational& value) {
  ensure_bound_arrays();
  if (!lower[var] || *lower[var] < value) lower[var] = value;
}

void LpProblem::tighten_upper(int var, const Rational& value) {
  ensure_bound_arrays();
  if (!upper[var] || *upper[var] > value) upper[var] = value;
}

namespace {

// How one original variable maps into the nonnegative standard form.
struct ColumnMap {
  enum class Kind { Shift, Flip, Split } kind = Kind::Split;
  int col = -1;      // primary standard-form column
  int col_neg = -1;  // negative part, Split only
  Rational offset;   // Shift: x = offset + y ; Flip: x = offset - y
};

struct Tableau {
  // Each row is [columns..., rhs]; rhs stays nonnegative throughout.
  RatMatrix rows;
  RatVector reduced;  // reduced-cost row over the columns (no rhs slot)
  std::vector<int> basic;
  int cols = 0;

  Rational& rhs(int i) { return rows[i][cols]; }
};

// One exact pivot. Only columns where the pivot row is nonzero change.
void pivot(Tableau& t, int row, int col) {
  RatVector& pr = t.rows[row];
  const Rational piv = pr[col];
  if (piv.sign() == 0) throw std::logic_error("pivot on zero element");

  std::vector<int> nonzero;
  nonzero.reserve(t.cols + 1);
  for (int c = 0; c <= t.cols; ++c) {
    if (pr[c].sign() != 0) {
      pr[c] /= piv;
      nonzero.push_back(c);
    }
  }
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    if (static_cast<int>(i) == row) continue;
    const Rational factor = t.rows[i][col];
    if (factor.sign() == 0) continue;
    for (int c : nonzero) t.rows[i][c] -= factor * pr[c];
  }
  if (!t.reduced.empty()) {
    const Rational factor = t.reduced[col];
    if (factor.sign() != 0) {
      for (int c : nonzero) {
        if (c < t.cols) t.reduced[c] -= factor * pr[c];
      }
    }
  }
  t.basic[row] = col;
}

// Reduced costs for `cost` relative to the current basis.
void install_cost(Tableau& t, const RatVector& cost) {
  t.reduced = cost;
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    const Rational weight = cost[t.basic[i]];
    if (weight.sign() == 0) continue;
    for (int c = 0; c < t.cols; ++c) {
      if (t.rows[i][c].sign() != 0) t.reduced[c] -= weight * t.rows[i][c];
    }
  }
}

Rational objective_of_basis(const Tableau& t, const RatVector& cost) {
  Rational value = 0;
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    const Rational& weight = cost[t.basic[i]];
    if (weight.sign() != 0) value += weight * t.rows[i][t.cols];
  }
  return value;
}

// Bland's rule: enter the lowest-index improving column, leave on the lowest
// basic index among minimum ratios. Returns the entering column when no row
// limits it (unbounded), or -1 at optimality.
int run_simplex(Tableau& t, int enterable_cols) {
  for (;;) {
    int entering = -1;
    for (int c = 0; c < enterable_cols; ++c) {
      if (t.reduced[c].sign() < 0) {
        entering = c;
        break;
      }
    }
    if (entering < 0) return -1;

    int leaving = -1;
    Rational best_ratio;
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
      if (t.rows[i][entering].sign() <= 0) continue;
      Rational ratio = t.rows[i][t.cols] / t.rows[i][entering];
      if (leaving < 0 || ratio < best_ratio ||
          (ratio == best_ratio && t.basic[i] < t.basic[leaving])) {
        leaving = static_cast<int>(i);
        best_ratio = ratio;
      }
    }
    if (leaving < 0) return entering;
    pivot(t, leaving, entering);
  }
}

struct StandardForm {
  Tableau tableau;               // without artificial columns
  std::vector<ColumnMap> map;    // per original variable
  int structural_cols = 0;       // y columns
  int total_cols = 0;            // y + slack columns
  std::vector<bool> row_negated;
};

}  // namespace

LpOutcome solve_lp(const LpProblem& problem) {
  const int n = problem.num_vars();
  const int m = problem.num_rows();
  if (static_cast<int>(problem.b.size()) != m) {
    throw std::invalid_argument("solve_lp: b size mismatch");
  }
  for (const auto& row : problem.A) {
    if (static_cast<int>(row.size()) != n) {
      throw std::invalid_argument("solve_lp: A row size mismatch");
    }
  }
  if (!problem.lower.empty() && static_cast<int>(problem.lower.size()) != n) {
    throw std::invalid_argument("solve_lp: lower bound size mismatch");
  }
  if (!problem.upper.empty() && static_cast<int>(problem.upper.size()) != n) {
    throw std::invalid_argument("solve_lp: upper bound size mismatch");
  }

  auto lower_of = [&](int j) -> const std::optional<Rational>& {
    static const std::optional<Rational> none;
    return problem.lower.empty() ? none : problem.lower[j];
  };
  auto upper_of = [&](int j) -> const std::optional<Rational>& {
    static const std::optional<Rational> none;
    return problem.upper.empty() ? none : problem.upper[j];
  };

  // Crossed bounds make the problem trivially infeasible.
  for (int j = 0; j < n; ++j) {
    if (lower_of(j) && upper_of(j) && *lower_of(j) > *upper_of(j)) {
      return LpOutcome{LpStatus::Infeasible, std::nullopt, {}};
    }
  }

  // Standard-form columns.
  std::vector<ColumnMap> map(n);
  std::vector<std::pair<int, Rational>> cap_rows;  // (column, width) per two-sided var
  int next_col = 0;
  for (int j = 0; j < n; ++j) {
    const auto& lo = lower_of(j);
    const auto& hi = upper_of(j);
    if (lo) {
      map[j] = {ColumnMap::Kind::Shift, next_col++, -1, *lo};
      if (hi) cap_rows.emplace_back(map[j].col, *hi - *lo);
    } else if (hi) {
      map[j] = {ColumnMap::Kind::Flip, next_col++, -1, *hi};
    } else {
      map[j].kind = ColumnMap::Kind::Split;
      map[j].col = next_col++;
      map[j].col_neg = next_col++;
      map[j].offset = 0;
    }
  }

  const int structural = next_col;
  const int total_rows = m + static_cast<int>(cap_rows.size());
  const int total_cols = structural + total_rows;  // + one slack per row

  // Row build: substitute the variable transforms, then slack, then sign
  // normalization so every rhs starts nonnegative.
  RatMatrix rows(total_rows, RatVector(total_cols + 1, Rational(0)));
  for (int i = 0; i < m; ++i) {
    Rational rhs = problem.b[i];
    for (int j = 0; j < n; ++j) {
      const Rational& a = problem.A[i][j];
      if (a.sign() == 0) continue;
      switch (map[j].kind) {
        case ColumnMap::Kind::Shift:
          rows[i][map[j].col] += a;
          rhs -= a * map[j].offset;
          break;
        case ColumnMap::Kind::Flip:
          rows[i][map[j].col] -= a;
          rhs -= a * map[j].offset;
          break;
        case ColumnMap::Kind::Split:
          rows[i][map[j].col] += a;
          rows[i][map[j].col_neg] -= a;
          break;
      }
    }
    rows[i][total_cols] = rhs;
  }
  for (std::size_t t = 0; t < cap_rows.size(); ++t) {
    const int i = m + static_cast<int>(t);
    rows[i][cap_rows[t].first] = 1;
    rows[i][total_cols] = cap_rows[t].second;
  }
  for (int i = 0; i < total_rows; ++i) rows[i][structural + i] = 1;

  std::vector<bool> negated(total_rows, false);
  for (int i = 0; i < total_rows; ++i) {
    if (rows[i][total_cols].sign() < 0) {
      negated[i] = true;
      for (int c = 0; c <= total_cols; ++c) {
        if (rows[i][c].sign() != 0) rows[i][c] = -rows[i][c];
      }
    }
  }

  // Phase 1, only when some row needs an artificial.
  Tableau t;
  t.rows = std::move(rows);
  t.basic.resize(total_rows);
  int artificials = 0;
  for (int i = 0; i < total_rows; ++i) {
    if (negated[i]) ++artificials;
  }
  if (artificials > 0) {
    const int art_start = total_cols;
    t.cols = total_cols + artificials;
    int next_art = art_start;
    RatVector phase1_cost(t.cols, Rational(0));
    for (int i = 0; i < total_rows; ++i) {
      t.rows[i].insert(t.rows[i].end() - 1, artificials, Rational(0));
      if (negated[i]) {
        t.rows[i][next_art] = 1;
        phase1_cost[next_art] = 1;
        t.basic[i] = next_art++;
      } else {
        t.basic[i] = structural + i;
      }
    }
    install_cost(t, phase1_cost);
    // Artificials never re-enter, so entering columns stop at art_start.
    if (run_simplex(t, art_start) >= 0) {
      throw std::logic_error("phase 1 objective is bounded below by zero");
    }
    if (objective_of_basis(t, phase1_cost).sign() > 0) {
      return LpOutcome{LpStatus::Infeasible, std::nullopt, {}};
    }
    // Basis still holding artificials at level zero: replace them by any
    // real column with a nonzero entry, or drop the row as redundant.
    std::vector<int> dead_rows;
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
      if (t.basic[i] < art_start) continue;
      int replacement = -1;
      for (int c = 0; c < art_start; ++c) {
        if (t.rows[i][c].sign() != 0) {
          replacement = c;
          break;
        }
      }
      if (replacement >= 0) {
        pivot(t, static_cast<int>(i), replacement);
      } else {
        dead_rows.push_back(static_cast<int>(i));
      }
    }
    for (auto it = dead_rows.rbegin(); it != dead_rows.rend(); ++it) {
      t.rows.erase(t.rows.begin() + *it);
      t.basic.erase(t.basic.begin() + *it);
    }
    // Strip the artificial block; rhs moves back next to the real columns.
    for (auto& row : t.rows) {
      row[total_cols] = row[t.cols];
      row.resize(total_cols + 1);
    }
    t.cols = total_cols;
  } else {
    t.cols = total_cols;
    for (int i = 0; i < total_rows; ++i) t.basic[i] = structural + i;
  }

  // Phase 2 cost in min orientation over the standard-form columns.
  RatVector cost(t.cols, Rational(0));
  for (int j = 0; j < n; ++j) {
    Rational cj = problem.c[j];
    if (problem.sense == Sense::Maximize) cj = -cj;
    if (cj.sign() == 0) continue;
    switch (map[j].kind) {
      case ColumnMap::Kind::Shift:
        cost[map[j].col] += cj;
        break;
      case ColumnMap::Kind::Flip:
        cost[map[j].col] -= cj;
        break;
      case ColumnMap::Kind::Split:
        cost[map[j].col] += cj;
        cost[map[j].col_neg] -= cj;
        break;
    }
  }
  install_cost(t, cost);
  const int unbounded_col = run_simplex(t, t.cols);

  if (unbounded_col >= 0) {
    // Recession direction: the entering column moves by one, each basic
    // column compensates.
    RatVector dir(t.cols, Rational(0));
    dir[unbounded_col] = 1;
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
      if (t.rows[i][unbounded_col].sign() != 0) {
        dir[t.basic[i]] = -t.rows[i][unbounded_col];
      }
    }
    RatVector ray(n, Rational(0));
    for (int j = 0; j < n; ++j) {
      switch (map[j].kind) {
        case ColumnMap::Kind::Shift:
          ray[j] = dir[map[j].col];
          break;
        case ColumnMap::Kind::Flip:
          ray[j] = -dir[map[j].col];
          break;
        case ColumnMap::Kind::Split:
          ray[j] = dir[map[j].col] - dir[map[j].col_neg];
          break;
      }
    }
    // The direction must stay inside every constraint and strictly improve
    // the objective; both are exact identities of the construction.
    for (int i = 0; i < m; ++i) {
      Rational change = 0;
      for (int j = 0; j < n; ++j) change += problem.A[i][j] * ray[j];
      if (change.sign() > 0) throw std::logic_error("unbounded ray leaves a constraint");
    }
    Rational rate = 0;
    for (int j = 0; j < n; ++j) {
      if (lower_of(j) && ray[j].sign() < 0) throw std::logic_error("unbounded ray breaks a lower bound");
      if (upper_of(j) && ray[j].sign() > 0) throw std::logic_error("unbounded ray breaks an upper bound");
      rate += problem.c[j] * ray[j];
    }
    if (problem.sense == Sense::Minimize ? rate.sign() >= 0 : rate.sign() <= 0) {
      throw std::logic_error("unbounded ray fails to improve the objective");
    }
    return LpOutcome{LpStatus::Unbounded, std::nullopt, std::move(ray)};
  }

  // Optimal: read the basic values and undo the variable transforms.
  RatVector std_values(t.cols, Rational(0));
  for (std::size_t i = 0; i < t.rows.size(); ++i) std_values[t.basic[i]] = t.rows[i][t.cols];
  LpSolution sol;
  sol.x.resize(n, Rational(0));
  for (int j = 0; j < n; ++j) {
    switch (map[j].kind) {
      case ColumnMap::Kind::Shift:
        sol.x[j] = map[j].offset + std_values[map[j].col];
        break;
      case ColumnMap::Kind::Flip:
        sol.x[j] = map[j].offset - std_values[map[j].col];
        break;
      case ColumnMap::Kind::Split:
        sol.x[j] = std_values[map[j].col] - std_values[map[j].col_neg];
        break;
    }
  }
  sol.value = 0;
  for (int j = 0; j < n; ++j) sol.value += problem.c[j] * sol.x[j];
  sol.basis = t.basic;

  // Optimality certificate: no reduced cost may stay negative.
  for (int c = 0; c < t.cols; ++c) {
    if (t.reduced[c].sign() < 0) throw std::logic_error("optimality certificate failed");
  }
  // Exact feasibility recheck in original coordinates.
  for (int i = 0; i < m; ++i) {
    Rational lhs = 0;
    for (int j = 0; j < n; ++j) lhs += problem.A[i][j] * sol.x[j];
    if (lhs > problem.b[i]) throw std::logic_error("optimal point violates a constraint");
  }
  for (int j = 0; j < n; ++j) {
    if (lower_of(j) && sol.x[j] < *lower_of(j)) throw std::logic_error("optimal point below lower bound");
    if (upper_of(j) && sol.x[j] > *upper_of(j)) throw std::logic_error("optimal point above upper bound");
  }
  sol.certified = true;

  return LpOutcome{LpStatus::Optimal, std::move(sol), {}};
}

}  // namespace ciqp
