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

#ifndef CIQP_LP_HPP_
#define CIQP_LP_HPP_

#include <optional>
#include <vector>

#include "ciqp/numeric.hpp"

namespace ciqp {

enum class Sense { Minimize, Maximize };

// Dense linear program in row form: optimize c.x subject to A x <= b plus
// optional per-variable bounds. Variables without bounds are free.
struct LpProblem {
  RatMatrix A;
  RatVector b;
  RatVector c;
  Sense sense = Sense::Minimize;
  std::vector<std::optional<Rational>> lower;  // empty or one entry per variable
  std::vector<std::optional<Rational>> upper;

  int num_vars() const { return static_cast<int>(c.size()); }
  int num_rows() const { return static_cast<int>(A.size()); }

  void ensure_bound_arrays();
  // Intersects the variable's bound interval with the new bound.
  void tighten_lower(int var, const Rational& value);
  void tighten_upper(int var, const Rational& value);
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
  RatVector x;
  Rational value;
  // Basic column indices of the internal standard form, one per surviving
  // row; an implementation detail exposed for inspection only.
  std::vector<int> basis;
  // The reduced-cost optimality certificate and an exact feasibility recheck
  // both passed. Always true for Optimal outcomes; a failed recheck throws.
  bool certified = false;
};

struct LpOutcome {
  LpStatus status = LpStatus::Infeasible;
  std::optional<LpSolution> solution;  // present iff status == Optimal
  // Present iff status == Unbounded: a recession direction d of the feasible
  // region that strictly improves the objective (c.d < 0 when minimizing,
  // c.d > 0 when maximizing).
  RatVector ray;
};

// Exact two-phase primal simplex on a dense rational tableau, with Bland's
// rule in both phases, so the method terminates and is fully deterministic.
// Optimal points are exact basic solutions of the standard-form program.
//
// The standard-form conversion shifts lower-bounded variables, reflects
// upper-bounded ones, splits free ones, and turns two-sided bounds into a
// shifted variable plus one extra cap row. Each transform keeps total
// unimodularity of an integral [A; bounds] system intact, which is what makes
// the integral-vertex guarantee usable downstream.
LpOutcome solve_lp(const LpProblem& problem);

}  // namespace ciqp

#endif  // CIQP_LP_HPP_
