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

#ifndef CIQP_SOLVER_HPP_
#define CIQP_SOLVER_HPP_

#include <optional>
#include <span>
#include <vector>

#include "ciqp/ilp.hpp"
#include "ciqp/lp.hpp"
#include "ciqp/model.hpp"
#include "ciqp/numeric.hpp"

namespace ciqp {

// Proven integer min/max of one variable over a subproblem's feasible set.
struct VariableRange {
  int var = -1;
  BigInt lower, upper;
};

// One cell of the rectangular mesh laid over the free quadratic variables.
struct GridBox {
  std::vector<int> vars;  // ascending original indices
  RatVector lo, hi;       // per variable, lo < hi
};

// Affine minorant of the quadratic objective part on a GridBox:
// sum_i coeff[i] * x_i + constant. It touches the quadratic exactly at every
// box vertex and stays below it inside.
struct AffineUnderestimator {
  std::vector<int> vars;
  RatVector coeff;
  Rational constant;
};

// Mesh resolution: smallest integer g with
//   g^2 >= nonlinear_count * ((2 * var_count * max_subdet)^2 + 1/epsilon)
// in general mode, and g^2 >= nonlinear_count * (1 + 1/epsilon) in tu mode.
// `mode` must be resolved (not Auto) and nonlinear_count >= 1.
BigInt compute_grid_size(int nonlinear_count, int var_count, const BigInt& max_subdet,
                         const Rational& epsilon, SolveMode mode);

// Approximation target that survives replacing the objective by a separable
// quadratic sandwich of relative width xi: returns eps_prime * (1 - xi) - xi.
// Requires xi in [0, 1) and eps_prime in (xi / (1 - xi), 1].
Rational sandwich_epsilon(const Rational& eps_prime, const Rational& xi);

// Splits each range into grid_size equal cells; boxes come back in
// lexicographic order of their cell indices (first variable most
// significant). Requires every range width >= grid_size >= 1.
std::vector<GridBox> build_boxes(const std::vector<VariableRange>& ranges,
                                 const BigInt& grid_size);

// The tangent-chord minorant of -sum_i q_i x_i^2 on the box:
// coeff[i] = -q_i*(lo_i+hi_i), constant = sum_i q_i*lo_i*hi_i.
AffineUnderestimator build_underestimator(const GridBox& box,
                                          std::span<const BigInt> quad_coeffs);

// Outcome of the screening pass: feasibility and boundedness of the whole
// instance, plus proven ranges of the quadratic variables.
struct Step1Result {
  enum class Kind { Feasible, Infeasible, Unbounded };
  Kind kind = Kind::Infeasible;
  IntVector anchor;                   // integral feasible point (Feasible only)
  std::vector<VariableRange> ranges;  // one per quadratic variable (Feasible only)
};

// Feasible point in original coordinates with its exact objective value.
struct Candidate {
  IntVector x;
  BigInt objective;
};

// Instruction to enumerate a variable's finitely many values.
struct Split {
  int var = -1;
  BigInt lower, upper;
};

class Solver {
 public:
  // Validates the instance, resolves the mode (Auto picks tu only on a
  // declared delta of 1 or an exhaustive positive TU check), and resolves the
  // subdeterminant bound per the configured policy. Throws UsageError on
  // invalid input or an unsatisfiable policy. The instance is copied, so the
  // solver stays valid after the argument goes away.
  Solver(const Instance& instance, const SolveConfig& config);

  // Full pipeline; the only entry point most callers need.
  SolveReport run();

  // Individual stages, exposed for focused testing and tooling. They share
  // this solver's statistics counters.
  Step1Result step1_probe();
  // Integer min/max of every free quadratic variable; nullopt when the
  // subproblem is infeasible. Uses the cached ranges when present.
  std::optional<std::vector<VariableRange>> variable_ranges(const Subproblem& sub);
  std::optional<Candidate> solve_box(const Subproblem& sub, const ReducedSystem& sys,
                                     const GridBox& box, const AffineUnderestimator& mu);
  Candidate mesh_step(const Subproblem& sub, const ReducedSystem& sys,
                      const std::vector<VariableRange>& ranges, const BigInt& grid_size);
  SolveReport main_loop(const Step1Result& step1);

  SolveMode resolved_mode() const { return mode_; }
  const BigInt& max_subdet() const { return delta_; }
  const SolveStats& stats() const { return stats_; }

 private:
  friend SolveReport solve(const Instance&, const SolveConfig&);

  // Mode dispatch for one linear subproblem: branch and bound in general
  // mode, a single LP in tu mode (where a fractional vertex is a hard
  // "matrix not TU" usage error). Counts toward the solve statistics.
  IlpOutcome solve_linear(const LpProblem& problem);
  LpProblem reduced_lp(const ReducedSystem& sys) const;
  SolveReport solve_without_quadratics();

  Instance instance_;
  SolveConfig config_;
  SolveMode mode_ = SolveMode::General;
  BigInt delta_ = 1;
  IlpOptions ilp_options_;
  SolveStats stats_;
};

// Decide between meshing and splitting: returns the smallest-index range
// whose width (upper - lower) is below grid_size, or nullopt when every
// range is wide enough for the mesh.
std::optional<Split> decomposition_step(const std::vector<VariableRange>& ranges,
                                        const BigInt& grid_size);

// Convenience wrapper: construct a Solver and run it.
SolveReport solve(const Instance& instance, const SolveConfig& config);

}  // namespace ciqp

#endif  // CIQP_SOLVER_HPP_
