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

#ifndef CIQP_MODEL_HPP_
#define CIQP_MODEL_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ciqp/numeric.hpp"

namespace ciqp {

// One problem instance:
//
//   minimize   sum_i -q[i] * x_i^2  +  h . x
//   subject to W x <= w,  x integer
//
// where the quadratic terms attach to the first num_nonlinear variables and
// every q[i] is strictly positive, so the objective is separable concave.
struct Instance {
  int num_vars = 0;       // columns of W
  int num_cons = 0;       // rows of W
  int num_nonlinear = 0;  // quadratic terms on variables 0..num_nonlinear-1
  IntMatrix W;            // num_cons x num_vars
  IntVector w;            // num_cons
  IntVector q;            // num_nonlinear, all > 0
  IntVector h;            // num_vars

  // Optional caller-supplied bound on the largest absolute subdeterminant of
  // W. Trusted only under the use_declared policy; over-estimates are safe.
  std::optional<BigInt> declared_delta;
  std::optional<std::string> name;
  // Per-variable inclusive [lo, hi] enumeration bounds for the brute-force
  // oracle. Meaningful only when they cover the feasible set.
  std::optional<std::vector<std::pair<BigInt, BigInt>>> oracle_box;

  BigInt objective(std::span<const BigInt> x) const;
  bool is_feasible(std::span<const BigInt> x) const;
};

// Descriptions of every structural invariant the instance violates
// (dimension mismatches, nonpositive quadratic coefficients, bad counts).
// Empty result means the instance is well formed.
std::vector<std::string> validate(const Instance& instance);

// Constraint system of a subproblem after substituting its fixings:
// columns for free variables only, right-hand side reduced accordingly.
struct ReducedSystem {
  std::vector<int> free_vars;  // ascending original indices
  int free_nonlinear = 0;      // the first free_nonlinear free_vars are quadratic
  IntMatrix rows;              // num_cons x free_vars.size()
  IntVector rhs;
  IntVector lin;               // h restricted to free variables
  IntVector quad;              // q restricted to free quadratic variables
};

// A node of the solver's work list: the base instance plus a set of
// quadratic variables fixed to integer values.
class Subproblem {
 public:
  static Subproblem root(const Instance& base);

  // Child with free quadratic variable `var` fixed to `value`.
  Subproblem fix(int var, const BigInt& value) const;

  const Instance& base() const { return *base_; }
  const std::map<int, BigInt>& fixings() const { return fixings_; }

  // Objective contribution -q[var]*value^2 + h[var]*value summed over all
  // fixings; added back when reduced-space values are reported in original
  // coordinates.
  const BigInt& objective_offset() const { return objective_offset_; }

  int free_var_count() const;
  int free_nonlinear_count() const;
  bool is_fixed(int var) const { return fixings_.contains(var); }
  std::vector<int> free_nonlinear_vars() const;

  ReducedSystem reduce() const;

  // Reduced-space point (aligned with ReducedSystem::free_vars) lifted back
  // to original coordinates.
  IntVector lift(std::span<const BigInt> reduced_point) const;

  // Known min/max of each free quadratic variable, populated for the root
  // from the screening pass so those bounds are never recomputed.
  using RangeCache = std::map<int, std::pair<BigInt, BigInt>>;
  const std::optional<RangeCache>& cached_ranges() const { return cached_ranges_; }
  void set_cached_ranges(RangeCache ranges) { cached_ranges_ = std::move(ranges); }

 private:
  explicit Subproblem(const Instance& base) : base_(&base), objective_offset_(0) {}

  const Instance* base_;
  std::map<int, BigInt> fixings_;
  BigInt objective_offset_;
  std::optional<RangeCache> cached_ranges_;
};

enum class SolveMode { Auto, General, Tu };

enum class DeltaPolicy { UseDeclared, Compute, ComputeCapped };

struct SolveConfig {
  Rational epsilon;  // approximation target, must lie in (0, 1]
  SolveMode mode = SolveMode::Auto;
  DeltaPolicy delta_policy = DeltaPolicy::Compute;
  // Submatrix size cap for DeltaPolicy::ComputeCapped; a capped enumeration
  // that is not exhaustive is rejected rather than trusted.
  int delta_size_cap = 8;
  // In tu mode, reject matrices with a witnessed non-unimodular
  // subdeterminant before solving.
  bool verify_tu = false;
};

struct SolveStats {
  std::uint64_t ilp_solves = 0;         // integer subsolver calls (general mode)
  std::uint64_t lp_solves = 0;          // linear subsolver calls (tu mode)
  std::uint64_t subproblems_created = 0;  // work-list entries, root included
  std::uint64_t boxes_solved = 0;       // grid cells solved, infeasible ones included
  BigInt grid_size_root = 0;            // grid resolution chosen at the root
};

enum class SolveStatus { EpsApprox, Infeasible, Unbounded };

struct SolveReport {
  SolveStatus status = SolveStatus::Infeasible;
  std::optional<IntVector> solution;   // present iff status == EpsApprox
  std::optional<Rational> objective;   // exact objective at `solution`
  SolveStats stats;
};

}  // namespace ciqp

#endif  // CIQP_MODEL_HPP_
