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

#include "ciqp/solver.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

#include "ciqp/errors.hpp"
#include "ciqp/matprops.hpp"

namespace ciqp {

BigInt compute_grid_size(int nonlinear_count, int var_count, const BigInt& max_subdet,
                         const Rational& epsilon, SolveMode mode) {
  if (mode == SolveMode::Auto) {
    throw std::invalid_argument("compute_grid_size needs a resolved mode");
  }
  if (nonlinear_count < 1) {
    throw std::invalid_argument("compute_grid_size needs at least one quadratic variable");
  }
  if (epsilon.sign() <= 0 || epsilon > Rational(1)) {
    throw UsageError("epsilon must lie in (0, 1]");
  }
  const Rational inv_eps = Rational(1) / epsilon;
  Rational inner;
  if (mode == SolveMode::Tu) {
    inner = Rational(1) + inv_eps;
  } else {
    const BigInt scaled = 2 * var_count * max_subdet;
    inner = Rational(BigInt(scaled * scaled)) + inv_eps;
  }
  return ceil_sqrt(Rational(nonlinear_count) * inner);
}

Rational sandwich_epsilon(const Rational& eps_prime, const Rational& xi) {
  if (xi.sign() < 0 || xi >= Rational(1)) {
    throw UsageError("sandwich width must lie in [0, 1)");
  }
  const Rational remaining = Rational(1) - xi;
  if (eps_prime > Rational(1) || eps_prime <= xi / remaining) {
    throw UsageError("target must lie in (xi/(1-xi), 1]");
  }
  return eps_prime * remaining - xi;
}

std::vector<GridBox> build_boxes(const std::vector<VariableRange>& ranges,
                                 const BigInt& grid_size) {
  if (grid_size < 1) throw std::invalid_argument("grid size must be at least 1");
  if (!grid_size.fits_ulong_p()) throw UsageError("grid too large to materialize");
  const unsigned long cells = grid_size.get_ui();

  const std::size_t k = ranges.size();
  std::vector<std::vector<Rational>> cuts(k);
  for (std::size_t i = 0; i < k; ++i) {
    const BigInt width = ranges[i].upper - ranges[i].lower;
    if (width < grid_size) throw std::invalid_argument("range too narrow to mesh");
    cuts[i].reserve(cells + 1);
    for (unsigned long j = 0; j <= cells; ++j) {
      // Cell boundary lower + j*width/g, exact.
      cuts[i].emplace_back(ranges[i].lower * grid_size + BigInt(j) * width, grid_size);
    }
  }

  std::vector<GridBox> boxes;
  std::vector<unsigned long> idx(k, 0);
  for (;;) {
    GridBox box;
    box.vars.reserve(k);
    box.lo.reserve(k);
    box.hi.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
      box.vars.push_back(ranges[i].var);
      box.lo.push_back(cuts[i][idx[i]]);
      box.hi.push_back(cuts[i][idx[i] + 1]);
    }
    boxes.push_back(std::move(box));
    // Odometer with the last variable fastest: lexicographic box order.
    std::size_t pos = k;
    while (pos > 0) {
      --pos;
      if (++idx[pos] < cells) break;
      idx[pos] = 0;
      if (pos == 0) return boxes;
    }
    if (k == 0) return boxes;  // a single empty box
  }
}

AffineUnderestimator build_underestimator(const GridBox& box,
                                          std::span<const BigInt> quad_coeffs) {
  if (box.vars.size() != quad_coeffs.size()) {
    throw std::invalid_argument("underestimator: coefficient count mismatch");
  }
  AffineUnderestimator mu;
  mu.vars = box.vars;
  mu.coeff.reserve(box.vars.size());
  mu.constant = 0;
  for (std::size_t i = 0; i < box.vars.size(); ++i) {
    const Rational q = Rational(quad_coeffs[i]);
    // Secant of -q x^2 through the cell endpoints: matches at both, minorizes
    // between them.
    mu.coeff.push_back(-(q * (box.lo[i] + box.hi[i])));
    mu.constant += q * box.lo[i] * box.hi[i];
  }
  return mu;
}

std::optional<Split> decomposition_step(const std::vector<VariableRange>& ranges,
                                        const BigInt& grid_size) {
  for (const VariableRange& r : ranges) {
    if (r.upper - r.lower < grid_size) return Split{r.var, r.lower, r.upper};
  }
  return std::nullopt;
}

Solver::Solver(const Instance& instance, const SolveConfig& config)
    : instance_(instance), config_(config) {
  const auto issues = validate(instance);
  if (!issues.empty()) {
    std::string msg = "invalid instance";
    for (const auto& issue : issues) msg += "; " + issue;
    throw UsageError(msg);
  }
  if (config.epsilon.sign() <= 0 || config.epsilon > Rational(1)) {
    throw UsageError("epsilon must lie in (0, 1]");
  }
  if (config.delta_size_cap < 1) throw UsageError("delta size cap must be at least 1");

  if (config.mode == SolveMode::Auto) {
    if (instance.declared_delta) {
      // A declaration settles the mode either way; no enumeration happens.
      mode_ = *instance.declared_delta == 1 ? SolveMode::Tu : SolveMode::General;
    } else {
      // Capped and inconclusive counts as not proven, so fall back.
      const TuVerdict verdict = is_totally_unimodular(instance.W);
      mode_ = verdict.is_tu && verdict.exhaustive ? SolveMode::Tu : SolveMode::General;
    }
  } else {
    mode_ = config.mode;
  }

  if (mode_ == SolveMode::Tu) {
    delta_ = 1;
    if (config.verify_tu) {
      const TuVerdict verdict = is_totally_unimodular(instance.W);
      if (!verdict.is_tu) {
        throw UsageError("matrix not TU: a subdeterminant outside {-1, 0, 1} exists");
      }
    }
  } else {
    switch (config.delta_policy) {
      case DeltaPolicy::UseDeclared:
        if (!instance.declared_delta) {
          throw UsageError("delta policy use_declared needs a declared delta");
        }
        delta_ = *instance.declared_delta;
        break;
      case DeltaPolicy::Compute: {
        const int full = std::max(1, std::min(instance.num_cons, instance.num_vars));
        delta_ = max_abs_subdeterminant(instance.W, full).delta;
        break;
      }
      case DeltaPolicy::ComputeCapped: {
        const DeltaCertificate cert =
            max_abs_subdeterminant(instance.W, config.delta_size_cap);
        if (!cert.exhaustive) {
          throw UsageError(
              "subdeterminant enumeration capped at size " +
              std::to_string(config.delta_size_cap) +
              " is not exhaustive for this matrix; declare delta or raise the cap");
        }
        delta_ = cert.delta;
        break;
      }
    }
  }
}

LpProblem Solver::reduced_lp(const ReducedSystem& sys) const {
  LpProblem lp;
  lp.A.reserve(sys.rows.size());
  for (const IntVector& row : sys.rows) {
    RatVector out;
    out.reserve(row.size());
    for (const BigInt& a : row) out.emplace_back(a);
    lp.A.push_back(std::move(out));
  }
  lp.b.reserve(sys.rhs.size());
  for (const BigInt& v : sys.rhs) lp.b.emplace_back(v);
  lp.c.assign(sys.free_vars.size(), Rational(0));
  return lp;
}

IlpOutcome Solver::solve_linear(const LpProblem& problem) {
  if (mode_ == SolveMode::Tu) {
    ++stats_.lp_solves;
    LpOutcome out = solve_lp(problem);
    switch (out.status) {
      case LpStatus::Infeasible:
        return IlpOutcome{IlpStatus::Infeasible, std::nullopt, std::nullopt};
      case LpStatus::Unbounded:
        return IlpOutcome{IlpStatus::Unbounded, std::nullopt, std::nullopt};
      case LpStatus::Optimal:
        break;
    }
    IntVector x;
    x.reserve(out.solution->x.size());
    for (const Rational& v : out.solution->x) {
      if (!v.is_integer()) {
        throw UsageError("matrix not TU: the linear relaxation has a fractional vertex");
      }
      x.push_back(v.num());
    }
    return IlpOutcome{IlpStatus::Optimal, std::move(x), out.solution->value};
  }
  ++stats_.ilp_solves;
  return solve_ilp(problem, ilp_options_);
}

SolveReport Solver::solve_without_quadratics() {
  const Subproblem root = Subproblem::root(instance_);
  const ReducedSystem sys = root.reduce();
  LpProblem lp = reduced_lp(sys);
  for (std::size_t j = 0; j < sys.lin.size(); ++j) lp.c[j] = Rational(sys.lin[j]);

  SolveReport report;
  const IlpOutcome out = solve_linear(lp);
  switch (out.status) {
    case IlpStatus::Infeasible:
      report.status = SolveStatus::Infeasible;
      break;
    case IlpStatus::Unbounded:
      report.status = SolveStatus::Unbounded;
      break;
    case IlpStatus::Optimal: {
      report.status = SolveStatus::EpsApprox;
      report.solution = *out.x;
      report.objective = Rational(instance_.objective(*out.x));
      break;
    }
  }
  report.stats = stats_;
  return report;
}

Step1Result Solver::step1_probe() {
  const int k = instance_.num_nonlinear;
  if (k < 1) throw std::invalid_argument("screening needs at least one quadratic variable");

  const Subproblem root = Subproblem::root(instance_);
  const ReducedSystem sys = root.reduce();

  Step1Result result;
  std::optional<IntVector> anchor;
  for (int i = 0; i < k; ++i) {
    VariableRange range;
    range.var = i;
    for (const Sense sense : {Sense::Minimize, Sense::Maximize}) {
      LpProblem lp = reduced_lp(sys);
      lp.c[i] = 1;
      lp.sense = sense;
      const IlpOutcome out = solve_linear(lp);
      if (out.status == IlpStatus::Infeasible) {
        result.kind = Step1Result::Kind::Infeasible;
        return result;
      }
      if (out.status == IlpStatus::Unbounded) {
        result.kind = Step1Result::Kind::Unbounded;
        return result;
      }
      // The anchor is the optimum of the first subproblem solved.
      if (!anchor) anchor = *out.x;
      (sense == Sense::Minimize ? range.lower : range.upper) = out.value->as_integer();
    }
    result.ranges.push_back(std::move(range));
  }

  // Boundedness of the linear part: minimize h.x with the quadratic
  // coordinates pinned to the anchor. Bounded here means bounded everywhere.
  LpProblem aux = reduced_lp(sys);
  for (std::size_t j = 0; j < sys.lin.size(); ++j) aux.c[j] = Rational(sys.lin[j]);
  aux.ensure_bound_arrays();
  for (int i = 0; i < k; ++i) {
    aux.lower[i] = Rational((*anchor)[i]);
    aux.upper[i] = Rational((*anchor)[i]);
  }
  const IlpOutcome out = solve_linear(aux);
  if (out.status == IlpStatus::Infeasible) {
    throw std::logic_error("anchored feasibility subproblem lost its anchor");
  }
  if (out.status == IlpStatus::Unbounded) {
    result.kind = Step1Result::Kind::Unbounded;
    return result;
  }
  result.kind = Step1Result::Kind::Feasible;
  result.anchor = std::move(*anchor);
  return result;
}

std::optional<std::vector<VariableRange>> Solver::variable_ranges(const Subproblem& sub) {
  std::vector<VariableRange> ranges;
  if (sub.cached_ranges()) {
    for (const auto& [var, bounds] : *sub.cached_ranges()) {
      ranges.push_back(VariableRange{var, bounds.first, bounds.second});
    }
    return ranges;
  }

  const ReducedSystem sys = sub.reduce();
  for (int i = 0; i < sys.free_nonlinear; ++i) {
    VariableRange range;
    range.var = sys.free_vars[i];
    for (const Sense sense : {Sense::Minimize, Sense::Maximize}) {
      LpProblem lp = reduced_lp(sys);
      lp.c[i] = 1;
      lp.sense = sense;
      const IlpOutcome out = solve_linear(lp);
      if (out.status == IlpStatus::Infeasible) return std::nullopt;
      if (out.status == IlpStatus::Unbounded) {
        throw std::logic_error("screened subproblem has an unbounded variable");
      }
      (sense == Sense::Minimize ? range.lower : range.upper) = out.value->as_integer();
    }
    ranges.push_back(std::move(range));
  }
  return ranges;
}

std::optional<Candidate> Solver::solve_box(const Subproblem& sub, const ReducedSystem& sys,
                                           const GridBox& box,
                                           const AffineUnderestimator& mu) {
  const int boxed = static_cast<int>(box.vars.size());
  if (boxed != sys.free_nonlinear || mu.vars != box.vars) {
    throw std::invalid_argument("solve_box: box does not match the subproblem");
  }
  for (int i = 0; i < boxed; ++i) {
    if (box.vars[i] != sys.free_vars[i]) {
      throw std::invalid_argument("solve_box: box variables out of order");
    }
  }

  LpProblem lp = reduced_lp(sys);
  for (std::size_t j = 0; j < sys.lin.size(); ++j) lp.c[j] = Rational(sys.lin[j]);
  for (int i = 0; i < boxed; ++i) {
    // The grid cell clips the quadratic variables to its integer part; the
    // linear variables stay unrestricted.
    lp.c[i] += mu.coeff[i];
    lp.tighten_lower(i, Rational(box.lo[i].ceil()));
    lp.tighten_upper(i, Rational(box.hi[i].floor()));
  }

  const IlpOutcome out = solve_linear(lp);
  ++stats_.boxes_solved;
  if (out.status == IlpStatus::Infeasible) return std::nullopt;
  if (out.status == IlpStatus::Unbounded) {
    throw std::logic_error("screened grid cell subproblem is unbounded");
  }
  Candidate candidate;
  candidate.x = sub.lift(*out.x);
  candidate.objective = instance_.objective(candidate.x);
  return candidate;
}

Candidate Solver::mesh_step(const Subproblem& sub, const ReducedSystem& sys,
                            const std::vector<VariableRange>& ranges,
                            const BigInt& grid_size) {
  std::optional<Candidate> best;
  for (const GridBox& box : build_boxes(ranges, grid_size)) {
    const AffineUnderestimator mu = build_underestimator(box, sys.quad);
    std::optional<Candidate> candidate = solve_box(sub, sys, box, mu);
    // Strict improvement keeps the first candidate in lexicographic box
    // order among ties.
    if (candidate && (!best || candidate->objective < best->objective)) {
      best = std::move(candidate);
    }
  }
  if (!best) {
    throw std::logic_error("every grid cell of a feasible subproblem was infeasible");
  }
  return *best;
}

SolveReport Solver::main_loop(const Step1Result& step1) {
  if (step1.kind != Step1Result::Kind::Feasible) {
    throw std::invalid_argument("main_loop needs a feasible screening result");
  }

  Subproblem root = Subproblem::root(instance_);
  Subproblem::RangeCache cache;
  for (const VariableRange& r : step1.ranges) cache[r.var] = {r.lower, r.upper};
  root.set_cached_ranges(std::move(cache));

  std::vector<Subproblem> work;
  work.push_back(std::move(root));
  ++stats_.subproblems_created;

  std::optional<Candidate> best;
  auto offer = [&best](Candidate&& candidate) {
    if (!best || candidate.objective < best->objective) best = std::move(candidate);
  };

  while (!work.empty()) {
    const Subproblem sub = std::move(work.back());
    work.pop_back();
    const ReducedSystem sys = sub.reduce();

    if (sub.free_nonlinear_count() == 0) {
      // Purely linear leftover: one exact subsolve decides it.
      LpProblem lp = reduced_lp(sys);
      for (std::size_t j = 0; j < sys.lin.size(); ++j) lp.c[j] = Rational(sys.lin[j]);
      const IlpOutcome out = solve_linear(lp);
      if (out.status == IlpStatus::Infeasible) continue;
      if (out.status == IlpStatus::Unbounded) {
        throw std::logic_error("screened linear subproblem is unbounded");
      }
      Candidate candidate;
      candidate.x = sub.lift(*out.x);
      candidate.objective = instance_.objective(candidate.x);
      offer(std::move(candidate));
      continue;
    }

    const auto ranges = variable_ranges(sub);
    if (!ranges) continue;

    const BigInt grid = compute_grid_size(sub.free_nonlinear_count(), sub.free_var_count(),
                                          delta_, config_.epsilon, mode_);
    if (sub.fixings().empty()) stats_.grid_size_root = grid;

    if (const auto split = decomposition_step(*ranges, grid)) {
      // Pushed in descending value order so the stack pops values ascending.
      for (BigInt v = split->upper;; --v) {
        work.push_back(sub.fix(split->var, v));
        ++stats_.subproblems_created;
        if (v == split->lower) break;
      }
    } else {
      offer(mesh_step(sub, sys, *ranges, grid));
    }
  }

  if (!best) throw std::logic_error("feasible instance produced no candidate");

  SolveReport report;
  report.status = SolveStatus::EpsApprox;
  report.solution = best->x;
  report.objective = Rational(best->objective);
  report.stats = stats_;
  return report;
}

SolveReport Solver::run() {
  stats_ = SolveStats{};

  SolveReport report;
  if (instance_.num_nonlinear == 0) {
    report = solve_without_quadratics();
    const std::uint64_t used =
        mode_ == SolveMode::Tu ? stats_.lp_solves : stats_.ilp_solves;
    if (used > 1) throw std::logic_error("linear-only solve used more than one subsolve");
    return report;
  }

  const Step1Result step1 = step1_probe();
  switch (step1.kind) {
    case Step1Result::Kind::Infeasible:
      report.status = SolveStatus::Infeasible;
      report.stats = stats_;
      return report;
    case Step1Result::Kind::Unbounded:
      report.status = SolveStatus::Unbounded;
      report.stats = stats_;
      return report;
    case Step1Result::Kind::Feasible:
      break;
  }
  report = main_loop(step1);

  // Decomposition accounting: subsolver calls stay within (3 + g)^k.
  const std::uint64_t used = mode_ == SolveMode::Tu ? stats_.lp_solves : stats_.ilp_solves;
  const BigInt bound =
      pow_int(BigInt(3) + stats_.grid_size_root, static_cast<unsigned>(instance_.num_nonlinear));
  if (BigInt(static_cast<unsigned long>(used)) > bound) {
    throw std::logic_error("subsolver call count exceeded the decomposition bound");
  }
  return report;
}

SolveReport solve(const Instance& instance, const SolveConfig& config) {
  return Solver(instance, config).run();
}

}  // namespace ciqp
