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

#include "ciqp/ilp.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ciqp/errors.hpp"

namespace ciqp {

namespace {

struct BoundSet {
  std::vector<std::optional<Rational>> lower, upper;
};

int first_fractional(const RatVector& x) {
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (!x[j].is_integer()) return static_cast<int>(j);
  }
  return -1;
}

IntVector to_integers(const RatVector& x) {
  IntVector out;
  out.reserve(x.size());
  for (const Rational& v : x) out.push_back(v.as_integer());
  return out;
}

// Branch and bound over a problem whose root relaxation is known bounded.
IlpOutcome branch_and_bound(const LpProblem& base, const LpOutcome& root,
                            const IlpOptions& options) {
  std::optional<IntVector> best_x;
  std::optional<Rational> best_value;  // min orientation
  std::uint64_t nodes = 1;             // the root relaxation is solved already

  std::vector<BoundSet> todo;
  auto handle = [&](const LpOutcome& outcome, const BoundSet& bounds) {
    if (outcome.status == LpStatus::Infeasible) return;
    if (outcome.status == LpStatus::Unbounded) {
      // Children only tighten bounds, so they inherit the root's boundedness.
      throw std::logic_error("bounded relaxation turned unbounded under branching");
    }
    const LpSolution& sol = *outcome.solution;
    if (best_value && sol.value >= *best_value) return;
    const int frac = first_fractional(sol.x);
    if (frac < 0) {
      best_x = to_integers(sol.x);
      best_value = sol.value;
      return;
    }
    const BigInt down = sol.x[frac].floor();
    // Push the ceiling side first so the floor side is explored first.
    BoundSet up = bounds;
    up.lower.resize(base.c.size());
    if (!up.lower[frac] || *up.lower[frac] < Rational(BigInt(down + 1))) up.lower[frac] = Rational(BigInt(down + 1));
    todo.push_back(std::move(up));
    BoundSet down_side = bounds;
    down_side.upper.resize(base.c.size());
    if (!down_side.upper[frac] || *down_side.upper[frac] > Rational(down)) down_side.upper[frac] = Rational(down);
    todo.push_back(std::move(down_side));
  };

  handle(root, BoundSet{base.lower, base.upper});

  while (!todo.empty()) {
    BoundSet bounds = std::move(todo.back());
    todo.pop_back();
    if (++nodes > options.node_cap) {
      throw UndecidedError("integer search exceeded the node budget of " +
                           std::to_string(options.node_cap));
    }
    LpProblem node = base;
    node.lower = bounds.lower;
    node.upper = bounds.upper;
    handle(solve_lp(node), bounds);
  }

  if (!best_x) return IlpOutcome{IlpStatus::Infeasible, std::nullopt, std::nullopt};
  return IlpOutcome{IlpStatus::Optimal, std::move(best_x), std::move(best_value)};
}

// Is there any integer point in the region, restricted to [-box, box]^n?
bool integer_point_in_box(const LpProblem& region, const BigInt& box,
                          const IlpOptions& options) {
  LpProblem probe = region;
  probe.sense = Sense::Minimize;
  probe.c.assign(probe.c.size(), Rational(0));
  probe.ensure_bound_arrays();
  for (int j = 0; j < probe.num_vars(); ++j) {
    probe.tighten_lower(j, Rational(BigInt(-box)));
    probe.tighten_upper(j, Rational(box));
  }
  const LpOutcome root = solve_lp(probe);
  if (root.status == LpStatus::Infeasible) return false;
  if (root.status == LpStatus::Unbounded) {
    throw std::logic_error("boxed probe relaxation cannot be unbounded");
  }
  return branch_and_bound(probe, root, options).status == IlpStatus::Optimal;
}

}  // namespace

IlpOutcome solve_ilp(const LpProblem& problem, const IlpOptions& options) {
  // Min orientation simplifies pruning; undone on the way out.
  LpProblem oriented = problem;
  if (oriented.sense == Sense::Maximize) {
    oriented.sense = Sense::Minimize;
    for (Rational& cj : oriented.c) cj = -cj;
  }

  const LpOutcome root = solve_lp(oriented);
  if (root.status == LpStatus::Infeasible) {
    return IlpOutcome{IlpStatus::Infeasible, std::nullopt, std::nullopt};
  }
  if (root.status == LpStatus::Unbounded) {
    // An unbounded relaxation plus any integer point proves the integer
    // program unbounded (the integral recession direction argument needs a
    // starting point; the probe hunts for one in growing boxes).
    for (BigInt box = options.probe_box_start; box <= options.probe_box_cap; box *= 2) {
      if (integer_point_in_box(oriented, box, options)) {
        return IlpOutcome{IlpStatus::Unbounded, std::nullopt, std::nullopt};
      }
    }
    throw UndecidedError(
        "relaxation is unbounded and no integer point was found inside the probe "
        "box cap " + options.probe_box_cap.get_str());
  }

  IlpOutcome out = branch_and_bound(oriented, root, options);
  if (out.status == IlpStatus::Optimal && problem.sense == Sense::Maximize) {
    out.value = -*out.value;
  }
  return out;
}

}  // namespace ciqp
