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

#include <doctest.h>

#include "ciqp/errors.hpp"
#include "ciqp/ilp.hpp"

using ciqp::BigInt;
using ciqp::IlpOptions;
using ciqp::IlpOutcome;
using ciqp::IlpStatus;
using ciqp::IntVector;
using ciqp::LpProblem;
using ciqp::Rational;
using ciqp::Sense;

namespace {

Rational frac(long n, long d) { return Rational(BigInt(n), BigInt(d)); }

// min -3x - 2y  s.t.  x + y <= 3, 2x + y <= 9/2, x, y >= 0. The relaxation
// optimum (3/2, 3/2) is fractional, so branching is exercised; the integer
// optimum is (1, 2) with value -7.
LpProblem branching_problem() {
  LpProblem lp;
  lp.A = {{Rational(1), Rational(1)}, {Rational(2), Rational(1)}};
  lp.b = {Rational(3), frac(9, 2)};
  lp.c = {Rational(-3), Rational(-2)};
  lp.ensure_bound_arrays();
  lp.lower[0] = Rational(0);
  lp.lower[1] = Rational(0);
  return lp;
}

}  // namespace

TEST_CASE("branch and bound finds the exact integer optimum") {
  const IlpOutcome out = ciqp::solve_ilp(branching_problem());
  REQUIRE(out.status == IlpStatus::Optimal);
  CHECK(*out.x == IntVector{BigInt(1), BigInt(2)});
  CHECK(*out.value == Rational(-7));
}

TEST_CASE("maximization is solved through negation") {
  LpProblem lp = branching_problem();
  lp.c = {Rational(3), Rational(2)};
  lp.sense = Sense::Maximize;
  const IlpOutcome out = ciqp::solve_ilp(lp);
  REQUIRE(out.status == IlpStatus::Optimal);
  CHECK(*out.x == IntVector{BigInt(1), BigInt(2)});
  CHECK(*out.value == Rational(7));
}

TEST_CASE("negative two sided ranges work") {
  LpProblem lp;
  lp.c = {Rational(1)};
  lp.ensure_bound_arrays();
  lp.lower[0] = Rational(-5);
  lp.upper[0] = Rational(5);
  const IlpOutcome out = ciqp::solve_ilp(lp);
  REQUIRE(out.status == IlpStatus::Optimal);
  CHECK(*out.x == IntVector{BigInt(-5)});
  CHECK(*out.value == Rational(-5));
}

TEST_CASE("fractionally feasible but integrally empty regions are infeasible") {
  // 2x = 1 has the fractional solution 1/2 and no integer solution.
  LpProblem lp;
  lp.A = {{Rational(2)}, {Rational(-2)}};
  lp.b = {Rational(1), Rational(-1)};
  lp.c = {Rational(0)};
  const IlpOutcome out = ciqp::solve_ilp(lp);
  CHECK(out.status == IlpStatus::Infeasible);
}

TEST_CASE("lp infeasibility passes through") {
  LpProblem lp;
  lp.A = {{Rational(1)}};
  lp.b = {Rational(-1)};
  lp.c = {Rational(1)};
  lp.ensure_bound_arrays();
  lp.lower[0] = Rational(0);
  CHECK(ciqp::solve_ilp(lp).status == IlpStatus::Infeasible);
}

TEST_CASE("unbounded relaxation with an integer witness is unbounded") {
  LpProblem lp;
  lp.c = {Rational(-1)};
  lp.ensure_bound_arrays();
  lp.lower[0] = Rational(0);
  CHECK(ciqp::solve_ilp(lp).status == IlpStatus::Unbounded);
}

TEST_CASE("unbounded relaxation without integer points stays undecided") {
  // 2x - 2y = 1: fractionally unbounded under min -x, integrally empty. The
  // probe must give up at its cap instead of looping.
  LpProblem lp;
  lp.A = {{Rational(2), Rational(-2)}, {Rational(-2), Rational(2)}};
  lp.b = {Rational(1), Rational(-1)};
  lp.c = {Rational(-1), Rational(0)};
  IlpOptions opts;
  opts.probe_box_start = 1;
  opts.probe_box_cap = 4;
  CHECK_THROWS_AS(ciqp::solve_ilp(lp, opts), ciqp::UndecidedError);
}

TEST_CASE("the node budget turns runaway searches into errors") {
  IlpOptions opts;
  opts.node_cap = 1;
  CHECK_THROWS_AS(ciqp::solve_ilp(branching_problem(), opts), ciqp::UndecidedError);
}

TEST_CASE("already integral relaxations return immediately") {
  LpProblem lp;
  lp.A = {{Rational(1), Rational(1)}};
  lp.b = {Rational(4)};
  lp.c = {Rational(-1), Rational(-2)};
  lp.ensure_bound_arrays();
  lp.lower[0] = Rational(0);
  lp.lower[1] = Rational(0);
  const IlpOutcome out = ciqp::solve_ilp(lp);
  REQUIRE(out.status == IlpStatus::Optimal);
  CHECK(*out.x == IntVector{BigInt(0), BigInt(4)});
  CHECK(*out.value == Rational(-8));
}
