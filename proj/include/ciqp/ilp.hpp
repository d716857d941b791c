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

#ifndef CIQP_ILP_HPP_
#define CIQP_ILP_HPP_

#include <cstdint>
#include <optional>

#include "ciqp/lp.hpp"
#include "ciqp/numeric.hpp"

namespace ciqp {

enum class IlpStatus { Optimal, Infeasible, Unbounded };

struct IlpOutcome {
  IlpStatus status = IlpStatus::Infeasible;
  std::optional<IntVector> x;       // present iff status == Optimal
  std::optional<Rational> value;    // exact objective at x
};

struct IlpOptions {
  // When the root relaxation is unbounded, integer feasibility is probed
  // inside boxes [-B, B]^n with B doubling from probe_box_start to
  // probe_box_cap; finding a point proves the integer program unbounded,
  // exhausting the cap raises UndecidedError.
  BigInt probe_box_start = 16;
  BigInt probe_box_cap = BigInt(1) << 12;
  // Branch-and-bound node budget. Plain LP-based branching cannot decide
  // regions that are unbounded yet contain no integer point, so running out
  // of nodes raises UndecidedError instead of looping forever.
  std::uint64_t node_cap = 1'000'000;
};

// Depth-first branch and bound on the exact LP relaxation: branches on the
// smallest-index fractional variable, explores the floor side first, prunes
// on relaxation value >= incumbent so the first optimum found is kept among
// ties. Fully deterministic.
IlpOutcome solve_ilp(const LpProblem& problem, const IlpOptions& options = {});

}  // namespace ciqp

#endif  // CIQP_ILP_HPP_
