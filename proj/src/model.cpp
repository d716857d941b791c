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

#include "ciqp/model.hpp"

#include <stdexcept>
#include <string>

namespace ciqp {

BigInt Instance::objective(std::span<const BigInt> x) const {
  if (static_cast<int>(x.size()) != num_vars) {
    throw std::invalid_argument("objective: point has wrong dimension");
  }
  BigInt value = 0;
  for (int i = 0; i < num_nonlinear; ++i) value -= q[i] * x[i] * x[i];
  for (int j = 0; j < num_vars; ++j) value += h[j] * x[j];
  return value;
}

bool Instance::is_feasible(std::span<const BigInt> x) const {
  if (static_cast<int>(x.size()) != num_vars) {
    throw std::invalid_argument("is_feasible: point has wrong dimension");
  }
  for (int i = 0; i < num_cons; ++i) {
    BigInt lhs = 0;
    for (int j = 0; j < num_vars; ++j) lhs += W[i][j] * x[j];
    if (lhs > w[i]) return false;
  }
  return true;
}

std::vector<std::string> validate(const Instance& inst) {
  std::vector<std::string> issues;
  auto complain = [&issues](const std::string& msg) { issues.push_back(msg); };

  if (inst.num_vars < 0) complain("num_vars must be nonnegative");
  if (inst.num_cons < 0) complain("num_cons must be nonnegative");
  if (inst.num_nonlinear < 0) complain("k must be nonnegative");
  if (inst.num_nonlinear > inst.num_vars) complain("k must not exceed num_vars");

  if (static_cast<int>(inst.W.size()) != inst.num_cons) {
    complain("W must have num_cons rows");
  } else {
    for (int i = 0; i < inst.num_cons; ++i) {
      if (static_cast<int>(inst.W[i].size()) != inst.num_vars) {
        complain("W row " + std::to_string(i) + " must have num_vars entries");
        break;
      }
    }
  }
  if (static_cast<int>(inst.w.size()) != inst.num_cons) complain("w must have num_cons entries");
  if (static_cast<int>(inst.h.size()) != inst.num_vars) complain("h must have num_vars entries");
  if (static_cast<int>(inst.q.size()) != inst.num_nonlinear) {
    complain("q must have k entries");
  } else {
    for (int i = 0; i < inst.num_nonlinear; ++i) {
      if (inst.q[i] <= 0) {
        complain("q[" + std::to_string(i) + "] must be strictly positive");
      }
    }
  }
  if (inst.declared_delta && *inst.declared_delta < 1) {
    complain("declared delta must be at least 1");
  }
  if (inst.oracle_box) {
    if (static_cast<int>(inst.oracle_box->size()) != inst.num_vars) {
      complain("oracle_box must have one [lo, hi] pair per variable");
    } else {
      for (int j = 0; j < inst.num_vars; ++j) {
        if ((*inst.oracle_box)[j].first > (*inst.oracle_box)[j].second) {
          complain("oracle_box[" + std::to_string(j) + "] has lo > hi");
        }
      }
    }
  }
  return issues;
}

Subproblem Subproblem::root(const Instance& base) { return Subproblem(base); }

Subproblem Subproblem::fix(int var, const BigInt& value) const {
  if (var < 0 || var >= base_->num_nonlinear) {
    throw std::invalid_argument("fix: variable is not quadratic");
  }
  if (fixings_.contains(var)) {
    throw std::invalid_argument("fix: variable already fixed");
  }
  Subproblem child(*base_);
  child.fixings_ = fixings_;
  child.fixings_.emplace(var, value);
  child.objective_offset_ =
      objective_offset_ - base_->q[var] * value * value + base_->h[var] * value;
  return child;
}

int Subproblem::free_var_count() const {
  return base_->num_vars - static_cast<int>(fixings_.size());
}

int Subproblem::free_nonlinear_count() const {
  return base_->num_nonlinear - static_cast<int>(fixings_.size());
}

std::vector<int> Subproblem::free_nonlinear_vars() const {
  std::vector<int> out;
  for (int i = 0; i < base_->num_nonlinear; ++i) {
    if (!fixings_.contains(i)) out.push_back(i);
  }
  return out;
}

ReducedSystem Subproblem::reduce() const {
  ReducedSystem sys;
  for (int j = 0; j < base_->num_vars; ++j) {
    if (!fixings_.contains(j)) sys.free_vars.push_back(j);
  }
  sys.free_nonlinear = free_nonlinear_count();

  sys.rhs = base_->w;
  for (const auto& [var, value] : fixings_) {
    for (int i = 0; i < base_->num_cons; ++i) sys.rhs[i] -= base_->W[i][var] * value;
  }

  sys.rows.resize(base_->num_cons);
  for (int i = 0; i < base_->num_cons; ++i) {
    sys.rows[i].reserve(sys.free_vars.size());
    for (int j : sys.free_vars) sys.rows[i].push_back(base_->W[i][j]);
  }
  for (int j : sys.free_vars) sys.lin.push_back(base_->h[j]);
  for (int i = 0; i < sys.free_nonlinear; ++i) sys.quad.push_back(base_->q[sys.free_vars[i]]);
  return sys;
}

IntVector Subproblem::lift(std::span<const BigInt> reduced_point) const {
  if (static_cast<int>(reduced_point.size()) != free_var_count()) {
    throw std::invalid_argument("lift: point has wrong dimension");
  }
  IntVector out(base_->num_vars);
  std::size_t next = 0;
  for (int j = 0; j < base_->num_vars; ++j) {
    auto it = fixings_.find(j);
    out[j] = it != fixings_.end() ? it->second : reduced_point[next++];
  }
  return out;
}

}  // namespace ciqp
