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

#include "ciqp/oracle.hpp"

#include <stdexcept>
#include <string>

#include "ciqp/errors.hpp"

namespace ciqp {

std::optional<OracleResult> enumerate_box(const Instance& instance, const OracleBox& box,
                                          const EnumerateOptions& options) {
  const int n = instance.num_vars;
  const int m = instance.num_cons;
  if (static_cast<int>(box.size()) != n) {
    throw std::invalid_argument("enumerate_box: box has wrong dimension");
  }
  BigInt volume = 1;
  for (const auto& [lo, hi] : box) {
    if (lo > hi) throw std::invalid_argument("enumerate_box: box has lo > hi");
    volume *= hi - lo + 1;
  }
  if (volume > BigInt(static_cast<unsigned long>(options.volume_cap))) {
    throw UsageError("enumeration requires volume " + volume.get_str() +
                     " which exceeds the cap " + std::to_string(options.volume_cap));
  }

  IntVector x;
  x.reserve(n);
  for (const auto& [lo, hi] : box) x.push_back(lo);

  // Running constraint left-hand sides and objective, updated incrementally
  // as the odometer steps so each point costs O(m) instead of O(m*n).
  IntVector row_vals(m, BigInt(0));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) row_vals[i] += instance.W[i][j] * x[j];
  }
  BigInt f = instance.objective(x);

  OracleResult result;
  for (;;) {
    bool feasible = true;
    for (int i = 0; i < m; ++i) {
      if (row_vals[i] > instance.w[i]) {
        feasible = false;
        break;
      }
    }
    if (feasible) {
      // Lexicographic scan plus strict improvement keeps the smallest
      // attaining point for both extremes.
      if (result.feasible_count == 0 || f < result.min_value) {
        result.min_value = f;
        result.argmin = x;
      }
      if (result.feasible_count == 0 || f > result.max_value) {
        result.max_value = f;
        result.argmax = x;
      }
      ++result.feasible_count;
    }

    int pos = n - 1;
    for (; pos >= 0; --pos) {
      if (x[pos] < box[pos].second) break;
      // Reset this coordinate to its lower bound.
      const BigInt delta = box[pos].first - x[pos];
      if (pos < instance.num_nonlinear) {
        f -= instance.q[pos] * (box[pos].first * box[pos].first - x[pos] * x[pos]);
      }
      f += instance.h[pos] * delta;
      for (int i = 0; i < m; ++i) row_vals[i] += instance.W[i][pos] * delta;
      x[pos] = box[pos].first;
    }
    if (pos < 0) break;
    if (pos < instance.num_nonlinear) {
      f -= instance.q[pos] * (2 * x[pos] + 1);
    }
    f += instance.h[pos];
    for (int i = 0; i < m; ++i) row_vals[i] += instance.W[i][pos];
    ++x[pos];
  }

  if (result.feasible_count == 0) return std::nullopt;
  return result;
}

EpsVerdict verify_eps(const Instance& instance, std::span<const BigInt> candidate,
                      const Rational& epsilon, const OracleBox& box,
                      const EnumerateOptions& options) {
  if (epsilon.sign() <= 0 || epsilon > Rational(1)) {
    throw UsageError("epsilon must lie in (0, 1]");
  }

  EpsVerdict verdict;
  verdict.candidate_value = instance.objective(candidate);
  if (!instance.is_feasible(candidate)) {
    verdict.kind = EpsVerdictKind::InfeasibleCandidate;
    return verdict;
  }

  auto oracle = enumerate_box(instance, box, options);
  if (!oracle) {
    throw UsageError("oracle box misses every feasible point, including the candidate");
  }
  verdict.oracle = oracle;

  if (oracle->min_value == oracle->max_value) {
    // Degenerate flat objective: only exact optima qualify.
    verdict.ratio = 0;
    verdict.kind = verdict.candidate_value == oracle->min_value
                       ? EpsVerdictKind::Pass
                       : EpsVerdictKind::OptimalRequiredFail;
    return verdict;
  }

  verdict.ratio = Rational(BigInt(verdict.candidate_value - oracle->min_value)) /
                  Rational(BigInt(oracle->max_value - oracle->min_value));
  verdict.kind = verdict.ratio <= epsilon ? EpsVerdictKind::Pass : EpsVerdictKind::Fail;
  return verdict;
}

}  // namespace ciqp
