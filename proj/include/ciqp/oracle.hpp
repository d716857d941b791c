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

#ifndef CIQP_ORACLE_HPP_
#define CIQP_ORACLE_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ciqp/model.hpp"
#include "ciqp/numeric.hpp"

namespace ciqp {

using OracleBox = std::vector<std::pair<BigInt, BigInt>>;

// Ground truth from exhaustive enumeration of the feasible points inside a
// box: exact minimum and maximum objective values with their first
// (lexicographically smallest) attaining points.
struct OracleResult {
  BigInt min_value, max_value;
  IntVector argmin, argmax;
  std::uint64_t feasible_count = 0;
};

struct EnumerateOptions {
  std::uint64_t volume_cap = 10'000'000;
};

// Scans every integer point of the box in lexicographic order; nullopt when
// none is feasible. Throws UsageError (stating the required volume) when the
// box volume exceeds the cap. Trustworthy only when the box covers the
// feasible set the caller cares about.
std::optional<OracleResult> enumerate_box(const Instance& instance, const OracleBox& box,
                                          const EnumerateOptions& options = {});

enum class EpsVerdictKind {
  Pass,                 // candidate within the approximation target
  Fail,                 // ratio exceeds the target
  OptimalRequiredFail,  // min == max over the box, so only exact optima pass
  InfeasibleCandidate,  // candidate violates the constraints
};

struct EpsVerdict {
  EpsVerdictKind kind = EpsVerdictKind::Fail;
  // (f(candidate) - min) / (max - min); zero when min == max.
  Rational ratio;
  BigInt candidate_value;
  std::optional<OracleResult> oracle;
};

// Checks the defining inequality of an eps-approximation against enumerated
// ground truth: f(candidate) - min <= epsilon * (max - min), with exact
// optimality required when min == max.
EpsVerdict verify_eps(const Instance& instance, std::span<const BigInt> candidate,
                      const Rational& epsilon, const OracleBox& box,
                      const EnumerateOptions& options = {});

}  // namespace ciqp

#endif  // CIQP_ORACLE_HPP_
