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

#ifndef CIQP_MATPROPS_HPP_
#define CIQP_MATPROPS_HPP_

#include <optional>
#include <vector>

#include "ciqp/numeric.hpp"

namespace ciqp {

struct DeltaCertificate {
  BigInt delta = 0;        // largest |det| over the enumerated submatrices
  std::vector<int> rows;   // witness submatrix achieving delta (empty iff delta == 0)
  std::vector<int> cols;
  // True when every square submatrix was enumerated; false when size_cap
  // stopped early, in which case delta is only a lower bound.
  bool exhaustive = true;
};

// Largest absolute subdeterminant of an integer matrix by enumeration of all
// square submatrices up to size_cap x size_cap (default 8), determinants by
// exact fraction-free elimination. The witness is the first submatrix
// attaining the maximum in (size, row-set, column-set) lexicographic order.
DeltaCertificate max_abs_subdeterminant(const IntMatrix& matrix,
                                        std::optional<int> size_cap = std::nullopt);

struct TuVerdict {
  // False means a subdeterminant outside {-1, 0, 1} was found, which is
  // definitive regardless of any cap. True is a proof only when exhaustive.
  bool is_tu = false;
  bool exhaustive = true;
};

// Total unimodularity by subdeterminant enumeration with early exit on the
// first violation, capped like max_abs_subdeterminant.
TuVerdict is_totally_unimodular(const IntMatrix& matrix,
                                std::optional<int> size_cap = std::nullopt);

// |det| of a square integer matrix via Bareiss fraction-free elimination.
BigInt abs_determinant(IntMatrix matrix);

}  // namespace ciqp

#endif  // CIQP_MATPROPS_HPP_
