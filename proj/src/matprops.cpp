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

#include "ciqp/matprops.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <utility>

namespace ciqp {

namespace {

constexpr int kDefaultSizeCap = 8;

// First lexicographic r-combination of {0..limit-1}; returns false when done.
bool next_combination(std::vector<int>& comb, int limit) {
  const int r = static_cast<int>(comb.size());
  int i = r - 1;
  while (i >= 0 && comb[i] == limit - r + i) --i;
  if (i < 0) return false;
  ++comb[i];
  for (int j = i + 1; j < r; ++j) comb[j] = comb[j - 1] + 1;
  return true;
}

std::vector<int> initial_combination(int r) {
  std::vector<int> comb(r);
  for (int i = 0; i < r; ++i) comb[i] = i;
  return comb;
}

// Visits every square submatrix up to the cap in (size, rows, cols)
// lexicographic order until the visitor returns false.
void for_each_submatrix(
    const IntMatrix& matrix, int cap,
    const std::function<bool(const std::vector<int>&, const std::vector<int>&)>& visit) {
  const int m = static_cast<int>(matrix.size());
  const int n = m > 0 ? static_cast<int>(matrix[0].size()) : 0;
  const int max_size = std::min({m, n, cap});
  for (int r = 1; r <= max_size; ++r) {
    std::vector<int> rows = initial_combination(r);
    do {
      std::vector<int> cols = initial_combination(r);
      do {
        if (!visit(rows, cols)) return;
      } while (next_combination(cols, n));
    } while (next_combination(rows, m));
  }
}

BigInt submatrix_abs_det(const IntMatrix& matrix, const std::vector<int>& rows,
                         const std::vector<int>& cols) {
  const int r = static_cast<int>(rows.size());
  IntMatrix sub(r, IntVector(r));
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) sub[i][j] = matrix[rows[i]][cols[j]];
  }
  return abs_determinant(std::move(sub));
}

int checked_cap(std::optional<int> size_cap) {
  const int cap = size_cap.value_or(kDefaultSizeCap);
  if (cap < 1) throw std::invalid_argument("size_cap must be at least 1");
  return cap;
}

}  // namespace

BigInt abs_determinant(IntMatrix matrix) {
  const int n = static_cast<int>(matrix.size());
  for (const auto& row : matrix) {
    if (static_cast<int>(row.size()) != n) {
      throw std::invalid_argument("abs_determinant needs a square matrix");
    }
  }
  if (n == 0) return 1;  // determinant of the empty matrix

  // Bareiss fraction-free elimination: every division below is exact.
  BigInt prev = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (matrix[k][k] == 0) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i) {
        if (matrix[i][k] != 0) {
          swap_row = i;
          break;
        }
      }
      if (swap_row < 0) return 0;
      std::swap(matrix[k], matrix[swap_row]);  // sign flip, irrelevant for |det|
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        BigInt numerator = matrix[i][j] * matrix[k][k] - matrix[i][k] * matrix[k][j];
        mpz_divexact(matrix[i][j].get_mpz_t(), numerator.get_mpz_t(), prev.get_mpz_t());
      }
      matrix[i][k] = 0;
    }
    prev = matrix[k][k];
  }
  return ::abs(matrix[n - 1][n - 1]);
}

DeltaCertificate max_abs_subdeterminant(const IntMatrix& matrix,
                                        std::optional<int> size_cap) {
  const int cap = checked_cap(size_cap);
  const int m = static_cast<int>(matrix.size());
  const int n = m > 0 ? static_cast<int>(matrix[0].size()) : 0;
  for (const auto& row : matrix) {
    if (static_cast<int>(row.size()) != n) {
      throw std::invalid_argument("max_abs_subdeterminant: ragged matrix");
    }
  }

  DeltaCertificate cert;
  cert.exhaustive = std::min(m, n) <= cap;
  // Strict improvement keeps the first witness in enumeration order.
  for_each_submatrix(matrix, cap,
                     [&](const std::vector<int>& rows, const std::vector<int>& cols) {
                       BigInt d = submatrix_abs_det(matrix, rows, cols);
                       if (d > cert.delta) {
                         cert.delta = d;
                         cert.rows = rows;
                         cert.cols = cols;
                       }
                       return true;
                     });
  return cert;
}

TuVerdict is_totally_unimodular(const IntMatrix& matrix, std::optional<int> size_cap) {
  const int cap = checked_cap(size_cap);
  const int m = static_cast<int>(matrix.size());
  const int n = m > 0 ? static_cast<int>(matrix[0].size()) : 0;

  TuVerdict verdict;
  verdict.is_tu = true;
  verdict.exhaustive = std::min(m, n) <= cap;
  for_each_submatrix(matrix, cap,
                     [&](const std::vector<int>& rows, const std::vector<int>& cols) {
                       if (submatrix_abs_det(matrix, rows, cols) > 1) {
                         verdict.is_tu = false;  // a violation is definitive
                         return false;
                       }
                       return true;
                     });
  return verdict;
}

}  // namespace ciqp
