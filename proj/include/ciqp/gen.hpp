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

#ifndef CIQP_GEN_HPP_
#define CIQP_GEN_HPP_

#include <cstdint>

#include "ciqp/model.hpp"

namespace ciqp {

// SplitMix64: a tiny, well-known 64-bit mixing generator. Used instead of
// <random> distributions because those are not portable across standard
// library implementations, and generated instances must be bit-identical
// for a given seed everywhere.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Value in [0, bound); plain modulo, whose bias is irrelevant here and
  // keeps the stream easy to reproduce.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

  // Inclusive range.
  long range(long lo, long hi) {
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

 private:
  std::uint64_t state_;
};

// Directed-network instance: flow conservation rows for a random connected
// digraph (both inequality directions), per-arc capacity and nonnegativity
// rows, and right-hand sides routed through a planted integral flow so the
// instance is always feasible. The constraint matrix is totally unimodular;
// declared_delta is 1 and oracle_box is [0, capacity] per arc.
Instance gen_network(int nodes, int arcs, int nonlinear, long coeff_bound,
                     std::uint64_t seed);

// Interval-matrix instance: rows with consecutive ones over the columns plus
// 0 <= x <= 3 bound rows, right-hand sides from a planted point. Totally
// unimodular; declared_delta is 1 and oracle_box is [0, 3] per column.
Instance gen_interval(int rows, int cols, int nonlinear, long coeff_bound,
                      std::uint64_t seed);

// Small dense instance with entries in [-2, 2], resampled until the largest
// absolute subdeterminant of the dense block is at most delta_max (checked
// exhaustively), plus integral box rows sized so the oracle volume stays
// small. declared_delta carries the exact certificate value. Throws
// UsageError when the resampling budget runs out.
Instance gen_general_delta(int num_vars, int num_cons, int nonlinear, long delta_max,
                           long coeff_bound, std::uint64_t seed);

}  // namespace ciqp

#endif  // CIQP_GEN_HPP_
