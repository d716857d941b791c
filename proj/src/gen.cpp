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

#include "ciqp/gen.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ciqp/errors.hpp"
#include "ciqp/matprops.hpp"

namespace ciqp {

namespace {

void fill_objective(Instance& inst, int nonlinear, long coeff_bound, SplitMix64& rng) {
  inst.num_nonlinear = nonlinear;
  inst.q.clear();
  inst.h.clear();
  for (int i = 0; i < nonlinear; ++i) {
    inst.q.emplace_back(1 + static_cast<long>(rng.below(static_cast<std::uint64_t>(coeff_bound))));
  }
  for (int j = 0; j < inst.num_vars; ++j) {
    inst.h.emplace_back(rng.range(-coeff_bound, coeff_bound));
  }
}

// Appends 0 <= x_j <= cap_j as explicit rows, keeping total unimodularity of
// whatever sits above them.
void append_box_rows(Instance& inst, const std::vector<long>& caps) {
  for (int j = 0; j < inst.num_vars; ++j) {
    IntVector row(inst.num_vars, BigInt(0));
    row[j] = 1;
    inst.W.push_back(std::move(row));
    inst.w.emplace_back(caps[j]);
  }
  for (int j = 0; j < inst.num_vars; ++j) {
    IntVector row(inst.num_vars, BigInt(0));
    row[j] = -1;
    inst.W.push_back(row);
    inst.w.emplace_back(0);
  }
  inst.num_cons = static_cast<int>(inst.W.size());
  inst.oracle_box = std::vector<std::pair<BigInt, BigInt>>();
  for (int j = 0; j < inst.num_vars; ++j) {
    inst.oracle_box->emplace_back(BigInt(0), BigInt(caps[j]));
  }
}

}  // namespace

Instance gen_network(int nodes, int arcs, int nonlinear, long coeff_bound,
                     std::uint64_t seed) {
  if (nodes < 2) throw UsageError("network generator needs at least 2 nodes");
  if (arcs < nodes - 1) throw UsageError("network generator needs arcs >= nodes - 1");
  if (nonlinear < 0 || nonlinear > arcs) throw UsageError("nonlinear count must lie in [0, arcs]");
  if (coeff_bound < 1) throw UsageError("coeff_bound must be at least 1");

  SplitMix64 rng(seed);

  // Random spanning tree first so the digraph is connected, then extra arcs.
  std::vector<std::pair<int, int>> arc_list;
  for (int v = 1; v < nodes; ++v) {
    const int u = static_cast<int>(rng.below(v));
    if (rng.below(2) == 0) {
      arc_list.emplace_back(u, v);
    } else {
      arc_list.emplace_back(v, u);
    }
  }
  while (static_cast<int>(arc_list.size()) < arcs) {
    const int u = static_cast<int>(rng.below(nodes));
    int v = static_cast<int>(rng.below(nodes - 1));
    if (v >= u) ++v;
    arc_list.emplace_back(u, v);
  }

  // Planted integral flow with slack keeps the instance feasible by design.
  std::vector<long> flow(arcs), capacity(arcs);
  for (int a = 0; a < arcs; ++a) {
    flow[a] = static_cast<long>(rng.below(3));
    capacity[a] = flow[a] + static_cast<long>(rng.below(2));
    if (capacity[a] == 0) capacity[a] = 1;
  }
  std::vector<long> balance(nodes, 0);
  for (int a = 0; a < arcs; ++a) {
    balance[arc_list[a].first] += flow[a];
    balance[arc_list[a].second] -= flow[a];
  }

  Instance inst;
  inst.num_vars = arcs;
  inst.name = "network-" + std::to_string(seed);
  // Conservation as two inequality rows per node: the incidence matrix and
  // its negation, both totally unimodular together.
  for (int v = 0; v < nodes; ++v) {
    IntVector out_row(arcs, BigInt(0));
    for (int a = 0; a < arcs; ++a) {
      if (arc_list[a].first == v) out_row[a] += 1;
      if (arc_list[a].second == v) out_row[a] -= 1;
    }
    IntVector neg_row(arcs);
    for (int a = 0; a < arcs; ++a) neg_row[a] = -out_row[a];
    inst.W.push_back(std::move(out_row));
    inst.w.emplace_back(balance[v]);
    inst.W.push_back(std::move(neg_row));
    inst.w.emplace_back(-balance[v]);
  }
  append_box_rows(inst, capacity);
  fill_objective(inst, nonlinear, coeff_bound, rng);
  inst.declared_delta = 1;
  return inst;
}

Instance gen_interval(int rows, int cols, int nonlinear, long coeff_bound,
                      std::uint64_t seed) {
  if (rows < 1) throw UsageError("interval generator needs at least 1 row");
  if (cols < 1) throw UsageError("interval generator needs at least 1 column");
  if (nonlinear < 0 || nonlinear > cols) throw UsageError("nonlinear count must lie in [0, cols]");
  if (coeff_bound < 1) throw UsageError("coeff_bound must be at least 1");

  SplitMix64 rng(seed);

  std::vector<long> planted(cols);
  for (int j = 0; j < cols; ++j) planted[j] = static_cast<long>(rng.below(4));

  Instance inst;
  inst.num_vars = cols;
  inst.name = "interval-" + std::to_string(seed);
  for (int i = 0; i < rows; ++i) {
    const int start = static_cast<int>(rng.below(cols));
    const int len = 1 + static_cast<int>(rng.below(cols - start));
    IntVector row(cols, BigInt(0));
    long planted_sum = 0;
    for (int j = start; j < start + len; ++j) {
      row[j] = 1;
      planted_sum += planted[j];
    }
    inst.W.push_back(std::move(row));
    inst.w.emplace_back(planted_sum + static_cast<long>(rng.below(3)));
  }
  append_box_rows(inst, std::vector<long>(cols, 3));
  fill_objective(inst, nonlinear, coeff_bound, rng);
  inst.declared_delta = 1;
  return inst;
}

Instance gen_general_delta(int num_vars, int num_cons, int nonlinear, long delta_max,
                           long coeff_bound, std::uint64_t seed) {
  if (num_vars < 1 || num_vars > 8) throw UsageError("general generator needs 1..8 variables");
  if (num_cons < 1 || num_cons > 8) throw UsageError("general generator needs 1..8 dense rows");
  if (nonlinear < 0 || nonlinear > num_vars) {
    throw UsageError("nonlinear count must lie in [0, num_vars]");
  }
  if (delta_max < 1) throw UsageError("delta_max must be at least 1");
  if (coeff_bound < 1) throw UsageError("coeff_bound must be at least 1");

  SplitMix64 rng(seed);

  // Box widths shrink with dimension so the oracle volume stays enumerable.
  static constexpr long kWidthByVars[9] = {0, 40, 18, 12, 9, 6, 5, 4, 3};
  const long width = kWidthByVars[num_vars];

  constexpr int kBudget = 1000;
  IntMatrix dense;
  BigInt dense_delta;
  bool accepted = false;
  for (int attempt = 0; attempt < kBudget && !accepted; ++attempt) {
    dense.assign(num_cons, IntVector(num_vars));
    for (int i = 0; i < num_cons; ++i) {
      for (int j = 0; j < num_vars; ++j) dense[i][j] = rng.range(-2, 2);
    }
    // Exhaustive on the dense block; the box rows below cannot raise it
    // beyond max(delta, 1).
    const DeltaCertificate cert =
        max_abs_subdeterminant(dense, std::min(num_cons, num_vars));
    if (cert.delta <= delta_max) {
      dense_delta = cert.delta;
      accepted = true;
    }
  }
  if (!accepted) {
    throw UsageError("resampling budget exhausted without reaching delta_max " +
                     std::to_string(delta_max));
  }

  std::vector<long> caps(num_vars);
  std::vector<long> planted(num_vars);
  for (int j = 0; j < num_vars; ++j) {
    caps[j] = 2 + static_cast<long>(rng.below(width - 1));
    planted[j] = static_cast<long>(rng.below(caps[j] + 1));
  }

  Instance inst;
  inst.num_vars = num_vars;
  inst.name = "general-" + std::to_string(seed);
  for (int i = 0; i < num_cons; ++i) {
    BigInt planted_row = 0;
    for (int j = 0; j < num_vars; ++j) planted_row += dense[i][j] * planted[j];
    inst.W.push_back(dense[i]);
    inst.w.push_back(planted_row + static_cast<long>(rng.below(3)));
  }
  append_box_rows(inst, caps);
  fill_objective(inst, nonlinear, coeff_bound, rng);
  inst.declared_delta = std::max(dense_delta, BigInt(1));
  return inst;
}

}  // namespace ciqp
