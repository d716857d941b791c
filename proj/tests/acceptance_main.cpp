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

// Acceptance checks for the solver stack. Every check is exact: all
// quantities are integers or rationals, so each criterion is a strict
// equality or inequality with no floating point tolerance anywhere. One
// PASS/FAIL line is printed per criterion; the process exits nonzero when
// any criterion fails.

#include <sys/wait.h>

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ciqp/errors.hpp"
#include "ciqp/gen.hpp"
#include "ciqp/ilp.hpp"
#include "ciqp/io.hpp"
#include "ciqp/lp.hpp"
#include "ciqp/model.hpp"
#include "ciqp/numeric.hpp"
#include "ciqp/oracle.hpp"
#include "ciqp/solver.hpp"

namespace {

using ciqp::BigInt;
using ciqp::Instance;
using ciqp::IntVector;
using ciqp::Rational;
using ciqp::SolveMode;

Rational frac(long n, long d) { return Rational(BigInt(n), BigInt(d)); }

struct Criterion {
  std::string label;
  bool pass = false;
  std::string detail;
};

// ---------------------------------------------------------------------------
// Criteria 1 and 2: the eps-guarantee suite and its solve-count budgets.
// 200 seeded instances, each solved at eps in {1, 1/2, 1/10} in general mode
// and additionally in tu mode when the declared subdeterminant bound is 1.
// Every solve must end eps_approx, pass the enumeration verifier, and stay
// within (3 + g)^k subsolver calls for the root grid size g.
// ---------------------------------------------------------------------------

std::vector<Instance> build_suite() {
  std::vector<Instance> suite;
  for (int i = 0; i < 80; ++i) {
    const int nodes = 2 + (i % 2);
    const int arcs = nodes + (i % 3);
    const int k = std::min(1 + (i % 3), arcs);
    suite.push_back(ciqp::gen_network(nodes, arcs, k, 2 + (i % 4), 1000 + i));
  }
  for (int i = 0; i < 60; ++i) {
    const int rows = 1 + (i % 3);
    const int cols = 2 + (i % 5);
    const int k = std::min(1 + (i % 3), cols);
    suite.push_back(ciqp::gen_interval(rows, cols, k, 2 + (i % 4), 2000 + i));
  }
  for (int i = 0; i < 60; ++i) {
    const int n = 1 + (i % 3);
    const int m = 1 + (i % 2);
    const int k = std::min(1 + (i % 3), n);
    suite.push_back(ciqp::gen_general_delta(n, m, k, 2 + (i % 3), 2 + (i % 4), 3000 + i));
  }
  return suite;
}

void run_suite(Criterion& c1, Criterion& c2) {
  c1.label = "eps guarantee on the 200-instance suite";
  c2.label = "subsolver budget (3+g)^k on every suite run";

  const std::vector<Rational> epsilons = {Rational(1), frac(1, 2), frac(1, 10)};
  std::uint64_t runs = 0, bound_checks = 0, expected = 0;
  std::string first_c1, first_c2;

  const std::vector<Instance> suite = build_suite();
  if (suite.size() != 200) {
    c1.detail = c2.detail = "suite size is not 200";
    return;
  }

  for (const Instance& ins : suite) {
    const BigInt declared = *ins.declared_delta;
    std::vector<SolveMode> modes = {SolveMode::General};
    if (declared == 1) modes.push_back(SolveMode::Tu);
    expected += epsilons.size() * modes.size();

    for (const Rational& eps : epsilons) {
      for (const SolveMode mode : modes) {
        ciqp::SolveConfig config;
        config.epsilon = eps;
        config.mode = mode;
        config.delta_policy = ciqp::DeltaPolicy::UseDeclared;

        ciqp::SolveReport report;
        try {
          report = ciqp::solve(ins, config);
        } catch (const std::exception& e) {
          if (first_c1.empty()) {
            first_c1 = *ins.name + ": exception: " + e.what();
          }
          continue;
        }
        ++runs;

        if (report.status != ciqp::SolveStatus::EpsApprox || !report.solution) {
          if (first_c1.empty()) first_c1 = *ins.name + ": no eps_approx outcome";
          continue;
        }
        const auto verdict =
            ciqp::verify_eps(ins, *report.solution, eps, *ins.oracle_box);
        if (verdict.kind != ciqp::EpsVerdictKind::Pass) {
          if (first_c1.empty()) {
            first_c1 = *ins.name + ": verifier ratio " + verdict.ratio.str();
          }
          continue;
        }

        const BigInt grid = ciqp::compute_grid_size(
            ins.num_nonlinear, ins.num_vars, mode == SolveMode::Tu ? BigInt(1) : declared,
            eps, mode);
        const BigInt budget =
            ciqp::pow_int(BigInt(3) + grid, static_cast<unsigned>(ins.num_nonlinear));
        const std::uint64_t used = mode == SolveMode::Tu ? report.stats.lp_solves
                                                         : report.stats.ilp_solves;
        if (BigInt(static_cast<unsigned long>(used)) > budget) {
          if (first_c2.empty()) {
            first_c2 = *ins.name + ": " + std::to_string(used) + " solves over budget";
          }
        } else {
          ++bound_checks;
        }
      }
    }
  }

  c1.pass = first_c1.empty() && runs == expected;
  c1.detail = std::to_string(runs) + "/" + std::to_string(expected) +
              " solves verified" + (first_c1.empty() ? "" : "; first failure: " + first_c1);
  c2.pass = first_c2.empty() && bound_checks == expected;
  c2.detail = std::to_string(bound_checks) + "/" + std::to_string(expected) +
              " budgets honored" + (first_c2.empty() ? "" : "; first failure: " + first_c2);
}

// ---------------------------------------------------------------------------
// Criterion 3: the secant underestimator sandwich, exactly, on 1000 random
// (box, coefficients, interior point) triples, plus equality at every vertex.
// ---------------------------------------------------------------------------

Criterion sandwich_criterion() {
  Criterion c;
  c.label = "underestimator sandwich on 1000 random triples";
  ciqp::SplitMix64 rng(97);
  const Rational quarter = frac(1, 4);
  int violations = 0;

  for (int trial = 0; trial < 1000; ++trial) {
    const int k = 1 + trial % 3;
    ciqp::GridBox box;
    IntVector q;
    for (int i = 0; i < k; ++i) {
      box.vars.push_back(i);
      const Rational lo(BigInt(rng.range(-20, 20)), BigInt(rng.range(1, 5)));
      const Rational width(BigInt(rng.range(1, 40)), BigInt(rng.range(1, 4)));
      box.lo.push_back(lo);
      box.hi.push_back(lo + width);
      q.push_back(BigInt(1 + static_cast<long>(rng.below(9))));
    }
    const auto mu = ciqp::build_underestimator(box, q);

    const auto mu_at = [&](const ciqp::RatVector& x) {
      Rational v = mu.constant;
      for (int i = 0; i < k; ++i) v += mu.coeff[i] * x[i];
      return v;
    };
    const auto quad_at = [&](const ciqp::RatVector& x) {
      Rational v = 0;
      for (int i = 0; i < k; ++i) v -= Rational(q[i]) * x[i] * x[i];
      return v;
    };

    // A random point of the box, vertex positions included.
    ciqp::RatVector x;
    for (int i = 0; i < k; ++i) {
      const long den = 1 + static_cast<long>(rng.below(7));
      const Rational t(BigInt(static_cast<long>(rng.below(static_cast<std::uint64_t>(den + 1)))),
                       BigInt(den));
      x.push_back(box.lo[i] + t * (box.hi[i] - box.lo[i]));
    }
    Rational gap = 0;
    for (int i = 0; i < k; ++i) {
      const Rational side = box.hi[i] - box.lo[i];
      gap += Rational(q[i]) * side * side;
    }
    gap *= quarter;

    const Rational lowv = mu_at(x), truev = quad_at(x);
    if (!(lowv <= truev && truev <= lowv + gap)) ++violations;

    // Equality at all 2^k vertices.
    for (int mask = 0; mask < (1 << k); ++mask) {
      ciqp::RatVector v;
      for (int i = 0; i < k; ++i) v.push_back((mask >> i) & 1 ? box.hi[i] : box.lo[i]);
      if (mu_at(v) != quad_at(v)) ++violations;
    }
  }

  c.pass = violations == 0;
  c.detail = std::to_string(violations) + " violations in 1000 triples";
  return c;
}

// ---------------------------------------------------------------------------
// Criterion 4: integral vertices on 100 network/interval instances, both
// through direct LP solves with random costs and through full tu-mode runs
// (which hard-fail on any fractional vertex).
// ---------------------------------------------------------------------------

Criterion tu_integrality_criterion() {
  Criterion c;
  c.label = "integral lp vertices on 100 unimodular instances";
  ciqp::SplitMix64 rng(55);
  int fractional = 0, instances = 0;
  std::string first;

  for (int i = 0; i < 100; ++i) {
    Instance ins = (i % 2 == 0)
                       ? ciqp::gen_network(2 + (i % 3), 3 + (i % 3), 1 + (i % 2), 3,
                                           5000 + i)
                       : ciqp::gen_interval(1 + (i % 3), 2 + (i % 4), 1 + (i % 2), 3,
                                            5500 + i);
    ++instances;

    ciqp::LpProblem lp;
    for (const auto& row : ins.W) {
      lp.A.emplace_back(row.begin(), row.end());
    }
    lp.b.assign(ins.w.begin(), ins.w.end());
    for (int j = 0; j < ins.num_vars; ++j) lp.c.push_back(Rational(rng.range(-5, 5)));
    const auto out = ciqp::solve_lp(lp);
    if (out.status != ciqp::LpStatus::Optimal || !out.solution->certified) {
      ++fractional;
      if (first.empty()) first = *ins.name + ": lp not optimal/certified";
      continue;
    }
    for (const Rational& v : out.solution->x) {
      if (!v.is_integer()) {
        ++fractional;
        if (first.empty()) first = *ins.name + ": fractional vertex";
        break;
      }
    }

    try {
      ciqp::SolveConfig config;
      config.epsilon = frac(1, 2);
      config.mode = SolveMode::Tu;
      const auto report = ciqp::solve(ins, config);
      if (report.status != ciqp::SolveStatus::EpsApprox) {
        ++fractional;
        if (first.empty()) first = *ins.name + ": tu solve not eps_approx";
      }
    } catch (const std::exception& e) {
      ++fractional;
      if (first.empty()) first = *ins.name + ": " + e.what();
    }
  }

  c.pass = fractional == 0 && instances == 100;
  c.detail = std::to_string(fractional) + " violations in " + std::to_string(instances) +
             " instances" + (first.empty() ? "" : "; first: " + first);
  return c;
}

// ---------------------------------------------------------------------------
// Criterion 5: branch and bound agrees with exhaustive enumeration on 100
// random bounded integer programs, with certified LP solves throughout.
// ---------------------------------------------------------------------------

Criterion ilp_oracle_criterion() {
  Criterion c;
  c.label = "branch and bound vs enumeration on 100 problems";
  ciqp::SplitMix64 rng(77);
  int mismatches = 0;
  std::string first;

  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + trial % 3;
    const int m = 1 + trial % 2;
    ciqp::LpProblem lp;
    lp.A.assign(m, ciqp::RatVector(n));
    for (int r = 0; r < m; ++r) {
      for (int j = 0; j < n; ++j) lp.A[r][j] = Rational(rng.range(-3, 3));
      lp.b.push_back(Rational(rng.range(-6, 6)));
    }
    for (int j = 0; j < n; ++j) lp.c.push_back(Rational(rng.range(-5, 5)));
    lp.ensure_bound_arrays();
    for (int j = 0; j < n; ++j) {
      lp.lower[j] = Rational(-4);
      lp.upper[j] = Rational(4);
    }

    // Exhaustive ground truth over the box [-4, 4]^n.
    std::optional<Rational> best;
    IntVector point(n, BigInt(-4));
    bool done = false;
    while (!done) {
      bool ok = true;
      for (int r = 0; r < m && ok; ++r) {
        Rational lhs = 0;
        for (int j = 0; j < n; ++j) lhs += lp.A[r][j] * Rational(point[j]);
        ok = lhs <= lp.b[r];
      }
      if (ok) {
        Rational val = 0;
        for (int j = 0; j < n; ++j) val += lp.c[j] * Rational(point[j]);
        if (!best || val < *best) best = val;
      }
      int pos = n - 1;
      while (pos >= 0 && point[pos] == 4) point[pos--] = -4;
      if (pos < 0) done = true; else ++point[pos];
    }

    const auto lp_out = ciqp::solve_lp(lp);
    if (lp_out.status == ciqp::LpStatus::Optimal && !lp_out.solution->certified) {
      ++mismatches;
      if (first.empty()) first = "trial " + std::to_string(trial) + ": uncertified lp";
      continue;
    }

    const auto out = ciqp::solve_ilp(lp);
    if (best.has_value() != (out.status == ciqp::IlpStatus::Optimal)) {
      ++mismatches;
      if (first.empty()) first = "trial " + std::to_string(trial) + ": status mismatch";
      continue;
    }
    if (best) {
      bool bad = *out.value != *best;
      Rational at = 0;
      for (int j = 0; j < n; ++j) at += lp.c[j] * Rational((*out.x)[j]);
      bad = bad || at != *best;
      for (int r = 0; r < m && !bad; ++r) {
        Rational lhs = 0;
        for (int j = 0; j < n; ++j) lhs += lp.A[r][j] * Rational((*out.x)[j]);
        bad = lhs > lp.b[r];
      }
      if (bad) {
        ++mismatches;
        if (first.empty()) {
          first = "trial " + std::to_string(trial) + ": value " + out.value->str() +
                  " vs " + best->str();
        }
      }
    }
  }

  c.pass = mismatches == 0;
  c.detail = std::to_string(mismatches) + " mismatches in 100 problems" +
             (first.empty() ? "" : "; first: " + first);
  return c;
}

// ---------------------------------------------------------------------------
// Criterion 6: infeasible and unbounded instances map to exit codes 10/11
// through the command line interface.
// ---------------------------------------------------------------------------

int run_command(const std::string& cmd) {
  const int rc = std::system(cmd.c_str());
  if (rc == -1) return -1;
  if (WIFEXITED(rc)) return WEXITSTATUS(rc);
  return -1;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Criterion exit_code_criterion(const std::string& cli, const std::filesystem::path& dir) {
  Criterion c;
  c.label = "exit codes 10/11 for infeasible/unbounded instances";

  Instance infeasible;
  infeasible.num_vars = 1;
  infeasible.num_cons = 2;
  infeasible.num_nonlinear = 1;
  infeasible.W = {{BigInt(-1)}, {BigInt(1)}};
  infeasible.w = {BigInt(-1), BigInt(-2)};  // x >= 1 and x <= -2
  infeasible.q = {BigInt(1)};
  infeasible.h = {BigInt(0)};

  Instance unbounded_quad;
  unbounded_quad.num_vars = 1;
  unbounded_quad.num_cons = 1;
  unbounded_quad.num_nonlinear = 1;
  unbounded_quad.W = {{BigInt(-1)}};  // x >= 0 with no cap
  unbounded_quad.w = {BigInt(0)};
  unbounded_quad.q = {BigInt(1)};
  unbounded_quad.h = {BigInt(0)};

  Instance unbounded_lin;
  unbounded_lin.num_vars = 2;
  unbounded_lin.num_cons = 3;
  unbounded_lin.num_nonlinear = 1;
  unbounded_lin.W = {{BigInt(-1), BigInt(0)}, {BigInt(1), BigInt(0)}, {BigInt(0), BigInt(1)}};
  unbounded_lin.w = {BigInt(0), BigInt(1), BigInt(0)};  // x1 free below
  unbounded_lin.q = {BigInt(1)};
  unbounded_lin.h = {BigInt(0), BigInt(1)};

  const auto solve_code = [&](const Instance& ins, const std::string& stem) {
    const auto path = dir / (stem + ".json");
    write_file(path, ciqp::format_instance(ins));
    return run_command("\"" + cli + "\" solve \"" + path.string() +
                       "\" --epsilon 1/2 --mode general > /dev/null 2>&1");
  };

  const int a = solve_code(infeasible, "infeasible");
  const int b = solve_code(unbounded_quad, "unbounded_quad");
  const int d = solve_code(unbounded_lin, "unbounded_lin");
  c.pass = a == 10 && b == 11 && d == 11;
  c.detail = "infeasible -> " + std::to_string(a) + ", unbounded -> " + std::to_string(b) +
             " and " + std::to_string(d);
  return c;
}

// ---------------------------------------------------------------------------
// Criterion 7: the worked 1-variable instance.
// ---------------------------------------------------------------------------

Criterion micro_instance_criterion() {
  Criterion c;
  c.label = "worked micro instance x=3, objective -9/1, <= 6 ilp solves";

  Instance ins;
  ins.num_vars = 1;
  ins.num_cons = 2;
  ins.num_nonlinear = 1;
  ins.W = {{BigInt(-1)}, {BigInt(1)}};
  ins.w = {BigInt(0), BigInt(3)};
  ins.q = {BigInt(1)};
  ins.h = {BigInt(0)};

  ciqp::SolveConfig config;
  config.epsilon = frac(1, 2);
  config.mode = SolveMode::General;
  const auto report = ciqp::solve(ins, config);

  c.pass = report.status == ciqp::SolveStatus::EpsApprox && report.solution &&
           *report.solution == IntVector{BigInt(3)} && report.objective &&
           report.objective->str() == "-9/1" && report.stats.ilp_solves <= 6;
  c.detail = "objective " + (report.objective ? report.objective->str() : "none") + " in " +
             std::to_string(report.stats.ilp_solves) + " ilp solves";
  return c;
}

// ---------------------------------------------------------------------------
// Criterion 8: byte-identical outputs across three repetitions of every
// command line subcommand.
// ---------------------------------------------------------------------------

Criterion determinism_criterion(const std::string& cli, const std::filesystem::path& dir) {
  Criterion c;
  c.label = "byte-identical outputs across 3 repetitions";

  const std::string q = "\"";
  std::vector<std::string> problems;

  const auto repeat_identical = [&](const std::string& name, const std::string& cmd_stem,
                                    bool to_stdout, int expect_code) {
    std::vector<std::string> outputs;
    for (int r = 0; r < 3; ++r) {
      const auto out_path = dir / (name + "_" + std::to_string(r) + ".json");
      const std::string cmd =
          to_stdout ? cmd_stem + " > " + q + out_path.string() + q
                    : cmd_stem + " --out " + q + out_path.string() + q + " > /dev/null";
      const int code = run_command(cmd + " 2> /dev/null");
      if (code != expect_code) {
        problems.push_back(name + " exit " + std::to_string(code));
        return;
      }
      outputs.push_back(read_file(out_path));
      if (outputs.back().empty()) {
        problems.push_back(name + " produced no output");
        return;
      }
    }
    if (outputs[0] != outputs[1] || outputs[1] != outputs[2]) {
      problems.push_back(name + " outputs differ");
    }
  };

  const auto gen_path = dir / "det_gen_0.json";
  repeat_identical("det_gen",
                   q + cli + q + " generate network --nodes 3 --arcs 4 --k 2 --seed 42",
                   false, 0);
  repeat_identical("det_solve",
                   q + cli + q + " solve " + q + gen_path.string() + q +
                       " --epsilon 1/2 --delta-policy declared",
                   true, 0);
  repeat_identical("det_analyze", q + cli + q + " analyze " + q + gen_path.string() + q,
                   true, 0);
  const auto solve_path = dir / "det_solve_0.json";
  repeat_identical("det_verify",
                   q + cli + q + " verify " + q + gen_path.string() + q + " --candidate " +
                       q + solve_path.string() + q + " --epsilon 1/2",
                   true, 0);

  c.pass = problems.empty();
  if (problems.empty()) {
    c.detail = "generate, solve, analyze, verify each identical across 3 runs";
  } else {
    c.detail = problems.front();
  }
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: ciqp_acceptance <path-to-ciqp-cli>\n";
    return 2;
  }
  const std::string cli = argv[1];
  const std::filesystem::path dir = std::filesystem::current_path() / "acceptance_tmp";
  std::error_code ec;
  std::filesystem::remove_all(dir, ec);
  std::filesystem::create_directories(dir);

  std::vector<Criterion> criteria(8);
  run_suite(criteria[0], criteria[1]);
  criteria[2] = sandwich_criterion();
  criteria[3] = tu_integrality_criterion();
  criteria[4] = ilp_oracle_criterion();
  criteria[5] = exit_code_criterion(cli, dir);
  criteria[6] = micro_instance_criterion();
  criteria[7] = determinism_criterion(cli, dir);

  bool all = true;
  for (size_t i = 0; i < criteria.size(); ++i) {
    all = all && criteria[i].pass;
    std::cout << "criterion " << (i + 1) << ": " << (criteria[i].pass ? "PASS" : "FAIL")
              << "  " << criteria[i].label << " (" << criteria[i].detail << ")\n";
  }
  return all ? 0 : 1;
}
