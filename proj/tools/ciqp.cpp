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

#include <charconv>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ciqp/errors.hpp"
#include "ciqp/gen.hpp"
#include "ciqp/io.hpp"
#include "ciqp/matprops.hpp"
#include "ciqp/model.hpp"
#include "ciqp/oracle.hpp"
#include "ciqp/solver.hpp"

namespace {

// Exit codes: 0 success / eps_approx / pass, 1 usage or parse error,
// 2 internal or undecided, 10 infeasible, 11 unbounded, 12 failed verify.
constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInternal = 2;
constexpr int kExitInfeasible = 10;
constexpr int kExitUnbounded = 11;
constexpr int kExitVerifyFail = 12;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ciqp::UsageError("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

ciqp::Instance load_instance(const std::string& path) {
  const ciqp::ParseResult parsed = ciqp::parse_instance(read_file(path));
  if (!parsed.instance) {
    std::string msg = path + ":";
    for (const std::string& d : parsed.diagnostics) msg += "\n  " + d;
    throw ciqp::UsageError(msg);
  }
  return *parsed.instance;
}

ciqp::Rational parse_epsilon(const std::string& text) {
  const auto eps = ciqp::Rational::parse(text);
  if (!eps) {
    throw ciqp::UsageError("epsilon '" + text +
                           "' is not a rational (use e.g. 1/2, 0.25, or 1)");
  }
  return *eps;
}

ciqp::IntVector parse_candidate(const std::string& spec, int num_vars) {
  // Inline JSON array, or a path to a file holding either an array or an
  // object with a "solution" array (a solve report works directly).
  const std::string text = !spec.empty() && spec.front() == '[' ? spec : read_file(spec);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ciqp::UsageError(std::string("candidate: ") + e.what());
  }
  if (doc.is_object() && doc.contains("solution")) doc = doc["solution"];
  if (!doc.is_array() || static_cast<int>(doc.size()) != num_vars) {
    throw ciqp::UsageError("candidate must be an array of num_vars integers");
  }
  ciqp::IntVector out(num_vars);
  for (int j = 0; j < num_vars; ++j) {
    const auto& v = doc[j];
    if (v.is_number_integer()) {
      out[j] = ciqp::BigInt(static_cast<long>(v.get<std::int64_t>()));
    } else if (v.is_string()) {
      if (mpz_set_str(out[j].get_mpz_t(), v.get<std::string>().c_str(), 10) != 0) {
        throw ciqp::UsageError("candidate[" + std::to_string(j) + "]: not an integer");
      }
    } else {
      throw ciqp::UsageError("candidate[" + std::to_string(j) + "]: not an integer");
    }
  }
  return out;
}

void write_output(const std::optional<std::string>& path, const std::string& content) {
  if (!path) {
    std::cout << content;
    return;
  }
  std::ofstream out(*path, std::ios::binary);
  if (!out) throw ciqp::UsageError("cannot write '" + *path + "'");
  out << content;
}

struct SolveArgs {
  std::string instance_path;
  std::string epsilon;
  std::string mode = "auto";
  std::string delta_policy = "compute";
  int delta_cap = 8;
  bool verify_tu = false;
  bool stats = false;  // accepted for interface stability; reports always carry stats
};

int run_solve(const SolveArgs& args) {
  ciqp::SolveConfig config;
  config.epsilon = parse_epsilon(args.epsilon);
  if (args.mode == "auto") {
    config.mode = ciqp::SolveMode::Auto;
  } else if (args.mode == "general") {
    config.mode = ciqp::SolveMode::General;
  } else if (args.mode == "tu") {
    config.mode = ciqp::SolveMode::Tu;
  } else {
    throw ciqp::UsageError("mode must be auto, general, or tu");
  }
  config.delta_size_cap = args.delta_cap;
  if (args.delta_policy == "declared") {
    config.delta_policy = ciqp::DeltaPolicy::UseDeclared;
  } else if (args.delta_policy == "compute") {
    config.delta_policy = ciqp::DeltaPolicy::Compute;
  } else if (args.delta_policy == "capped") {
    config.delta_policy = ciqp::DeltaPolicy::ComputeCapped;
  } else if (args.delta_policy.rfind("capped:", 0) == 0) {
    // "capped:<s>" carries the submatrix size cap inline.
    const std::string cap_text = args.delta_policy.substr(7);
    int cap = 0;
    const auto [end, ec] =
        std::from_chars(cap_text.data(), cap_text.data() + cap_text.size(), cap);
    if (ec != std::errc() || end != cap_text.data() + cap_text.size() || cap < 1) {
      throw ciqp::UsageError("delta-policy capped:<s> needs a positive integer cap");
    }
    config.delta_policy = ciqp::DeltaPolicy::ComputeCapped;
    config.delta_size_cap = cap;
  } else {
    throw ciqp::UsageError("delta-policy must be declared, compute, capped, or capped:<s>");
  }
  config.verify_tu = args.verify_tu;

  const ciqp::Instance instance = load_instance(args.instance_path);
  const ciqp::SolveReport report = ciqp::solve(instance, config);
  std::cout << ciqp::format_report(report);
  switch (report.status) {
    case ciqp::SolveStatus::EpsApprox:
      return kExitOk;
    case ciqp::SolveStatus::Infeasible:
      return kExitInfeasible;
    case ciqp::SolveStatus::Unbounded:
      return kExitUnbounded;
  }
  return kExitInternal;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact eps-approximation solver for separable concave integer "
               "quadratic programs over polyhedra"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  CLI::App* solve_cmd = app.add_subcommand("solve", "Solve an instance file");
  solve_cmd->add_option("instance", solve_args.instance_path, "Instance JSON file")->required();
  solve_cmd->add_option("--epsilon", solve_args.epsilon, "Approximation target in (0, 1]")
      ->required();
  solve_cmd->add_option("--mode", solve_args.mode, "auto, general, or tu (default auto)");
  solve_cmd->add_option("--delta-policy", solve_args.delta_policy,
                        "declared, compute, capped, or capped:<s> (default compute)");
  solve_cmd->add_option("--delta-cap", solve_args.delta_cap,
                        "submatrix size cap for --delta-policy capped (default 8)");
  solve_cmd->add_flag("--verify-tu", solve_args.verify_tu,
                      "in tu mode, reject matrices with a witnessed non-TU subdeterminant");
  solve_cmd->add_flag("--stats", solve_args.stats,
                      "accepted for compatibility; reports always include the stats block");

  std::string verify_instance, verify_candidate, verify_epsilon;
  std::uint64_t verify_volume_cap = 10'000'000;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "Check a candidate against enumerated ground truth");
  verify_cmd->add_option("instance", verify_instance, "Instance JSON file")->required();
  verify_cmd->add_option("--candidate", verify_candidate,
                         "Candidate point: inline JSON array, or a file (array or "
                         "solve report)")
      ->required();
  verify_cmd->add_option("--epsilon", verify_epsilon, "Approximation target in (0, 1]")
      ->required();
  verify_cmd->add_option("--volume-cap", verify_volume_cap,
                         "largest box volume the oracle may enumerate");

  std::string analyze_instance;
  int analyze_cap = 8;
  CLI::App* analyze_cmd =
      app.add_subcommand("analyze", "Report subdeterminant and unimodularity facts");
  analyze_cmd->add_option("instance", analyze_instance, "Instance JSON file")->required();
  analyze_cmd->add_option("--size-cap", analyze_cap, "submatrix size cap (default 8)");

  CLI::App* gen_cmd = app.add_subcommand("generate", "Generate a random instance");
  gen_cmd->require_subcommand(1);
  std::uint64_t gen_seed = 0;
  int gen_k = 1;
  long gen_coeff = 5;
  std::optional<std::string> gen_out;
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--seed", gen_seed, "Generator seed")->required();
    cmd->add_option("--k", gen_k, "Number of quadratic variables (default 1)");
    cmd->add_option("--coeff-bound", gen_coeff, "Objective coefficient bound (default 5)");
    cmd->add_option("--out", gen_out, "Output file (default stdout)");
  };
  int net_nodes = 0, net_arcs = 0;
  CLI::App* net_cmd = gen_cmd->add_subcommand("network", "Network-flow instance (TU)");
  net_cmd->add_option("--nodes", net_nodes, "Node count")->required();
  net_cmd->add_option("--arcs", net_arcs, "Arc count (also the variable count)")->required();
  add_common(net_cmd);
  int iv_rows = 0, iv_cols = 0;
  CLI::App* iv_cmd = gen_cmd->add_subcommand("interval", "Interval-matrix instance (TU)");
  iv_cmd->add_option("--rows", iv_rows, "Interval row count")->required();
  iv_cmd->add_option("--cols", iv_cols, "Column count (also the variable count)")->required();
  add_common(iv_cmd);
  int gd_vars = 0, gd_cons = 0;
  long gd_delta_max = 2;
  CLI::App* gd_cmd =
      gen_cmd->add_subcommand("general", "Dense instance with certified subdeterminant bound");
  gd_cmd->add_option("--n", gd_vars, "Variable count (1..8)")->required();
  gd_cmd->add_option("--m", gd_cons, "Dense row count (1..8)")->required();
  gd_cmd->add_option("--delta-max", gd_delta_max, "Largest allowed subdeterminant (default 2)");
  add_common(gd_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (solve_cmd->parsed()) return run_solve(solve_args);

    if (verify_cmd->parsed()) {
      const ciqp::Instance instance = load_instance(verify_instance);
      if (!instance.oracle_box) {
        throw ciqp::UsageError(
            "instance has no oracle_box; verification needs enumeration bounds");
      }
      const ciqp::IntVector candidate = parse_candidate(verify_candidate, instance.num_vars);
      ciqp::EnumerateOptions opts;
      opts.volume_cap = verify_volume_cap;
      const ciqp::EpsVerdict verdict = ciqp::verify_eps(
          instance, candidate, parse_epsilon(verify_epsilon), *instance.oracle_box, opts);
      std::cout << ciqp::format_eps_verdict(verdict);
      return verdict.kind == ciqp::EpsVerdictKind::Pass ? kExitOk : kExitVerifyFail;
    }

    if (analyze_cmd->parsed()) {
      const ciqp::Instance instance = load_instance(analyze_instance);
      const ciqp::DeltaCertificate cert =
          ciqp::max_abs_subdeterminant(instance.W, analyze_cap);
      const ciqp::TuVerdict tu = ciqp::is_totally_unimodular(instance.W, analyze_cap);
      std::cout << ciqp::format_analysis(cert, tu);
      return kExitOk;
    }

    if (gen_cmd->parsed()) {
      ciqp::Instance instance;
      if (net_cmd->parsed()) {
        instance = ciqp::gen_network(net_nodes, net_arcs, gen_k, gen_coeff, gen_seed);
      } else if (iv_cmd->parsed()) {
        instance = ciqp::gen_interval(iv_rows, iv_cols, gen_k, gen_coeff, gen_seed);
      } else {
        instance =
            ciqp::gen_general_delta(gd_vars, gd_cons, gen_k, gd_delta_max, gen_coeff, gen_seed);
      }
      write_output(gen_out, ciqp::format_instance(instance));
      return kExitOk;
    }

    throw ciqp::UsageError("no subcommand selected");
  } catch (const ciqp::UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ciqp::UndecidedError& e) {
    std::cerr << "undecided: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}
