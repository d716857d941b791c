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

#include "ciqp/io.hpp"

#include <cstddef>
#include <utility>

#include <json.hpp>

namespace ciqp {

namespace {

using Json = nlohmann::ordered_json;

std::string line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

Json big_to_json(const BigInt& value) {
  if (value.fits_slong_p()) return static_cast<long>(value.get_si());
  return value.get_str();
}

class Extractor {
 public:
  explicit Extractor(std::vector<std::string>& diagnostics) : diagnostics_(diagnostics) {}

  bool big_int(const Json& value, const std::string& where, BigInt* out) {
    if (value.is_number_integer()) {
      *out = BigInt(static_cast<long>(value.get<std::int64_t>()));
      return true;
    }
    if (value.is_number_unsigned()) {
      *out = BigInt(static_cast<unsigned long>(value.get<std::uint64_t>()));
      return true;
    }
    if (value.is_string()) {
      BigInt parsed;
      if (mpz_set_str(parsed.get_mpz_t(), value.get<std::string>().c_str(), 10) == 0) {
        *out = std::move(parsed);
        return true;
      }
      complain(where + ": string is not a base-10 integer");
      return false;
    }
    if (value.is_number_float()) {
      complain(where + ": non-integer entries are not representable exactly");
      return false;
    }
    complain(where + ": expected an integer or integer string");
    return false;
  }

  bool small_int(const Json& value, const std::string& where, int* out) {
    if (!value.is_number_integer() && !value.is_number_unsigned()) {
      complain(where + ": expected a small integer");
      return false;
    }
    const auto v = value.get<std::int64_t>();
    if (v < 0 || v > 1'000'000) {
      complain(where + ": value out of range");
      return false;
    }
    *out = static_cast<int>(v);
    return true;
  }

  bool int_vector(const Json& value, const std::string& where, std::size_t expect,
                  IntVector* out) {
    if (!value.is_array() || value.size() != expect) {
      complain(where + ": expected an array of " + std::to_string(expect) + " integers");
      return false;
    }
    out->resize(expect);
    for (std::size_t i = 0; i < expect; ++i) {
      if (!big_int(value[i], where + "[" + std::to_string(i) + "]", &(*out)[i])) return false;
    }
    return true;
  }

  void complain(const std::string& msg) { diagnostics_.push_back(msg); }

 private:
  std::vector<std::string>& diagnostics_;
};

}  // namespace

ParseResult parse_instance(std::string_view text) {
  ParseResult result;

  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    const std::size_t byte = e.byte > 0 ? e.byte - 1 : 0;
    result.diagnostics.push_back("parse error at " + line_column(text, byte) + ": " +
                                 e.what());
    return result;
  }
  if (!doc.is_object()) {
    result.diagnostics.push_back("top-level value must be an object");
    return result;
  }

  Extractor ex(result.diagnostics);
  Instance inst;

  static const char* kKnown[] = {"name",  "num_vars", "num_cons",  "k",
                                 "W",     "w",        "q",         "h",
                                 "delta", "oracle_box"};
  for (const auto& [key, value] : doc.items()) {
    (void)value;
    bool known = false;
    for (const char* k : kKnown) known = known || key == k;
    if (!known) ex.complain("unknown field '" + key + "'");
  }
  for (const char* key : {"num_vars", "num_cons", "k", "W", "w", "q", "h"}) {
    if (!doc.contains(key)) ex.complain(std::string("missing field '") + key + "'");
  }
  if (!result.diagnostics.empty()) return result;

  bool ok = ex.small_int(doc["num_vars"], "num_vars", &inst.num_vars);
  ok = ex.small_int(doc["num_cons"], "num_cons", &inst.num_cons) && ok;
  ok = ex.small_int(doc["k"], "k", &inst.num_nonlinear) && ok;
  if (!ok) return result;

  if (doc.contains("name")) {
    if (!doc["name"].is_string()) {
      ex.complain("name: expected a string");
    } else {
      inst.name = doc["name"].get<std::string>();
    }
  }

  const Json& w_rows = doc["W"];
  if (!w_rows.is_array() || static_cast<int>(w_rows.size()) != inst.num_cons) {
    ex.complain("W: expected num_cons rows");
  } else {
    inst.W.resize(inst.num_cons);
    for (int i = 0; i < inst.num_cons; ++i) {
      if (!ex.int_vector(w_rows[i], "W[" + std::to_string(i) + "]",
                         static_cast<std::size_t>(inst.num_vars), &inst.W[i])) {
        break;
      }
    }
  }
  ex.int_vector(doc["w"], "w", static_cast<std::size_t>(inst.num_cons), &inst.w);
  ex.int_vector(doc["q"], "q", static_cast<std::size_t>(inst.num_nonlinear), &inst.q);
  ex.int_vector(doc["h"], "h", static_cast<std::size_t>(inst.num_vars), &inst.h);

  if (doc.contains("delta")) {
    BigInt delta;
    if (ex.big_int(doc["delta"], "delta", &delta)) inst.declared_delta = delta;
  }
  if (doc.contains("oracle_box")) {
    const Json& box = doc["oracle_box"];
    if (!box.is_array() || static_cast<int>(box.size()) != inst.num_vars) {
      ex.complain("oracle_box: expected one [lo, hi] pair per variable");
    } else {
      std::vector<std::pair<BigInt, BigInt>> pairs(inst.num_vars);
      bool pairs_ok = true;
      for (int j = 0; j < inst.num_vars && pairs_ok; ++j) {
        const std::string where = "oracle_box[" + std::to_string(j) + "]";
        if (!box[j].is_array() || box[j].size() != 2) {
          ex.complain(where + ": expected [lo, hi]");
          pairs_ok = false;
          break;
        }
        pairs_ok = ex.big_int(box[j][0], where + "[0]", &pairs[j].first) &&
                   ex.big_int(box[j][1], where + "[1]", &pairs[j].second);
      }
      if (pairs_ok) inst.oracle_box = std::move(pairs);
    }
  }

  if (!result.diagnostics.empty()) return result;
  for (const std::string& issue : validate(inst)) result.diagnostics.push_back(issue);
  if (!result.diagnostics.empty()) return result;

  result.instance = std::move(inst);
  return result;
}

std::string format_instance(const Instance& inst) {
  Json doc;
  if (inst.name) doc["name"] = *inst.name;
  doc["num_vars"] = inst.num_vars;
  doc["num_cons"] = inst.num_cons;
  doc["k"] = inst.num_nonlinear;
  doc["W"] = Json::array();
  for (const IntVector& row : inst.W) {
    Json out = Json::array();
    for (const BigInt& v : row) out.push_back(big_to_json(v));
    doc["W"].push_back(std::move(out));
  }
  auto vec = [](const IntVector& values) {
    Json out = Json::array();
    for (const BigInt& v : values) out.push_back(big_to_json(v));
    return out;
  };
  doc["w"] = vec(inst.w);
  doc["q"] = vec(inst.q);
  doc["h"] = vec(inst.h);
  if (inst.declared_delta) doc["delta"] = big_to_json(*inst.declared_delta);
  if (inst.oracle_box) {
    doc["oracle_box"] = Json::array();
    for (const auto& [lo, hi] : *inst.oracle_box) {
      doc["oracle_box"].push_back(Json::array({big_to_json(lo), big_to_json(hi)}));
    }
  }
  return doc.dump(2) + "\n";
}

std::string format_report(const SolveReport& report) {
  Json doc;
  switch (report.status) {
    case SolveStatus::EpsApprox:
      doc["status"] = "eps_approx";
      break;
    case SolveStatus::Infeasible:
      doc["status"] = "infeasible";
      break;
    case SolveStatus::Unbounded:
      doc["status"] = "unbounded";
      break;
  }
  if (report.solution) {
    Json xs = Json::array();
    for (const BigInt& v : *report.solution) xs.push_back(big_to_json(v));
    doc["solution"] = std::move(xs);
  }
  if (report.objective) doc["objective"] = report.objective->str();
  doc["stats"] = Json{
      {"ilp_solves", report.stats.ilp_solves},
      {"lp_solves", report.stats.lp_solves},
      {"subproblems_created", report.stats.subproblems_created},
      {"boxes_solved", report.stats.boxes_solved},
      {"grid_size_root", big_to_json(report.stats.grid_size_root)},
  };
  return doc.dump(2) + "\n";
}

std::string format_analysis(const DeltaCertificate& certificate, const TuVerdict& tu) {
  Json doc;
  doc["delta"] = big_to_json(certificate.delta);
  doc["witness_rows"] = certificate.rows;
  doc["witness_cols"] = certificate.cols;
  doc["exhaustive"] = certificate.exhaustive;
  doc["is_tu"] = tu.is_tu;
  doc["tu_exhaustive"] = tu.exhaustive;
  return doc.dump(2) + "\n";
}

std::string format_eps_verdict(const EpsVerdict& verdict) {
  Json doc;
  switch (verdict.kind) {
    case EpsVerdictKind::Pass:
      doc["verdict"] = "pass";
      break;
    case EpsVerdictKind::Fail:
      doc["verdict"] = "fail";
      break;
    case EpsVerdictKind::OptimalRequiredFail:
      doc["verdict"] = "optimal_required_fail";
      break;
    case EpsVerdictKind::InfeasibleCandidate:
      doc["verdict"] = "infeasible_candidate";
      break;
  }
  doc["ratio"] = verdict.ratio.str();
  doc["candidate_objective"] = Rational(verdict.candidate_value).str();
  if (verdict.oracle) {
    doc["min_objective"] = Rational(verdict.oracle->min_value).str();
    doc["max_objective"] = Rational(verdict.oracle->max_value).str();
    doc["feasible_count"] = verdict.oracle->feasible_count;
  }
  return doc.dump(2) + "\n";
}

}  // namespace ciqp
