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

#ifndef CIQP_IO_HPP_
#define CIQP_IO_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ciqp/matprops.hpp"
#include "ciqp/model.hpp"
#include "ciqp/oracle.hpp"

namespace ciqp {

struct ParseResult {
  // Present exactly when diagnostics is empty.
  std::optional<Instance> instance;
  // Parse failures carry "line L, column C"; validation failures name the
  // offending field.
  std::vector<std::string> diagnostics;
};

// Reads the JSON instance format. Integer entries may be JSON integers or
// decimal strings (for values beyond 64 bits); non-integer numbers are
// rejected.
ParseResult parse_instance(std::string_view text);

// Canonical serialization: fixed key order, two-space indent, trailing
// newline. parse_instance(format_instance(i)) reproduces i byte for byte
// once reserialized.
std::string format_instance(const Instance& instance);

// Solve report as canonical JSON; every rational prints as "num/den".
std::string format_report(const SolveReport& report);

// Subdeterminant analysis as canonical JSON.
std::string format_analysis(const DeltaCertificate& certificate, const TuVerdict& tu);

// Verification verdict as canonical JSON; ratios print as "num/den".
std::string format_eps_verdict(const EpsVerdict& verdict);

}  // namespace ciqp

#endif  // CIQP_IO_HPP_
