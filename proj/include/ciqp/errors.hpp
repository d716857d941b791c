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

#ifndef CIQP_ERRORS_HPP_
#define CIQP_ERRORS_HPP_

#include <stdexcept>

namespace ciqp {

// Invalid input data, invalid configuration, or an API precondition the
// caller failed to meet. Maps to exit code 1 in the command line tool.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A subsolver exhausted a configured budget (probe box, node count,
// enumeration cap) without classifying the problem. The result is unknown,
// not wrong. Maps to exit code 2 in the command line tool.
class UndecidedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ciqp

#endif  // CIQP_ERRORS_HPP_
