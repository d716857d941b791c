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

#include <doctest.h>

#include <cstdint>

#include "ciqp/errors.hpp"
#include "ciqp/gen.hpp"
#include "ciqp/matprops.hpp"
#include "ciqp/model.hpp"
#include "ciqp/oracle.hpp"

using ciqp::BigInt;
using ciqp::Instance;

TEST_CASE("the mixing generator matches its reference stream") {
  ciqp::SplitMix64 rng(0);
  CHECK(rng.next() == 0xE220A8397B1DCDAFULL);
  CHECK(rng.next() == 0x6E789E6AA1B965F4ULL);
  CHECK(rng.next() == 0x06C45D188009454FULL);
}

TEST_CASE("bounded draws stay in range") {
  ciqp::SplitMix64 rng(5);
  for (int i = 0; i < 200; ++i) {
    CHECK(rng.below(7) < 7);
    const long v = rng.range(-3, 4);
    CHECK(v >= -3);
    CHECK(v <= 4);
  }
}

TEST_CASE("generation is a pure function of its arguments") {
  const Instance a = ciqp::gen_network(4, 6, 2, 5, 42);
  const Instance b = ciqp::gen_network(4, 6, 2, 5, 42);
  CHECK(a.W == b.W);
  CHECK(a.w == b.w);
  CHECK(a.q == b.q);
  CHECK(a.h == b.h);
  CHECK(a.name == b.name);

  const Instance c = ciqp::gen_network(4, 6, 2, 5, 43);
  CHECK(a.W != c.W);
}

TEST_CASE("network instances are well formed feasible and unimodular") {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    const Instance ins = ciqp::gen_network(4, 5, 1, 3, seed);
    CAPTURE(seed);
    CHECK(ciqp::validate(ins).empty());
    CHECK(ins.num_vars == 5);
    CHECK(ins.declared_delta == BigInt(1));
    REQUIRE(ins.oracle_box.has_value());

    const auto tu = ciqp::is_totally_unimodular(ins.W);
    CHECK(tu.is_tu);
    CHECK(tu.exhaustive);

    const auto truth = ciqp::enumerate_box(ins, *ins.oracle_box);
    REQUIRE(truth.has_value());
    CHECK(truth->feasible_count >= 1);
  }
}

TEST_CASE("interval instances are well formed feasible and unimodular") {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    const Instance ins = ciqp::gen_interval(3, 4, 2, 3, seed);
    CAPTURE(seed);
    CHECK(ciqp::validate(ins).empty());
    CHECK(ins.num_vars == 4);
    CHECK(ins.declared_delta == BigInt(1));
    REQUIRE(ins.oracle_box.has_value());

    const auto tu = ciqp::is_totally_unimodular(ins.W);
    CHECK(tu.is_tu);
    CHECK(tu.exhaustive);

    const auto truth = ciqp::enumerate_box(ins, *ins.oracle_box);
    REQUIRE(truth.has_value());
    CHECK(truth->feasible_count >= 1);
  }
}

TEST_CASE("dense instances certify their declared subdeterminant bound") {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    const Instance ins = ciqp::gen_general_delta(3, 2, 1, 2, 3, seed);
    CAPTURE(seed);
    CHECK(ciqp::validate(ins).empty());
    REQUIRE(ins.declared_delta.has_value());
    CHECK(*ins.declared_delta <= 2);
    CHECK(*ins.declared_delta >= 1);

    // The declaration must cover the full matrix, box rows included.
    const auto cert = ciqp::max_abs_subdeterminant(ins.W);
    REQUIRE(cert.exhaustive);
    CHECK(cert.delta <= *ins.declared_delta);

    REQUIRE(ins.oracle_box.has_value());
    const auto truth = ciqp::enumerate_box(ins, *ins.oracle_box);
    REQUIRE(truth.has_value());
    CHECK(truth->feasible_count >= 1);
  }
}

TEST_CASE("an unreachable subdeterminant target exhausts the budget") {
  CHECK_THROWS_AS(ciqp::gen_general_delta(5, 5, 1, 1, 2, 99), ciqp::UsageError);
}

TEST_CASE("generator arguments are validated") {
  CHECK_THROWS_AS(ciqp::gen_network(1, 3, 1, 3, 7), ciqp::UsageError);
  CHECK_THROWS_AS(ciqp::gen_network(4, 2, 1, 3, 7), ciqp::UsageError);
  CHECK_THROWS_AS(ciqp::gen_network(4, 5, 6, 3, 7), ciqp::UsageError);
  CHECK_THROWS_AS(ciqp::gen_network(4, 5, 1, 0, 7), ciqp::UsageError);
  CHECK_THROWS_AS(ciqp::gen_interval(0, 4, 1, 3, 7), ciqp::UsageError);
  CHECK_THROWS_AS(ciqp::gen_interval(3, 0, 1, 3, 7), ciqp::UsageError);
  CHECK_THROWS_AS(ciqp::gen_general_delta(0, 2, 0, 2, 3, 7), ciqp::UsageError);
  CHECK_THROWS_AS(ciqp::gen_general_delta(9, 2, 0, 2, 3, 7), ciqp::UsageError);
}
