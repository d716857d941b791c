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

#include <stdexcept>

#include "ciqp/gen.hpp"
#include "ciqp/numeric.hpp"

using ciqp::BigInt;
using ciqp::Rational;

TEST_CASE("rational construction canonicalizes") {
  const Rational r(BigInt(4), BigInt(6));
  CHECK(r.num() == 2);
  CHECK(r.den() == 3);

  const Rational s(BigInt(1), BigInt(-2));
  CHECK(s.num() == -1);
  CHECK(s.den() == 2);
  CHECK(s.sign() == -1);

  const Rational z(BigInt(0), BigInt(-7));
  CHECK(z.num() == 0);
  CHECK(z.den() == 1);
  CHECK(z.sign() == 0);

  CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), std::domain_error);
}

TEST_CASE("rational arithmetic is exact") {
  const Rational a(BigInt(1), BigInt(2));
  const Rational b(BigInt(1), BigInt(3));
  CHECK(a + b == Rational(BigInt(5), BigInt(6)));
  CHECK(a - b == Rational(BigInt(1), BigInt(6)));
  CHECK(a * b == Rational(BigInt(1), BigInt(6)));
  CHECK(a / b == Rational(BigInt(3), BigInt(2)));
  CHECK(-a == Rational(BigInt(-1), BigInt(2)));
  CHECK(a < Rational(1));
  CHECK(a > b);
  CHECK(Rational(2) == Rational(BigInt(4), BigInt(2)));

  Rational c = a;
  CHECK_THROWS_AS(c /= Rational(0), std::domain_error);
}

TEST_CASE("rational floor ceil and integrality") {
  const Rational seven_halves(BigInt(7), BigInt(2));
  CHECK(seven_halves.floor() == 3);
  CHECK(seven_halves.ceil() == 4);
  CHECK_FALSE(seven_halves.is_integer());
  CHECK_THROWS_AS(seven_halves.as_integer(), std::domain_error);

  const Rational neg = -seven_halves;
  CHECK(neg.floor() == -4);
  CHECK(neg.ceil() == -3);

  const Rational six(6);
  CHECK(six.is_integer());
  CHECK(six.as_integer() == 6);
  CHECK(six.floor() == 6);
  CHECK(six.ceil() == 6);
}

TEST_CASE("rational text form always shows the denominator") {
  CHECK(Rational(BigInt(-9), BigInt(1)).str() == "-9/1");
  CHECK(Rational(BigInt(2), BigInt(3)).str() == "2/3");
  CHECK(Rational(0).str() == "0/1");
}

TEST_CASE("rational parsing accepts fractions integers and decimals") {
  CHECK(Rational::parse("3/4") == Rational(BigInt(3), BigInt(4)));
  CHECK(Rational::parse("-9/1") == Rational(-9));
  CHECK(Rational::parse("2") == Rational(2));
  CHECK(Rational::parse("-17") == Rational(-17));
  CHECK(Rational::parse("0.25") == Rational(BigInt(1), BigInt(4)));
  CHECK(Rational::parse("-1.5") == Rational(BigInt(-3), BigInt(2)));
  CHECK(Rational::parse("3.50") == Rational(BigInt(7), BigInt(2)));
  CHECK(Rational::parse("4/6") == Rational(BigInt(2), BigInt(3)));

  CHECK_FALSE(Rational::parse("1e3").has_value());
  CHECK_FALSE(Rational::parse(" 1").has_value());
  CHECK_FALSE(Rational::parse("1 ").has_value());
  CHECK_FALSE(Rational::parse("1/0").has_value());
  CHECK_FALSE(Rational::parse("").has_value());
  CHECK_FALSE(Rational::parse("one").has_value());
  CHECK_FALSE(Rational::parse("1.").has_value());
  CHECK_FALSE(Rational::parse(".5").has_value());
  CHECK_FALSE(Rational::parse("1/2/3").has_value());
}

TEST_CASE("parse and str round trip") {
  ciqp::SplitMix64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const Rational r(BigInt(rng.range(-1000, 1000)), BigInt(rng.range(1, 60)));
    const auto back = Rational::parse(r.str());
    REQUIRE(back.has_value());
    CHECK(*back == r);
  }
}

TEST_CASE("abs of a rational") {
  CHECK(ciqp::abs(Rational(BigInt(-3), BigInt(4))) == Rational(BigInt(3), BigInt(4)));
  CHECK(ciqp::abs(Rational(5)) == Rational(5));
  CHECK(ciqp::abs(Rational(0)) == Rational(0));
}

TEST_CASE("ceil_sqrt on frozen values") {
  CHECK(ciqp::ceil_sqrt(Rational(17)) == 5);
  CHECK(ciqp::ceil_sqrt(Rational(16)) == 4);
  CHECK(ciqp::ceil_sqrt(Rational(BigInt(3), BigInt(2))) == 2);
  CHECK(ciqp::ceil_sqrt(Rational(1)) == 1);
  CHECK(ciqp::ceil_sqrt(Rational(0)) == 0);
  CHECK(ciqp::ceil_sqrt(Rational(BigInt(1), BigInt(4))) == 1);
  CHECK(ciqp::ceil_sqrt(Rational(999999)) == 1000);
  CHECK(ciqp::ceil_sqrt(Rational(1000000)) == 1000);
  CHECK(ciqp::ceil_sqrt(Rational(1000001)) == 1001);
  CHECK_THROWS_AS(ciqp::ceil_sqrt(Rational(-1)), std::domain_error);
}

TEST_CASE("ceil_sqrt is the least integer whose square covers the input") {
  ciqp::SplitMix64 rng(11);
  for (int i = 0; i < 500; ++i) {
    const Rational x(BigInt(static_cast<long>(rng.below(1u << 20))),
                     BigInt(rng.range(1, 50)));
    const BigInt g = ciqp::ceil_sqrt(x);
    CHECK(Rational(BigInt(g * g)) >= x);
    if (g > 0) {
      const BigInt gm = g - 1;
      CHECK(Rational(BigInt(gm * gm)) < x);
    }
  }
}

TEST_CASE("integer powers") {
  CHECK(ciqp::pow_int(BigInt(3), 4) == 81);
  CHECK(ciqp::pow_int(BigInt(7), 0) == 1);
  CHECK(ciqp::pow_int(BigInt(-2), 3) == -8);
  CHECK(ciqp::pow_int(BigInt(10), 9) == BigInt(1000000000));
}
