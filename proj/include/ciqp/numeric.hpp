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

#ifndef CIQP_NUMERIC_HPP_
#define CIQP_NUMERIC_HPP_

#include <gmpxx.h>

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ciqp {

// Arbitrary-precision signed integer. All problem data lives in exact types;
// no solver path ever touches floating point.
using BigInt = mpz_class;

using IntVector = std::vector<BigInt>;
using IntMatrix = std::vector<IntVector>;

// Exact rational number, always canonical: denominator positive and coprime
// with the numerator. The denominator is never zero.
class Rational {
 public:
  Rational() : value_(0) {}
  Rational(int n) : value_(n) {}            // NOLINT: implicit by design
  Rational(long n) : value_(n) {}           // NOLINT
  Rational(const BigInt& n) : value_(n) {}  // NOLINT
  // Throws std::domain_error when den == 0.
  Rational(const BigInt& num, const BigInt& den);

  BigInt num() const { return BigInt(value_.get_num()); }
  BigInt den() const { return BigInt(value_.get_den()); }

  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  BigInt floor() const;
  BigInt ceil() const;

  // Exact integer value; throws std::domain_error when not an integer.
  BigInt as_integer() const;

  // Canonical text form "num/den" with den always printed: "-9/1", "2/3".
  std::string str() const;

  // Accepts "num/den", plain integers, and finite decimal strings such as
  // "0.25" or "-1.5"; the conversion is exact. Returns nullopt on any other
  // shape (including exponents, stray whitespace, and zero denominators).
  static std::optional<Rational> parse(std::string_view text);

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  // Throws std::domain_error when dividing by zero.
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.value_ != b.value_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.value_ <= b.value_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.value_ > b.value_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.value_ >= b.value_; }

 private:
  explicit Rational(mpq_class v) : value_(std::move(v)) {}

  mpq_class value_;
};

using RatVector = std::vector<Rational>;
using RatMatrix = std::vector<RatVector>;

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational abs(const Rational& r);

// Smallest nonnegative integer g with g*g >= x. Exact: computed from an
// integer square root plus a local scan, never through floating point.
// Throws std::domain_error for negative input.
BigInt ceil_sqrt(const Rational& x);

// base^exp for small nonnegative exponents.
BigInt pow_int(const BigInt& base, unsigned exp);

}  // namespace ciqp

#endif  // CIQP_NUMERIC_HPP_
