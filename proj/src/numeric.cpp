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

#include "ciqp/numeric.hpp"

#include <ostream>
#include <stdexcept>

namespace ciqp {

namespace {

bool parse_big_int(std::string_view text, BigInt* out) {
  if (text.empty()) return false;
  std::string_view digits = text;
  if (digits.front() == '-' || digits.front() == '+') digits.remove_prefix(1);
  if (digits.empty()) return false;
  for (char c : digits) {
    if (c < '0' || c > '9') return false;
  }
  return mpz_set_str(out->get_mpz_t(), std::string(text).c_str(), 10) == 0;
}

}  // namespace

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.value_ == 0) throw std::domain_error("rational division by zero");
  value_ /= o.value_;
  return *this;
}

BigInt Rational::floor() const {
  BigInt out;
  mpz_fdiv_q(out.get_mpz_t(), value_.get_num().get_mpz_t(),
             value_.get_den().get_mpz_t());
  return out;
}

BigInt Rational::ceil() const {
  BigInt out;
  mpz_cdiv_q(out.get_mpz_t(), value_.get_num().get_mpz_t(),
             value_.get_den().get_mpz_t());
  return out;
}

BigInt Rational::as_integer() const {
  if (!is_integer()) throw std::domain_error("rational " + str() + " is not an integer");
  return num();
}

std::string Rational::str() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::optional<Rational> Rational::parse(std::string_view text) {
  if (text.empty()) return std::nullopt;

  auto slash = text.find('/');
  if (slash != std::string_view::npos) {
    BigInt num, den;
    if (!parse_big_int(text.substr(0, slash), &num)) return std::nullopt;
    if (!parse_big_int(text.substr(slash + 1), &den)) return std::nullopt;
    if (den == 0) return std::nullopt;
    return Rational(num, den);
  }

  auto dot = text.find('.');
  if (dot != std::string_view::npos) {
    std::string_view head = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    if (frac.empty()) return std::nullopt;
    for (char c : frac) {
      if (c < '0' || c > '9') return std::nullopt;
    }
    bool negative = false;
    if (!head.empty() && (head.front() == '-' || head.front() == '+')) {
      negative = head.front() == '-';
      head.remove_prefix(1);
    }
    // Digits are required on both sides of the dot: "1.5", never ".5" or "1.".
    BigInt int_part = 0;
    if (head.empty() || !parse_big_int(head, &int_part)) return std::nullopt;
    BigInt frac_part;
    if (!parse_big_int(frac, &frac_part)) return std::nullopt;
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    BigInt num = int_part * scale + frac_part;
    if (negative) num = -num;
    return Rational(num, scale);
  }

  BigInt whole;
  if (!parse_big_int(text, &whole)) return std::nullopt;
  return Rational(whole);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

BigInt ceil_sqrt(const Rational& x) {
  if (x.sign() < 0) throw std::domain_error("ceil_sqrt of negative value " + x.str());
  const BigInt num = x.num();
  const BigInt den = x.den();
  // Smallest g with g^2 * den >= num. mpz_sqrt(ceil(num/den)) is within one
  // of the answer, so scanning three candidates always succeeds.
  BigInt quotient;
  mpz_cdiv_q(quotient.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  BigInt base;
  mpz_sqrt(base.get_mpz_t(), quotient.get_mpz_t());
  BigInt g = base > 0 ? BigInt(base - 1) : BigInt(0);
  for (int attempt = 0; attempt < 3; ++attempt) {
    if (g * g * den >= num) return g;
    ++g;
  }
  throw std::logic_error("ceil_sqrt candidate scan failed for " + x.str());
}

BigInt pow_int(const BigInt& base, unsigned exp) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

}  // namespace ciqp
