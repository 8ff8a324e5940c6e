/*
 * Copyright 2026 The tforge Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "tforge/rational.hpp"

#include <cctype>

#include "tforge/error.hpp"

namespace tforge {

Rational::Rational(std::int64_t value) : value_(static_cast<long>(value)) {}

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(ErrorCode::kDivisionByZero, "rational with zero denominator");
  value_ = mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::from_integers(const mpz_class& num, const mpz_class& den) {
  if (sgn(den) == 0) throw Error(ErrorCode::kDivisionByZero, "rational with zero denominator");
  return Rational(mpq_class(num, den));
}

Rational Rational::parse(std::string_view text) {
  auto is_int = [](std::string_view s) {
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  auto to_mpz = [](std::string_view s) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    return mpz_class(std::string(s), 10);
  };
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? "1" : text.substr(slash + 1);
  if (!is_int(num) || !is_int(den) || den.front() == '-' || den.front() == '+')
    throw Error(ErrorCode::kSyntax, "malformed rational '" + std::string(text) + "'");
  return from_integers(to_mpz(num), to_mpz(den));
}

std::string Rational::str() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw Error(ErrorCode::kDivisionByZero, "rational division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::inverse() const { return Rational(1) / *this; }

Rational factorial(unsigned n) {
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return Rational(mpq_class(out));
}

Rational binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return Rational(0);
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(mpq_class(out));
}

Rational binomial_general(std::int64_t n, std::int64_t k) {
  if (k < 0) return Rational(0);
  Rational out(1);
  for (std::int64_t i = 0; i < k; ++i) out *= Rational(n - i, i + 1);
  return out;
}

Rational pow(const Rational& base, std::int64_t exponent) {
  if (exponent < 0) return pow(base.inverse(), -exponent);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.numerator().get_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), base.denominator().get_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational::from_integers(num, den);
}

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kDivisionByZero: return "division-by-zero";
    case ErrorCode::kPoleAtOrigin: return "pole-at-origin";
    case ErrorCode::kNotInvertible: return "not-invertible";
    case ErrorCode::kCompositionUndefined: return "composition-undefined";
    case ErrorCode::kExpDomain: return "exp-domain";
    case ErrorCode::kLogDomain: return "log-domain";
    case ErrorCode::kPowDomain: return "pow-domain";
    case ErrorCode::kRevertConstantTerm: return "revert-constant-term";
    case ErrorCode::kRevertLinearTerm: return "revert-linear-term";
    case ErrorCode::kSyntax: return "syntax";
    case ErrorCode::kUnknownIdentifier: return "unknown-identifier";
    case ErrorCode::kUnboundParameter: return "unbound-parameter";
    case ErrorCode::kNonConstantExponent: return "non-constant-exponent";
    case ErrorCode::kInvalidSpec: return "invalid-spec";
    case ErrorCode::kCatalogConstraint: return "catalog-constraint";
    case ErrorCode::kUnknownCatalogEntry: return "unknown-catalog-entry";
    case ErrorCode::kKindMismatch: return "kind-mismatch";
    case ErrorCode::kOutOfRange: return "out-of-range";
    case ErrorCode::kIrregularShape: return "irregular-shape";
    case ErrorCode::kInvalidArgument: return "invalid-argument";
  }
  return "unknown";
}

}  // namespace tforge
