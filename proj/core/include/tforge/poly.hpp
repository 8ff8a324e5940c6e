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

#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "tforge/rational.hpp"

namespace tforge {

/// Dense univariate polynomial over the rationals. coeffs()[i] is the
/// coefficient of t^i; trailing zeros are stripped so the zero polynomial has
/// no coefficients at all.
class Poly {
 public:
  Poly() = default;
  Poly(std::initializer_list<Rational> coeffs);
  explicit Poly(std::vector<Rational> coeffs);
  static Poly constant(const Rational& c);
  static Poly monomial(const Rational& c, std::size_t power);
  /// (1 - c t)^k
  static Poly one_minus_ct_pow(const Rational& c, std::size_t k);

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
  Rational leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }

  Rational eval(const Rational& t) const;
  Poly monic() const;
  Poly derivative() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs);
  Poly& operator*=(const Rational& rhs);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  friend bool operator==(const Poly& a, const Poly& b) = default;

  /// Human-readable form such as "1 + 8*t + 6*t^2".
  std::string str(const std::string& var = "t") const;

 private:
  void normalize();
  std::vector<Rational> coeffs_;
};

struct PolyDivision {
  Poly quotient;
  Poly remainder;
};

/// Euclidean division; throws Error(kDivisionByZero) for a zero divisor.
PolyDivision divmod(const Poly& a, const Poly& b);
/// Division that must be exact; a nonzero remainder throws Error(kNotInvertible).
Poly exact_div(const Poly& a, const Poly& b);
/// Monic greatest common divisor; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);
/// Same result by the plain Euclidean algorithm over Q.
Poly euclid_gcd(const Poly& a, const Poly& b);
Poly pow(const Poly& base, std::size_t exponent);

}  // namespace tforge
