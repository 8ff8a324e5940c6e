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

#include <cstddef>
#include <string>
#include <vector>

#include "tforge/poly.hpp"
#include "tforge/rational.hpp"

namespace tforge {

/// Element of Q(t) in canonical form: gcd(num, den) = 1 and den monic, so two
/// equal rational functions are also structurally equal.
class RatFunc {
 public:
  RatFunc() : den_(Poly::constant(Rational(1))) {}
  RatFunc(std::int64_t c) : RatFunc(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  RatFunc(const Rational& c);                          // NOLINT(google-explicit-constructor)
  explicit RatFunc(Poly num);
  /// Throws Error(kDivisionByZero) for a zero denominator.
  RatFunc(const Poly& num, const Poly& den);

  /// The variable t itself.
  static RatFunc t();

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }

  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& rhs);
  RatFunc& operator-=(const RatFunc& rhs);
  RatFunc& operator*=(const RatFunc& rhs);
  RatFunc& operator*=(const Rational& rhs);
  RatFunc& operator/=(const RatFunc& rhs);
  RatFunc& operator/=(const Rational& rhs);
  RatFunc inverse() const;

  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator*(RatFunc a, const Rational& c) { return a *= c; }
  friend RatFunc operator*(const Rational& c, RatFunc a) { return a *= c; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend RatFunc operator/(RatFunc a, const Rational& c) { return a /= c; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) = default;

  /// Value at a rational point; throws Error(kDivisionByZero) at a pole.
  Rational eval(const Rational& t) const;

  /// "(num)/(den)" in monic-denominator form.
  std::string str(const std::string& var = "t") const;

 private:
  struct Canonical {};
  RatFunc(Poly num, Poly den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}
  Poly num_;
  Poly den_;
};

/// Coefficients of t^0..t^order of the expansion at t = 0.
/// Throws Error(kPoleAtOrigin) when den(0) = 0.
std::vector<Rational> ratfunc_taylor(const RatFunc& f, std::size_t order);

}  // namespace tforge
