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

#include "tforge/ratfunc.hpp"

#include "tforge/error.hpp"

namespace tforge {

namespace {

const Poly& unit_poly() {
  static const Poly one = Poly::constant(Rational(1));
  return one;
}

}  // namespace

RatFunc::RatFunc(const Rational& c) : num_(Poly::constant(c)), den_(unit_poly()) {}

RatFunc::RatFunc(Poly num) : num_(std::move(num)), den_(unit_poly()) {}

RatFunc::RatFunc(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw Error(ErrorCode::kDivisionByZero, "rational function with zero denominator");
  if (num.is_zero()) {
    den_ = unit_poly();
    return;
  }
  const Poly g = gcd(num, den);
  Poly n = g.is_constant() ? num : exact_div(num, g);
  Poly d = g.is_constant() ? den : exact_div(den, g);
  const Rational lead_inv = d.leading().inverse();
  num_ = n * lead_inv;
  den_ = d * lead_inv;
}

RatFunc RatFunc::t() { return RatFunc(Poly{Rational(0), Rational(1)}); }

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_, Canonical{}); }

// Henrici-style addition: only the gcd of the denominators can survive as a
// common factor, so the final reduction works against that smaller factor.
RatFunc& RatFunc::operator+=(const RatFunc& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  if (den_ == rhs.den_) {
    return *this = RatFunc(num_ + rhs.num_, den_);
  }
  const Poly g = gcd(den_, rhs.den_);
  if (g.is_constant()) {
    Poly n = num_ * rhs.den_ + rhs.num_ * den_;
    Poly d = den_ * rhs.den_;
    if (n.is_zero()) return *this = RatFunc();
    *this = RatFunc(std::move(n), std::move(d), Canonical{});
    return *this;
  }
  const Poly lhs_cofactor = exact_div(den_, g);
  const Poly rhs_cofactor = exact_div(rhs.den_, g);
  Poly n = num_ * rhs_cofactor + rhs.num_ * lhs_cofactor;
  if (n.is_zero()) return *this = RatFunc();
  const Poly h = gcd(n, g);
  Poly d = lhs_cofactor * rhs_cofactor * (h.is_constant() ? g : exact_div(g, h));
  if (!h.is_constant()) n = exact_div(n, h);
  const Rational lead_inv = d.leading().inverse();
  *this = RatFunc(n * lead_inv, d * lead_inv, Canonical{});
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& rhs) { return *this += -rhs; }

RatFunc& RatFunc::operator*=(const RatFunc& rhs) {
  if (is_zero() || rhs.is_zero()) return *this = RatFunc();
  if (rhs.is_polynomial() && rhs.num_.is_constant()) return *this *= rhs.num_.coeff(0);
  if (is_polynomial() && num_.is_constant()) {
    const Rational c = num_.coeff(0);
    *this = rhs;
    return *this *= c;
  }
  const Poly g1 = gcd(num_, rhs.den_);
  const Poly g2 = gcd(rhs.num_, den_);
  const Poly a = g1.is_constant() ? num_ : exact_div(num_, g1);
  const Poly d = g1.is_constant() ? rhs.den_ : exact_div(rhs.den_, g1);
  const Poly c = g2.is_constant() ? rhs.num_ : exact_div(rhs.num_, g2);
  const Poly b = g2.is_constant() ? den_ : exact_div(den_, g2);
  Poly n = a * c;
  Poly m = b * d;
  const Rational lead_inv = m.leading().inverse();
  *this = RatFunc(n * lead_inv, m * lead_inv, Canonical{});
  return *this;
}

RatFunc& RatFunc::operator*=(const Rational& rhs) {
  if (rhs.is_zero()) return *this = RatFunc();
  num_ *= rhs;
  return *this;
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw Error(ErrorCode::kDivisionByZero, "rational function division by zero");
  const Rational lead_inv = num_.leading().inverse();
  return RatFunc(den_ * lead_inv, num_ * lead_inv, Canonical{});
}

RatFunc& RatFunc::operator/=(const RatFunc& rhs) { return *this *= rhs.inverse(); }

RatFunc& RatFunc::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw Error(ErrorCode::kDivisionByZero, "rational function division by zero");
  return *this *= rhs.inverse();
}

Rational RatFunc::eval(const Rational& t) const {
  const Rational d = den_.eval(t);
  if (d.is_zero()) throw Error(ErrorCode::kDivisionByZero, "rational function evaluated at a pole");
  return num_.eval(t) / d;
}

std::string RatFunc::str(const std::string& var) const {
  if (is_polynomial()) return num_.str(var);
  return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

std::vector<Rational> ratfunc_taylor(const RatFunc& f, std::size_t order) {
  const Rational d0 = f.den().coeff(0);
  if (d0.is_zero()) throw Error(ErrorCode::kPoleAtOrigin, "pole at origin: " + f.str());
  const Rational d0_inv = d0.inverse();
  const auto& den = f.den().coeffs();
  std::vector<Rational> out(order + 1);
  for (std::size_t n = 0; n <= order; ++n) {
    Rational acc = f.num().coeff(n);
    for (std::size_t k = 1; k < den.size() && k <= n; ++k) acc -= den[k] * out[n - k];
    out[n] = acc * d0_inv;
  }
  return out;
}

}  // namespace tforge
