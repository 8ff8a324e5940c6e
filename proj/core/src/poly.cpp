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

#include "tforge/poly.hpp"

#include <algorithm>
#include <optional>

#include "tforge/error.hpp"

namespace tforge {

Poly::Poly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { normalize(); }

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

Poly Poly::constant(const Rational& c) { return Poly(std::vector<Rational>{c}); }

Poly Poly::monomial(const Rational& c, std::size_t power) {
  std::vector<Rational> coeffs(power + 1);
  coeffs[power] = c;
  return Poly(std::move(coeffs));
}

Poly Poly::one_minus_ct_pow(const Rational& c, std::size_t k) {
  std::vector<Rational> coeffs(k + 1);
  for (std::size_t i = 0; i <= k; ++i)
    coeffs[i] = binomial(static_cast<std::int64_t>(k), static_cast<std::int64_t>(i)) * pow(-c, static_cast<std::int64_t>(i));
  return Poly(std::move(coeffs));
}

void Poly::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational Poly::eval(const Rational& t) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  const Rational lead_inv = leading().inverse();
  Poly out = *this;
  for (auto& c : out.coeffs_) c *= lead_inv;
  return out;
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    out[i - 1] = coeffs_[i] * Rational(static_cast<std::int64_t>(i));
  return Poly(std::move(out));
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Poly& Poly::operator+=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  normalize();
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  normalize();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Poly(std::move(out));
}

Poly& Poly::operator*=(const Poly& rhs) { return *this = *this * rhs; }

Poly& Poly::operator*=(const Rational& rhs) {
  if (rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= rhs;
  return *this;
}

std::string Poly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c.is_zero()) continue;
    const bool negative = c.sign() < 0;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const Rational mag = c.abs();
    if (i == 0) {
      out += mag.str();
      continue;
    }
    if (!mag.is_one()) out += mag.str() + "*";
    out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

PolyDivision divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Error(ErrorCode::kDivisionByZero, "polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly{}, a};
  std::vector<Rational> rem = a.coeffs();
  std::vector<Rational> quot(rem.size() - b.coeffs().size() + 1);
  const Rational lead_inv = b.leading().inverse();
  const std::size_t bd = b.coeffs().size() - 1;
  for (std::size_t k = quot.size(); k-- > 0;) {
    const Rational q = rem[k + bd] * lead_inv;
    quot[k] = q;
    if (q.is_zero()) continue;
    for (std::size_t j = 0; j <= bd; ++j) rem[k + j] -= q * b.coeffs()[j];
  }
  rem.resize(bd);
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly exact_div(const Poly& a, const Poly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw Error(ErrorCode::kNotInvertible, "inexact polynomial division");
  return q;
}

Poly euclid_gcd(const Poly& a, const Poly& b) {
  Poly x = a.monic();
  Poly y = b.monic();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    if (y.is_constant()) return Poly::constant(Rational(1));
    Poly r = divmod(x, y).remainder.monic();
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

namespace {

using IntPoly = std::vector<mpz_class>;

// Clears denominators and removes the content.
IntPoly primitive_part(const Poly& p) {
  mpz_class l = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.denominator().get_mpz_t());
  IntPoly out;
  out.reserve(p.coeffs().size());
  mpz_class content = 0;
  for (const auto& c : p.coeffs()) {
    out.push_back(c.numerator() * (l / c.denominator()));
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), out.back().get_mpz_t());
  }
  for (auto& c : out) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), content.get_mpz_t());
  return out;
}

mpz_class max_norm(const IntPoly& p) {
  mpz_class m = 0;
  for (const auto& c : p) {
    mpz_class a = abs(c);
    if (a > m) m = a;
  }
  return m;
}

mpz_class eval_at(const IntPoly& p, const mpz_class& xi) {
  mpz_class v = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * xi + *it;
  return v;
}

// Balanced xi-adic digits of h.
Poly reconstruct(mpz_class h, const mpz_class& xi) {
  std::vector<Rational> coeffs;
  const mpz_class half = xi / 2;
  while (h != 0) {
    mpz_class c;
    mpz_fdiv_r(c.get_mpz_t(), h.get_mpz_t(), xi.get_mpz_t());
    if (c > half) c -= xi;
    coeffs.push_back(Rational(c));
    h = (h - c) / xi;
  }
  return Poly(std::move(coeffs));
}

bool divides(const Poly& d, const Poly& p) { return divmod(p, d).remainder.is_zero(); }

// Heuristic gcd over Z[t]: evaluate at a large integer, take the integer gcd
// and read the polynomial back from its balanced digits. Any candidate is
// confirmed by exact division.
std::optional<Poly> heuristic_gcd(const Poly& a, const Poly& b) {
  const IntPoly pa = primitive_part(a);
  const IntPoly pb = primitive_part(b);
  mpz_class xi = 2 * std::min(max_norm(pa), max_norm(pb)) + 29;
  for (int attempt = 0; attempt < 6; ++attempt) {
    mpz_class h;
    mpz_gcd(h.get_mpz_t(), eval_at(pa, xi).get_mpz_t(), eval_at(pb, xi).get_mpz_t());
    const Poly candidate = reconstruct(h, xi);
    if (!candidate.is_zero()) {
      const Poly g = candidate.monic();
      if (divides(g, a) && divides(g, b)) return g;
    }
    xi = xi * 73794 / 27011;
  }
  return std::nullopt;
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Poly::constant(Rational(1));
  if (auto g = heuristic_gcd(a, b)) return *std::move(g);
  return euclid_gcd(a, b);
}

Poly pow(const Poly& base, std::size_t exponent) {
  Poly out = Poly::constant(Rational(1));
  Poly sq = base;
  while (exponent > 0) {
    if (exponent & 1U) out *= sq;
    exponent >>= 1U;
    if (exponent > 0) sq *= sq;
  }
  return out;
}

}  // namespace tforge
