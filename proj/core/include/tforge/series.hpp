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

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "tforge/error.hpp"
#include "tforge/ratfunc.hpp"
#include "tforge/rational.hpp"

namespace tforge {

// Coefficient fields of a Series: Rational and RatFunc.
template <class F>
concept CoefficientField = requires(F a, F b, Rational q) {
  { F(Rational(0)) };
  { a + b } -> std::convertible_to<F>;
  { a - b } -> std::convertible_to<F>;
  { a * b } -> std::convertible_to<F>;
  { a / b } -> std::convertible_to<F>;
  { a * q } -> std::convertible_to<F>;
  { a / q } -> std::convertible_to<F>;
  { -a } -> std::convertible_to<F>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a == b } -> std::convertible_to<bool>;
};

/// Truncated formal power series sum_{n <= order} c_n x^n. Coefficients past
/// the order are unknown, so every operation reports the order to which its
/// result is actually determined.
template <CoefficientField F>
class Series {
 public:
  using field_type = F;

  /// The zero series of the given order.
  explicit Series(std::size_t order) : coeffs_(order + 1, F(Rational(0))) {}
  /// Order is coeffs.size() - 1; an empty list is not a series.
  explicit Series(std::vector<F> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw Error(ErrorCode::kOutOfRange, "series needs at least one coefficient");
  }

  static Series constant(const F& c, std::size_t order) {
    Series s(order);
    s.coeffs_[0] = c;
    return s;
  }
  /// The series x.
  static Series identity(std::size_t order) {
    Series s(order);
    if (order >= 1) s.coeffs_[1] = F(Rational(1));
    return s;
  }

  std::size_t order() const { return coeffs_.size() - 1; }
  const std::vector<F>& coeffs() const { return coeffs_; }
  const F& operator[](std::size_t n) const { return coeffs_.at(n); }
  F& operator[](std::size_t n) { return coeffs_.at(n); }

  /// Copy with a lower order; asking for a higher order is an error.
  Series truncate(std::size_t order) const {
    if (order > this->order()) throw Error(ErrorCode::kOutOfRange, "cannot raise the order of a truncated series");
    return Series(std::vector<F>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(order) + 1));
  }

  Series operator-() const {
    Series out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
  }

  friend Series operator+(const Series& a, const Series& b) {
    Series out(std::min(a.order(), b.order()));
    for (std::size_t i = 0; i <= out.order(); ++i) out.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
    return out;
  }
  friend Series operator-(const Series& a, const Series& b) {
    Series out(std::min(a.order(), b.order()));
    for (std::size_t i = 0; i <= out.order(); ++i) out.coeffs_[i] = a.coeffs_[i] - b.coeffs_[i];
    return out;
  }
  friend Series operator*(const Series& a, const Series& b) {
    Series out(std::min(a.order(), b.order()));
    const std::size_t n = out.order();
    for (std::size_t i = 0; i <= n; ++i) {
      if (a.coeffs_[i].is_zero()) continue;
      for (std::size_t j = 0; i + j <= n; ++j) {
        if (b.coeffs_[j].is_zero()) continue;
        out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return out;
  }
  friend Series operator*(Series a, const F& c) {
    for (auto& x : a.coeffs_) x = x * c;
    return a;
  }
  friend Series operator*(const F& c, Series a) { return std::move(a) * c; }

  friend bool operator==(const Series& a, const Series& b) = default;

 private:
  std::vector<F> coeffs_;
};

using RationalSeries = Series<Rational>;
using RatFuncSeries = Series<RatFunc>;

/// Field embedding Rational -> RatFunc, applied coefficient-wise.
inline RatFuncSeries promote(const RationalSeries& s) {
  std::vector<RatFunc> out;
  out.reserve(s.order() + 1);
  for (const auto& c : s.coeffs()) out.emplace_back(c);
  return RatFuncSeries(std::move(out));
}
inline const RatFuncSeries& promote(const RatFuncSeries& s) { return s; }

template <CoefficientField F>
Series<F> scale(const Series<F>& a, const Rational& c) {
  std::vector<F> out;
  out.reserve(a.order() + 1);
  for (const auto& x : a.coeffs()) out.push_back(x * c);
  return Series<F>(std::move(out));
}

/// Multiplicative inverse; throws Error(kNotInvertible) for a zero constant term.
template <CoefficientField F>
Series<F> invert(const Series<F>& a) {
  if (a[0].is_zero()) throw Error(ErrorCode::kNotInvertible, "series with zero constant term is not invertible");
  const std::size_t n = a.order();
  const F a0_inv = F(Rational(1)) / a[0];
  Series<F> b(n);
  b[0] = a0_inv;
  for (std::size_t k = 1; k <= n; ++k) {
    F acc(Rational(0));
    for (std::size_t j = 1; j <= k; ++j) {
      if (a[j].is_zero()) continue;
      acc += a[j] * b[k - j];
    }
    b[k] = -(acc * a0_inv);
  }
  return b;
}

/// a / b as series division; b needs a unit constant term.
template <CoefficientField F>
Series<F> divide(const Series<F>& a, const Series<F>& b) {
  return a * invert(b);
}

/// Term-wise derivative; the order drops by one (order 0 stays a zero
/// constant of order 0).
template <CoefficientField F>
Series<F> derivative(const Series<F>& a) {
  if (a.order() == 0) return Series<F>(0);
  Series<F> out(a.order() - 1);
  for (std::size_t n = 1; n <= a.order(); ++n) out[n - 1] = a[n] * Rational(static_cast<std::int64_t>(n));
  return out;
}

/// Antiderivative with zero constant term; the order grows by one.
template <CoefficientField F>
Series<F> integrate(const Series<F>& a) {
  Series<F> out(a.order() + 1);
  for (std::size_t n = 0; n <= a.order(); ++n) out[n + 1] = a[n] / Rational(static_cast<std::int64_t>(n + 1));
  return out;
}

/// h(inner). The inner series must have zero constant term; the result
/// order is min(order(h), order(inner)).
template <CoefficientField F>
Series<F> compose(const Series<F>& h, const Series<F>& inner) {
  if (!inner[0].is_zero())
    throw Error(ErrorCode::kCompositionUndefined, "composition undefined for truncated series: inner constant term is nonzero");
  const std::size_t n = std::min(h.order(), inner.order());
  const Series<F> in = inner.truncate(n);
  Series<F> acc = Series<F>::constant(h[n], n);
  for (std::size_t k = n; k-- > 0;) {
    acc = acc * in;
    acc[0] += h[k];
  }
  return acc;
}

/// Mixed-field composition: a Rational outer series is promoted to Q(t).
inline RatFuncSeries compose(const RationalSeries& h, const RatFuncSeries& inner) {
  return compose(promote(h), inner);
}

/// Formal exponential; throws Error(kExpDomain) unless a(0) = 0.
template <CoefficientField F>
Series<F> exp(const Series<F>& a) {
  if (!a[0].is_zero()) throw Error(ErrorCode::kExpDomain, "exp needs a zero constant term");
  const std::size_t n = a.order();
  Series<F> b(n);
  b[0] = F(Rational(1));
  // n b_n = sum_{k=1}^n k a_k b_{n-k}
  for (std::size_t m = 1; m <= n; ++m) {
    F acc(Rational(0));
    for (std::size_t k = 1; k <= m; ++k) {
      if (a[k].is_zero()) continue;
      acc += a[k] * b[m - k] * Rational(static_cast<std::int64_t>(k));
    }
    b[m] = acc / Rational(static_cast<std::int64_t>(m));
  }
  return b;
}

/// Formal logarithm of the series itself; throws Error(kLogDomain) unless a(0) = 1.
template <CoefficientField F>
Series<F> log(const Series<F>& a) {
  if (!(a[0] == F(Rational(1)))) throw Error(ErrorCode::kLogDomain, "log needs constant term 1");
  const std::size_t n = a.order();
  Series<F> b(n);
  // a b' = a'  =>  m b_m = m a_m - sum_{k=1}^{m-1} k b_k a_{m-k}
  for (std::size_t m = 1; m <= n; ++m) {
    F acc = a[m] * Rational(static_cast<std::int64_t>(m));
    for (std::size_t k = 1; k < m; ++k) {
      if (a[m - k].is_zero()) continue;
      acc -= b[k] * a[m - k] * Rational(static_cast<std::int64_t>(k));
    }
    b[m] = acc / Rational(static_cast<std::int64_t>(m));
  }
  return b;
}

/// a^q for rational q; throws Error(kPowDomain) unless a(0) = 1.
template <CoefficientField F>
Series<F> pow(const Series<F>& a, const Rational& q) {
  if (!(a[0] == F(Rational(1)))) throw Error(ErrorCode::kPowDomain, "rational power needs constant term 1");
  const std::size_t n = a.order();
  Series<F> b(n);
  b[0] = F(Rational(1));
  // b_m = (1/m) sum_{k=1}^m ((q + 1) k - m) a_k b_{m-k}
  const Rational q1 = q + Rational(1);
  for (std::size_t m = 1; m <= n; ++m) {
    F acc(Rational(0));
    for (std::size_t k = 1; k <= m; ++k) {
      if (a[k].is_zero()) continue;
      const Rational w = q1 * Rational(static_cast<std::int64_t>(k)) - Rational(static_cast<std::int64_t>(m));
      if (w.is_zero()) continue;
      acc += a[k] * b[m - k] * w;
    }
    b[m] = acc / Rational(static_cast<std::int64_t>(m));
  }
  return b;
}

/// Integer power by repeated squaring; negative exponents go through invert.
template <CoefficientField F>
Series<F> pow_int(const Series<F>& a, std::int64_t e) {
  if (e < 0) return pow_int(invert(a), -e);
  Series<F> out = Series<F>::constant(F(Rational(1)), a.order());
  Series<F> sq = a;
  while (e > 0) {
    if (e & 1) out = out * sq;
    e >>= 1;
    if (e > 0) sq = sq * sq;
  }
  return out;
}

namespace detail {

// a/y(a) for y = y_1 a + y_2 a^2 + ..., order(y) - 1.
template <CoefficientField F>
Series<F> lagrange_kernel(const Series<F>& y) {
  if (!y[0].is_zero()) throw Error(ErrorCode::kRevertConstantTerm, "reversion needs a zero constant term");
  if (y.order() < 1 || y[1].is_zero())
    throw Error(ErrorCode::kRevertLinearTerm, "reversion needs a unit linear coefficient");
  std::vector<F> shifted(y.coeffs().begin() + 1, y.coeffs().end());
  return invert(Series<F>(std::move(shifted)));
}

}  // namespace detail

/// Compositional inverse x(y) of y(x), coefficient by coefficient from the
/// Lagrange formula [y^n] x = (1/n) [a^{n-1}] (a / y(a))^n.
template <CoefficientField F>
Series<F> revert(const Series<F>& y) {
  const Series<F> kernel = detail::lagrange_kernel(y);
  const std::size_t n = y.order();
  Series<F> x(n);
  Series<F> power = kernel;
  for (std::size_t k = 1; k <= n; ++k) {
    if (k > 1) power = power * kernel;
    x[k] = power[k - 1] / Rational(static_cast<std::int64_t>(k));
  }
  return x;
}

/// H(x(y)) - H(0) straight from the H-form of Lagrange inversion,
/// [y^n] = (1/n) [a^{n-1}] (a / y(a))^n H'(a), without composing.
template <CoefficientField F>
Series<F> lagrange_H(const Series<F>& y, const Series<F>& h) {
  const Series<F> kernel = detail::lagrange_kernel(y);
  const std::size_t n = std::min(y.order(), h.order());
  const Series<F> h_prime = derivative(h);
  Series<F> out(n);
  Series<F> power = kernel;
  for (std::size_t k = 1; k <= n; ++k) {
    if (k > 1) power = power * kernel;
    const std::size_t need = k - 1;
    F acc(Rational(0));
    for (std::size_t i = 0; i <= need && i <= h_prime.order(); ++i) {
      if (h_prime[i].is_zero()) continue;
      acc += h_prime[i] * power[need - i];
    }
    out[k] = acc / Rational(static_cast<std::int64_t>(k));
  }
  return out;
}

inline RatFuncSeries lagrange_H(const RatFuncSeries& y, const RationalSeries& h) {
  return lagrange_H(y, promote(h));
}

}  // namespace tforge
