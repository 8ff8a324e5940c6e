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

#include <cstdint>
#include <random>
#include <vector>

#include "tforge/poly.hpp"
#include "tforge/ratfunc.hpp"
#include "tforge/rational.hpp"
#include "tforge/series.hpp"

namespace tforge::testing {

inline Rational q(std::int64_t n, std::int64_t d = 1) { return Rational(n, d); }

inline std::vector<Rational> ints(std::initializer_list<std::int64_t> values) {
  return std::vector<Rational>(values.begin(), values.end());
}

inline RationalSeries series(std::initializer_list<std::int64_t> values) { return RationalSeries(ints(values)); }

class Random {
 public:
  explicit Random(std::uint32_t seed) : gen_(seed) {}

  std::int64_t integer(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(gen_);
  }

  Rational rational(std::int64_t bound = 9) {
    return Rational(integer(-bound, bound), integer(1, bound));
  }

  Rational nonzero_rational(std::int64_t bound = 9) {
    Rational r;
    while (r.is_zero()) r = rational(bound);
    return r;
  }

  Poly poly(int max_degree, std::int64_t bound = 5) {
    std::vector<Rational> c;
    const int deg = static_cast<int>(integer(0, max_degree));
    for (int i = 0; i <= deg; ++i) c.push_back(rational(bound));
    return Poly(std::move(c));
  }

  Poly nonzero_poly(int max_degree, std::int64_t bound = 5) {
    Poly p;
    while (p.is_zero()) p = poly(max_degree, bound);
    return p;
  }

  /// Nonzero denominator at t = 0 so the Taylor expansion exists.
  RatFunc ratfunc(int max_degree = 2) {
    Poly den;
    while (den.coeff(0).is_zero()) den = nonzero_poly(max_degree, 3);
    return RatFunc(poly(max_degree, 4), den);
  }

  RationalSeries rational_series(std::size_t order, std::int64_t bound = 5) {
    RationalSeries s(order);
    for (std::size_t i = 0; i <= order; ++i) s[i] = rational(bound);
    return s;
  }

  std::mt19937& engine() { return gen_; }

 private:
  std::mt19937 gen_;
};

}  // namespace tforge::testing
